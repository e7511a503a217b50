#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "satlen/errors.hpp"
#include "satlen/ideal.hpp"
#include "satlen/linalg.hpp"

// Degree-slice linear algebra over the coefficient field. Nothing here calls
// into the Gröbner engine: ideals enter as generator lifts and every quantity
// is a rank of a matrix of monomial multiples.

namespace satlen::oracle {

/// Coordinates for the graded pieces of S or R = S/J. When J is monomial the
/// slice of degree d is spanned by the monomials outside J and products that
/// land in J vanish; otherwise the whole S_d is used and J's multiples are
/// added as extra rows.
template <CoefficientField K>
class SliceModel {
public:
    using Poly = Polynomial<K>;

    explicit SliceModel(const RingPresentation<K>& ring, bool force_ambient = false)
        : field_(ring.field()), nvars_(ring.nvars()), order_(ring.order()) {
        fast_ = !force_ambient && ring.has_monomial_relations();
        for (const auto& r : ring.relations()) {
            if (fast_)
                j_monomials_.push_back(r.lead_monomial());
            else
                j_gens_.push_back(r);
        }
    }

    bool monomial_fast_path() const noexcept { return fast_; }

    /// Basis monomials of the degree-d slice, descending in the ring order.
    const std::vector<Monomial>& basis(int d) {
        auto it = slices_.find(d);
        if (it != slices_.end()) return it->second.monomials;
        Slice s;
        if (d >= 0) {
            for (auto& m : monomials_of_degree(nvars_, d))
                if (!in_j(m)) s.monomials.push_back(m);
            std::sort(s.monomials.begin(), s.monomials.end(),
                      [&](const Monomial& a, const Monomial& b) { return order_.compare(a, b, nvars_) > 0; });
            for (std::size_t i = 0; i < s.monomials.size(); ++i) s.index.emplace(s.monomials[i], i);
        }
        return slices_.emplace(d, std::move(s)).first->second.monomials;
    }

    std::size_t dimension(int d) { return basis(d).size(); }

    /// Column of m in the degree-deg(m) slice; nullopt when m is zero in R.
    std::optional<std::size_t> index(const Monomial& m) {
        basis(m.degree());
        const auto& idx = slices_.at(m.degree()).index;
        auto it = idx.find(m);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }

    /// Rows m·g spanning (gens)_d (plus J_d on the ambient path).
    Matrix<K> multiples(const std::vector<Poly>& gens, int d) {
        Matrix<K> rows;
        const std::size_t width = dimension(d);
        auto emit = [&](const Poly& g) {
            if (g.is_zero() || g.degree() > d) return;
            for (const auto& m : basis(d - g.degree())) {
                std::vector<typename K::value_type> row(width, field_.zero());
                bool any = false;
                for (const auto& t : g.terms()) {
                    if (t.monomial.degree() != g.degree()) throw InputError("oracle: non-homogeneous generator");
                    auto c = index(m * t.monomial);
                    if (!c) continue;
                    row[*c] = field_.add(row[*c], t.coefficient);
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        };
        for (const auto& g : gens) emit(g);
        for (const auto& g : j_gens_) emit(g);
        return rows;
    }

    /// dim_K (S/(gens + J))_d.
    std::int64_t hilbert_function(const std::vector<Poly>& gens, int d, Execution exec = Execution::Serial) {
        auto rows = multiples(gens, d);
        std::size_t r = rows.empty() ? 0 : matrix_rank(field_, std::move(rows), exec);
        return static_cast<std::int64_t>(dimension(d)) - static_cast<std::int64_t>(r);
    }

    const K& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }

private:
    struct Slice {
        std::vector<Monomial> monomials;
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    };

    bool in_j(const Monomial& m) const {
        for (const auto& j : j_monomials_)
            if (j.divides(m)) return true;
        return false;
    }

    K field_;
    std::size_t nvars_;
    MonomialOrder order_;
    bool fast_ = false;
    std::vector<Monomial> j_monomials_;
    std::vector<Poly> j_gens_;
    std::map<int, Slice> slices_;
};

/// Monomials of S_d outside the leading-term span of (lifts + J)_d, read off
/// the pivot columns of the echelon form with columns in descending order.
template <CoefficientField K>
std::vector<Monomial> standard_monomials_bruteforce(const IdealHandle<K>& ideal, int d) {
    SliceModel<K> model(ideal.ring(), true);
    const auto& cols = model.basis(d);
    auto rows = model.multiples(ideal.generators(), d);
    std::vector<bool> pivot(cols.size(), false);
    if (!rows.empty())
        for (auto c : independent_columns(model.field(), std::move(rows))) pivot[c] = true;
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (!pivot[i]) out.push_back(cols[i]);
    return out;
}

/// Σ_d term(d), accepted once the terms vanish on (cap, 2·cap]; the cap is
/// doubled up to `max_doublings` times before giving up.
template <typename F>
std::int64_t summed_until_stable(F&& term, int cap, int max_doublings, const char* what) {
    std::int64_t total = 0;
    int done = -1;
    for (int k = 0; k <= max_doublings; ++k, cap *= 2) {
        for (int d = done + 1; d <= cap; ++d) total += term(d);
        done = cap;
        bool vanish = true;
        for (int d = cap + 1; d <= 2 * cap && vanish; ++d) vanish = term(d) == 0;
        if (vanish) return total;
    }
    throw ComputationLimit(std::string(what) + ": slices do not vanish up to degree " + std::to_string(cap));
}

template <CoefficientField K>
int relation_degree(const RingPresentation<K>& ring) {
    int d = 0;
    for (const auto& r : ring.relations()) d = std::max(d, r.degree());
    return d;
}

/// ℓ(S/(lifts + J)) as Σ_d HF(d). `cap` 0 starts from the generator degrees.
template <CoefficientField K>
std::int64_t length_quotient_bruteforce(const IdealHandle<K>& ideal, int cap = 0, Execution exec = Execution::Serial,
                                        int max_doublings = 4) {
    SliceModel<K> model(ideal.ring());
    if (cap <= 0) cap = std::max(1, ideal.max_generator_degree() + relation_degree(ideal.ring()));
    return summed_until_stable([&](int d) { return model.hilbert_function(ideal.generators(), d, exec); }, cap,
                               max_doublings, "length_quotient_bruteforce");
}

/// ℓ(outer/inner) as Σ_d (HF_inner(d) − HF_outer(d)).
template <CoefficientField K>
std::int64_t length_pair_bruteforce(const IdealHandle<K>& inner, const IdealHandle<K>& outer, int cap = 0,
                                    Execution exec = Execution::Serial, int max_doublings = 4) {
    SliceModel<K> model(inner.ring());
    if (cap <= 0)
        cap = std::max(1, std::max(inner.max_generator_degree(), outer.max_generator_degree()) +
                              relation_degree(inner.ring()));
    return summed_until_stable(
        [&](int d) {
            auto diff =
                model.hilbert_function(inner.generators(), d, exec) - model.hilbert_function(outer.generators(), d, exec);
            if (diff < 0) throw InputError("length_pair_bruteforce: inner is not contained in outer");
            return diff;
        },
        cap, max_doublings, "length_pair_bruteforce");
}

/// Plain generator products of I^{power}, no reduction.
template <CoefficientField K>
std::vector<Polynomial<K>> power_generators(const std::vector<Polynomial<K>>& gens, int power) {
    std::vector<Polynomial<K>> out;
    if (gens.empty()) return out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(power), 0);
    // nondecreasing index tuples = multisets of size `power`
    while (true) {
        Polynomial<K> p = Polynomial<K>::constant(gens[0].field(), gens[0].nvars(), gens[0].field().one(),
                                                  gens[0].order());
        for (auto i : pick) p = p * gens[i];
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        std::size_t k = pick.size();
        while (k > 0 && pick[k - 1] + 1 == gens.size()) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < pick.size(); ++j) pick[j] = pick[k - 1];
    }
    return out;
}

/// Σ_{e<E} dim{ f ∈ (S/(A + J))_e : m^{E−e} f = 0 } for A given by lifts.
/// Works top-down: φ_E is the quotient map of R_E by A_E and
/// φ_e(f) = (φ_{e+1}(x_i f))_i restricted to independent columns, so that
/// ker φ_e is the torsion part in degree e.
template <CoefficientField K>
std::int64_t truncated_torsion(SliceModel<K>& model, const std::vector<Polynomial<K>>& a, int top,
                               Execution exec = Execution::Serial) {
    using V = typename K::value_type;
    const K& k = model.field();
    const std::size_t n = model.nvars();

    // φ_top from the reduced echelon form of A_top
    const std::size_t w = model.dimension(top);
    auto ech = row_echelon(k, model.multiples(a, top), true, exec);
    std::vector<std::ptrdiff_t> row_of(w, -1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) row_of[ech.pivots[r]] = static_cast<std::ptrdiff_t>(r);
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < w; ++c)
        if (row_of[c] < 0) free_cols.push_back(c);
    Matrix<K> phi(w, std::vector<V>(free_cols.size(), k.zero()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) phi[free_cols[j]][j] = k.one();
    for (std::size_t c = 0; c < w; ++c) {
        if (row_of[c] < 0) continue;
        const auto& row = ech.rows[static_cast<std::size_t>(row_of[c])];
        for (std::size_t j = 0; j < free_cols.size(); ++j) phi[c][j] = k.neg(row[free_cols[j]]);
    }

    std::int64_t total = 0;
    for (int e = top - 1; e >= 0; --e) {
        const auto& mons = model.basis(e);
        const std::size_t q = phi.empty() ? 0 : phi.front().size();
        Matrix<K> big(mons.size(), std::vector<V>(n * q, k.zero()));
        for (std::size_t r = 0; r < mons.size(); ++r)
            for (std::size_t i = 0; i < n; ++i) {
                auto c = model.index(mons[r] * Monomial::variable(i, 1));
                if (!c) continue;
                std::copy(phi[*c].begin(), phi[*c].end(), big[r].begin() + static_cast<std::ptrdiff_t>(i * q));
            }
        std::vector<std::size_t> keep;
        if (q > 0 && !big.empty()) keep = independent_columns(k, big, exec);
        Matrix<K> next(mons.size(), std::vector<V>(keep.size(), k.zero()));
        for (std::size_t r = 0; r < mons.size(); ++r)
            for (std::size_t j = 0; j < keep.size(); ++j) next[r][j] = big[r][keep[j]];
        phi = std::move(next);
        // dim T_e − dim A_e = HF_A(e) − q_e
        total += model.hilbert_function(a, e, exec) - static_cast<std::int64_t>(keep.size());
    }
    return total;
}

struct OracleValue {
    std::int64_t value;
    /// The truncation degree at which doubling no longer changed the value.
    int cap;
};

/// h⁰_I(n) = ℓ(H⁰_m(R/I^{n+1})) by slice linear algebra. Starting from
/// `cap` (0 picks (n+1)·deg I + deg J), the truncation degree is doubled
/// until two successive values agree, at most `max_doublings` times.
template <CoefficientField K>
OracleValue h0_bruteforce(const IdealHandle<K>& ideal, int n, int cap = 0, Execution exec = Execution::Serial,
                          int max_doublings = 4) {
    if (n < 0) throw InputError("h0_bruteforce: negative n");
    const auto& ring = ideal.ring();
    if (cap <= 0) cap = (n + 1) * std::max(1, ideal.max_generator_degree()) + relation_degree(ring);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g);
    auto a = power_generators(gens, n + 1);
    if (gens.empty()) a.clear();
    SliceModel<K> model(ring);
    std::int64_t prev = truncated_torsion(model, a, cap, exec);
    for (int k = 0; k < max_doublings; ++k) {
        std::int64_t next = truncated_torsion(model, a, 2 * cap, exec);
        if (next == prev) return {prev, cap};
        prev = next;
        cap *= 2;
    }
    throw ComputationLimit("h0_bruteforce: value did not stabilize up to truncation degree " + std::to_string(cap));
}

} // namespace satlen::oracle
