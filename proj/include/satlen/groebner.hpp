#pragma once

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "satlen/polynomial.hpp"

namespace satlen {

struct GroebnerOptions {
    /// S-pairs whose lcm exceeds this total degree abort the computation.
    int degree_cap = 64;
};

/// Reduced Gröbner basis: monic elements, no term of one element divisible
/// by the leading monomial of another, sorted ascending by leading monomial.
template <CoefficientField K>
class GroebnerBasis {
public:
    using Poly = Polynomial<K>;

    GroebnerBasis(K field, std::size_t nvars, MonomialOrder order, std::vector<Poly> elements = {})
        : field_(std::move(field)), nvars_(nvars), order_(order), elements_(std::move(elements)) {}

    const K& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Poly>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }

    bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> out;
        out.reserve(elements_.size());
        for (const auto& g : elements_) out.push_back(g.lead_monomial());
        return out;
    }

    const Poly* find_reducer(const Monomial& m) const noexcept {
        for (const auto& g : elements_)
            if (g.lead_monomial().divides(m)) return &g;
        return nullptr;
    }

    Poly normal_form(const Poly& f) const;

    bool contains(const Poly& f) const { return normal_form(f).is_zero(); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.elements_ == b.elements_;
    }

private:
    K field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<Poly> elements_;
};

namespace detail {

/// Full reduction of f by monic reducers (leading coefficient one).
template <CoefficientField K, class FindReducer>
Polynomial<K> reduce_fully(Polynomial<K> p, FindReducer&& find) {
    const K& k = p.field();
    std::vector<Term<K>> rest;
    while (!p.is_zero()) {
        const auto& lead = p.terms().front();
        if (const Polynomial<K>* g = find(lead.monomial)) {
            p = p.minus_term_times(lead.coefficient, lead.monomial.quotient(g->lead_monomial()), *g);
        } else {
            rest.push_back(lead);
            p.pop_lead();
        }
    }
    return Polynomial<K>::from_terms(k, p.nvars(), std::move(rest), p.order());
}

} // namespace detail

template <CoefficientField K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Poly& f) const {
    if (f.nvars() != nvars_) throw InputError("normal_form: variable-count mismatch");
    Poly p = f.with_order(order_);
    return detail::reduce_fully<K>(std::move(p), [this](const Monomial& m) { return find_reducer(m); });
}

template <CoefficientField K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& g) {
    return g.normal_form(f);
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree first) and both of Buchberger's criteria; returns the reduced basis.
template <CoefficientField K>
GroebnerBasis<K> buchberger(const K& field, std::size_t nvars, const std::vector<Polynomial<K>>& gens,
                            MonomialOrder order, const GroebnerOptions& options = {}) {
    using Poly = Polynomial<K>;
    order.validate(nvars);

    std::vector<Poly> basis;
    auto find_in = [&basis](const Monomial& m) -> const Poly* {
        for (const auto& g : basis)
            if (g.lead_monomial().divides(m)) return &g;
        return nullptr;
    };

    struct Pair {
        int degree;
        Monomial lcm;
        std::size_t i, j;
    };
    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (int c = order.compare(a.lcm, b.lcm, nvars); c != 0) return c < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    std::set<Pair, decltype(pair_less)> queue(pair_less);
    std::vector<std::vector<char>> pending;  // pending[j][i], i < j

    auto add_element = [&](Poly g) {
        std::size_t k = basis.size();
        basis.push_back(std::move(g));
        pending.emplace_back(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            Monomial l = lcm(basis[i].lead_monomial(), basis[k].lead_monomial());
            queue.insert(Pair{l.degree(), l, i, k});
            pending[k][i] = 1;
        }
    };
    auto is_pending = [&](std::size_t a, std::size_t b) {
        return a < b ? pending[b][a] != 0 : pending[a][b] != 0;
    };

    for (const auto& f : gens) {
        if (f.nvars() != nvars) throw InputError("buchberger: variable-count mismatch");
        Poly g = f.with_order(order);
        g = detail::reduce_fully<K>(std::move(g), find_in);
        if (!g.is_zero()) add_element(g.monic());
    }

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        pending[pr.j][pr.i] = 0;

        const Monomial& li = basis[pr.i].lead_monomial();
        const Monomial& lj = basis[pr.j].lead_monomial();
        if (coprime(li, lj)) continue;

        bool chain = false;
        for (std::size_t l = 0; l < basis.size() && !chain; ++l) {
            if (l == pr.i || l == pr.j) continue;
            if (basis[l].lead_monomial().divides(pr.lcm) && !is_pending(pr.i, l) && !is_pending(pr.j, l))
                chain = true;
        }
        if (chain) continue;

        if (pr.degree > options.degree_cap)
            throw ComputationLimit("Gröbner computation exceeded degree cap " + std::to_string(options.degree_cap));

        Poly s = basis[pr.i].times_term(field.one(), pr.lcm.quotient(li));
        s = s.minus_term_times(field.one(), pr.lcm.quotient(lj), basis[pr.j]);
        Poly r = detail::reduce_fully<K>(std::move(s), find_in);
        if (!r.is_zero()) add_element(r.monic());
    }

    // minimalize: drop elements whose leading monomial is a multiple of another's
    std::vector<Poly> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) continue;
            const Monomial& ma = basis[a].lead_monomial();
            const Monomial& mb = basis[b].lead_monomial();
            if (mb.divides(ma) && (mb != ma || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[a]);
    }

    // interreduce tails
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        auto find_other = [&](const Monomial& m) -> const Poly* {
            for (std::size_t b = 0; b < minimal.size(); ++b)
                if (b != a && minimal[b].lead_monomial().divides(m)) return &minimal[b];
            return nullptr;
        };
        const auto& terms = minimal[a].terms();
        Poly tail = Poly::from_terms(field, nvars, {terms.begin() + 1, terms.end()}, order);
        Poly head = Poly::from_terms(field, nvars, {terms.front()}, order);
        reduced.push_back((head + detail::reduce_fully<K>(std::move(tail), find_other)).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return order.compare(a.lead_monomial(), b.lead_monomial(), nvars) < 0;
    });
    return GroebnerBasis<K>(field, nvars, order, std::move(reduced));
}

/// True iff the two generator lists span the same ideal.
template <CoefficientField K>
bool ideal_equal(const K& field, std::size_t nvars, const std::vector<Polynomial<K>>& a,
                 const std::vector<Polynomial<K>>& b, MonomialOrder order = MonomialOrder::grevlex()) {
    return buchberger(field, nvars, a, order) == buchberger(field, nvars, b, order);
}

/// Generators of I ∩ k[x_{drop_count}, ...]: the elements of a block
/// elimination basis free of the first `drop_count` variables. The result
/// keeps the full variable count.
template <CoefficientField K>
std::vector<Polynomial<K>> eliminate(const K& field, std::size_t nvars, const std::vector<Polynomial<K>>& gens,
                                     std::size_t drop_count, const GroebnerOptions& options = {}) {
    if (drop_count < 1 || drop_count >= nvars)
        throw InputError("eliminate: drop_count " + std::to_string(drop_count) + " out of range [1, " +
                         std::to_string(nvars - 1) + "]");
    auto gb = buchberger(field, nvars, gens, MonomialOrder::elimination(static_cast<int>(drop_count)), options);
    std::vector<Polynomial<K>> out;
    for (const auto& g : gb.elements())
        if (g.free_of_front(drop_count)) out.push_back(g);
    return out;
}

/// Exact quotient h / f; throws InputError when f does not divide h.
template <CoefficientField K>
Polynomial<K> divide_exact(const Polynomial<K>& h, const Polynomial<K>& f) {
    if (f.is_zero()) throw InputError("division by the zero polynomial");
    const K& k = h.field();
    Polynomial<K> g = f.with_order(h.order());
    Polynomial<K> r = h;
    std::vector<Term<K>> quotient;
    auto inv_lc = k.inv(g.lead_coefficient());
    while (!r.is_zero()) {
        if (!g.lead_monomial().divides(r.lead_monomial())) throw InputError("divide_exact: not divisible");
        auto c = k.mul(r.lead_coefficient(), inv_lc);
        Monomial m = r.lead_monomial().quotient(g.lead_monomial());
        quotient.push_back({m, c});
        r = r.minus_term_times(c, m, g);
    }
    return Polynomial<K>::from_terms(k, h.nvars(), std::move(quotient), h.order());
}

} // namespace satlen
