#pragma once

#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlen/length.hpp"
#include "satlen/linalg.hpp"

namespace satlen {

enum class SequenceKind { H0, Rees };

inline const char* to_string(SequenceKind k) { return k == SequenceKind::H0 ? "h0" : "rees"; }

/// n ↦ value for n = 0..n_max.
struct LengthSequence {
    SequenceKind kind = SequenceKind::H0;
    std::string provenance;
    std::vector<std::int64_t> values;
    /// For h0: the saturation stabilization index at each n (-1 if untracked).
    std::vector<int> stabilization;
};

struct H0Options {
    SaturationOptions saturation;
    Execution execution = Execution::Serial;
};

/// One entry: ℓ(sat(A)/A) for A = I^{n+1}, plus the stabilization index.
template <CoefficientField K>
std::pair<std::int64_t, int> h0_entry(const IdealHandle<K>& ideal, int n, const SaturationOptions& sat = {}) {
    auto a = power(ideal, n + 1);
    auto s = saturate(a, maximal_ideal(ideal.ring_ptr()), sat);
    auto len = length_pair(a, s.ideal);
    if (!len.is_finite()) throw std::logic_error("h0: saturation quotient has infinite length");
    return {len.value(), s.index};
}

namespace detail {

// Evaluates f(n) for n = 0..n_max, optionally spread over OpenMP threads;
// the first exception (in n order) is rethrown.
template <typename T, typename F>
std::vector<T> evaluate_indexed(int n_max, Execution exec, F&& f) {
    std::vector<T> out(static_cast<std::size_t>(n_max + 1));
    std::vector<std::exception_ptr> errors(out.size());
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int n = 0; n <= n_max; ++n) {
            try {
                out[static_cast<std::size_t>(n)] = f(n);
            } catch (...) {
                errors[static_cast<std::size_t>(n)] = std::current_exception();
            }
        }
    } else {
        for (int n = 0; n <= n_max; ++n) {
            try {
                out[static_cast<std::size_t>(n)] = f(n);
            } catch (...) {
                errors[static_cast<std::size_t>(n)] = std::current_exception();
                break;
            }
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace detail

/// h⁰_I(n) = ℓ(H⁰_m(R/I^{n+1})) for n = 0..n_max.
template <CoefficientField K>
LengthSequence h0_sequence(const IdealHandle<K>& ideal, int n_max, const H0Options& options = {}) {
    if (n_max < 0) throw InputError("h0_sequence: n_max must be nonnegative");
    if (ideal.is_unit()) throw InputError("h0_sequence: ideal is not proper");
    // warm the shared cache before threads read it
    ideal.basis();
    auto entries = detail::evaluate_indexed<std::pair<std::int64_t, int>>(
        n_max, options.execution, [&](int n) { return h0_entry(ideal, n, options.saturation); });
    LengthSequence seq;
    seq.kind = SequenceKind::H0;
    seq.provenance = ideal.to_string();
    for (auto& [v, idx] : entries) {
        seq.values.push_back(v);
        seq.stabilization.push_back(idx);
    }
    return seq;
}

/// n ↦ ℓ(outer^{n+1}/inner^{n+1}).
template <CoefficientField K>
LengthSequence rees_sequence(const IdealHandle<K>& inner, const IdealHandle<K>& outer, int n_max,
                             Execution exec = Execution::Serial) {
    if (n_max < 0) throw InputError("rees_sequence: n_max must be nonnegative");
    if (!length_pair(inner, outer).is_finite()) throw InputError("rees_sequence: ℓ(outer/inner) is infinite");
    inner.basis();
    outer.basis();
    auto values = detail::evaluate_indexed<std::int64_t>(n_max, exec, [&](int n) {
        auto len = length_pair(power(inner, n + 1), power(outer, n + 1));
        if (!len.is_finite()) throw std::logic_error("rees: infinite length at n = " + std::to_string(n));
        return len.value();
    });
    LengthSequence seq;
    seq.kind = SequenceKind::Rees;
    seq.provenance = inner.to_string() + " in " + outer.to_string();
    seq.values = std::move(values);
    return seq;
}

/// One ideal equality at one n. On failure the two sides are kept as
/// generator text so the comparison can be replayed.
struct IdentityCheck {
    int n = 0;
    bool holds = false;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string name;
    std::vector<IdentityCheck> entries;
    /// Extra equalities used along the way (e.g. the x² vs x colon collapse).
    std::vector<IdentityCheck> sub_entries;

    bool all_hold() const {
        for (const auto& e : entries)
            if (!e.holds) return false;
        for (const auto& e : sub_entries)
            if (!e.holds) return false;
        return true;
    }
};

namespace detail {

template <CoefficientField K>
IdentityCheck compare(int n, const IdealHandle<K>& lhs, const IdealHandle<K>& rhs) {
    IdentityCheck c;
    c.n = n;
    c.holds = ideal_equal(lhs, rhs);
    if (!c.holds) {
        c.lhs = lhs.to_string();
        c.rhs = rhs.to_string();
    }
    return c;
}

template <CoefficientField K>
IdealHandle<K> sop_ideal(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& sop, int from, int to) {
    // x_{from+1} .. x_to in 1-based numbering
    std::vector<Polynomial<K>> gens(sop.begin() + from, sop.begin() + to);
    return IdealHandle<K>(ring, std::move(gens));
}

} // namespace detail

/// I^{n+1} : x_t = I^n (I : x_t) + 0 : x_t for I = (x_{i+1}, …, x_j).
template <CoefficientField K>
IdentityReport check_lemma35(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& sop, int i, int j, int t,
                             int n_max) {
    const int d = static_cast<int>(sop.size());
    if (!(0 <= i && i < j && j <= d)) throw InputError("lemma35: need 0 <= i < j <= d");
    if (!((1 <= t && t <= i) || (j + 1 <= t && t <= d))) throw InputError("lemma35: t must lie in {1..i} or {j+1..d}");
    auto ideal = detail::sop_ideal(ring, sop, i, j);
    const auto& xt = sop[static_cast<std::size_t>(t - 1)];
    auto i_colon = colon(ideal, xt);
    auto ann = colon(zero_ideal(ring), xt);
    IdentityReport rep;
    rep.name = "lemma35";
    for (int n = 0; n <= n_max; ++n) {
        auto lhs = colon(power(ideal, n + 1), xt);
        auto rhs = sum(product(power(ideal, n), i_colon), ann);
        rep.entries.push_back(detail::compare(n, lhs, rhs));
    }
    return rep;
}

/// The t used for given (i, j): 1 when i >= 1, else j + 1.
inline int cor36_t(int i, int j) { return i >= 1 ? 1 : j + 1; }

/// sat(I^{n+1}) = I^{n+1} : x_t = I^n (I : x_t) + 0 : x_t, I = (x_{i+1}, …, x_j).
template <CoefficientField K>
IdentityReport check_cor36(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& sop, int i, int j, int n_max) {
    const int d = static_cast<int>(sop.size());
    if (!(0 <= i && i < j && j <= d)) throw InputError("cor36: need 0 <= i < j <= d");
    const int t = cor36_t(i, j);
    if (t > d) throw InputError("cor36: i = 0 requires j < d");
    auto ideal = detail::sop_ideal(ring, sop, i, j);
    const auto& xt = sop[static_cast<std::size_t>(t - 1)];
    auto m = maximal_ideal(ring);
    auto i_colon = colon(ideal, xt);
    auto ann = colon(zero_ideal(ring), xt);
    IdentityReport rep;
    rep.name = "cor36";
    for (int n = 0; n <= n_max; ++n) {
        auto a = power(ideal, n + 1);
        auto sat = saturate(a, m).ideal;
        auto c = colon(a, xt);
        auto rhs = sum(product(power(ideal, n), i_colon), ann);
        IdentityCheck first = detail::compare(n, sat, c);
        IdentityCheck second = detail::compare(n, c, rhs);
        if (!first.holds)
            rep.entries.push_back(first);
        else
            rep.entries.push_back(second);
        if (i == 0) rep.sub_entries.push_back(detail::compare(n, colon(a, xt * xt), c));
    }
    return rep;
}

/// I^{n+1} : x_1 = I^n + 0 : x_1 for I = (x_1, …, x_i).
template <CoefficientField K>
IdentityReport check_cor38(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& sop, int i, int n_max) {
    const int d = static_cast<int>(sop.size());
    if (!(1 <= i && i <= d)) throw InputError("cor38: need 1 <= i <= d");
    auto ideal = detail::sop_ideal(ring, sop, 0, i);
    const auto& x1 = sop.front();
    auto ann = colon(zero_ideal(ring), x1);
    IdentityReport rep;
    rep.name = "cor38";
    for (int n = 0; n <= n_max; ++n) {
        auto lhs = colon(power(ideal, n + 1), x1);
        auto rhs = sum(power(ideal, n), ann);
        rep.entries.push_back(detail::compare(n, lhs, rhs));
    }
    return rep;
}

/// ℓ(0 :_R a) < ∞.
template <CoefficientField K>
bool is_filter_regular(const RingPtr<K>& ring, const Polynomial<K>& a) {
    auto zero = zero_ideal(ring);
    return length_pair(zero, colon(zero, a)).is_finite();
}

} // namespace satlen
