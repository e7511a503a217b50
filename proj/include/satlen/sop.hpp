#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satlen/length.hpp"
#include "satlen/linalg.hpp"
#include "satlen/satfn.hpp"

namespace satlen {

/// Candidate system of parameters x_1, …, x_d of R.
template <CoefficientField K>
struct SopCandidate {
    RingPtr<K> ring;
    std::vector<Polynomial<K>> elements;
};

template <CoefficientField K>
SopCandidate<K> make_sop(const RingPtr<K>& ring, const std::vector<std::string>& texts) {
    SopCandidate<K> c{ring, {}};
    for (const auto& t : texts) {
        auto p = ring->parse(t);
        if (p.is_zero() || !p.is_homogeneous() || p.degree() < 1)
            throw InputError("sop element '" + t + "' must be homogeneous of positive degree");
        c.elements.push_back(std::move(p));
    }
    return c;
}

/// ℓ(R/(x_1^{n_1}, …, x_d^{n_d})).
template <CoefficientField K>
LengthValue power_quotient_length(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& elems,
                                  const std::vector<int>& exponents) {
    std::vector<Polynomial<K>> gens;
    for (std::size_t k = 0; k < elems.size(); ++k) gens.push_back(elems[k].pow(exponents[k]));
    return length_quotient(IdealHandle<K>(ring, std::move(gens)));
}

template <CoefficientField K>
bool is_sop(const SopCandidate<K>& c) {
    if (static_cast<int>(c.elements.size()) != krull_dimension(c.ring)) return false;
    for (const auto& e : c.elements)
        if (!e.is_homogeneous() || e.degree() < 1) return false;
    return length_quotient(IdealHandle<K>(c.ring, c.elements)).is_finite();
}

namespace detail {

template <CoefficientField K>
IdealHandle<K> colon_or_unit(const IdealHandle<K>& a, const Polynomial<K>& f) {
    if (a.ring().is_zero_in_ring(f)) return unit_ideal(a.ring_ptr());
    return colon(a, f);
}

} // namespace detail

/// (x_1..x_{i-1}) : x_i x_j = (x_1..x_{i-1}) : x_j on R/modulus for all i ≤ j.
template <CoefficientField K>
bool is_d_sequence(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& elems, const IdealHandle<K>& modulus) {
    if (elems.empty()) throw InputError("d-sequence: empty sequence");
    auto quotient = ring->quotient(modulus.generators());
    for (std::size_t i = 0; i < elems.size(); ++i) {
        IdealHandle<K> prefix(quotient, std::vector<Polynomial<K>>(elems.begin(), elems.begin() + i));
        for (std::size_t j = i; j < elems.size(); ++j) {
            auto lhs = detail::colon_or_unit(prefix, elems[i] * elems[j]);
            auto rhs = detail::colon_or_unit(prefix, elems[j]);
            if (!ideal_equal(lhs, rhs)) return false;
        }
    }
    return true;
}

struct ApsopFit {
    bool success = false;
    /// λ_0 … λ_d.
    std::vector<std::int64_t> lambdas;
    std::vector<std::vector<int>> fit_grid;
    std::vector<std::vector<int>> verify_grid;
    int fit_max = 2;
    int verify_max = 3;
    /// First tuple where the fitted formula disagrees with the measured length.
    std::optional<std::vector<int>> witness;
    std::int64_t witness_measured = 0;
    std::int64_t witness_predicted = 0;
    std::string diagnostic;

    std::int64_t predict(const std::vector<int>& n) const {
        std::int64_t total = 0, prod = 1;
        for (std::size_t i = 0; i < lambdas.size(); ++i) {
            if (i > 0) prod *= n[i - 1];
            total += prod * lambdas[i];
        }
        return total;
    }
};

/// All tuples in {1..max}^d in lexicographic order.
inline std::vector<std::vector<int>> exponent_grid(std::size_t d, int max) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d, 1);
    while (true) {
        out.push_back(cur);
        std::size_t k = d;
        while (k > 0 && cur[k - 1] == max) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t j = k; j < d; ++j) cur[j] = 1;
    }
    return out;
}

/// Fits ℓ(R/(x^n)) = Σ_i n_1⋯n_i λ_i from the points (1,…,1) and
/// (f,…,f,1,…,1) with f in the first i slots, then checks every tuple of
/// {1..verify_max}^d.
template <CoefficientField K>
ApsopFit fit_apsop(const SopCandidate<K>& c, int fit_max = 2, int verify_max = 3,
                   Execution exec = Execution::Serial) {
    if (fit_max < 2) throw InputError("apsop fit: fit_max must be at least 2");
    if (verify_max < 1) throw InputError("apsop fit: verify_max must be at least 1");
    const std::size_t d = c.elements.size();
    ApsopFit fit;
    fit.fit_max = fit_max;
    fit.verify_max = verify_max;

    auto measure = [&](const std::vector<int>& n) {
        auto len = power_quotient_length(c.ring, c.elements, n);
        if (!len.is_finite()) throw InputError("apsop fit: infinite length, the elements are not a system of parameters");
        return len.value();
    };

    std::vector<std::int64_t> at(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        std::vector<int> p(d, 1);
        for (std::size_t k = 0; k < i; ++k) p[k] = fit_max;
        fit.fit_grid.push_back(p);
        at[i] = measure(p);
    }
    // S_i = Σ_{k≥i} λ_k
    std::vector<std::int64_t> tail(d + 2, 0);
    tail[0] = at[0];
    std::int64_t scale = fit_max - 1;
    for (std::size_t i = 1; i <= d; ++i) {
        std::int64_t diff = at[i] - at[i - 1];
        if (diff % scale != 0) {
            fit.diagnostic = "fit points do not give an integer solution at index " + std::to_string(i);
            fit.witness = fit.fit_grid[i];
            fit.witness_measured = at[i];
            return fit;
        }
        tail[i] = diff / scale;
        scale *= fit_max;
    }
    fit.lambdas.resize(d + 1);
    for (std::size_t i = 0; i <= d; ++i) fit.lambdas[i] = tail[i] - tail[i + 1];

    fit.verify_grid = exponent_grid(d, verify_max);
    auto measured = detail::evaluate_indexed<std::int64_t>(static_cast<int>(fit.verify_grid.size()) - 1, exec,
                                                           [&](int k) { return measure(fit.verify_grid[static_cast<std::size_t>(k)]); });
    for (std::size_t k = 0; k < measured.size(); ++k) {
        auto predicted = fit.predict(fit.verify_grid[k]);
        if (predicted != measured[k]) {
            fit.witness = fit.verify_grid[k];
            fit.witness_measured = measured[k];
            fit.witness_predicted = predicted;
            fit.diagnostic = "formula fails on the verification grid";
            return fit;
        }
    }
    fit.success = true;
    return fit;
}

/// Standard when the fit holds with λ_1 = … = λ_{d−1} = 0; then
/// e = λ_d and I(M) = λ_0.
inline bool is_standard_sop(const ApsopFit& fit) {
    if (!fit.success) return false;
    for (std::size_t i = 1; i + 1 < fit.lambdas.size(); ++i)
        if (fit.lambdas[i] != 0) return false;
    return true;
}

struct Prop33Entry {
    int n = 0;
    ApsopFit fit;
};

/// For n = 1..n_max fits (x_1..x_i, x_{j+1}², …, x_d²) on R/I^n with
/// I = (x_{i+1}, …, x_j).
template <CoefficientField K>
std::vector<Prop33Entry> check_prop33(const SopCandidate<K>& c, int i, int j, int n_max, int fit_max = 2,
                                      int verify_max = 3, Execution exec = Execution::Serial) {
    const int d = static_cast<int>(c.elements.size());
    if (!(0 <= i && i < j && j <= d)) throw InputError("prop33: need 0 <= i < j <= d");
    auto ideal = detail::sop_ideal(c.ring, c.elements, i, j);
    std::vector<Polynomial<K>> seq(c.elements.begin(), c.elements.begin() + i);
    for (int k = j; k < d; ++k) seq.push_back(c.elements[static_cast<std::size_t>(k)].pow(2));
    std::vector<Prop33Entry> out;
    for (int n = 1; n <= n_max; ++n) {
        auto ring_n = c.ring->quotient(power(ideal, n).generators());
        std::vector<Polynomial<K>> elems;
        for (const auto& e : seq) elems.push_back(e);
        out.push_back({n, fit_apsop(SopCandidate<K>{ring_n, std::move(elems)}, fit_max, verify_max, exec)});
    }
    return out;
}

/// e(a; R/p) for a one-dimensional R/p: the slope λ_1 of n ↦ ℓ(R/(p + aⁿ)).
template <CoefficientField K>
std::int64_t param_multiplicity(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& p_gens,
                                const Polynomial<K>& a) {
    auto quotient = ring->quotient(p_gens);
    if (krull_dimension(quotient) != 1) throw InputError("param_multiplicity: R/p is not one-dimensional");
    auto fit = fit_apsop(SopCandidate<K>{quotient, {a}});
    if (!fit.success) throw InputError("param_multiplicity: n -> length is not linear on the grid");
    return fit.lambdas[1];
}

} // namespace satlen
