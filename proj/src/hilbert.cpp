#include "satlen/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

#include "satlen/errors.hpp"

namespace satlen {

namespace intpoly {

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

IntPoly shift(const IntPoly& p, int k) {
    if (p.empty()) return {};
    IntPoly r(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), p.begin(), p.end());
    return r;
}

IntPoly one_minus_t_power(int k) {
    if (k == 0) return {};
    IntPoly r(static_cast<std::size_t>(k) + 1, 0);
    r[0] = 1;
    r[static_cast<std::size_t>(k)] = -1;
    return r;
}

std::int64_t value_at_one(const IntPoly& p) {
    std::int64_t s = 0;
    for (auto c : p) s += c;
    return s;
}

namespace {

// p / (1 - t) when p(1) = 0: the quotient coefficients are prefix sums.
IntPoly divide_once(const IntPoly& p) {
    IntPoly q;
    if (p.size() <= 1) return q;
    q.resize(p.size() - 1);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        run += p[i];
        q[i] = run;
    }
    trim(q);
    return q;
}

} // namespace

int multiplicity_at_one(const IntPoly& p) {
    if (p.empty()) throw std::invalid_argument("multiplicity_at_one of the zero polynomial");
    int m = 0;
    IntPoly cur = p;
    while (!cur.empty() && value_at_one(cur) == 0) {
        cur = divide_once(cur);
        ++m;
    }
    return m;
}

IntPoly divide_by_one_minus_t(const IntPoly& p, int k) {
    IntPoly cur = p;
    for (int i = 0; i < k; ++i) {
        if (cur.empty()) return cur;
        if (value_at_one(cur) != 0) throw std::invalid_argument("not divisible by (1 - t)");
        cur = divide_once(cur);
    }
    return cur;
}

} // namespace intpoly

int HilbertNumerator::krull_dimension() const {
    if (coeffs.empty()) return -1;
    return var_count - intpoly::multiplicity_at_one(coeffs);
}

std::optional<IntPoly> HilbertNumerator::finite_series() const {
    if (coeffs.empty()) return IntPoly{};
    if (krull_dimension() > 0) return std::nullopt;
    return intpoly::divide_by_one_minus_t(coeffs, var_count);
}

std::string HilbertNumerator::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) s += (i ? ", " : "") + std::to_string(coeffs[i]);
    return s + "]";
}

namespace {

void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept)
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    gens = std::move(kept);
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!coprime(gens[i], gens[j])) return false;
    return true;
}

int support_size(const Monomial& m, int nvars) {
    int s = 0;
    for (int i = 0; i < nvars; ++i) s += m[static_cast<std::size_t>(i)] != 0;
    return s;
}

IntPoly numerator(std::vector<Monomial> gens, int nvars) {
    minimalize(gens);
    if (gens.empty()) return {1};
    if (gens.front().degree() == 0) return {};
    if (pairwise_coprime(gens)) {
        IntPoly r{1};
        for (const auto& g : gens) r = intpoly::mul(r, intpoly::one_minus_t_power(g.degree()));
        return r;
    }
    // pivot variable: the one occurring in the most generators that are not pure powers
    std::vector<int> count(static_cast<std::size_t>(nvars), 0);
    for (const auto& g : gens) {
        if (support_size(g, nvars) < 2) continue;
        for (int i = 0; i < nvars; ++i)
            if (g[static_cast<std::size_t>(i)] != 0) ++count[static_cast<std::size_t>(i)];
    }
    std::size_t var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    std::vector<int> exps;
    for (const auto& g : gens)
        if (support_size(g, nvars) >= 2 && g[var] != 0) exps.push_back(g[var]);
    std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
    // exponents of var in non-pure minimal generators stay below any pure power of var,
    // so the pivot is never already in the ideal
    Monomial pivot = Monomial::variable(var, exps[exps.size() / 2]);

    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        Monomial q = g;
        q.set(var, std::max(0, g[var] - pivot[var]));
        colon.push_back(q);
    }
    return intpoly::add(numerator(std::move(with_pivot), nvars),
                        intpoly::shift(numerator(std::move(colon), nvars), pivot.degree()));
}

} // namespace

HilbertNumerator monomial_hilbert_numerator(std::vector<Monomial> gens, int nvars) {
    if (nvars < 0 || static_cast<std::size_t>(nvars) > kMaxVariables) throw InputError("bad variable count");
    return HilbertNumerator{numerator(std::move(gens), nvars), nvars};
}

LengthValue length_from_numerators(const HilbertNumerator& inner, const HilbertNumerator& outer) {
    if (inner.var_count != outer.var_count) throw InputError("numerators over different rings");
    IntPoly diff = intpoly::sub(inner.coeffs, outer.coeffs);
    if (diff.empty()) return LengthValue::finite(0);
    if (intpoly::multiplicity_at_one(diff) < inner.var_count) return LengthValue::infinite();
    return LengthValue::finite(intpoly::value_at_one(intpoly::divide_by_one_minus_t(diff, inner.var_count)));
}

LengthValue length_from_numerator(const HilbertNumerator& n) {
    auto series = n.finite_series();
    if (!series) return LengthValue::infinite();
    return LengthValue::finite(intpoly::value_at_one(*series));
}

} // namespace satlen
