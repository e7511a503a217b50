#pragma once

// Randomized property checks. Each family returns how many generated cases
// it ran and describes the first failure, so the same code backs the Catch2
// suite and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "satlen/homology.hpp"
#include "satlen/oracle.hpp"
#include "satlen/polyfit.hpp"
#include "satlen/sop.hpp"

namespace props {

using namespace satlen;
using K = PrimeField;
using Poly = Polynomial<K>;
using Ideal = IdealHandle<K>;

struct Outcome {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    Outcome& operator+=(const Outcome& o) {
        cases += o.cases;
        if (o.failures && !failures) first_failure = o.first_failure;
        failures += o.failures;
        return *this;
    }
};

inline Poly random_poly(const RingPtr<K>& r, std::mt19937& rng, int degree, int max_terms) {
    auto monos = monomials_of_degree(r->nvars(), degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> coef(1, 7);
    std::uniform_int_distribution<int> terms(1, max_terms);
    Poly p = r->zero();
    for (int k = terms(rng); k > 0; --k)
        p += Poly::monomial(r->field(), r->nvars(), monos[pick(rng)], r->order())
                 .scaled(r->field().from_int(coef(rng)));
    return p;
}

inline std::vector<Poly> random_gens(const RingPtr<K>& r, std::mt19937& rng, int count, int max_degree,
                                     int max_terms) {
    std::uniform_int_distribution<int> deg(1, max_degree);
    std::vector<Poly> out;
    while (static_cast<int>(out.size()) < count) {
        auto p = random_poly(r, rng, deg(rng), max_terms);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

inline std::string describe(const Ideal& a) { return a.to_string(); }

/// Gröbner idempotence, membership consistency, homogeneity and order
/// invariance of Hilbert numerators.
inline Outcome groebner_properties(std::uint32_t seed, int count) {
    Outcome out;
    std::mt19937 rng(seed);
    auto r = RingPresentation<K>::make(K(32003), {"x", "y", "z"}, {});
    auto rl = r->with_order(MonomialOrder::lex());
    std::uniform_int_distribution<int> ngens(2, 4);
    for (int c = 0; c < count; ++c, ++out.cases) {
        auto gens = random_gens(r, rng, ngens(rng), 3, 5);
        Ideal a(r, gens);
        const auto& g = a.basis();
        auto again = buchberger(r->field(), r->nvars(), g.elements(), r->order());
        out.check(again == g, "idempotence " + describe(a));
        for (const auto& e : g.elements()) out.check(e.is_homogeneous(), "homogeneity " + describe(a));

        // an element of the ideal
        Poly f = r->zero();
        for (const auto& gen : gens) f += gen * random_poly(r, rng, 4 - gen.degree() > 0 ? 4 - gen.degree() : 0, 2);
        if (f.is_homogeneous()) {
            out.check(g.normal_form(f).is_zero(), "member reduces to zero " + describe(a));
        }
        // a random element: three membership views agree
        auto h = random_poly(r, rng, 3, 3);
        bool nf = g.normal_form(h).is_zero();
        bool eq = ideal_equal(a, sum(a, Ideal(r, std::vector<Poly>{h})));
        out.check(nf == a.contains(h) && nf == eq, "membership views " + describe(a));

        std::vector<Poly> lex_gens;
        for (const auto& p : gens) lex_gens.push_back(p.with_order(rl->order()));
        out.check(hilbert_numerator(a) == hilbert_numerator(Ideal(rl, lex_gens)), "order invariance " + describe(a));
    }
    return out;
}

/// Colon and saturation inclusions, power monotonicity, lift coherence and
/// oracle agreement of saturation lengths.
inline Outcome ideal_properties(std::uint32_t seed, int count) {
    Outcome out;
    std::mt19937 rng(seed);
    auto plain = RingPresentation<K>::make(K(32003), {"x", "y", "z"}, {});
    auto quot = RingPresentation<K>::make(K(32003), {"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
    std::uniform_int_distribution<int> ngens(1, 3);
    for (int c = 0; out.cases < count && c < 10 * count; ++c) {
        const auto& r = (c % 2 == 0) ? plain : quot;
        auto m = maximal_ideal(r);
        Ideal a(r, random_gens(r, rng, ngens(rng), 2, 2));
        if (a.is_zero()) continue;
        auto f = random_poly(r, rng, 1, 2);
        if (r->is_zero_in_ring(f)) continue;
        auto col = colon(a, f);
        out.check(is_subset(a, col), "A in A:f " + describe(a));
        out.check(is_subset(product(col, Ideal(r, std::vector<Poly>{f})), a), "f(A:f) in A " + describe(a));

        out.check(is_subset(power(a, 3), power(a, 2)), "power monotone " + describe(a));

        auto sat = saturate(a, m).ideal;
        out.check(is_subset(a, sat), "A in sat " + describe(a));
        out.check(ideal_equal(saturate(sat, m).ideal, sat), "saturation idempotent " + describe(a));
        SaturationOptions pv;
        pv.per_variable = true;
        out.check(ideal_equal(saturate(a, m, pv).ideal, sat), "per-variable saturation " + describe(a));

        auto len = length_pair(a, sat);
        out.check(len.is_finite(), "finite torsion " + describe(a));
        if (len.is_finite()) out.check(len.value() == oracle::length_pair_bruteforce(a, sat), "oracle " + describe(a));

        if (!r->relations().empty()) {
            // perturb every lift by an element of J
            std::vector<Poly> moved;
            for (const auto& g : a.generators()) {
                Poly j = r->zero();
                const int dg = g.degree();
                if (dg >= 2)
                    for (const auto& rel : r->relations()) j += rel * random_poly(r, rng, dg - 2, 1);
                moved.push_back(g + j);
            }
            Ideal b(r, moved);
            out.check(ideal_equal(a, b), "lift coherence " + describe(a));
            out.check(ideal_equal(power(a, 2), power(b, 2)), "lift coherence of powers " + describe(a));
            out.check(ideal_equal(colon(a, f), colon(b, f)), "lift coherence of colons " + describe(a));
        }
        ++out.cases;
    }
    return out;
}

/// Binomial-basis round trips and exact recovery of generated sequences.
inline Outcome polynomial_properties(std::uint32_t seed, int count) {
    Outcome out;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::uniform_int_distribution<int> noise(0, 3);
    for (int c = 0; c < count; ++c, ++out.cases) {
        BinomialPolynomial p;
        p.coeffs.assign(static_cast<std::size_t>(deg(rng) + 1), 0);
        for (auto& x : p.coeffs) x = coef(rng);
        if (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.back() = 1;
        std::string tag = "coeffs";
        for (auto x : p.coeffs) tag += " " + std::to_string(x);

        auto back = BinomialPolynomial::from_power_basis(p.to_power_basis());
        out.check(back.same_polynomial(p), "round trip " + tag);

        // a garbage prefix followed by P(n)
        const int prefix = noise(rng);
        std::vector<std::int64_t> seq;
        for (int n = 0; n < prefix + 10; ++n) seq.push_back(n < prefix ? 1000 + n * n * n * 7 : p(n));
        auto det = detect_eventual_polynomial(seq);
        out.check(det.polynomial.has_value() && det.polynomial->same_polynomial(p), "recovery " + tag);
        if (det.polynomial) {
            for (std::size_t n = det.polynomial->stable_from; n < seq.size(); ++n)
                out.check((*det.polynomial)(static_cast<std::int64_t>(n)) == seq[n], "tail " + tag);
        }
    }
    return out;
}

/// Euler characteristics from faces and from homology, independence of the
/// facet order, and the invariant against sop fits on disjoint simplices.
inline Outcome complex_properties(std::uint32_t seed, int count) {
    Outcome out;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> nverts(1, 6);
    std::uniform_int_distribution<int> nfacets(1, 5);
    for (int c = 0; c < count; ++c, ++out.cases) {
        const int n = nverts(rng);
        std::vector<std::string> names;
        for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
        std::uniform_int_distribution<std::uint32_t> mask(0, (1u << n) - 1);
        std::vector<SimplicialComplex::Face> facets;
        for (int k = nfacets(rng); k > 0; --k) facets.push_back(mask(rng));
        SimplicialComplex cx(names, facets);
        auto betti = reduced_homology_dims(cx, K(32003));
        std::int64_t alt = 0;
        for (std::size_t i = 0; i < betti.size(); ++i) alt += (i % 2 == 1) ? betti[i] : -betti[i];
        out.check(alt == cx.reduced_euler_characteristic(), "euler " + cx.to_string());
        std::reverse(facets.begin(), facets.end());
        out.check(reduced_homology_dims(SimplicialComplex(names, facets), K(32003)) == betti, "facet order " + cx.to_string());
    }

    // two disjoint k-simplices: Buchsbaum of dimension k + 1
    for (int k = 0; k <= 2; ++k, ++out.cases) {
        std::vector<std::string> names, rels, sop;
        for (int i = 0; i <= k; ++i) names.push_back("a" + std::to_string(i));
        for (int i = 0; i <= k; ++i) names.push_back("b" + std::to_string(i));
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) rels.push_back("a" + std::to_string(i) + "*b" + std::to_string(j));
        for (int i = 0; i <= k; ++i) sop.push_back("a" + std::to_string(i) + " - b" + std::to_string(i));
        auto r = RingPresentation<K>::make(K(32003), names, rels);
        std::vector<Monomial> mons;
        for (const auto& rel : r->relations()) mons.push_back(rel.lead_monomial());
        auto cx = complex_from_squarefree(mons, names);
        auto h = buchsbaum_cohomology_vector(cx, k + 1, K(32003), true);
        auto fit = fit_apsop(make_sop(r, sop));
        out.check(fit.success && is_standard_sop(fit) && fit.lambdas.front() == buchsbaum_invariant(h),
                  "invariant vs fit, k = " + std::to_string(k));
    }
    return out;
}

inline Outcome all(int scale = 1) {
    Outcome o;
    o += groebner_properties(1001, 60 * scale);
    o += ideal_properties(2002, 50 * scale);
    o += polynomial_properties(3003, 60 * scale);
    o += complex_properties(4004, 40 * scale);
    return o;
}

} // namespace props
