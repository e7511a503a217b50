// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any fails. All comparisons are exact.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "../common.hpp"
#include "../property/properties.hpp"
#include "satlen/homology.hpp"
#include "satlen/oracle.hpp"
#include "satlen/polyfit.hpp"
#include "satlen/satfn.hpp"
#include "satlen/sop.hpp"

using namespace satlen;
using namespace fixtures;
using Seq = std::vector<std::int64_t>;

namespace {

constexpr std::int64_t kTolerance = 0;

bool exact(std::int64_t a, std::int64_t b) { return (a > b ? a - b : b - a) <= kTolerance; }

bool exact(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!exact(a[i], b[i])) return false;
    return true;
}

std::string show(const Seq& s) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
    return o.str() + "]";
}

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Seq oracle_seq(const Ideal& a, int nmax) {
    Seq out;
    for (int n = 0; n <= nmax; ++n) out.push_back(oracle::h0_bruteforce(a, n).value);
    return out;
}

Seq linear(std::int64_t slope, std::int64_t constant, int nmax) {
    Seq out;
    for (int n = 0; n <= nmax; ++n) out.push_back(slope * n + constant);
    return out;
}

SimplicialComplex sr_complex(const RingPtr<PrimeField>& r) {
    std::vector<Monomial> mons;
    for (const auto& rel : r->relations()) mons.push_back(rel.lead_monomial());
    return complex_from_squarefree(mons, r->names());
}

Check criterion1() {
    Check c;
    auto r = f1();
    auto a = ideal(r, {"x - u"});
    auto seq = h0_sequence(a, 6).values;
    c.require(exact(seq, Seq(7, 1)), "h0 " + show(seq));
    c.require(exact(oracle_seq(a, 6), seq), "oracle disagrees");
    auto h = buchsbaum_cohomology_vector(sr_complex(r), 2, r->field(), true);
    c.require(exact(h, Seq{0, 1}), "h from homology " + show(h));
    auto v = validate_thm39(seq, h, 1, 2);
    c.require(v.pass, "thm39 validator");
    c.require(v.predicted_polynomial && v.predicted_polynomial->coeffs == Seq{1}, "predicted constant 1");
    return c;
}

Check criterion2() {
    Check c;
    auto r = f2();
    auto a = ideal(r, {"x1 - x4", "x2 - x5"});
    auto seq = h0_sequence(a, 5).values;
    c.require(exact(seq, linear(1, 2, 5)), "h0 " + show(seq));
    c.require(exact(oracle_seq(a, 5), seq), "oracle disagrees");
    auto h = buchsbaum_cohomology_vector(sr_complex(r), 3, r->field(), true);
    c.require(exact(h, Seq{0, 1, 0}), "h from homology " + show(h));
    auto v = validate_thm39(seq, h, 2, 3);
    c.require(v.pass, "thm39 validator");
    c.require(v.fitted && v.fitted->degree() == 1, "degree 1");
    return c;
}

Check criterion3() {
    Check c;
    auto r = f3();
    auto ay = ideal(r, {"y"});
    auto seq = h0_sequence(ay, 6).values;
    c.require(exact(seq, linear(1, 2, 6)), "h0(y) " + show(seq));
    c.require(exact(oracle_seq(ay, 6), seq), "oracle disagrees for y");
    auto t22 = validate_thm22(seq);
    c.require(t22.pass && t22.fitted && t22.fitted->degree() == 1, "thm22");
    auto p = ideal(r, {"x"});
    const bool contains = p.contains(r->parse("y"));
    auto mult = param_multiplicity(r, p.generators(), r->parse("y"));
    c.require(!contains && mult == 1, "multiplicity " + std::to_string(mult));
    auto t24 = validate_thm24(*t22.fitted, {{{"x"}, 1, contains}}, {mult});
    c.require(t24.pass && t24.predicted_e0 && exact(*t24.predicted_e0, 1), "thm24");

    auto ax = ideal(r, {"x"});
    auto sx = h0_sequence(ax, 6).values;
    c.require(exact(Seq(sx.begin() + 1, sx.end()), Seq(6, 1)), "h0(x) " + show(sx));
    c.require(exact(oracle_seq(ax, 6), sx), "oracle disagrees for x");
    c.require(validate_cor25(sx, Cor25Case::Annihilator).pass, "cor25 constancy");
    return c;
}

Check criterion4() {
    Check c;
    auto r = cm4();
    auto a = ideal(r, {"x", "y"});
    auto seq = h0_sequence(a, 6).values;
    c.require(exact(seq, Seq(7, 0)), "h0 " + show(seq));
    c.require(validate_cor34(seq).pass, "cor34");
    auto fit = fit_apsop(make_sop(r, {"x", "y", "u", "v"}));
    c.require(is_standard_sop(fit), "standard sop");
    c.require(exact(fit.lambdas, Seq{0, 0, 0, 0, 1}), "lambdas " + show(fit.lambdas));
    return c;
}

Check identity_suite(const RingPtr<PrimeField>& r, const std::vector<std::string>& sop_texts, const char* tag) {
    Check c;
    auto sop = polys(r, sop_texts);
    const int d = static_cast<int>(sop.size());
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            for (int t = 1; t <= d; ++t)
                if (t <= i || t > j)
                    c.require(check_lemma35(r, sop, i, j, t, 4).all_hold(),
                              std::string(tag) + " lemma35 " + std::to_string(i) + std::to_string(j) + std::to_string(t));
            if (cor36_t(i, j) <= d)
                c.require(check_cor36(r, sop, i, j, 4).all_hold(),
                          std::string(tag) + " cor36 " + std::to_string(i) + std::to_string(j));
        }
    for (int i = 1; i < d; ++i)
        c.require(check_cor38(r, sop, i, 5).all_hold(), std::string(tag) + " cor38 " + std::to_string(i));
    return c;
}

Check criterion5() {
    Check c = identity_suite(f1(), {"x - u", "y - v"}, "F1");
    if (!c.ok) return c;
    return identity_suite(f2(), {"x1 - x4", "x2 - x5", "x3 - x6"}, "F2");
}

Check criterion6() {
    Check c;
    auto r1 = f1();
    auto fit1 = fit_apsop(make_sop(r1, {"x - u", "y - v"}), 2, 3, Execution::Parallel);
    c.require(fit1.success && exact(fit1.lambdas, Seq{1, 0, 2}), "F1 lambdas " + show(fit1.lambdas));
    c.require(fit1.verify_grid.size() == 9, "F1 grid size");
    auto r2 = f2();
    auto fit2 = fit_apsop(make_sop(r2, {"x1 - x4", "x2 - x5", "x3 - x6"}), 2, 3, Execution::Parallel);
    c.require(fit2.success, "F2 fit: " + fit2.diagnostic);
    c.require(fit2.verify_grid.size() == 27, "F2 grid size");
    return c;
}

struct FixtureCase {
    const char* name;
    std::function<RingPtr<PrimeField>(std::uint32_t)> ring;
    std::vector<std::string> ideal;
    int nmax;
};

Check criterion7() {
    Check c;
    const std::vector<FixtureCase> cases{
        {"F1", [](std::uint32_t p) { return f1(p); }, {"x - u"}, 6},
        {"F2", [](std::uint32_t p) { return f2(p); }, {"x1 - x4", "x2 - x5"}, 5},
        {"F3y", [](std::uint32_t p) { return f3(p); }, {"y"}, 6},
        {"F3x", [](std::uint32_t p) { return f3(p); }, {"x"}, 6},
        {"CM", [](std::uint32_t p) { return cm4(p); }, {"x", "y"}, 6},
    };
    for (const auto& fc : cases) {
        std::optional<Seq> reference;
        for (std::uint32_t p : {2u, 3u, 32003u}) {
            auto r = fc.ring(p);
            auto a = ideal(r, fc.ideal);
            auto m = maximal_ideal(r);
            auto seq = h0_sequence(a, fc.nmax).values;
            const std::string tag = std::string(fc.name) + " p=" + std::to_string(p);
            c.require(exact(oracle_seq(a, fc.nmax), seq), tag + " h0 oracle");
            for (int n = 0; n <= fc.nmax; ++n) {
                auto pw = power(a, n + 1);
                auto sat = saturate(pw, m).ideal;
                auto len = length_pair(pw, sat);
                c.require(len.is_finite() && exact(len.value(), oracle::length_pair_bruteforce(pw, sat)),
                          tag + " length_pair n=" + std::to_string(n));
            }
            if (!reference) reference = seq;
            c.require(exact(*reference, seq), tag + " depends on the characteristic");
        }
    }
    for (std::uint32_t p : {2u, 3u, 32003u}) {
        c.require(exact(reduced_homology_dims(sr_complex(f1()), PrimeField(p)), Seq{0, 1, 0}), "F1 homology");
        c.require(exact(reduced_homology_dims(sr_complex(f2()), PrimeField(p)), Seq{0, 1, 0, 0}), "F2 homology");
    }
    return c;
}

Check criterion8() {
    Check c;
    auto o = props::all();
    c.require(o.cases >= 200, "only " + std::to_string(o.cases) + " cases");
    c.require(o.failures == 0, std::to_string(o.failures) + " failures, first: " + o.first_failure);
    if (c.ok) c.detail = std::to_string(o.cases) + " cases";
    return c;
}

Check criterion9() {
    Check c;
    auto seq = h0_sequence(ideal(f3(), {"y"}), 6).values;
    auto probe = epsilon_probe(seq, 2);
    c.require(probe.values.size() == 6, "six probe values");
    for (std::size_t k = 1; k < probe.values.size(); ++k)
        c.require(probe.values[k].second < probe.values[k - 1].second, "not decreasing at n=" + std::to_string(k + 1));
    c.require(probe.trend == "strictly-decreasing", "trend " + probe.trend);
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Check()>>> criteria{
        {"1 F1: h0 = 1, cohomology prediction from homology, oracle", criterion1},
        {"2 F2: h0 = n + 2, cohomology prediction of degree 1", criterion2},
        {"3 F3 principal: degree bound, leading coefficient, constancy", criterion3},
        {"4 Cohen-Macaulay control", criterion4},
        {"5 identity suites on F1 and F2", criterion5},
        {"6 sop grid fits", criterion6},
        {"7 oracle equivalence and characteristic independence", criterion7},
        {"8 property suites", criterion8},
        {"9 epsilon probe", criterion9},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::cout << (c.ok ? "PASS " : "FAIL ") << name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
