#include <catch2/catch_amalgamated.hpp>

#include "../common.hpp"
#include "satlen/oracle.hpp"
#include "satlen/satfn.hpp"

using namespace satlen;
using namespace fixtures;

using Seq = std::vector<std::int64_t>;

namespace {

Seq brute(const Ideal& a, int nmax) {
    Seq out;
    for (int n = 0; n <= nmax; ++n) out.push_back(oracle::h0_bruteforce(a, n).value);
    return out;
}

} // namespace

TEST_CASE("h0 sequences of the fixtures", "[satfn]") {
    auto cm = cm4();
    CHECK(h0_sequence(ideal(cm, {"x", "y"}), 4).values == Seq{0, 0, 0, 0, 0});

    auto b = f1();
    auto s = h0_sequence(ideal(b, {"x - u"}), 4);
    CHECK(s.values == Seq{1, 1, 1, 1, 1});
    CHECK(s.kind == SequenceKind::H0);
    CHECK(s.stabilization.size() == 5);

    auto p = f3();
    CHECK(h0_sequence(ideal(p, {"y"}), 3).values == Seq{2, 3, 4, 5});
    CHECK(h0_sequence(ideal(p, {"x"}), 3).values == Seq{0, 1, 1, 1});

    CHECK_THROWS_AS(h0_sequence(unit_ideal(p), 2), InputError);
}

TEST_CASE("oracle agrees with the Groebner route", "[satfn][oracle]") {
    auto b = f1();
    CHECK(brute(ideal(b, {"x - u"}), 4) == Seq{1, 1, 1, 1, 1});
    auto p = f3();
    CHECK(brute(ideal(p, {"y"}), 4) == h0_sequence(ideal(p, {"y"}), 4).values);
    auto cm = cm4();
    CHECK(oracle::h0_bruteforce(zero_ideal(cm), 0).value == 0);
    // Artinian quotient: h0 is the whole length of R/I^{n+1}
    auto q = ring({"x", "y"});
    auto m2 = oracle::h0_bruteforce(maximal_ideal(q), 1);
    CHECK(m2.value == 3);
}

TEST_CASE("parallel and serial sequences agree", "[satfn]") {
    auto r = f2();
    auto a = ideal(r, {"x1 - x4", "x2 - x5"});
    auto s = h0_sequence(a, 3, H0Options{{}, Execution::Serial});
    auto p = h0_sequence(a, 3, H0Options{{}, Execution::Parallel});
    CHECK(s.values == Seq{2, 3, 4, 5});
    CHECK(s.values == p.values);
}

TEST_CASE("order invariance", "[satfn]") {
    auto g = f3();
    auto l = f3(32003, MonomialOrder::lex());
    CHECK(h0_sequence(ideal(g, {"y"}), 3).values == h0_sequence(ideal(l, {"y"}), 3).values);
    auto g1 = f1();
    auto l1 = f1(32003, MonomialOrder::lex());
    CHECK(h0_sequence(ideal(g1, {"x - u"}), 2).values == h0_sequence(ideal(l1, {"x - u"}), 2).values);
}

TEST_CASE("rees sequences", "[satfn]") {
    auto q = ring({"x", "y"});
    auto a = ideal(q, {"x^2", "x*y"});
    CHECK(rees_sequence(a, a, 3).values == Seq{0, 0, 0, 0});
    auto r = rees_sequence(a, ideal(q, {"x"}), 2);
    REQUIRE(r.values.size() == 3);
    for (int n = 0; n <= 2; ++n)
        CHECK(r.values[static_cast<std::size_t>(n)] ==
              oracle::length_pair_bruteforce(power(a, n + 1), power(ideal(q, {"x"}), n + 1)));

    auto b = f1();
    auto i = ideal(b, {"x - u"});
    auto sat = saturate(i, maximal_ideal(b)).ideal;
    CHECK(rees_sequence(i, sat, 4).values == h0_sequence(i, 4).values);
}

TEST_CASE("lemma35 identities", "[satfn][identity]") {
    auto b = f1();
    auto sop = polys(b, {"x - u", "y - v"});
    auto rep = check_lemma35(b, sop, 0, 1, 2, 3);
    CHECK(rep.all_hold());
    CHECK(rep.entries.size() == 4);
    CHECK(rep.entries.front().n == 0);

    auto cm = ring({"x", "y"});
    CHECK(check_lemma35(cm, polys(cm, {"x", "y"}), 0, 1, 2, 3).all_hold());
}

TEST_CASE("cor36 identities", "[satfn][identity]") {
    auto b = f1();
    auto rep = check_cor36(b, polys(b, {"x - u", "y - v"}), 0, 1, 3);
    CHECK(rep.all_hold());
    CHECK_FALSE(rep.sub_entries.empty());

    auto cm = cm4();
    CHECK(check_cor36(cm, polys(cm, {"x", "y", "u", "v"}), 0, 2, 3).all_hold());

    auto g = f2();
    CHECK(check_cor36(g, polys(g, {"x1 - x4", "x2 - x5", "x3 - x6"}), 0, 2, 2).all_hold());
}

TEST_CASE("cor38 identities", "[satfn][identity]") {
    auto q = ring({"x", "y"});
    CHECK(check_cor38(q, polys(q, {"x", "y"}), 1, 3).all_hold());
    auto b = f1();
    CHECK(check_cor38(b, polys(b, {"x - u", "y - v"}), 1, 4).all_hold());
    auto g = f2();
    CHECK(check_cor38(g, polys(g, {"x1 - x4", "x2 - x5", "x3 - x6"}), 2, 3).all_hold());
    CHECK_THROWS_AS(check_cor38(b, polys(b, {"x - u", "y - v"}), 0, 2), InputError);
}

TEST_CASE("filter-regular elements", "[satfn]") {
    auto q = ring({"x", "y"});
    CHECK(is_filter_regular(q, q->parse("x")));
    auto p = f3();
    CHECK(is_filter_regular(p, p->parse("y")));
    auto c = ring({"x", "y"}, {"x*y"});
    CHECK_FALSE(is_filter_regular(c, c->parse("x")));
}
