#include <catch2/catch_amalgamated.hpp>

#include "../common.hpp"
#include "satlen/sop.hpp"

using namespace satlen;
using namespace fixtures;

using Seq = std::vector<std::int64_t>;

TEST_CASE("system of parameters detection", "[sop]") {
    auto q = ring({"x", "y"});
    CHECK(is_sop(make_sop(q, {"x", "y"})));
    CHECK_FALSE(is_sop(make_sop(q, {"x", "x"})));
    CHECK_FALSE(is_sop(make_sop(q, {"x"})));
    auto b = f1();
    CHECK(is_sop(make_sop(b, {"x - u", "y - v"})));
    CHECK_THROWS_AS(make_sop(q, {"x + 1"}), InputError);
}

TEST_CASE("d-sequences", "[sop]") {
    auto q = ring({"x", "y"});
    CHECK(is_d_sequence(q, polys(q, {"x", "y"}), zero_ideal(q)));
    auto b = f1();
    CHECK(is_d_sequence(b, polys(b, {"x - u", "y - v"}), zero_ideal(b)));
    // 0:y = 0:y^2 = (x)
    auto n = ring({"x", "y"}, {"x*y"});
    CHECK(is_d_sequence(n, polys(n, {"y"}), zero_ideal(n)));
    // 0:x = (x) but 0:x^2 is everything
    auto s = ring({"x", "y"}, {"x^2"});
    CHECK_FALSE(is_d_sequence(s, polys(s, {"x"}), zero_ideal(s)));
    // 0:y = (xy) but 0:y^2 = (x)
    auto c = ring({"x", "y"}, {"x*y^2"});
    CHECK_FALSE(is_d_sequence(c, polys(c, {"y"}), zero_ideal(c)));
}

TEST_CASE("almost p-standard fits", "[sop]") {
    auto q = ring({"x", "y"});
    auto regular = fit_apsop(make_sop(q, {"x", "y"}));
    CHECK(regular.success);
    CHECK(regular.lambdas == Seq{0, 0, 1});
    CHECK(is_standard_sop(regular));

    auto b = f1();
    auto fit = fit_apsop(make_sop(b, {"x - u", "y - v"}));
    CHECK(fit.success);
    CHECK(fit.lambdas == Seq{1, 0, 2});
    CHECK(fit.verify_grid.size() == 9);
    CHECK(is_standard_sop(fit));
    CHECK(fit.lambdas.back() == 2);
    CHECK(fit.lambdas.front() == 1);

    auto p = f3();
    auto line = fit_apsop(make_sop(p, {"y"}));
    CHECK(line.success);
    CHECK(line.lambdas == Seq{1, 1});

    auto g = f2();
    auto fit3 = fit_apsop(make_sop(g, {"x1 - x4", "x2 - x5", "x3 - x6"}), 2, 3, Execution::Parallel);
    CHECK(fit3.success);
    CHECK(fit3.verify_grid.size() == 27);
}

TEST_CASE("failed fits report a witness", "[sop]") {
    auto q = ring({"x", "y"});
    CHECK_THROWS_AS(fit_apsop(make_sop(q, {"x", "x"})), InputError);

    // on k[x,y]/(x^2, xy^2) the length of R/y^n is 2, 4, 5, 6, ...
    auto r = ring({"x", "y"}, {"x^2", "x*y^2"});
    auto late = fit_apsop(make_sop(r, {"y"}));
    CHECK_FALSE(late.success);
    CHECK_FALSE(late.diagnostic.empty());
    REQUIRE(late.witness);
    CHECK(*late.witness == std::vector<int>{3});
    CHECK(late.witness_measured == 5);
    CHECK(late.witness_predicted == 6);
    CHECK_FALSE(is_standard_sop(late));
}

TEST_CASE("prop33 fits", "[sop]") {
    auto b = f1();
    auto entries = check_prop33(make_sop(b, {"x - u", "y - v"}), 0, 1, 2);
    REQUIRE(entries.size() == 2);
    for (const auto& e : entries) CHECK(e.fit.success);

    auto cm = ring({"x", "y", "u"});
    for (const auto& e : check_prop33(make_sop(cm, {"x", "y", "u"}), 1, 2, 2)) {
        CHECK(e.fit.success);
        CHECK(is_standard_sop(e.fit));
    }

    auto g = f2();
    auto e2 = check_prop33(make_sop(g, {"x1 - x4", "x2 - x5", "x3 - x6"}), 1, 2, 1);
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].fit.success);
}

TEST_CASE("parameter multiplicities", "[sop]") {
    auto q = ring({"x", "y"});
    CHECK(param_multiplicity(q, polys(q, {"x"}), q->parse("y")) == 1);
    CHECK(param_multiplicity(q, polys(q, {"x"}), q->parse("y^2")) == 2);
    auto b = f1();
    CHECK(param_multiplicity(b, polys(b, {"y", "u", "v"}), b->parse("x")) == 1);
    CHECK_THROWS_AS(param_multiplicity(q, polys(q, {"x", "y"}), q->parse("y")), InputError);
}
