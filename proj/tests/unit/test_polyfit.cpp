#include <catch2/catch_amalgamated.hpp>

#include "satlen/errors.hpp"
#include "satlen/polyfit.hpp"

using namespace satlen;
using Seq = std::vector<std::int64_t>;

TEST_CASE("shifted binomials", "[polyfit]") {
    CHECK(shifted_binomial(3, 2) == 10);
    CHECK(shifted_binomial(0, 3) == 1);
    CHECK(shifted_binomial(-1, 1) == 0);
    CHECK(shifted_binomial(-3, 1) == -2);
    CHECK(shifted_binomial(5, 0) == 1);
}

TEST_CASE("eventual polynomial detection", "[polyfit]") {
    auto c = detect_eventual_polynomial({1, 1, 1, 1, 1, 1});
    REQUIRE(c.polynomial);
    CHECK(c.polynomial->coeffs == Seq{1});
    CHECK(c.polynomial->stable_from == 0);

    auto l = detect_eventual_polynomial({2, 3, 4, 5, 6, 7});
    REQUIRE(l.polynomial);
    CHECK(l.polynomial->degree() == 1);
    CHECK(l.polynomial->e0() == 1);
    CHECK(l.polynomial->e1() == 2);

    auto q = detect_eventual_polynomial({0, 1, 4, 9, 16, 25, 36});
    REQUIRE(q.polynomial);
    CHECK(q.polynomial->degree() == 2);
    CHECK(q.polynomial->coeffs == Seq{1, -3, 2});
    CHECK_FALSE(q.polynomial->e1());

    auto late = detect_eventual_polynomial({5, 0, 1, 1, 1, 1});
    REQUIRE(late.polynomial);
    CHECK(late.polynomial->stable_from == 2);

    auto none = detect_eventual_polynomial({1, 2, 4, 8, 16, 32}, 3, 1);
    CHECK_FALSE(none.polynomial);
    CHECK(none.message.find("no stabilization") != std::string::npos);

    CHECK_THROWS_AS(detect_eventual_polynomial({1, 2}), InputError);
}

TEST_CASE("power basis conversion", "[polyfit]") {
    BinomialPolynomial p;
    p.coeffs = {1, -3, 2};
    auto power = p.to_power_basis();
    CHECK(power == std::vector<Rational>{0, 0, 1});
    CHECK(BinomialPolynomial::from_power_basis(power).same_polynomial(p));
    CHECK_THROWS_AS(BinomialPolynomial::from_power_basis({0, Rational(1, 2)}), InputError);
}

TEST_CASE("thm22 validator", "[polyfit]") {
    CHECK(validate_thm22({2, 3, 4, 5, 6, 7, 8}).pass);
    CHECK(validate_thm22({0, 1, 1, 1, 1, 1, 1}).pass);
    CHECK(validate_thm22({0, 0, 0, 0, 0}).pass);
    auto v = validate_thm22({0, 1, 4, 9, 16, 25, 36});
    CHECK_FALSE(v.pass);
}

TEST_CASE("thm24 validator", "[polyfit]") {
    auto fitted = *detect_eventual_polynomial({2, 3, 4, 5, 6, 7}).polynomial;
    auto ok = validate_thm24(fitted, {{{"x"}, 1, false}}, {1});
    CHECK(ok.pass);
    CHECK(ok.predicted_e0 == 1);
    auto constant = *detect_eventual_polynomial({0, 1, 1, 1, 1, 1}).polynomial;
    CHECK(validate_thm24(constant, {{{"x"}, 1, true}}, {}).pass);
    CHECK(validate_thm24(constant, {}, {}).pass);
    CHECK_FALSE(validate_thm24(fitted, {{{"x"}, 2, false}}, {1}).pass);
}

TEST_CASE("thm39 closed form", "[polyfit]") {
    auto one = thm39_prediction({0, 1}, 1);
    CHECK(one.coeffs == Seq{1});
    auto two = thm39_prediction({0, 1, 0}, 2);
    CHECK(two.coeffs == Seq{1, 1});
    for (int n = 0; n < 6; ++n) CHECK(two(n) == n + 2);

    CHECK(validate_thm39({1, 1, 1, 1, 1, 1, 1}, {0, 1}, 1, 2).pass);
    CHECK(validate_thm39({2, 3, 4, 5, 6, 7}, {0, 1, 0}, 2, 3).pass);
    CHECK(validate_thm39({0, 0, 0, 0, 0}, {0, 0, 0, 0}, 2, 4).pass);
    auto bad = validate_thm39({2, 3, 4, 6, 6, 7}, {0, 1, 0}, 2, 3);
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_mismatch == 3);
}

TEST_CASE("cor25 and cor34 validators", "[polyfit]") {
    CHECK(validate_cor25({0, 1, 1, 1, 1, 1, 1}, Cor25Case::Annihilator).pass);
    CHECK(validate_cor25({0, 0, 0, 0, 0}, Cor25Case::Annihilator).pass);
    CHECK_FALSE(validate_cor25({2, 3, 4, 5, 6}, Cor25Case::Annihilator).pass);
    CHECK(validate_cor25({2, 3, 4, 5, 6}, Cor25Case::FilterRegular, 1).pass);
    CHECK_FALSE(validate_cor25({2, 3, 4, 5, 6}, Cor25Case::FilterRegular, 2).pass);

    CHECK(validate_cor34({0, 0, 0, 0}).pass);
    auto v = validate_cor34({0, 0, 1, 0});
    CHECK_FALSE(v.pass);
    CHECK(v.first_mismatch == 2);
}

TEST_CASE("epsilon probe", "[polyfit]") {
    auto p = epsilon_probe({2, 3, 4, 5, 6, 7, 8}, 2);
    REQUIRE(p.values.size() == 6);
    CHECK(p.values[0].second == Rational(6));
    CHECK(p.values[5].second == Rational(4, 9));
    CHECK(p.trend == "strictly-decreasing");

    auto z = epsilon_probe({0, 0, 0, 0}, 2);
    CHECK(z.trend == "constant");
    for (const auto& [n, v] : z.values) CHECK(v == Rational(0));

    // C(n+2, 2): 2·C(n+2,2)/n^2 = (n+2)(n+1)/n^2 tends to 1 from above
    Seq tri;
    for (int n = 0; n <= 40; ++n) tri.push_back(shifted_binomial(n, 2));
    auto t = epsilon_probe(tri, 2);
    CHECK(t.trend == "strictly-decreasing");
    CHECK(t.values.back().second > Rational(1));
    CHECK(t.values.back().second < Rational(11, 10));
    CHECK(to_string(Rational(-3, 4)) == "-3/4");
}
