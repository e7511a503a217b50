#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"

namespace {

int total_cases = 0;

void report(const props::Outcome& o) {
    total_cases += o.cases;
    INFO(o.first_failure);
    CHECK(o.failures == 0);
}

} // namespace

TEST_CASE("groebner bases", "[property]") { report(props::groebner_properties(1001, 60)); }

TEST_CASE("colon, saturation and lifts", "[property]") { report(props::ideal_properties(2002, 50)); }

TEST_CASE("binomial polynomials", "[property]") { report(props::polynomial_properties(3003, 60)); }

TEST_CASE("simplicial complexes", "[property]") { report(props::complex_properties(4004, 40)); }

TEST_CASE("enough generated cases", "[property]") {
    INFO("cases run: " << total_cases);
    CHECK(total_cases >= 200);
}
