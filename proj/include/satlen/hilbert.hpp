#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "satlen/monomial.hpp"

namespace satlen {

/// Integer polynomial coefficients, constant term first.
using IntPoly = std::vector<std::int64_t>;

/// Hilbert series of a graded quotient S/M written as N(t) / (1 - t)^var_count.
struct HilbertNumerator {
    IntPoly coeffs;
    int var_count = 0;

    bool is_zero() const noexcept { return coeffs.empty(); }

    /// Number of (1 - t) factors remaining in the denominator after
    /// cancellation; -1 for the zero series (unit ideal).
    int krull_dimension() const;

    /// Coefficients of the series as a polynomial when the dimension is 0
    /// (or the series is zero); nullopt otherwise.
    std::optional<IntPoly> finite_series() const;

    std::string to_string() const;

    friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

/// Length of a graded object: a nonnegative integer or infinite.
class LengthValue {
public:
    static LengthValue finite(std::int64_t v) { return LengthValue(v); }
    static LengthValue infinite() { return LengthValue(std::nullopt); }

    bool is_finite() const noexcept { return value_.has_value(); }
    /// Precondition: is_finite().
    std::int64_t value() const { return value_.value(); }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

    friend bool operator==(const LengthValue&, const LengthValue&) = default;

private:
    explicit LengthValue(std::optional<std::int64_t> v) : value_(v) {}
    std::optional<std::int64_t> value_;
};

namespace intpoly {

void trim(IntPoly& p);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
/// p · t^k
IntPoly shift(const IntPoly& p, int k);
/// 1 - t^k
IntPoly one_minus_t_power(int k);
/// Number of times (1 - t) divides p; p must be nonzero.
int multiplicity_at_one(const IntPoly& p);
/// Exact p / (1 - t)^k; throws when not divisible.
IntPoly divide_by_one_minus_t(const IntPoly& p, int k);
std::int64_t value_at_one(const IntPoly& p);

} // namespace intpoly

/// Numerator of HS(k[x_0..x_{nvars-1}] / (gens)) for a monomial ideal, by
/// the pivot recursion N(M) = N(M + (p)) + t^deg(p) · N(M : p).
HilbertNumerator monomial_hilbert_numerator(std::vector<Monomial> gens, int nvars);

/// Length of outer/inner from the numerators of S/inner and S/outer:
/// finite iff their difference is a polynomial after dividing by (1-t)^n.
LengthValue length_from_numerators(const HilbertNumerator& inner, const HilbertNumerator& outer);

/// Length of S/M when the quotient is Artinian, else infinite.
LengthValue length_from_numerator(const HilbertNumerator& n);

} // namespace satlen
