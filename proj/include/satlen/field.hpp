#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "satlen/errors.hpp"

namespace satlen {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Arithmetic in F_p for a prime p < 2^31. Elements are canonical residues.
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
        if (p >= (1u << 31) || !is_prime(p))
            throw InputError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }

    value_type from_int(std::int64_t v) const noexcept {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }

    /// Reduces a decimal digit string (no sign) modulo p.
    value_type from_decimal(std::string_view digits) const {
        std::uint64_t r = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw InputError("bad integer literal '" + std::string(digits) + "'");
            r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
        }
        return static_cast<value_type>(r);
    }

    value_type add(value_type a, value_type b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    value_type mul(value_type a, value_type b) const noexcept {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
    }

    value_type inv(value_type a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t -= q * new_t;
            std::swap(t, new_t);
            r -= q * new_r;
            std::swap(r, new_r);
        }
        return from_int(t);
    }

    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    bool is_zero(value_type a) const noexcept { return a == 0; }
    bool is_one(value_type a) const noexcept { return a == 1; }

    /// Symmetric representative in (-p/2, p/2].
    std::int64_t signed_value(value_type a) const noexcept {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }

    std::string to_string(value_type a) const { return std::to_string(signed_value(a)); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// Exact arithmetic in Q backed by GMP rationals.
class RationalField {
public:
    using value_type = mpq_class;

    std::uint32_t characteristic() const noexcept { return 0; }

    value_type zero() const { return mpq_class(0); }
    value_type one() const { return mpq_class(1); }
    value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
    value_type from_decimal(std::string_view digits) const {
        for (char c : digits)
            if (c < '0' || c > '9') throw InputError("bad integer literal '" + std::string(digits) + "'");
        return mpq_class(mpz_class(std::string(digits)));
    }

    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const {
        if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }

    std::string to_string(const value_type& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const = default;
};

template <class K>
concept CoefficientField = requires(const K& k, const typename K::value_type& a, std::int64_t i) {
    { k.characteristic() } -> std::convertible_to<std::uint32_t>;
    { k.zero() } -> std::convertible_to<typename K::value_type>;
    { k.one() } -> std::convertible_to<typename K::value_type>;
    { k.from_int(i) } -> std::convertible_to<typename K::value_type>;
    { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
    { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
    { k.neg(a) } -> std::convertible_to<typename K::value_type>;
    { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
    { k.inv(a) } -> std::convertible_to<typename K::value_type>;
    { k.is_zero(a) } -> std::convertible_to<bool>;
    { k.to_string(a) } -> std::convertible_to<std::string>;
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

} // namespace satlen
