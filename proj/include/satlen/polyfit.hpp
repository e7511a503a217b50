#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace satlen {

using Rational = boost::rational<long long>;

/// C(n + t, t) for any integer n (generalized binomial, exact).
std::int64_t shifted_binomial(std::int64_t n, int t);

/// P(n) = Σ_t coeffs[t] · C(n + t, t).
struct BinomialPolynomial {
    std::vector<std::int64_t> coeffs{0};
    /// First n from which the fitted sequence agrees with P.
    std::size_t stable_from = 0;
    /// Number of vanishing top differences required when fitting.
    int window = 0;

    /// Index of the top coefficient; 0 for constants including zero.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }

    std::int64_t operator()(std::int64_t n) const;

    /// Leading normalized coefficient: 0 for constants, else the top f.
    std::int64_t e0() const { return degree() == 0 ? 0 : coeffs.back(); }
    /// Constant term of the degree ≤ 1 form n·e0 + e1; nullopt above degree 1.
    std::optional<std::int64_t> e1() const;

    /// Coefficients in the power basis 1, n, n², ….
    std::vector<Rational> to_power_basis() const;
    /// Inverse of to_power_basis; throws InputError when the polynomial is
    /// not integer valued.
    static BinomialPolynomial from_power_basis(const std::vector<Rational>& power);

    /// Same coefficients (stable_from and window are ignored).
    bool same_polynomial(const BinomialPolynomial& o) const { return coeffs == o.coeffs; }
};

/// Result of eventual-polynomial detection. `polynomial` is empty when no
/// difference order up to `max_degree_tried` vanishes on the last `window`
/// entries; that verdict only speaks about the computed range.
struct PolynomialDetection {
    std::optional<BinomialPolynomial> polynomial;
    int window = 3;
    int max_degree_tried = -1;
    std::string message;
};

/// Smallest D whose (D+1)-th differences vanish on the last `window`
/// entries; the polynomial then matches the sequence from stable_from on.
/// Throws InputError when the sequence has fewer than window + 1 entries.
PolynomialDetection detect_eventual_polynomial(const std::vector<std::int64_t>& seq, int window = 3,
                                               std::optional<int> max_degree = std::nullopt);

/// Outcome of a validator. Per-n vectors are filled when the validator
/// compares sequences.
struct Verdict {
    std::string name;
    bool pass = false;
    std::vector<std::int64_t> predicted;
    std::vector<std::int64_t> measured;
    std::optional<std::size_t> first_mismatch;
    std::optional<BinomialPolynomial> fitted;
    std::optional<BinomialPolynomial> predicted_polynomial;
    std::optional<std::int64_t> predicted_e0;
    std::optional<std::int64_t> measured_e0;
    std::vector<std::string> notes;
};

/// Eventually polynomial of degree ≤ 1.
Verdict validate_thm22(const std::vector<std::int64_t>& seq, int window = 3);

/// One annotated one-dimensional associated prime.
struct Ass1Record {
    std::vector<std::string> prime;
    std::int64_t local_h0_length = 0;
    bool contains_a = false;
};

/// Predicted e0 = Σ local_h0_length · mult over records with contains_a
/// false; `mults` lists those multiplicities in record order.
Verdict validate_thm24(const BinomialPolynomial& measured, const std::vector<Ass1Record>& ann,
                       const std::vector<std::int64_t>& mults);

/// The closed form in the binomial basis: h⁰ is added to f_0 and
/// f_t += Σ_{j≤t} C(t, j) h^{j+1} for t < i.
BinomialPolynomial thm39_prediction(const std::vector<std::int64_t>& h, int i);

/// Entry-wise comparison with the closed form plus the vanishing and degree
/// statements. `depth` defaults to the first nonzero index of h (d if none).
Verdict validate_thm39(const std::vector<std::int64_t>& seq, const std::vector<std::int64_t>& h, int i, int d,
                       std::optional<int> depth = std::nullopt, int window = 3);

enum class Cor25Case { FilterRegular, Annihilator };

/// Annihilator case: pass iff the fit is constant. Filter-regular case:
/// pass iff a fit exists and, when `annotated_e0` is given, its e0 matches.
Verdict validate_cor25(const std::vector<std::int64_t>& seq, Cor25Case kind,
                       std::optional<std::int64_t> annotated_e0 = std::nullopt, int window = 3);

/// All entries zero.
Verdict validate_cor34(const std::vector<std::int64_t>& seq);

struct EpsilonProbe {
    /// (n, d!·seq[n]/n^d) for n ≥ 1.
    std::vector<std::pair<int, Rational>> values;
    /// strictly-decreasing, nonincreasing, constant, nondecreasing,
    /// strictly-increasing or mixed.
    std::string trend;
};

EpsilonProbe epsilon_probe(const std::vector<std::int64_t>& seq, int d);

std::string to_string(const Rational& r);

} // namespace satlen
