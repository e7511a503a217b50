#include "satlen/polyfit.hpp"

#include <algorithm>

#include "satlen/errors.hpp"

namespace satlen {

std::int64_t shifted_binomial(std::int64_t n, int t) {
    std::int64_t c = 1;
    for (int k = 1; k <= t; ++k) c = c * (n + k) / k;
    return c;
}

namespace {

std::int64_t binomial(int n, int k) { return shifted_binomial(n - k, k); }

void trim_top(std::vector<std::int64_t>& c) {
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.empty()) c.push_back(0);
}

// f_k = ∇^k P(-1) = Σ_j (-1)^j C(k, j) P(-1-j), given back[j] = P(-1-j)
template <typename T>
std::vector<T> backward_differences(const std::vector<T>& back) {
    std::vector<T> f(back.size(), T(0));
    for (std::size_t k = 0; k < back.size(); ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            T term = back[j] * T(binomial(static_cast<int>(k), static_cast<int>(j)));
            f[k] += (j % 2 ? -term : term);
        }
    return f;
}

} // namespace

std::int64_t BinomialPolynomial::operator()(std::int64_t n) const {
    std::int64_t total = 0;
    for (std::size_t t = 0; t < coeffs.size(); ++t) total += coeffs[t] * shifted_binomial(n, static_cast<int>(t));
    return total;
}

std::optional<std::int64_t> BinomialPolynomial::e1() const {
    if (degree() == 0) return coeffs[0];
    if (degree() == 1) return coeffs[0] + coeffs[1];
    return std::nullopt;
}

std::vector<Rational> BinomialPolynomial::to_power_basis() const {
    std::vector<Rational> out(coeffs.size(), Rational(0));
    std::vector<Rational> basis{Rational(1)};  // C(n+t, t) in powers of n
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (t > 0) {
            // multiply by (n + t) / t
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k] += basis[k];
                next[k + 1] += basis[k] / Rational(static_cast<long long>(t));
            }
            basis = std::move(next);
        }
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] += basis[k] * Rational(coeffs[t]);
    }
    while (out.size() > 1 && out.back() == Rational(0)) out.pop_back();
    return out;
}

BinomialPolynomial BinomialPolynomial::from_power_basis(const std::vector<Rational>& power) {
    if (power.empty()) return {};
    std::vector<Rational> back;
    for (std::size_t j = 0; j < power.size(); ++j) {
        Rational x(-1 - static_cast<long long>(j)), value(0), xp(1);
        for (const auto& c : power) {
            value += c * xp;
            xp *= x;
        }
        back.push_back(value);
    }
    BinomialPolynomial p;
    p.coeffs.clear();
    for (const auto& f : backward_differences(back)) {
        if (f.denominator() != 1) throw InputError("polynomial is not integer valued");
        p.coeffs.push_back(f.numerator());
    }
    trim_top(p.coeffs);
    return p;
}

PolynomialDetection detect_eventual_polynomial(const std::vector<std::int64_t>& seq, int window,
                                               std::optional<int> max_degree) {
    if (window < 1) throw InputError("polynomial detection: window must be positive");
    const auto len = static_cast<int>(seq.size());
    if (len < window + 1)
        throw InputError("polynomial detection: " + std::to_string(len) + " entries are too few for window " +
                         std::to_string(window));
    int cap = len - window - 1;
    if (max_degree) cap = std::min(cap, *max_degree);

    PolynomialDetection out;
    out.window = window;
    out.max_degree_tried = cap;
    std::vector<std::int64_t> diff = seq;
    for (int deg = 0; deg <= cap; ++deg) {
        std::vector<std::int64_t> next(diff.size() - 1);
        for (std::size_t k = 0; k + 1 < diff.size(); ++k) next[k] = diff[k + 1] - diff[k];
        diff = std::move(next);
        bool tail_zero = true;
        for (std::size_t k = diff.size() - static_cast<std::size_t>(window); k < diff.size(); ++k)
            if (diff[k] != 0) tail_zero = false;
        if (!tail_zero) continue;

        std::size_t stable = 0;
        for (std::size_t k = diff.size(); k-- > 0;)
            if (diff[k] != 0) {
                stable = k + 1;
                break;
            }
        // forward differences at `stable`, then walk the table down to n = -1-deg
        const auto d = static_cast<std::size_t>(deg);
        std::vector<std::int64_t> table(seq.begin() + static_cast<std::ptrdiff_t>(stable),
                                        seq.begin() + static_cast<std::ptrdiff_t>(stable + d + 1));
        for (std::size_t k = 1; k <= d; ++k)
            for (std::size_t r = d; r >= k; --r) table[r] -= table[r - 1];
        // table[k] = Δ^k P(stable)
        std::vector<std::int64_t> back;
        for (auto m = static_cast<std::int64_t>(stable); m > -1 - static_cast<std::int64_t>(d); --m) {
            for (std::size_t k = d; k-- > 0;) table[k] -= table[k + 1];
            if (m - 1 <= -1) back.push_back(table[0]);
        }
        BinomialPolynomial p;
        p.coeffs = backward_differences(back);
        trim_top(p.coeffs);
        p.stable_from = stable;
        p.window = window;
        out.polynomial = std::move(p);
        out.message = "difference order " + std::to_string(deg + 1) + " vanishes from n = " + std::to_string(stable);
        return out;
    }
    out.message = "no stabilization within the computed range (degree <= " + std::to_string(cap) + ")";
    return out;
}

namespace {

void fill_measured(Verdict& v, const std::vector<std::int64_t>& seq) { v.measured = seq; }

} // namespace

Verdict validate_thm22(const std::vector<std::int64_t>& seq, int window) {
    Verdict v;
    v.name = "thm22";
    fill_measured(v, seq);
    auto det = detect_eventual_polynomial(seq, window);
    v.notes.push_back(det.message);
    if (det.polynomial) {
        v.fitted = det.polynomial;
        v.measured_e0 = det.polynomial->e0();
        v.pass = det.polynomial->degree() <= 1;
        if (!v.pass) v.notes.push_back("fitted degree " + std::to_string(det.polynomial->degree()) + " exceeds 1");
    }
    return v;
}

Verdict validate_thm24(const BinomialPolynomial& measured, const std::vector<Ass1Record>& ann,
                       const std::vector<std::int64_t>& mults) {
    std::size_t needed = 0;
    for (const auto& r : ann) needed += r.contains_a ? 0 : 1;
    if (needed != mults.size())
        throw InputError("thm24: " + std::to_string(mults.size()) + " multiplicities for " + std::to_string(needed) +
                         " primes avoiding a");
    Verdict v;
    v.name = "thm24";
    std::int64_t predicted = 0;
    std::size_t k = 0;
    for (const auto& r : ann)
        if (!r.contains_a) predicted += r.local_h0_length * mults[k++];
    v.predicted_e0 = predicted;
    v.measured_e0 = measured.e0();
    v.fitted = measured;
    if (measured.degree() > 1) {
        v.notes.push_back("measured polynomial has degree above 1");
        return v;
    }
    v.pass = measured.e0() == predicted;
    return v;
}

BinomialPolynomial thm39_prediction(const std::vector<std::int64_t>& h, int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= h.size() + 1) throw InputError("thm39: index out of range");
    BinomialPolynomial p;
    p.coeffs.assign(static_cast<std::size_t>(std::max(i, 1)), 0);
    p.coeffs[0] = h.empty() ? 0 : h[0];
    for (int t = 0; t < i; ++t)
        for (int j = 0; j <= t; ++j) {
            auto idx = static_cast<std::size_t>(j + 1);
            if (idx >= h.size()) throw InputError("thm39: cohomology vector too short");
            p.coeffs[static_cast<std::size_t>(t)] += binomial(t, j) * h[idx];
        }
    trim_top(p.coeffs);
    return p;
}

Verdict validate_thm39(const std::vector<std::int64_t>& seq, const std::vector<std::int64_t>& h, int i, int d,
                       std::optional<int> depth, int window) {
    if (d < 1 || static_cast<int>(h.size()) != d) throw InputError("thm39: need one cohomology length per j < d");
    if (i < 0 || i >= d) throw InputError("thm39: need 0 <= i < d");
    for (auto x : h)
        if (x < 0) throw InputError("thm39: negative cohomology length");
    Verdict v;
    v.name = "thm39";
    fill_measured(v, seq);
    auto p = thm39_prediction(h, i);
    v.predicted_polynomial = p;
    bool ok = true;
    for (std::size_t n = 0; n < seq.size(); ++n) {
        v.predicted.push_back(p(static_cast<std::int64_t>(n)));
        if (!v.first_mismatch && v.predicted.back() != seq[n]) v.first_mismatch = n;
    }
    if (v.first_mismatch) {
        ok = false;
        v.notes.push_back("closed form differs from the measured sequence at n = " + std::to_string(*v.first_mismatch));
    }

    int from_h = d;
    for (int j = 0; j < d; ++j)
        if (h[static_cast<std::size_t>(j)] != 0) {
            from_h = j;
            break;
        }
    int dep = depth.value_or(from_h);
    if (dep != from_h) {
        ok = false;
        v.notes.push_back("annotated depth " + std::to_string(dep) + " disagrees with the cohomology vector");
    }
    if (i < dep) {
        bool zero = p.is_zero();
        for (auto x : seq) zero = zero && x == 0;
        ok = ok && zero;
        v.notes.push_back(std::string("i < depth: vanishing ") + (zero ? "holds" : "fails"));
    }
    bool degree_claim = false;
    for (int j = 1; j <= i; ++j) degree_claim = degree_claim || h[static_cast<std::size_t>(j)] != 0;
    if (dep <= i && degree_claim) {
        bool pred_deg = p.degree() == i - 1;
        ok = ok && pred_deg;
        v.notes.push_back("predicted degree " + std::to_string(p.degree()) + ", expected " + std::to_string(i - 1));
        if (static_cast<int>(seq.size()) >= window + 1) {
            auto det = detect_eventual_polynomial(seq, window);
            if (det.polynomial) {
                v.fitted = det.polynomial;
                bool meas_deg = det.polynomial->degree() == i - 1;
                ok = ok && meas_deg;
                v.notes.push_back("measured degree " + std::to_string(det.polynomial->degree()));
            } else {
                ok = false;
                v.notes.push_back(det.message);
            }
        } else {
            v.notes.push_back("sequence too short to fit a measured degree");
        }
    }
    v.pass = ok;
    return v;
}

Verdict validate_cor25(const std::vector<std::int64_t>& seq, Cor25Case kind, std::optional<std::int64_t> annotated_e0,
                       int window) {
    Verdict v;
    v.name = "cor25";
    fill_measured(v, seq);
    auto det = detect_eventual_polynomial(seq, window);
    v.notes.push_back(det.message);
    if (!det.polynomial) return v;
    v.fitted = det.polynomial;
    v.measured_e0 = det.polynomial->e0();
    if (kind == Cor25Case::Annihilator) {
        v.pass = det.polynomial->degree() == 0;
        v.notes.push_back(v.pass ? "eventually constant" : "not eventually constant");
    } else {
        v.pass = true;
        if (annotated_e0) {
            v.predicted_e0 = annotated_e0;
            v.pass = *annotated_e0 == det.polynomial->e0();
        }
    }
    return v;
}

Verdict validate_cor34(const std::vector<std::int64_t>& seq) {
    Verdict v;
    v.name = "cor34";
    fill_measured(v, seq);
    v.predicted.assign(seq.size(), 0);
    for (std::size_t n = 0; n < seq.size(); ++n)
        if (seq[n] != 0) {
            v.first_mismatch = n;
            break;
        }
    v.pass = !v.first_mismatch;
    return v;
}

EpsilonProbe epsilon_probe(const std::vector<std::int64_t>& seq, int d) {
    if (d < 1) throw InputError("epsilon probe: dimension must be positive");
    long long fact = 1;
    for (int k = 2; k <= d; ++k) fact *= k;
    EpsilonProbe out;
    for (std::size_t n = 1; n < seq.size(); ++n) {
        long long pw = 1;
        for (int k = 0; k < d; ++k) pw *= static_cast<long long>(n);
        out.values.emplace_back(static_cast<int>(n), Rational(fact * seq[n], pw));
    }
    bool lt = true, le = true, eq = true, ge = true, gt = true;
    for (std::size_t k = 1; k < out.values.size(); ++k) {
        const auto& a = out.values[k - 1].second;
        const auto& b = out.values[k].second;
        lt = lt && b < a;
        le = le && b <= a;
        eq = eq && b == a;
        ge = ge && b >= a;
        gt = gt && b > a;
    }
    if (eq)
        out.trend = "constant";
    else if (lt)
        out.trend = "strictly-decreasing";
    else if (le)
        out.trend = "nonincreasing";
    else if (gt)
        out.trend = "strictly-increasing";
    else if (ge)
        out.trend = "nondecreasing";
    else
        out.trend = "mixed";
    return out;
}

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace satlen
