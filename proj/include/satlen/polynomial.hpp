#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "satlen/field.hpp"
#include "satlen/monomial.hpp"

namespace satlen {

template <CoefficientField K>
struct Term {
    Monomial monomial;
    typename K::value_type coefficient;
};

/// Polynomial in `nvars` variables over K. Terms are kept sorted descending
/// under the polynomial's term order with no zero coefficients, so the
/// leading term is always `terms().front()`.
template <CoefficientField K>
class Polynomial {
public:
    using value_type = typename K::value_type;
    using term_type = Term<K>;

    Polynomial(K field, std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
        : field_(std::move(field)), nvars_(nvars), order_(order) {
        if (nvars_ > kMaxVariables)
            throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    }

    static Polynomial constant(const K& field, std::size_t nvars, value_type c,
                               MonomialOrder order = MonomialOrder::grevlex()) {
        Polynomial p(field, nvars, order);
        if (!field.is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
        return p;
    }

    static Polynomial monomial(const K& field, std::size_t nvars, const Monomial& m,
                               MonomialOrder order = MonomialOrder::grevlex()) {
        Polynomial p(field, nvars, order);
        p.terms_.push_back({m, field.one()});
        return p;
    }

    static Polynomial variable(const K& field, std::size_t nvars, std::size_t index,
                               MonomialOrder order = MonomialOrder::grevlex()) {
        if (index >= nvars) throw InputError("variable index out of range");
        return monomial(field, nvars, Monomial::variable(index), order);
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(const K& field, std::size_t nvars, std::vector<term_type> terms,
                                 MonomialOrder order = MonomialOrder::grevlex()) {
        Polynomial p(field, nvars, order);
        p.terms_ = std::move(terms);
        p.normalize();
        return p;
    }

    const K& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<term_type>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    const Monomial& lead_monomial() const { return terms_.front().monomial; }
    const value_type& lead_coefficient() const { return terms_.front().coefficient; }

    /// Removes the leading term.
    void pop_lead() { terms_.erase(terms_.begin()); }

    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

    int degree() const noexcept {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
        return d;
    }

    bool is_homogeneous() const noexcept {
        for (const auto& t : terms_)
            if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
        return true;
    }

    /// True when no variable with index < k occurs.
    bool free_of_front(std::size_t k) const noexcept {
        for (const auto& t : terms_)
            for (std::size_t i = 0; i < k; ++i)
                if (t.monomial[i] != 0) return false;
        return true;
    }

    int compare_monomials(const Monomial& a, const Monomial& b) const noexcept {
        return order_.compare(a, b, nvars_);
    }

    Polynomial with_order(MonomialOrder order) const {
        if (order == order_) return *this;
        order.validate(nvars_);
        Polynomial p(field_, nvars_, order);
        p.terms_ = terms_;
        p.sort_terms();
        return p;
    }

    Polynomial monic() const {
        if (is_zero() || field_.is_one(lead_coefficient())) return *this;
        return scaled(field_.inv(lead_coefficient()));
    }

    Polynomial scaled(const value_type& c) const {
        Polynomial p(field_, nvars_, order_);
        if (field_.is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.monomial, field_.mul(t.coefficient, c)});
        return p;
    }

    /// this * c * m
    Polynomial times_term(const value_type& c, const Monomial& m) const {
        Polynomial p(field_, nvars_, order_);
        if (field_.is_zero(c)) return p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, field_.mul(t.coefficient, c)});
        return p;
    }

    /// this - c * m * g, merged in one pass (the reduction step).
    Polynomial minus_term_times(const value_type& c, const Monomial& m, const Polynomial& g) const {
        Polynomial out(field_, nvars_, order_);
        out.terms_.reserve(terms_.size() + g.terms_.size());
        auto i = terms_.begin();
        auto j = g.terms_.begin();
        while (i != terms_.end() || j != g.terms_.end()) {
            if (j == g.terms_.end()) {
                out.terms_.push_back(*i++);
                continue;
            }
            Monomial gm = j->monomial * m;
            int cmp = i == terms_.end() ? -1 : order_.compare(i->monomial, gm, nvars_);
            if (cmp > 0) {
                out.terms_.push_back(*i++);
            } else if (cmp < 0) {
                out.terms_.push_back({gm, field_.neg(field_.mul(c, j->coefficient))});
                ++j;
            } else {
                value_type v = field_.sub(i->coefficient, field_.mul(c, j->coefficient));
                if (!field_.is_zero(v)) out.terms_.push_back({gm, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    Polynomial shifted(std::size_t k) const {
        Polynomial p(field_, nvars_ + k, order_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.monomial.shifted(k), t.coefficient});
        p.sort_terms();
        return p;
    }

    /// Drops the first k variables; precondition free_of_front(k).
    Polynomial unshifted(std::size_t k, MonomialOrder order) const {
        Polynomial p(field_, nvars_ - k, order);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.monomial.unshifted(k), t.coefficient});
        p.sort_terms();
        return p;
    }

    Polynomial swapped(std::size_t a, std::size_t b) const {
        Polynomial p(field_, nvars_, order_);
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.monomial.swapped(a, b), t.coefficient});
        p.sort_terms();
        return p;
    }

    Polynomial operator-() const { return scaled(field_.neg(field_.one())); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        return a.minus_term_times(a.field_.neg(a.field_.one()), Monomial{}, b);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        return a.minus_term_times(a.field_.one(), Monomial{}, b);
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        std::vector<term_type> prod;
        prod.reserve(a.size() * b.size());
        for (const auto& s : a.terms_)
            for (const auto& t : b.terms_)
                prod.push_back({s.monomial * t.monomial, a.field_.mul(s.coefficient, t.coefficient)});
        return from_terms(a.field_, a.nvars_, std::move(prod), a.order_);
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial pow(int e) const {
        if (e < 0) throw InputError("negative exponent");
        Polynomial r = constant(field_, nvars_, field_.one(), order_);
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    /// Equality of the underlying term sets, independent of term order.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
        if (a.order_ != b.order_) return a == b.with_order(a.order_);
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
                return false;
        return true;
    }

private:
    void check_compatible(const Polynomial& b) const {
        if (nvars_ != b.nvars_) throw InputError("variable-count mismatch between polynomials");
        if (order_ != b.order_) throw InputError("term-order mismatch between polynomials");
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(), [this](const term_type& a, const term_type& b) {
            return order_.compare(a.monomial, b.monomial, nvars_) > 0;
        });
    }

    void normalize() {
        for (const auto& t : terms_)
            for (std::size_t i = nvars_; i < kMaxVariables; ++i)
                if (t.monomial[i] != 0) throw InputError("monomial uses a variable beyond the ring");
        sort_terms();
        std::vector<term_type> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().monomial == t.monomial)
                merged.back().coefficient = field_.add(merged.back().coefficient, t.coefficient);
            else
                merged.push_back(std::move(t));
        }
        terms_.clear();
        for (auto& t : merged)
            if (!field_.is_zero(t.coefficient)) terms_.push_back(std::move(t));
    }

    K field_;
    std::size_t nvars_;
    MonomialOrder order_;
    std::vector<term_type> terms_;
};

} // namespace satlen
