#pragma once

#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "satlen/groebner.hpp"
#include "satlen/text.hpp"

namespace satlen {

/// R = S/J with S = k[variables] standard graded and J homogeneous.
/// Immutable after construction; the basis of J is computed eagerly.
template <CoefficientField K>
class RingPresentation {
public:
    using Poly = Polynomial<K>;

    RingPresentation(K field, std::vector<std::string> names, std::vector<Poly> relations,
                     MonomialOrder order = MonomialOrder::grevlex())
        : field_(std::move(field)), names_(std::move(names)), order_(order),
          relation_basis_(field_, names_.size(), order) {
        if (names_.empty()) throw InputError("a ring needs at least one variable");
        // one slot is reserved for the auxiliary elimination variable
        if (names_.size() + 1 > kMaxVariables)
            throw InputError("at most " + std::to_string(kMaxVariables - 1) + " ring variables are supported");
        std::set<std::string> seen;
        for (const auto& n : names_)
            if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
        order_.validate(names_.size());
        for (auto& r : relations) {
            if (r.nvars() != names_.size()) throw InputError("relation has wrong variable count");
            if (r.is_zero()) continue;
            if (!r.is_homogeneous() || r.degree() < 1)
                throw InputError("relation " + to_text(r, names_) + " is not homogeneous of positive degree");
            relations_.push_back(r.with_order(order_));
        }
        relation_basis_ = buchberger(field_, names_.size(), relations_, order_);
    }

    static std::shared_ptr<const RingPresentation> make(K field, std::vector<std::string> names,
                                                        const std::vector<std::string>& relation_texts,
                                                        MonomialOrder order = MonomialOrder::grevlex()) {
        std::vector<Poly> rels;
        for (const auto& t : relation_texts) rels.push_back(parse_polynomial(t, names, field, order));
        return std::make_shared<const RingPresentation>(std::move(field), std::move(names), std::move(rels), order);
    }

    const K& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<Poly>& relations() const noexcept { return relations_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const GroebnerBasis<K>& relation_basis() const noexcept { return relation_basis_; }

    Poly parse(std::string_view text) const { return parse_polynomial(text, names_, field_, order_); }
    std::string format(const Poly& p) const { return to_text(p.with_order(order_), names_); }

    Poly zero() const { return Poly(field_, nvars(), order_); }
    Poly one() const { return Poly::constant(field_, nvars(), field_.one(), order_); }
    Poly variable(std::size_t i) const { return Poly::variable(field_, nvars(), i, order_); }

    /// Normal form modulo J.
    Poly reduce(const Poly& f) const { return relation_basis_.normal_form(f); }
    bool is_zero_in_ring(const Poly& f) const { return reduce(f).is_zero(); }

    /// True when J is generated by monomials.
    bool has_monomial_relations() const noexcept {
        for (const auto& r : relations_)
            if (r.size() != 1) return false;
        return true;
    }

    /// The presentation of R/(extra), e.g. R/p or R/I^n.
    std::shared_ptr<const RingPresentation> quotient(const std::vector<Poly>& extra) const {
        std::vector<Poly> rels = relations_;
        for (const auto& e : extra)
            if (!e.is_zero()) rels.push_back(e.with_order(order_));
        return std::make_shared<const RingPresentation>(field_, names_, std::move(rels), order_);
    }

    std::shared_ptr<const RingPresentation> with_order(MonomialOrder order) const {
        return std::make_shared<const RingPresentation>(field_, names_, relations_, order);
    }

    bool same_as(const RingPresentation& other) const {
        if (this == &other) return true;
        return field_ == other.field_ && names_ == other.names_ && order_ == other.order_ &&
               relation_basis_ == other.relation_basis_;
    }

private:
    K field_;
    std::vector<std::string> names_;
    std::vector<Poly> relations_;
    MonomialOrder order_;
    GroebnerBasis<K> relation_basis_;
};

template <CoefficientField K>
using RingPtr = std::shared_ptr<const RingPresentation<K>>;

/// An ideal of R = S/J given by homogeneous lifts to S. The represented ideal
/// is (lifts + J)/J. Reduced bases of lifts ∪ J are memoized per term order
/// behind a mutex, so a handle may be shared between threads; copies carry
/// their own cache.
template <CoefficientField K>
class IdealHandle {
public:
    using Poly = Polynomial<K>;

    IdealHandle(RingPtr<K> ring, std::vector<Poly> lifts) : ring_(std::move(ring)) {
        for (auto& g : lifts) {
            if (g.nvars() != ring_->nvars()) throw InputError("generator has wrong variable count");
            if (!g.is_homogeneous()) throw InputError("generator " + to_text(g, ring_->names()) + " is not homogeneous");
            if (g.is_zero()) continue;
            Poly h = g.with_order(ring_->order()).monic();
            bool dup = false;
            for (const auto& e : gens_)
                if (e == h) dup = true;
            if (!dup) gens_.push_back(std::move(h));
        }
    }

    IdealHandle(RingPtr<K> ring, const std::vector<std::string>& texts)
        : IdealHandle(ring, parse_all(*ring, texts)) {}

    IdealHandle(const IdealHandle& other) : ring_(other.ring_), gens_(other.gens_) {
        std::lock_guard lock(other.mutex_);
        cache_ = other.cache_;
    }
    IdealHandle& operator=(const IdealHandle& other) {
        if (this == &other) return *this;
        std::list<GroebnerBasis<K>> cache;
        {
            std::lock_guard lock(other.mutex_);
            cache = other.cache_;
        }
        std::lock_guard lock(mutex_);
        ring_ = other.ring_;
        gens_ = other.gens_;
        cache_ = std::move(cache);
        return *this;
    }
    IdealHandle(IdealHandle&& other) noexcept : ring_(std::move(other.ring_)), gens_(std::move(other.gens_)) {
        std::lock_guard lock(other.mutex_);
        cache_ = std::move(other.cache_);
    }
    IdealHandle& operator=(IdealHandle&& other) noexcept {
        if (this == &other) return *this;
        std::scoped_lock lock(mutex_, other.mutex_);
        ring_ = std::move(other.ring_);
        gens_ = std::move(other.gens_);
        cache_ = std::move(other.cache_);
        return *this;
    }

    const RingPtr<K>& ring_ptr() const noexcept { return ring_; }
    const RingPresentation<K>& ring() const noexcept { return *ring_; }
    const std::vector<Poly>& generators() const noexcept { return gens_; }

    /// lifts ∪ J
    std::vector<Poly> lift_with_relations() const {
        std::vector<Poly> all = gens_;
        for (const auto& r : ring_->relations()) all.push_back(r);
        return all;
    }

    const GroebnerBasis<K>& basis() const { return basis(ring_->order()); }

    const GroebnerBasis<K>& basis(MonomialOrder order) const {
        {
            std::lock_guard lock(mutex_);
            for (const auto& gb : cache_)
                if (gb.order() == order) return gb;
        }
        auto gb = buchberger(ring_->field(), ring_->nvars(), lift_with_relations(), order);
        std::lock_guard lock(mutex_);
        for (const auto& existing : cache_)
            if (existing.order() == order) return existing;
        cache_.push_back(std::move(gb));
        return cache_.back();
    }

    bool contains(const Poly& f) const { return basis().contains(f); }
    bool is_unit() const { return basis().is_unit(); }
    /// True when the ideal is zero in R (all lifts lie in J).
    bool is_zero() const {
        for (const auto& g : gens_)
            if (!ring_->is_zero_in_ring(g)) return false;
        return true;
    }

    /// Largest generator degree (0 for the zero ideal).
    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + ring_->format(gens_[i]);
        return s + ")";
    }

private:
    static std::vector<Poly> parse_all(const RingPresentation<K>& ring, const std::vector<std::string>& texts) {
        std::vector<Poly> out;
        for (const auto& t : texts) out.push_back(ring.parse(t));
        return out;
    }

    RingPtr<K> ring_;
    std::vector<Poly> gens_;
    mutable std::mutex mutex_;
    // list: references handed out by basis() stay valid as entries are added
    mutable std::list<GroebnerBasis<K>> cache_;
};

template <CoefficientField K>
void require_same_ring(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    if (!a.ring().same_as(b.ring())) throw InputError("ideals live in different rings");
}

template <CoefficientField K>
IdealHandle<K> unit_ideal(const RingPtr<K>& ring) {
    return IdealHandle<K>(ring, std::vector<Polynomial<K>>{ring->one()});
}

template <CoefficientField K>
IdealHandle<K> zero_ideal(const RingPtr<K>& ring) {
    return IdealHandle<K>(ring, std::vector<Polynomial<K>>{});
}

/// The homogeneous maximal ideal m = (all variables).
template <CoefficientField K>
IdealHandle<K> maximal_ideal(const RingPtr<K>& ring) {
    std::vector<Polynomial<K>> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
    return IdealHandle<K>(ring, std::move(vars));
}

template <CoefficientField K>
bool ideal_equal(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    require_same_ring(a, b);
    return a.basis() == b.basis();
}

/// A ⊆ B in R.
template <CoefficientField K>
bool is_subset(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    require_same_ring(a, b);
    const auto& gb = b.basis();
    for (const auto& g : a.generators())
        if (!gb.contains(g)) return false;
    return true;
}

template <CoefficientField K>
IdealHandle<K> sum(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    require_same_ring(a, b);
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return IdealHandle<K>(a.ring_ptr(), std::move(gens));
}

namespace detail {

/// Generators reduced modulo J, made monic, zero and duplicate entries dropped.
template <CoefficientField K>
std::vector<Polynomial<K>> normalize_lifts(const RingPresentation<K>& ring, const std::vector<Polynomial<K>>& gens) {
    std::vector<Polynomial<K>> out;
    for (const auto& g : gens) {
        auto h = ring.reduce(g).monic();
        if (h.is_zero()) continue;
        bool dup = false;
        for (const auto& e : out)
            if (e == h) dup = true;
        if (!dup) out.push_back(std::move(h));
    }
    return out;
}

/// A ∩ B for ideals of S given by generators, via t·A + (1 − t)·B and
/// elimination of t.
template <CoefficientField K>
std::vector<Polynomial<K>> intersect_in_ambient(const K& field, std::size_t nvars, MonomialOrder order,
                                                const std::vector<Polynomial<K>>& a,
                                                const std::vector<Polynomial<K>>& b) {
    using Poly = Polynomial<K>;
    const MonomialOrder elim = MonomialOrder::elimination(1);
    Poly t = Poly::variable(field, nvars + 1, 0, elim);
    Poly one_minus_t = Poly::constant(field, nvars + 1, field.one(), elim) - t;
    std::vector<Poly> gens;
    for (const auto& g : a) gens.push_back(t * g.shifted(1).with_order(elim));
    for (const auto& g : b) gens.push_back(one_minus_t * g.shifted(1).with_order(elim));
    std::vector<Poly> out;
    for (const auto& g : eliminate(field, nvars + 1, gens, 1)) out.push_back(g.unshifted(1, order));
    return out;
}

} // namespace detail

template <CoefficientField K>
IdealHandle<K> product(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    require_same_ring(a, b);
    std::vector<Polynomial<K>> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return IdealHandle<K>(a.ring_ptr(), detail::normalize_lifts(a.ring(), gens));
}

/// A^n by iterated products; A^0 is the unit ideal.
template <CoefficientField K>
IdealHandle<K> power(const IdealHandle<K>& a, int n) {
    if (n < 0) throw InputError("power: negative exponent");
    IdealHandle<K> result = unit_ideal(a.ring_ptr());
    for (int i = 0; i < n; ++i) result = product(result, a);
    return result;
}

template <CoefficientField K>
IdealHandle<K> intersect(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    require_same_ring(a, b);
    const auto& ring = a.ring();
    if (a.is_unit()) return b;
    if (b.is_unit()) return a;
    auto meet = detail::intersect_in_ambient(ring.field(), ring.nvars(), ring.order(), a.lift_with_relations(),
                                             b.lift_with_relations());
    return IdealHandle<K>(a.ring_ptr(), detail::normalize_lifts(ring, meet));
}

/// A :_R f = {g : g·f ∈ A}, computed in S as ((A + J) ∩ (f)) / f.
template <CoefficientField K>
IdealHandle<K> colon(const IdealHandle<K>& a, const Polynomial<K>& f) {
    const auto& ring = a.ring();
    if (f.nvars() != ring.nvars()) throw InputError("colon: variable-count mismatch");
    Polynomial<K> fr = ring.reduce(f.with_order(ring.order()));
    if (fr.is_zero()) throw InputError("colon: element " + ring.format(f) + " is zero in the ring");
    if (!fr.is_homogeneous()) throw InputError("colon: element is not homogeneous");
    if (fr.is_constant()) return a;
    auto meet = detail::intersect_in_ambient(ring.field(), ring.nvars(), ring.order(), a.lift_with_relations(),
                                             std::vector<Polynomial<K>>{fr});
    std::vector<Polynomial<K>> gens;
    for (const auto& h : meet) gens.push_back(divide_exact(h, fr));
    return IdealHandle<K>(a.ring_ptr(), detail::normalize_lifts(ring, gens));
}

/// A : B = ∩ (A : b) over the generators b of B; A : 0 = R.
template <CoefficientField K>
IdealHandle<K> colon_ideal(const IdealHandle<K>& a, const IdealHandle<K>& b) {
    require_same_ring(a, b);
    std::optional<IdealHandle<K>> acc;
    for (const auto& g : b.generators()) {
        if (a.ring().is_zero_in_ring(g)) continue;
        auto c = colon(a, g);
        acc = acc ? intersect(*acc, c) : std::move(c);
    }
    return acc ? std::move(*acc) : unit_ideal(a.ring_ptr());
}

struct SaturationOptions {
    int max_iterations = 64;
    /// Compute A : m^∞ as ∩_i (A : x_i^∞) with one Gröbner basis per
    /// variable instead of iterating A : m. Only valid when B is the
    /// maximal ideal; the stabilization index is then not tracked.
    bool per_variable = false;
};

template <CoefficientField K>
struct Saturation {
    IdealHandle<K> ideal;
    /// First k with A_{k+1} = A_k, or -1 when not tracked.
    int index;
};

namespace detail {

/// A : x_var^∞ for homogeneous A: swap x_var into the last grevlex slot,
/// where the saturation is read off the basis by dividing out x_last.
template <CoefficientField K>
IdealHandle<K> saturate_by_variable(const IdealHandle<K>& a, std::size_t var) {
    using Poly = Polynomial<K>;
    const auto& ring = a.ring();
    const std::size_t n = ring.nvars();
    const std::size_t last = n - 1;
    std::vector<Poly> swapped;
    for (const auto& g : a.lift_with_relations()) swapped.push_back(g.swapped(var, last));
    auto gb = buchberger(ring.field(), n, swapped, MonomialOrder::grevlex());
    std::vector<Poly> gens;
    for (const auto& g : gb.elements()) {
        int v = g.terms().front().monomial[last];
        for (const auto& t : g.terms()) v = std::min(v, t.monomial[last]);
        Poly q = v > 0 ? divide_exact(g, Poly::monomial(ring.field(), n, Monomial::variable(last, v), g.order())) : g;
        gens.push_back(q.swapped(var, last).with_order(ring.order()));
    }
    return IdealHandle<K>(a.ring_ptr(), normalize_lifts(ring, gens));
}

} // namespace detail

/// Iterates A_{k+1} = A_k : B until two consecutive terms have equal reduced
/// bases. Returns the fixed point and the first stable k.
template <CoefficientField K>
Saturation<K> saturate(const IdealHandle<K>& a, const IdealHandle<K>& b, const SaturationOptions& options = {}) {
    require_same_ring(a, b);
    if (b.is_zero()) throw InputError("saturate: saturating ideal is zero");
    if (options.per_variable) {
        if (!ideal_equal(b, maximal_ideal(a.ring_ptr())))
            throw InputError("per-variable saturation requires the maximal ideal");
        std::optional<IdealHandle<K>> acc;
        for (std::size_t i = 0; i < a.ring().nvars(); ++i) {
            auto s = detail::saturate_by_variable(a, i);
            acc = acc ? intersect(*acc, s) : std::move(s);
        }
        return {std::move(*acc), -1};
    }
    IdealHandle<K> current = a;
    for (int k = 0; k < options.max_iterations; ++k) {
        IdealHandle<K> next = colon_ideal(current, b);
        if (ideal_equal(next, current)) return {std::move(current), k};
        current = std::move(next);
    }
    throw ComputationLimit("saturation did not stabilize within " + std::to_string(options.max_iterations) +
                           " colon steps");
}

} // namespace satlen
