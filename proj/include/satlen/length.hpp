#pragma once

#include "satlen/hilbert.hpp"
#include "satlen/ideal.hpp"

namespace satlen {

/// Numerator of HS(S/(lifts + J)); with `include_relations = false` the
/// quotient is S/(lifts) in the ambient polynomial ring.
template <CoefficientField K>
HilbertNumerator hilbert_numerator(const IdealHandle<K>& ideal, bool include_relations = true) {
    const auto& ring = ideal.ring();
    for (const auto& g : ideal.generators())
        if (!g.is_homogeneous()) throw InputError("hilbert_numerator: non-homogeneous generator");
    std::vector<Monomial> leads;
    if (include_relations) {
        leads = ideal.basis().leading_monomials();
    } else {
        leads = buchberger(ring.field(), ring.nvars(), ideal.generators(), ring.order()).leading_monomials();
    }
    return monomial_hilbert_numerator(std::move(leads), static_cast<int>(ring.nvars()));
}

/// Krull dimension of R/I; -1 marks the empty spectrum (unit ideal).
template <CoefficientField K>
int krull_dimension(const IdealHandle<K>& ideal) {
    return hilbert_numerator(ideal).krull_dimension();
}

/// Krull dimension of R itself.
template <CoefficientField K>
int krull_dimension(const RingPtr<K>& ring) {
    return krull_dimension(zero_ideal(ring));
}

/// ℓ(R/I): finite iff R/I is Artinian.
template <CoefficientField K>
LengthValue length_quotient(const IdealHandle<K>& ideal) {
    return length_from_numerator(hilbert_numerator(ideal));
}

/// ℓ(outer/inner) for nested ideals inner ⊆ outer; throws InputError
/// when the inclusion fails.
template <CoefficientField K>
LengthValue length_pair(const IdealHandle<K>& inner, const IdealHandle<K>& outer) {
    if (!is_subset(inner, outer)) throw InputError("length_pair: inner ideal is not contained in outer ideal");
    return length_from_numerators(hilbert_numerator(inner), hilbert_numerator(outer));
}

} // namespace satlen
