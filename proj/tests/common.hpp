#pragma once

#include <string>
#include <vector>

#include "satlen/ideal.hpp"
#include "satlen/length.hpp"

namespace fixtures {

using satlen::IdealHandle;
using satlen::PrimeField;
using satlen::RingPresentation;
using satlen::RingPtr;
using Ideal = IdealHandle<PrimeField>;
using Poly = satlen::Polynomial<PrimeField>;

inline RingPtr<PrimeField> ring(std::vector<std::string> vars, std::vector<std::string> rels = {},
                                std::uint32_t p = 32003,
                                satlen::MonomialOrder order = satlen::MonomialOrder::grevlex()) {
    return RingPresentation<PrimeField>::make(PrimeField(p), std::move(vars), rels, order);
}

// k[x,y,u,v]/(xu,xv,yu,yv)
inline RingPtr<PrimeField> f1(std::uint32_t p = 32003,
                              satlen::MonomialOrder order = satlen::MonomialOrder::grevlex()) {
    return ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}, p, order);
}

// k[x1..x6]/((x1,x2,x3) ∩ (x4,x5,x6))
inline RingPtr<PrimeField> f2(std::uint32_t p = 32003,
                              satlen::MonomialOrder order = satlen::MonomialOrder::grevlex()) {
    std::vector<std::string> rels;
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j) rels.push_back("x" + std::to_string(i) + "*x" + std::to_string(j));
    return ring({"x1", "x2", "x3", "x4", "x5", "x6"}, rels, p, order);
}

// k[x,y]/(x^2, xy)
inline RingPtr<PrimeField> f3(std::uint32_t p = 32003,
                              satlen::MonomialOrder order = satlen::MonomialOrder::grevlex()) {
    return ring({"x", "y"}, {"x^2", "x*y"}, p, order);
}

// k[x,y,u,v]
inline RingPtr<PrimeField> cm4(std::uint32_t p = 32003,
                               satlen::MonomialOrder order = satlen::MonomialOrder::grevlex()) {
    return ring({"x", "y", "u", "v"}, {}, p, order);
}

inline Ideal ideal(const RingPtr<PrimeField>& r, std::vector<std::string> gens) { return Ideal(r, gens); }

inline std::vector<Poly> polys(const RingPtr<PrimeField>& r, const std::vector<std::string>& texts) {
    std::vector<Poly> out;
    for (const auto& t : texts) out.push_back(r->parse(t));
    return out;
}

} // namespace fixtures
