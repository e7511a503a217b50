#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "satlen/errors.hpp"
#include "satlen/field.hpp"
#include "satlen/linalg.hpp"
#include "satlen/monomial.hpp"

namespace satlen {

/// A simplicial complex on named vertices. Faces are bitmasks over the
/// vertex list. No facets means the void complex; the single facet 0 is
/// the complex {∅}.
class SimplicialComplex {
public:
    using Face = std::uint32_t;

    SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets);

    static SimplicialComplex from_facet_names(std::vector<std::string> vertices,
                                              const std::vector<std::vector<std::string>>& facets);

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    /// Inclusion-maximal faces, sorted by (size, mask).
    const std::vector<Face>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }
    /// Largest face size minus one; -2 for the void complex.
    int dimension() const;

    /// All faces of the given dimension (size dim + 1), ascending masks.
    std::vector<Face> faces(int dim) const;
    /// Σ_k (-1)^k f_k over k = -1..dim.
    std::int64_t reduced_euler_characteristic() const;

    std::string to_string() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Face> facets_;
};

/// The complex whose faces are the vertex sets whose product is not
/// divisible by any generator. Throws on non-square-free generators.
SimplicialComplex complex_from_squarefree(const std::vector<Monomial>& gens, std::vector<std::string> vertices);

/// β̃_{-1}, β̃_0, …, β̃_{dim} over the field; empty for the void complex.
template <CoefficientField K>
std::vector<std::int64_t> reduced_homology_dims(const SimplicialComplex& c, const K& field,
                                                Execution exec = Execution::Serial) {
    using V = typename K::value_type;
    std::vector<std::int64_t> out;
    if (c.is_void()) return out;
    const int top = c.dimension();
    std::vector<std::vector<SimplicialComplex::Face>> faces;
    for (int k = -1; k <= top; ++k) faces.push_back(c.faces(k));
    // rank of ∂_k : C_k → C_{k-1}, k = 0..top
    std::vector<std::int64_t> rank(static_cast<std::size_t>(top + 3), 0);
    for (int k = 0; k <= top; ++k) {
        const auto& rows = faces[static_cast<std::size_t>(k + 1)];
        const auto& cols = faces[static_cast<std::size_t>(k)];
        std::map<SimplicialComplex::Face, std::size_t> col_index;
        for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);
        Matrix<K> m(rows.size(), std::vector<V>(cols.size(), field.zero()));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            int pos = 0;
            for (SimplicialComplex::Face rest = rows[r]; rest; rest &= rest - 1, ++pos) {
                SimplicialComplex::Face bit = rest & (~rest + 1);
                auto sign = pos % 2 ? field.neg(field.one()) : field.one();
                m[r][col_index.at(rows[r] & ~bit)] = sign;
            }
        }
        rank[static_cast<std::size_t>(k + 1)] =
            m.empty() || cols.empty() ? 0 : static_cast<std::int64_t>(matrix_rank(field, std::move(m), exec));
    }
    for (int k = -1; k <= top; ++k) {
        auto idx = static_cast<std::size_t>(k + 1);
        auto fk = static_cast<std::int64_t>(faces[idx].size());
        out.push_back(fk - rank[idx] - rank[idx + 1]);
    }
    return out;
}

/// h⁰ = 0 and h^j = β̃_{j-1} for 1 ≤ j < d. Valid only when the caller
/// asserts the ring is Buchsbaum with cohomology concentrated in degree 0.
template <CoefficientField K>
std::vector<std::int64_t> buchsbaum_cohomology_vector(const SimplicialComplex& c, int d, const K& field,
                                                      bool buchsbaum_asserted) {
    if (!buchsbaum_asserted) throw InputError("cohomology vector from homology needs the Buchsbaum assertion");
    if (d < 1) throw InputError("cohomology vector: dimension must be positive");
    auto betti = reduced_homology_dims(c, field);
    std::vector<std::int64_t> h(static_cast<std::size_t>(d), 0);
    for (int j = 1; j < d; ++j) {
        // β̃_{j-1} sits at index j
        auto idx = static_cast<std::size_t>(j);
        h[static_cast<std::size_t>(j)] = idx < betti.size() ? betti[idx] : 0;
    }
    return h;
}

/// Σ_{j<d} C(d-1, j) h^j.
std::int64_t buchsbaum_invariant(const std::vector<std::int64_t>& h);

} // namespace satlen
