#include "satlen/homology.hpp"

#include <algorithm>

namespace satlen {

namespace {

bool subset(SimplicialComplex::Face a, SimplicialComplex::Face b) { return (a & ~b) == 0; }

std::vector<SimplicialComplex::Face> maximal(std::vector<SimplicialComplex::Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<SimplicialComplex::Face> out;
    for (auto f : faces) {
        bool covered = false;
        for (auto g : faces)
            if (g != f && subset(f, g)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [](auto a, auto b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    return out;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets)
    : vertices_(std::move(vertices)) {
    if (vertices_.size() > 31) throw InputError("simplicial complex: at most 31 vertices");
    std::set<std::string> seen;
    for (const auto& v : vertices_)
        if (!seen.insert(v).second) throw InputError("simplicial complex: duplicate vertex '" + v + "'");
    const Face all = vertices_.size() == 0 ? 0 : static_cast<Face>((Face{1} << vertices_.size()) - 1);
    for (auto f : facets)
        if (!subset(f, all)) throw InputError("simplicial complex: facet uses an unknown vertex");
    facets_ = maximal(std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facet_names(std::vector<std::string> vertices,
                                                      const std::vector<std::vector<std::string>>& facets) {
    std::vector<Face> masks;
    for (const auto& facet : facets) {
        Face m = 0;
        for (const auto& name : facet) {
            auto it = std::find(vertices.begin(), vertices.end(), name);
            if (it == vertices.end()) throw InputError("simplicial complex: unknown vertex '" + name + "'");
            m |= Face{1} << (it - vertices.begin());
        }
        masks.push_back(m);
    }
    return SimplicialComplex(std::move(vertices), std::move(masks));
}

int SimplicialComplex::dimension() const {
    int best = -2;
    for (auto f : facets_) best = std::max(best, std::popcount(f) - 1);
    return best;
}

std::vector<SimplicialComplex::Face> SimplicialComplex::faces(int dim) const {
    std::set<Face> out;
    for (auto f : facets_) {
        if (std::popcount(f) < dim + 1) continue;
        // every subset of f with dim + 1 elements
        for (Face s = f;; s = (s - 1) & f) {
            if (std::popcount(s) == dim + 1) out.insert(s);
            if (s == 0) break;
        }
    }
    return {out.begin(), out.end()};
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const {
    std::int64_t chi = 0;
    for (int k = -1; k <= dimension(); ++k) {
        auto fk = static_cast<std::int64_t>(faces(k).size());
        chi += (k % 2 == 0) ? fk : -fk;
    }
    return chi;
}

std::string SimplicialComplex::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        s += i ? ", {" : "{";
        bool first = true;
        for (std::size_t v = 0; v < vertices_.size(); ++v)
            if (facets_[i] >> v & 1U) {
                s += (first ? "" : ",") + vertices_[v];
                first = false;
            }
        s += "}";
    }
    return s + "]";
}

SimplicialComplex complex_from_squarefree(const std::vector<Monomial>& gens, std::vector<std::string> vertices) {
    const std::size_t n = vertices.size();
    if (n > 24) throw InputError("simplicial complex: too many vertices");
    std::vector<SimplicialComplex::Face> supports;
    for (const auto& g : gens) {
        SimplicialComplex::Face s = 0;
        for (std::size_t v = 0; v < kMaxVariables; ++v) {
            if (g[v] > 1) throw InputError("generator is not square-free");
            if (g[v] == 1) {
                if (v >= n) throw InputError("generator uses a variable outside the vertex set");
                s |= SimplicialComplex::Face{1} << v;
            }
        }
        supports.push_back(s);
    }
    std::vector<SimplicialComplex::Face> faces;
    const SimplicialComplex::Face count = SimplicialComplex::Face{1} << n;
    for (SimplicialComplex::Face f = 0; f < count; ++f) {
        bool is_face = true;
        for (auto s : supports)
            if (subset(s, f)) {
                is_face = false;
                break;
            }
        if (is_face) faces.push_back(f);
    }
    return SimplicialComplex(std::move(vertices), std::move(faces));
}

std::int64_t buchsbaum_invariant(const std::vector<std::int64_t>& h) {
    const auto d = static_cast<std::int64_t>(h.size());
    std::int64_t total = 0, c = 1;  // c = C(d-1, j)
    for (std::int64_t j = 0; j < d; ++j) {
        total += c * h[static_cast<std::size_t>(j)];
        c = c * (d - 1 - j) / (j + 1);
    }
    return total;
}

} // namespace satlen
