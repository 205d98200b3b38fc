#pragma once

#include "torloc/lattice.hpp"

namespace torloc {

// A pointed rational polyhedral cone in Z^n, possibly lower-dimensional.
// Generators are primitive, extremal and canonically sorted; the cached
// H-description is: x in cone  <=>  span equations vanish on x and all
// relative facet normals pair >= 0 with x.
class Cone {
public:
    Cone() : ambient_(0), dim_(0) {}

    // Validates, primitivizes, drops redundant generators, computes facets.
    // Throws ValidationError when the cone is not pointed.
    static Cone from_generators(std::size_t ambient, const std::vector<Vec>& generators);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return gens_; }
    const std::vector<Vec>& span_equations() const { return span_eqs_; }
    const std::vector<Vec>& facet_normals() const { return facets_; }
    const SublatticeBasis& span_lattice() const { return span_; }

    bool is_zero_cone() const { return gens_.empty(); }
    bool contains(const Vec& v) const;
    bool contains_in_relative_interior(const Vec& v) const;
    bool contains_cone(const Cone& other) const;

    // generators form part of a lattice basis (|det| = 1 in span coordinates)
    bool is_unimodular() const;
    bool is_simplicial() const { return gens_.size() == dim_; }

    // sum of the generators; relative interior point (zero for the zero cone)
    Vec interior_point() const;

    // the face cut out by the facet normals tight on all generators of f
    bool has_face(const Cone& f) const;

    // all faces including the cone itself and the zero cone, deduplicated
    std::vector<Cone> faces() const;
    std::vector<Cone> facet_cones() const;

    // canonical identity: ambient + sorted primitive generator list
    bool operator==(const Cone& o) const { return ambient_ == o.ambient_ && gens_ == o.gens_; }
    bool operator<(const Cone& o) const {
        if (gens_.size() != o.gens_.size()) return gens_.size() < o.gens_.size();
        return gens_ < o.gens_;
    }

    std::string to_string() const;

private:
    std::size_t ambient_;
    std::size_t dim_;
    std::vector<Vec> gens_;
    std::vector<Vec> span_eqs_;
    std::vector<Vec> facets_;
    SublatticeBasis span_;
};

// {u : <u, v> >= 0 for all v in sigma}; requires sigma full-dimensional
// (and therefore pointed).  Involution on full-dimensional pointed cones.
Cone dual_cone(const Cone& sigma);

// Dual basis of the generator matrix of a full-dimensional unimodular cone:
// rows u_i with <u_i, g_j> = delta_ij.
std::vector<Vec> unimodular_dual_basis(const Cone& sigma);

enum class ResolveStrategy { PullMin, PullMax };

// Deterministic triangulation into simplicial cones sharing all faces
// (recursive pulling at the lexicographically extreme generator).
std::vector<Cone> triangulate(const Cone& sigma, ResolveStrategy strategy = ResolveStrategy::PullMin);

// Unimodular subdivision: triangulate, then repeatedly star-subdivide every
// piece containing the shortest lattice point of the open fundamental
// parallelepiped of the first non-unimodular piece.  The two strategies give
// different subdivisions; all downstream multiplicities must agree.
std::vector<Cone> unimodular_resolve(const Cone& sigma,
                                     ResolveStrategy strategy = ResolveStrategy::PullMin);

// Star subdivision of a simplicial collection at a primitive ray through w.
std::vector<Cone> star_subdivide(const std::vector<Cone>& pieces, const Vec& w);

// Extreme rays of the intersection of two cones (primitive vectors).
std::vector<Vec> intersect_cones(const Cone& a, const Cone& b);

// Nonzero lattice points of the half-open fundamental parallelepiped
// {sum lambda_i g_i : 0 <= lambda_i < 1} of a simplicial cone.
std::vector<Vec> parallelepiped_points(const Cone& simplicial);

}  // namespace torloc
