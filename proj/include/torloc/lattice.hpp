#pragma once

#include <optional>

#include "torloc/intmat.hpp"

namespace torloc {

// v / gcd(v); errors on the zero vector.
Vec primitive_of(const Vec& v);

struct SubgroupInfo {
    std::vector<Vec> hnf_basis;     // canonical HNF basis of the generated subgroup
    std::optional<Int> index;       // [Z^rank : subgroup] when full rank, nullopt = infinite
};

SubgroupInfo subgroup_index(const std::vector<Vec>& generators, std::size_t ambient_rank);

// Saturation of the sublattice generated by the given vectors:
// (Q-span of generators) intersected with Z^n, returned as a Z-basis.
std::vector<Vec> saturation_basis(const std::vector<Vec>& generators, std::size_t ambient_rank);

// A saturated sublattice L of Z^n with a chosen Z-basis (rows of `basis`)
// and an integer coordinate map: coords(x) = coord_map * x for x in L,
// satisfying coord_map * basis^T = identity.
struct SublatticeBasis {
    IntMat basis;      // d x n, rows form a Z-basis of L
    IntMat coord_map;  // d x n
    std::size_t rank() const { return basis.rows(); }
    std::size_t ambient() const { return basis.cols(); }

    Vec coords(const Vec& x) const { return coord_map.apply(x); }
    Vec lift(const Vec& c) const { return basis.transpose().apply(c); }
    bool contains(const Vec& x) const { return lift(coords(x)) == x; }
};

// Basis + coordinate map for the saturation of the span of `generators`.
SublatticeBasis sublattice_basis(const std::vector<Vec>& generators, std::size_t ambient_rank);

// Projection Z^n -> Z^{n-d} with kernel exactly the saturation of the
// sublattice spanned by the tau generators, together with an integer
// section (projection * section = identity).
struct QuotientMap {
    std::size_t source_rank = 0;
    std::vector<Vec> sub_generators;  // basis of the saturated sublattice being killed
    IntMat projection;                // (n-d) x n
    IntMat section;                   // n x (n-d)

    std::size_t quotient_rank() const { return projection.rows(); }
    Vec project(const Vec& x) const { return projection.apply(x); }
    Vec lift(const Vec& y) const { return section.apply(y); }
};

// quotient of Z^n by the saturation of span(tau_generators); errors when the
// generators span the full space.  `section_twist` selects an alternate
// integer section (same projection); any twist must give identical
// downstream localization results, which the tests enforce.
QuotientMap quotient_lattice(std::size_t n, const std::vector<Vec>& tau_generators,
                             std::uint64_t section_twist = 0);

// Same construction but permitting the rank-0 quotient (used for star fans
// of maximal cones, where the quotient lattice is trivial).
QuotientMap quotient_lattice_allow_trivial(std::size_t n, const std::vector<Vec>& tau_generators,
                                           std::uint64_t section_twist = 0);

}  // namespace torloc
