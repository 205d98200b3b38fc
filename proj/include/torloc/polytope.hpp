#pragma once

#include "torloc/fan.hpp"

namespace torloc {

// Lattice polytope as the convex hull of a finite point set.  Internally the
// polytope is the slice {x : (1, x) in C} of the cone C over {1} x P, which
// supplies vertices, affine span equations and facet inequalities uniformly
// for lower-dimensional polytopes.
class LatticePolytope {
public:
    static LatticePolytope from_points(std::size_t ambient, const std::vector<Vec>& points);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return lifted_.dim() - 1; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const Cone& lifted_cone() const { return lifted_; }

    bool contains(const Vec& point) const;

    // scale by a nonnegative integer; 0 * P = {0}
    LatticePolytope dilate(const Int& k) const;

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> vertices_;  // canonical sorted extreme points
    Cone lifted_;                // cone over {1} x P in rank ambient+1
};

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// P ^ M by bounding box sweep filtered through the facet inequalities, with
// the innermost coordinate solved as an exact interval.
std::vector<Vec> lattice_points(const LatticePolytope& p);

// Inner normal fan of the Minkowski sum of the given polytopes; maximal
// cones correspond to vertices of the sum.  Errors when the sum is not
// full-dimensional.
FanPtr normal_fan(const std::vector<LatticePolytope>& polytopes);

// The vertex of P minimal on the maximal cone sigma of a fan refining the
// normal fan of P; errors when the minimizer is not unique.
Vec min_vertex(const LatticePolytope& p, const Cone& sigma);

}  // namespace torloc
