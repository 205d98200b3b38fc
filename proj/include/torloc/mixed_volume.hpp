#pragma once

#include "torloc/bundles.hpp"

namespace torloc {

// n lattice polytopes in rank n together with the inner normal fan of their
// sum and the per-maximal-cone minimal vertices u_i(sigma).
struct PolytopeSystem {
    std::size_t n = 0;
    std::vector<LatticePolytope> polytopes;
    FanPtr fan;
    std::vector<std::vector<Vec>> min_vertices;  // per maximal cone, one vertex per polytope
};

PolytopeSystem make_polytope_system(std::vector<LatticePolytope> polytopes);

// n! V via localization: (-1)^n sum_sigma e_sigma u_1(sigma) ... u_n(sigma).
Int mixed_volume_loc(const PolytopeSystem& sys);

// n! V as the alternating sum of lattice-point counts of the subset sums
// (the empty subset contributes #({0}) = 1 with sign (-1)^n).
Int mixed_volume_lattice_points(const std::vector<LatticePolytope>& polytopes);

// Oracle: counts lattice points of a_1 P_1 + ... + a_n P_n on the grid
// {0..n}^n, interpolates the counting polynomial exactly, asserts total
// degree <= n, and extracts the a_1...a_n coefficient by the 0/1
// inclusion-exclusion.
Int mixed_volume_fit(const std::vector<LatticePolytope>& polytopes);

// Rank-n split bundle of the system: u(sigma) = {-u_1(sigma), ..., -u_n(sigma)}.
// The sign is the frozen calibration making c_(n) equal n! V.
ToricVectorBundle split_bundle(const PolytopeSystem& sys);

struct MixedVolumeReport {
    Int loc = 0;
    Int points = 0;
    Int fit = 0;
    Int chern = 0;
    bool all_equal = false;
};

// Runs the three mixed-volume methods and the split-bundle Chern route.
MixedVolumeReport picard_degree_check(const PolytopeSystem& sys);

}  // namespace torloc
