#pragma once

#include "torloc/localization.hpp"

namespace torloc {

// Decreasing ray filtration encoded as steps: E(i) = subspaces[s] for
// thresholds[s-1] < i <= thresholds[s] (with thresholds[-1] = -infinity) and
// E(i) = 0 beyond the last threshold.  The first subspace is the full space.
struct RayFiltration {
    std::vector<Int> thresholds;                 // strictly increasing
    std::vector<std::vector<std::vector<Rat>>> subspaces;  // basis rows per step
};

struct ToricVectorBundle {
    int rank = 0;
    FanPtr fan;
    // per fan ray (canonical ray order); empty when u_multisets are given directly
    std::vector<RayFiltration> filtrations;
    bool has_filtrations = false;
    // per maximal cone: the character multiset u(sigma); may be empty (resolved on demand)
    std::vector<std::vector<Vec>> u_multisets;
    bool has_u_multisets = false;
};

// Validates filtration shapes (full space first, strictly decreasing).
void validate_bundle(const ToricVectorBundle& bundle);

// The unique character multiset that splits the bundle on sigma: candidates
// are enumerated from the jump-value grids of a lattice-spanning subset of
// sigma's rays, filtered on every ray, and multiplicities are solved so that
// dim E^rho(i) = #{u : <u, v_rho> >= i} for all rays and all i.
std::vector<Vec> resolve_klyachko(const ToricVectorBundle& bundle, std::size_t maximal_index);

// u(sigma) for every maximal cone, using stored multisets when present.
std::vector<std::vector<Vec>> bundle_characters(const ToricVectorBundle& bundle);

struct Partition {
    std::vector<int> parts;  // weakly decreasing positive integers
    int sum() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
};

Partition make_partition(const std::vector<int>& parts);

// i-th elementary symmetric polynomial of the characters (as linear forms).
Polynomial elementary_symmetric(const std::vector<Vec>& u, int i, int nvars);

// eps_lambda = prod_j eps_{lambda_j}; homogeneous of degree sum(lambda).
Polynomial eps_lambda(const std::vector<Vec>& u, const Partition& lambda, int nvars);

// Bott residue formula: c_lambda = sum_sigma e_sigma eps_lambda(u(sigma)).
Int chern_number(const ToricVectorBundle& bundle, const Partition& lambda);

}  // namespace torloc
