#pragma once

#include "torloc/fan.hpp"
#include "torloc/polytope.hpp"
#include "torloc/series.hpp"

namespace torloc {

// Multigraded Hilbert series of the dual cone lattice points, as a sum of
// the closed forms 1/prod(1 - x^{u_i}) over the dual bases of a unimodular
// subdivision of sigma.  Requires sigma pointed and full-dimensional.
LaurentGF hilbert_series(const Cone& sigma, ResolveStrategy strategy = ResolveStrategy::PullMin);

// Equivariant multiplicity: sum over the unimodular pieces of the inverse
// product of dual-basis forms.  Homogeneous of degree -n.
RationalFunctionLF e_sigma(const Cone& sigma, ResolveStrategy strategy = ResolveStrategy::PullMin);

// Independent route: (-1)^n times the principal part of the Hilbert series
// at the torus identity.  Cross-checks e_sigma.
RationalFunctionLF e_sigma_via_principal_part(const Cone& sigma);

// e of the image of sigma in the quotient by span(tau), pulled back along
// the projection so the result lives in Sym^pm(tau-perp ^ M); degree is
// dim tau - n.  tau must be a face of sigma, sigma full-dimensional.
RationalFunctionLF e_sigma_tau(const Cone& sigma, const Cone& tau, std::uint64_t section_twist = 0);

// Homogeneous piecewise polynomial: one polynomial per maximal cone, face
// compatible; the realization of PP^k(Delta).
struct PiecewisePolynomial {
    FanPtr fan;
    int degree = 0;
    std::vector<Polynomial> parts;  // aligned with fan->maximal_cones()
    bool integral = false;

    PiecewisePolynomial plus(const PiecewisePolynomial& o) const;
    PiecewisePolynomial times_linear(const Vec& u) const;  // multiply by a global linear form
    PiecewisePolynomial scaled_int(const Int& c) const;
};

// Validates homogeneity and agreement on all pairwise common faces.
PiecewisePolynomial make_piecewise(FanPtr fan, int degree, std::vector<Polynomial> parts);

// The product of the ray functions Psi_i over the rays of tau: homogeneous of
// degree dim tau, integral, supported on Star(tau).  Fan must be unimodular.
PiecewisePolynomial psi_tau(FanPtr fan, const Cone& tau);

// sum_sigma e_sigma f_sigma: a homogeneous polynomial of degree k - n
// (zero for k < n, an integer for k = n).  Fan must be complete.
Polynomial pushforward_polynomial(const PiecewisePolynomial& f);

struct MinkowskiWeight {
    FanPtr fan;
    int codim = 0;
    std::vector<Int> values;  // aligned with fan->cones_of_codim(codim)

    MinkowskiWeight plus(const MinkowskiWeight& o) const;
};

// The localization map: c(tau) = sum_{sigma >= tau} e_{sigma,tau} f_sigma
// computed in quotient coordinates with f restricted along the section.
MinkowskiWeight iota_star(const PiecewisePolynomial& f, std::uint64_t section_twist = 0);

struct BalanceReport {
    bool balanced = true;
    // violated codim-(k+1) cones with the nonzero quotient vector
    std::vector<std::pair<std::size_t, Vec>> witnesses;
};

BalanceReport is_balanced(const MinkowskiWeight& w);

// Z-basis (equally a Q-basis) of PP^k(Delta) cut out by the face-agreement
// constraints on per-cone monomial coefficients.
std::vector<PiecewisePolynomial> pp_basis(FanPtr fan, int k);

struct RanksRow {
    std::size_t rk_pp = 0;     // rk PP^k
    std::size_t rk_m_pp = 0;   // rk of the image of M (x) PP^{k-1} -> PP^k
    std::size_t rk_mw = 0;     // rk of the Minkowski weight group in codim k
};

std::vector<RanksRow> ranks_table(FanPtr fan, int k_max);

struct ImageInfo {
    std::size_t weight_rank = 0;       // rank of the codim-k Minkowski weight lattice
    std::optional<Int> index;          // [MW^k : image], nullopt = infinite (rank drop)
    std::vector<Vec> image_hnf_basis;  // HNF basis in weight-lattice coordinates
};

// Image of PP^k(Delta) under iota_star inside the Minkowski weight lattice.
ImageInfo iota_star_image(FanPtr fan, int k);

// rk PP^1(Delta) - n; requires the support of the fan to span.
std::size_t picard_rank(FanPtr fan);

// Balancing constraint matrix for codim-k weights: one row block per
// codim-(k+1) cone gamma, one row per quotient coordinate.
IntMat balancing_matrix(const Fan& fan, int k);

// exponent list of the degree-k monomials in n variables, canonical order
std::vector<Exps> monomial_basis(int nvars, int k);

}  // namespace torloc
