#include "torloc/lattice.hpp"

namespace torloc {

Vec primitive_of(const Vec& v) {
    require(!is_zero_vec(v), "primitive_of: zero vector");
    Int g = 0;
    for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    return out;
}

SubgroupInfo subgroup_index(const std::vector<Vec>& generators, std::size_t ambient_rank) {
    for (const Vec& g : generators)
        require(g.size() == ambient_rank, "subgroup_index: generator rank mismatch");
    SubgroupInfo info;
    if (generators.empty()) {
        if (ambient_rank == 0) info.index = 1;
        return info;
    }
    HnfResult r = hnf(IntMat::from_rows(generators, ambient_rank));
    for (std::size_t i = 0; i < r.rank; ++i) info.hnf_basis.push_back(r.h.row(i));
    if (r.rank == ambient_rank) {
        Int idx = 1;
        for (std::size_t i = 0; i < ambient_rank; ++i) idx *= r.h(i, i);
        info.index = idx;
    }
    return info;
}

std::vector<Vec> saturation_basis(const std::vector<Vec>& generators, std::size_t ambient_rank) {
    if (generators.empty()) return {};
    // Q-span of the generators equals the orthogonal complement of the kernel
    // of the generator matrix; the integer kernel of that complement is the
    // saturation and is automatically a saturated lattice.
    IntMat g = IntMat::from_rows(generators, ambient_rank);
    std::vector<Vec> complement = integer_kernel_basis(g);
    if (complement.empty()) {
        std::vector<Vec> full;
        for (std::size_t i = 0; i < ambient_rank; ++i) {
            Vec e = zero_vec(ambient_rank);
            e[i] = 1;
            full.push_back(e);
        }
        return full;
    }
    return integer_kernel_basis(IntMat::from_rows(complement, ambient_rank));
}

SublatticeBasis sublattice_basis(const std::vector<Vec>& generators, std::size_t ambient_rank) {
    std::vector<Vec> basis = saturation_basis(generators, ambient_rank);
    SublatticeBasis out;
    out.basis = IntMat::from_rows(basis, ambient_rank);
    const std::size_t d = basis.size();
    // B = U^{-1} [I_d | 0] V^{-1}  =>  C := U^T [I_d | 0] V^T  satisfies C B^T = I_d.
    SnfResult s = snf(out.basis);
    check_internal(s.rank == d, "sublattice_basis: basis not independent");
    for (std::size_t i = 0; i < d; ++i)
        check_internal(s.d(i, i) == 1, "sublattice_basis: basis not saturated");
    IntMat ut = s.u.transpose();  // d x d
    IntMat vt = s.v.transpose();  // n x n
    IntMat c(d, ambient_rank);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < ambient_rank; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < d; ++k) acc += ut(i, k) * vt(k, j);
            c(i, j) = acc;
        }
    out.coord_map = c;
    check_internal(out.coord_map.mul(out.basis.transpose()) == IntMat::identity(d),
                   "sublattice_basis: coord_map * basis^T != I");
    return out;
}

QuotientMap quotient_lattice(std::size_t n, const std::vector<Vec>& tau_generators,
                             std::uint64_t section_twist) {
    std::vector<Vec> sat = saturation_basis(tau_generators, n);
    require(sat.size() < n || (sat.empty() && n == 0),
            "quotient_lattice: generators span the full space");
    return quotient_lattice_allow_trivial(n, tau_generators, section_twist);
}

QuotientMap quotient_lattice_allow_trivial(std::size_t n, const std::vector<Vec>& tau_generators,
                                           std::uint64_t section_twist) {
    QuotientMap q;
    q.source_rank = n;
    q.sub_generators = saturation_basis(tau_generators, n);
    const std::size_t d = q.sub_generators.size();

    if (d == 0) {
        q.projection = IntMat::identity(n);
        q.section = IntMat::identity(n);
        return q;
    }

    // SNF of B^T:  U' B^T V' = [I_d ; 0].  Columns of U'^{-1} are a basis of
    // Z^n whose first d members span the sublattice; the projection takes the
    // last n-d coordinates in that basis.
    IntMat bt = IntMat::from_rows(q.sub_generators, n).transpose();  // n x d
    SnfResult s = snf(bt);
    check_internal(s.rank == d, "quotient_lattice: dependent saturation basis");
    for (std::size_t i = 0; i < d; ++i)
        check_internal(s.d(i, i) == 1, "quotient_lattice: saturation not saturated");
    IntMat w = inverse_unimodular(s.u);  // n x n

    const std::size_t m = n - d;
    IntMat proj(m, n), sect(n, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) proj(i, j) = s.u(d + i, j);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) sect(i, j) = w(i, d + j);
    q.projection = proj;
    q.section = sect;

    if (section_twist != 0) {
        // Shift each section column by sublattice elements; the projection is
        // unchanged and projection * section stays the identity.
        Rng rng(section_twist);
        IntMat b = IntMat::from_rows(q.sub_generators, n);  // d x n
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Int c(rng.range(-2, 2));
                for (std::size_t i = 0; i < n; ++i) q.section(i, j) += c * b(k, i);
            }
    }

    check_internal(q.projection.mul(q.section) == IntMat::identity(m),
                   "quotient_lattice: projection * section != I");
    for (const Vec& g : q.sub_generators)
        check_internal(is_zero_vec(q.projection.apply(g)), "quotient_lattice: kernel mismatch");
    return q;
}

}  // namespace torloc
