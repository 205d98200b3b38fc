#include "torloc/mixed_volume.hpp"

#include <algorithm>

namespace torloc {

PolytopeSystem make_polytope_system(std::vector<LatticePolytope> polytopes) {
    require(!polytopes.empty(), "polytope system: no polytopes");
    PolytopeSystem sys;
    sys.n = polytopes.front().ambient();
    require(polytopes.size() == sys.n, "polytope system: need exactly n polytopes in rank n");
    for (const LatticePolytope& p : polytopes)
        require(p.ambient() == sys.n, "polytope system: ambient rank mismatch");
    sys.polytopes = std::move(polytopes);
    sys.fan = normal_fan(sys.polytopes);
    for (const Cone& sigma : sys.fan->maximal_cones()) {
        std::vector<Vec> mins;
        for (const LatticePolytope& p : sys.polytopes) mins.push_back(min_vertex(p, sigma));
        sys.min_vertices.push_back(std::move(mins));
    }
    return sys;
}

Int mixed_volume_loc(const PolytopeSystem& sys) {
    const int n = static_cast<int>(sys.n);
    std::vector<RationalFunctionLF> terms;
    for (std::size_t i = 0; i < sys.fan->maximal_cones().size(); ++i) {
        Polynomial prod = Polynomial::constant(n, Rat(1));
        bool zero = false;
        for (const Vec& u : sys.min_vertices[i]) {
            if (is_zero_vec(u)) {
                zero = true;
                break;
            }
            prod = prod * Polynomial::linear(u);
        }
        if (zero) continue;
        terms.push_back(e_sigma(sys.fan->maximal_cones()[i]).mul_poly(prod));
    }
    RationalFunctionLF total = rf_sum(terms, n);
    Polynomial value;
    try {
        value = total.to_polynomial();
    } catch (const NotPolynomialError&) {
        throw InternalError("mixed_volume_loc: localization sum failed to clear denominators");
    }
    check_internal(value.degree() <= 0, "mixed_volume_loc: result is not a constant");
    Rat c = value.is_zero() ? Rat(0) : value.terms().begin()->second;
    if (n % 2 != 0) c = -c;
    check_internal(c.get_den() == 1 && c >= 0, "mixed_volume_loc: n!V must be a nonnegative integer");
    return c.get_num();
}

namespace {

Int count_points(const LatticePolytope& p) { return Int(lattice_points(p).size()); }

}  // namespace

Int mixed_volume_lattice_points(const std::vector<LatticePolytope>& polytopes) {
    require(!polytopes.empty(), "mixed_volume_lattice_points: no polytopes");
    const std::size_t n = polytopes.size();
    const std::size_t ambient = polytopes.front().ambient();
    Int total = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::size_t k = 0;
        LatticePolytope sum = LatticePolytope::from_points(ambient, {zero_vec(ambient)});
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) {
                sum = minkowski_sum(sum, polytopes[i]);
                ++k;
            }
        Int count = count_points(sum);
        total += ((n - k) % 2 == 0) ? count : -count;
    }
    return total;
}

Int mixed_volume_fit(const std::vector<LatticePolytope>& polytopes) {
    require(!polytopes.empty(), "mixed_volume_fit: no polytopes");
    const std::size_t n = polytopes.size();
    const std::size_t ambient = polytopes.front().ambient();
    const int grid = static_cast<int>(n);

    // samples f(a) = #(sum a_i P_i ^ M) on the tensor grid {0..n}^n
    std::map<Exps, Rat> samples;
    {
        Exps a(n, 0);
        while (true) {
            LatticePolytope sum = LatticePolytope::from_points(ambient, {zero_vec(ambient)});
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] > 0) sum = minkowski_sum(sum, polytopes[i].dilate(a[i]));
            samples[a] = Rat(count_points(sum));
            std::size_t j = 0;
            while (j < n) {
                ++a[j];
                if (a[j] <= grid) break;
                a[j] = 0;
                ++j;
            }
            if (j == n) break;
        }
    }

    // exact tensor interpolation on nodes 0..n, one axis at a time: after
    // processing axis i the map carries coefficients of a_i^e
    std::map<Exps, Rat> coeffs = std::move(samples);
    for (std::size_t axis = 0; axis < n; ++axis) {
        std::map<Exps, Rat> next;
        // group entries by the other coordinates
        std::map<Exps, std::vector<Rat>> lines;
        for (const auto& [e, v] : coeffs) {
            Exps key = e;
            int idx = key[axis];
            key[axis] = 0;
            auto [it, inserted] = lines.emplace(key, std::vector<Rat>(grid + 1, Rat(0)));
            it->second[idx] = v;
        }
        for (auto& [key, values] : lines) {
            // Newton divided differences on nodes 0..grid, then expansion to
            // monomial coefficients
            std::vector<Rat> dd = values;
            for (int level = 1; level <= grid; ++level)
                for (int i = grid; i >= level; --i)
                    dd[i] = (dd[i] - dd[i - 1]) / Rat(level);
            // poly = sum_k dd[k] * x(x-1)...(x-k+1)
            std::vector<Rat> mono(grid + 1, Rat(0));
            std::vector<Rat> basis(grid + 1, Rat(0));  // falling factorial coefficients
            basis[0] = 1;
            int basis_deg = 0;
            for (int k = 0; k <= grid; ++k) {
                for (int d = 0; d <= basis_deg; ++d) mono[d] += dd[k] * basis[d];
                if (k == grid) break;
                // multiply basis by (x - k)
                for (int d = basis_deg + 1; d >= 1; --d)
                    basis[d] = basis[d - 1] - Rat(k) * basis[d];
                basis[0] = -Rat(k) * basis[0];
                ++basis_deg;
            }
            for (int d = 0; d <= grid; ++d) {
                if (mono[d] == 0) continue;
                Exps e = key;
                e[axis] = d;
                next[e] = mono[d];
            }
        }
        coeffs = std::move(next);
    }

    // the counting function is a polynomial of total degree at most n
    for (const auto& [e, c] : coeffs)
        check_internal(total_degree(e) <= static_cast<int>(n),
                       "mixed_volume_fit: fitted polynomial exceeds degree n");

    // extract the a_1...a_n coefficient by evaluating the fitted polynomial
    // at 0/1 vectors with the inclusion-exclusion signs
    Rat result = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<Rat> point(n, Rat(0));
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1) {
                point[i] = 1;
                ++k;
            }
        Rat value = 0;
        for (const auto& [e, c] : coeffs) {
            Rat term = c;
            for (std::size_t i = 0; i < n; ++i)
                for (int d = 0; d < e[i]; ++d) term *= point[i];
            value += term;
        }
        result += ((n - k) % 2 == 0) ? value : -value;
    }
    check_internal(result.get_den() == 1, "mixed_volume_fit: coefficient is not an integer");
    return result.get_num();
}

ToricVectorBundle split_bundle(const PolytopeSystem& sys) {
    ToricVectorBundle bundle;
    bundle.rank = static_cast<int>(sys.n);
    bundle.fan = sys.fan;
    bundle.has_u_multisets = true;
    for (const auto& mins : sys.min_vertices) {
        std::vector<Vec> mu;
        for (const Vec& u : mins) mu.push_back(vec_neg(u));
        bundle.u_multisets.push_back(std::move(mu));
    }
    return bundle;
}

MixedVolumeReport picard_degree_check(const PolytopeSystem& sys) {
    MixedVolumeReport report;
    report.loc = mixed_volume_loc(sys);
    report.points = mixed_volume_lattice_points(sys.polytopes);
    report.fit = mixed_volume_fit(sys.polytopes);
    Partition top;
    top.parts.assign(1, static_cast<int>(sys.n));
    report.chern = chern_number(split_bundle(sys), top);
    report.all_equal = report.loc == report.points && report.loc == report.fit &&
                       report.loc == report.chern;
    return report;
}

}  // namespace torloc
