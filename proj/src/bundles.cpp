#include "torloc/bundles.hpp"

#include <algorithm>
#include <set>

namespace torloc {

namespace {

std::size_t subspace_dim(const std::vector<std::vector<Rat>>& basis_rows, std::size_t width) {
    if (basis_rows.empty()) return 0;
    QMat m(basis_rows.size(), width);
    for (std::size_t i = 0; i < basis_rows.size(); ++i) {
        check_internal(basis_rows[i].size() == width, "subspace basis row width mismatch");
        for (std::size_t j = 0; j < width; ++j) m(i, j) = basis_rows[i][j];
    }
    return rank_q(m);
}

// value -> multiplicity of the pairing jumps of one filtration
std::map<Int, int> jump_multiset(const RayFiltration& f, int rank) {
    std::map<Int, int> jumps;
    std::vector<std::size_t> dims;
    for (const auto& s : f.subspaces) dims.push_back(subspace_dim(s, rank));
    for (std::size_t s = 0; s < f.thresholds.size(); ++s) {
        std::size_t next = s + 1 < dims.size() ? dims[s + 1] : 0;
        check_internal(dims[s] > next, "jump_multiset: filtration dims not strictly decreasing");
        jumps[f.thresholds[s]] = static_cast<int>(dims[s] - next);
    }
    return jumps;
}

}  // namespace

void validate_bundle(const ToricVectorBundle& bundle) {
    require(bundle.rank >= 1, "bundle rank must be positive");
    require(bundle.has_filtrations || bundle.has_u_multisets,
            "bundle needs filtrations or explicit character multisets");
    if (bundle.has_filtrations) {
        std::vector<Vec> rays = bundle.fan->rays();
        require(bundle.filtrations.size() == rays.size(),
                "bundle: one filtration per fan ray required");
        for (const RayFiltration& f : bundle.filtrations) {
            require(!f.thresholds.empty(), "bundle: empty filtration");
            require(f.thresholds.size() == f.subspaces.size(),
                    "bundle: thresholds and subspaces must pair up");
            for (std::size_t s = 0; s + 1 < f.thresholds.size(); ++s)
                require(f.thresholds[s] < f.thresholds[s + 1],
                        "bundle: thresholds must increase strictly");
            require(subspace_dim(f.subspaces.front(), bundle.rank) ==
                        static_cast<std::size_t>(bundle.rank),
                    "bundle: filtration must start at the full space");
            std::size_t prev = bundle.rank + 1;
            for (const auto& s : f.subspaces) {
                std::size_t d = subspace_dim(s, bundle.rank);
                require(d < prev, "bundle: filtration subspaces must decrease strictly");
                prev = d;
            }
        }
    }
    if (bundle.has_u_multisets) {
        require(bundle.u_multisets.size() == bundle.fan->maximal_cones().size(),
                "bundle: one character multiset per maximal cone required");
        for (const auto& mu : bundle.u_multisets)
            require(mu.size() == static_cast<std::size_t>(bundle.rank),
                    "bundle: multiset size must equal the rank");
    }
}

std::vector<Vec> resolve_klyachko(const ToricVectorBundle& bundle, std::size_t maximal_index) {
    const Fan& fan = *bundle.fan;
    const std::size_t n = fan.ambient();
    const Cone& sigma = fan.maximal_cones()[maximal_index];
    require(bundle.has_filtrations, "resolve_klyachko: bundle has no filtrations");
    require(sigma.dim() == n, "resolve_klyachko: maximal cone must be full-dimensional");
    if (bundle.rank > 4)
        throw RankTooLargeError("resolve_klyachko: filtration solving supports rank <= 4");

    std::vector<Vec> rays = fan.rays();
    auto ray_index = [&](const Vec& g) {
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (rays[i] == g) return i;
        throw InternalError("resolve_klyachko: ray not found");
    };

    const std::vector<Vec>& gens = sigma.generators();
    std::vector<std::map<Int, int>> jumps;
    for (const Vec& g : gens)
        jumps.push_back(jump_multiset(bundle.filtrations[ray_index(g)], bundle.rank));

    // lattice-spanning subset of the rays, greedily in canonical order
    std::vector<std::size_t> span_rays;
    {
        std::vector<Vec> chosen;
        for (std::size_t i = 0; i < gens.size() && chosen.size() < n; ++i) {
            chosen.push_back(gens[i]);
            if (rank_z(IntMat::from_rows(chosen, n)) == chosen.size())
                span_rays.push_back(i);
            else
                chosen.pop_back();
        }
        check_internal(span_rays.size() == n, "resolve_klyachko: rays do not span");
    }

    // enumerate candidate characters from the jump grids of the spanning rays
    QMat system(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) system(r, j) = Rat(gens[span_rays[r]][j]);
    std::vector<Vec> candidates;
    {
        std::vector<std::vector<Int>> grids;
        for (std::size_t r : span_rays) {
            std::vector<Int> g;
            for (const auto& [v, m] : jumps[r]) g.push_back(v);
            grids.push_back(std::move(g));
        }
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<Rat> rhs, sol;
            for (std::size_t r = 0; r < n; ++r) rhs.push_back(Rat(grids[r][pick[r]]));
            if (solve_q(system, rhs, sol)) {
                bool integral = true;
                Vec u(n);
                for (std::size_t j = 0; j < n; ++j) {
                    if (sol[j].get_den() != 1) {
                        integral = false;
                        break;
                    }
                    u[j] = sol[j].get_num();
                }
                if (integral) {
                    bool compatible = true;
                    for (std::size_t gi = 0; gi < gens.size() && compatible; ++gi)
                        if (!jumps[gi].count(dot(u, gens[gi]))) compatible = false;
                    if (compatible) candidates.push_back(u);
                }
            }
            std::size_t j = 0;
            while (j < n) {
                ++pick[j];
                if (pick[j] < grids[j].size()) break;
                pick[j] = 0;
                ++j;
            }
            if (j == n) break;
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // assign multiplicities so every per-ray jump count is matched exactly
    std::vector<std::vector<Int>> pairings(candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c)
        for (const Vec& g : gens) pairings[c].push_back(dot(candidates[c], g));

    std::vector<int> mult(candidates.size(), 0);
    std::vector<std::vector<Vec>> solutions;
    std::vector<std::map<Int, int>> residual = jumps;
    std::function<void(std::size_t, int)> assign = [&](std::size_t c, int used) {
        if (solutions.size() >= 2) return;
        if (used == bundle.rank) {
            for (const auto& rj : residual)
                for (const auto& [v, m] : rj)
                    if (m != 0) return;
            std::vector<Vec> multiset;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                for (int k = 0; k < mult[i]; ++k) multiset.push_back(candidates[i]);
            solutions.push_back(std::move(multiset));
            return;
        }
        if (c == candidates.size()) return;
        int max_m = bundle.rank - used;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            auto it = residual[gi].find(pairings[c][gi]);
            max_m = std::min(max_m, it == residual[gi].end() ? 0 : it->second);
        }
        for (int m = max_m; m >= 0; --m) {
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                residual[gi][pairings[c][gi]] -= m;
            mult[c] = m;
            assign(c + 1, used + m);
            mult[c] = 0;
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                residual[gi][pairings[c][gi]] += m;
        }
    };
    assign(0, 0);
    if (solutions.empty())
        throw IncompatibleFiltrationsError(
            "resolve_klyachko: no character multiset matches the filtrations on " +
            sigma.to_string());
    if (solutions.size() > 1)
        throw IncompatibleFiltrationsError(
            "resolve_klyachko: character multiset is not unique on " + sigma.to_string());
    return solutions.front();
}

std::vector<std::vector<Vec>> bundle_characters(const ToricVectorBundle& bundle) {
    if (bundle.has_u_multisets) return bundle.u_multisets;
    std::vector<std::vector<Vec>> out;
    for (std::size_t i = 0; i < bundle.fan->maximal_cones().size(); ++i)
        out.push_back(resolve_klyachko(bundle, i));
    return out;
}

Partition make_partition(const std::vector<int>& parts) {
    Partition p;
    p.parts = parts;
    require(!p.parts.empty(), "partition must be nonempty");
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        require(p.parts[i] >= 1, "partition parts must be positive");
        if (i) require(p.parts[i - 1] >= p.parts[i], "partition must be weakly decreasing");
    }
    return p;
}

Polynomial elementary_symmetric(const std::vector<Vec>& u, int i, int nvars) {
    require(i >= 1 && i <= static_cast<int>(u.size()),
            "elementary_symmetric: index out of range");
    // coefficients of prod_j (1 + u_j z) by degree in z
    std::vector<Polynomial> acc(u.size() + 1, Polynomial(nvars));
    acc[0] = Polynomial::constant(nvars, Rat(1));
    for (const Vec& uj : u) {
        Polynomial form = Polynomial::linear(uj);
        for (std::size_t d = u.size(); d >= 1; --d) acc[d] = acc[d] + acc[d - 1] * form;
    }
    return acc[i];
}

Polynomial eps_lambda(const std::vector<Vec>& u, const Partition& lambda, int nvars) {
    Polynomial out = Polynomial::constant(nvars, Rat(1));
    for (int part : lambda.parts) out = out * elementary_symmetric(u, part, nvars);
    return out;
}

Int chern_number(const ToricVectorBundle& bundle, const Partition& lambda) {
    const Fan& fan = *bundle.fan;
    require(fan.is_complete(), "chern_number: fan must be complete");
    const int n = static_cast<int>(fan.ambient());
    require(lambda.sum() == n, "chern_number: lambda must be a partition of the rank of N");
    validate_bundle(bundle);
    std::vector<std::vector<Vec>> characters = bundle_characters(bundle);

    std::vector<RationalFunctionLF> terms;
    for (std::size_t i = 0; i < fan.maximal_cones().size(); ++i) {
        Polynomial eps = eps_lambda(characters[i], lambda, n);
        if (eps.is_zero()) continue;
        terms.push_back(e_sigma(fan.maximal_cones()[i]).mul_poly(eps));
    }
    RationalFunctionLF total = rf_sum(terms, n);
    Polynomial value;
    try {
        value = total.to_polynomial();
    } catch (const NotPolynomialError&) {
        throw InternalError("chern_number: localization sum failed to clear denominators");
    }
    check_internal(value.degree() <= 0, "chern_number: result is not a constant");
    Rat c = value.is_zero() ? Rat(0) : value.terms().begin()->second;
    check_internal(c.get_den() == 1, "chern_number: result is not an integer");
    return c.get_num();
}

}  // namespace torloc
