#include "torloc/localization.hpp"

#include <algorithm>

namespace torloc {

LaurentGF hilbert_series(const Cone& sigma, ResolveStrategy strategy) {
    require(sigma.dim() == sigma.ambient() && sigma.ambient() > 0,
            "hilbert_series: cone must be full-dimensional and pointed");
    LaurentGF gf;
    gf.nvars = static_cast<int>(sigma.ambient());
    for (const Cone& piece : unimodular_resolve(sigma, strategy))
        gf.add_term(zero_vec(sigma.ambient()), unimodular_dual_basis(piece));
    return gf;
}

RationalFunctionLF e_sigma(const Cone& sigma, ResolveStrategy strategy) {
    require(sigma.dim() == sigma.ambient(), "e_sigma: cone must be full-dimensional and pointed");
    const int n = static_cast<int>(sigma.ambient());
    if (n == 0) return RationalFunctionLF::constant(0, Rat(1));
    std::vector<RationalFunctionLF> terms;
    for (const Cone& piece : unimodular_resolve(sigma, strategy))
        terms.push_back(RationalFunctionLF::quotient(Rat(1), Polynomial::constant(n, Rat(1)),
                                                     unimodular_dual_basis(piece)));
    return rf_sum(terms, n);
}

RationalFunctionLF e_sigma_via_principal_part(const Cone& sigma) {
    require(sigma.dim() == sigma.ambient(), "e_sigma: cone must be full-dimensional and pointed");
    const int n = static_cast<int>(sigma.ambient());
    if (n == 0) return RationalFunctionLF::constant(0, Rat(1));
    auto [pp, deg] = principal_part_auto(hilbert_series(sigma, ResolveStrategy::PullMax));
    check_internal(deg == -n, "e_sigma: principal part degree is not -n");
    return n % 2 == 0 ? pp : pp.scaled(Rat(-1));
}

namespace {

// image of a full-dimensional cone under a star quotient projection
Cone project_cone(const Cone& sigma, const QuotientMap& q) {
    std::vector<Vec> projected;
    for (const Vec& g : sigma.generators()) {
        Vec p = q.project(g);
        if (!is_zero_vec(p)) projected.push_back(primitive_of(p));
    }
    return Cone::from_generators(q.quotient_rank(), projected);
}

// pull a quotient-coordinate rational function back along the projection
RationalFunctionLF pull_back(const RationalFunctionLF& f, const QuotientMap& q) {
    const std::size_t n = q.source_rank;
    const std::size_t m = q.quotient_rank();
    if (f.is_zero()) return RationalFunctionLF(static_cast<int>(n));
    std::vector<Vec> images;  // quotient variable j -> row j of the projection
    for (std::size_t j = 0; j < m; ++j) images.push_back(q.projection.row(j));
    Polynomial num = f.num().substitute_linear(images, static_cast<int>(n));
    std::vector<Vec> den;
    IntMat pt = q.projection.transpose();
    for (const auto& [form, mult] : f.den()) {
        Vec pulled = pt.apply(form.coeffs);
        for (int k = 0; k < mult; ++k) den.push_back(pulled);
    }
    return RationalFunctionLF::quotient(f.scalar(), num, den);
}

bool cone_has_face(const Cone& sigma, const Cone& tau) {
    return sigma.has_face(tau);
}

}  // namespace

RationalFunctionLF e_sigma_tau(const Cone& sigma, const Cone& tau, std::uint64_t section_twist) {
    require(sigma.dim() == sigma.ambient(), "e_sigma_tau: sigma must be full-dimensional");
    require(cone_has_face(sigma, tau), "e_sigma_tau: tau is not a face of sigma");
    const std::size_t n = sigma.ambient();
    QuotientMap q = quotient_lattice_allow_trivial(n, tau.generators(), section_twist);
    if (q.quotient_rank() == 0)
        return RationalFunctionLF::constant(static_cast<int>(n), Rat(1));
    Cone image = project_cone(sigma, q);
    return pull_back(e_sigma(image), q);
}

PiecewisePolynomial make_piecewise(FanPtr fan, int degree, std::vector<Polynomial> parts) {
    require(parts.size() == fan->maximal_cones().size(),
            "piecewise polynomial: one polynomial per maximal cone required");
    const int n = static_cast<int>(fan->ambient());
    for (const Polynomial& p : parts) {
        require(p.nvars() == n, "piecewise polynomial: variable count mismatch");
        require(p.is_zero() || p.is_homogeneous(degree),
                "piecewise polynomial: parts must be homogeneous of the stated degree");
    }
    // agreement on the common face of every pair of maximal cones
    const auto& maximal = fan->maximal_cones();
    for (std::size_t i = 0; i < maximal.size(); ++i)
        for (std::size_t j = i + 1; j < maximal.size(); ++j) {
            Cone shared = fan->common_face(i, j);
            if (shared.dim() == 0 && degree > 0) continue;
            const SublatticeBasis& span = shared.span_lattice();
            std::vector<Vec> images;  // ambient variable k -> column k of the span basis
            for (int k = 0; k < n; ++k) images.push_back(span.basis.col(k));
            Polynomial diff = (parts[i] - parts[j])
                                  .substitute_linear(images, static_cast<int>(shared.dim()));
            require(diff.is_zero(), "piecewise polynomial: parts disagree on a shared face");
        }
    PiecewisePolynomial f;
    f.fan = std::move(fan);
    f.degree = degree;
    f.parts = std::move(parts);
    f.integral = true;
    for (const Polynomial& p : f.parts)
        if (!p.is_integral()) f.integral = false;
    return f;
}

PiecewisePolynomial PiecewisePolynomial::plus(const PiecewisePolynomial& o) const {
    check_internal(fan == o.fan && degree == o.degree, "piecewise plus: incompatible operands");
    std::vector<Polynomial> sum;
    for (std::size_t i = 0; i < parts.size(); ++i) sum.push_back(parts[i] + o.parts[i]);
    return make_piecewise(fan, degree, std::move(sum));
}

PiecewisePolynomial PiecewisePolynomial::times_linear(const Vec& u) const {
    Polynomial form = Polynomial::linear(u);
    std::vector<Polynomial> scaled;
    for (const Polynomial& p : parts) scaled.push_back(p * form);
    return make_piecewise(fan, degree + 1, std::move(scaled));
}

PiecewisePolynomial PiecewisePolynomial::scaled_int(const Int& c) const {
    std::vector<Polynomial> scaled;
    for (const Polynomial& p : parts) scaled.push_back(p.scaled(Rat(c)));
    return make_piecewise(fan, degree, std::move(scaled));
}

PiecewisePolynomial psi_tau(FanPtr fan, const Cone& tau) {
    require(fan->all_maximal_unimodular(), "psi_tau: fan is not unimodular");
    require(fan->find_cone(tau).has_value(), "psi_tau: tau is not a cone of the fan");
    const int n = static_cast<int>(fan->ambient());
    std::vector<Polynomial> parts;
    for (const Cone& sigma : fan->maximal_cones()) {
        if (!sigma.contains_cone(tau)) {
            parts.push_back(Polynomial(n));
            continue;
        }
        std::vector<Vec> dual = unimodular_dual_basis(sigma);
        Polynomial part = Polynomial::constant(n, Rat(1));
        const std::vector<Vec>& gens = sigma.generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            bool in_tau = std::binary_search(tau.generators().begin(), tau.generators().end(),
                                             gens[i]);
            if (in_tau) part = part * Polynomial::linear(dual[i]);
        }
        parts.push_back(part);
    }
    return make_piecewise(std::move(fan), static_cast<int>(tau.dim()), std::move(parts));
}

Polynomial pushforward_polynomial(const PiecewisePolynomial& f) {
    require(f.fan->is_complete(), "pushforward: fan must be complete");
    const int n = static_cast<int>(f.fan->ambient());
    std::vector<RationalFunctionLF> terms;
    for (std::size_t i = 0; i < f.parts.size(); ++i) {
        if (f.parts[i].is_zero()) continue;
        terms.push_back(e_sigma(f.fan->maximal_cones()[i]).mul_poly(f.parts[i]));
    }
    RationalFunctionLF total = rf_sum(terms, n);
    try {
        return total.to_polynomial();
    } catch (const NotPolynomialError&) {
        throw InternalError("pushforward: sum of e_sigma f_sigma failed to clear denominators");
    }
}

MinkowskiWeight MinkowskiWeight::plus(const MinkowskiWeight& o) const {
    check_internal(fan == o.fan && codim == o.codim, "weight plus: incompatible operands");
    MinkowskiWeight out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] += o.values[i];
    return out;
}

MinkowskiWeight iota_star(const PiecewisePolynomial& f, std::uint64_t section_twist) {
    const Fan& fan = *f.fan;
    require(fan.is_complete(), "iota_star: fan must be complete");
    require(f.integral, "iota_star: piecewise polynomial must be integral");
    const int n = static_cast<int>(fan.ambient());
    const int k = f.degree;
    require(k <= n, "iota_star: degree exceeds the ambient rank");

    MinkowskiWeight w;
    w.fan = f.fan;
    w.codim = k;
    for (std::size_t ci : fan.cones_of_codim(k)) {
        const Cone& tau = fan.cones()[ci];
        QuotientMap q =
            quotient_lattice_allow_trivial(fan.ambient(), tau.generators(), section_twist);
        const std::size_t m = q.quotient_rank();
        std::vector<Vec> images;  // ambient variable i -> row i of the section
        for (int i = 0; i < n; ++i) images.push_back(q.section.row(i));
        std::vector<RationalFunctionLF> terms;
        for (std::size_t mi : fan.maximal_containing(ci)) {
            const Polynomial& part = f.parts[mi];
            if (part.is_zero()) continue;
            Cone image = project_cone(fan.maximal_cones()[mi], q);
            Polynomial restricted = part.substitute_linear(images, static_cast<int>(m));
            terms.push_back(e_sigma(image).mul_poly(restricted));
        }
        RationalFunctionLF total = rf_sum(terms, static_cast<int>(m));
        Polynomial value;
        try {
            value = total.to_polynomial();
        } catch (const NotPolynomialError&) {
            throw InternalError("iota_star: weight sum failed to clear denominators");
        }
        check_internal(value.degree() <= 0, "iota_star: weight is not a constant");
        Rat c = value.is_zero() ? Rat(0) : value.terms().begin()->second;
        check_internal(c.get_den() == 1, "iota_star: weight is not an integer");
        w.values.push_back(c.get_num());
    }
    return w;
}

BalanceReport is_balanced(const MinkowskiWeight& w) {
    const Fan& fan = *w.fan;
    const int k = w.codim;
    BalanceReport report;
    if (static_cast<std::size_t>(k) >= fan.ambient()) return report;  // no codim k+1 cones

    std::vector<std::size_t> taus = fan.cones_of_codim(k);
    for (std::size_t gi : fan.cones_of_codim(k + 1)) {
        const Cone& gamma = fan.cones()[gi];
        QuotientMap q = quotient_lattice_allow_trivial(fan.ambient(), gamma.generators());
        Vec acc = zero_vec(q.quotient_rank());
        for (std::size_t t = 0; t < taus.size(); ++t) {
            const Cone& tau = fan.cones()[taus[t]];
            if (!tau.contains_cone(gamma) || tau.dim() != gamma.dim() + 1) continue;
            Vec v = primitive_of(q.project(tau.interior_point()));
            acc = vec_add(acc, vec_scale(w.values[t], v));
        }
        if (!is_zero_vec(acc)) {
            report.balanced = false;
            report.witnesses.emplace_back(gi, acc);
        }
    }
    return report;
}

std::vector<Exps> monomial_basis(int nvars, int k) {
    std::vector<Exps> out;
    Exps cur(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    if (nvars == 0) {
        if (k == 0) out.push_back(Exps{});
        return out;
    }
    rec(0, k);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// columns: per-cone coefficient unknowns (cone-major); rows: one per
// monomial of each pairwise face-agreement constraint
IntMat pp_constraint_matrix(const Fan& fan, int k, const std::vector<Exps>& monomials) {
    const int n = static_cast<int>(fan.ambient());
    const std::size_t m = fan.maximal_cones().size();
    const std::size_t d = monomials.size();
    std::vector<Vec> rows;

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Cone shared = fan.common_face(i, j);
            const std::size_t fd = shared.dim();
            if (fd == 0 && k > 0) continue;
            std::vector<Exps> targets = monomial_basis(static_cast<int>(fd), k);
            if (targets.empty()) continue;
            std::vector<Vec> images;
            for (int v = 0; v < n; ++v) images.push_back(shared.span_lattice().basis.col(v));
            // restriction matrix: source monomial -> coefficients on targets
            std::map<Exps, std::size_t> target_index;
            for (std::size_t t = 0; t < targets.size(); ++t) target_index[targets[t]] = t;
            std::vector<Vec> block(targets.size(), zero_vec(m * d));
            for (std::size_t e = 0; e < d; ++e) {
                Polynomial restricted = Polynomial::monomial(n, monomials[e], Rat(1))
                                            .substitute_linear(images, static_cast<int>(fd));
                for (const auto& [te, tc] : restricted.terms()) {
                    check_internal(tc.get_den() == 1, "pp constraints: non-integer restriction");
                    std::size_t t = target_index.at(te);
                    block[t][i * d + e] += tc.get_num();
                    block[t][j * d + e] -= tc.get_num();
                }
            }
            for (Vec& r : block) rows.push_back(std::move(r));
        }
    return IntMat::from_rows(rows, m * d);
}

}  // namespace

std::vector<PiecewisePolynomial> pp_basis(FanPtr fan, int k) {
    require(k >= 0, "pp_basis: negative degree");
    const int n = static_cast<int>(fan->ambient());
    const std::size_t m = fan->maximal_cones().size();
    std::vector<Exps> monomials = monomial_basis(n, k);
    const std::size_t d = monomials.size();
    IntMat constraints = pp_constraint_matrix(*fan, k, monomials);
    std::vector<Vec> kernel = integer_kernel_basis(constraints);
    std::vector<PiecewisePolynomial> basis;
    for (const Vec& vec : kernel) {
        std::vector<Polynomial> parts;
        for (std::size_t i = 0; i < m; ++i) {
            Polynomial p(n);
            for (std::size_t e = 0; e < d; ++e) p.add_term(monomials[e], Rat(vec[i * d + e]));
            parts.push_back(std::move(p));
        }
        basis.push_back(make_piecewise(fan, k, std::move(parts)));
    }
    return basis;
}

IntMat balancing_matrix(const Fan& fan, int k) {
    std::vector<std::size_t> taus = fan.cones_of_codim(k);
    std::vector<Vec> rows;
    if (static_cast<std::size_t>(k) < fan.ambient()) {
        for (std::size_t gi : fan.cones_of_codim(k + 1)) {
            const Cone& gamma = fan.cones()[gi];
            QuotientMap q = quotient_lattice_allow_trivial(fan.ambient(), gamma.generators());
            const std::size_t qr = q.quotient_rank();
            std::vector<Vec> block(qr, zero_vec(taus.size()));
            for (std::size_t t = 0; t < taus.size(); ++t) {
                const Cone& tau = fan.cones()[taus[t]];
                if (!tau.contains_cone(gamma) || tau.dim() != gamma.dim() + 1) continue;
                Vec v = primitive_of(q.project(tau.interior_point()));
                for (std::size_t l = 0; l < qr; ++l) block[l][t] = v[l];
            }
            for (Vec& r : block) rows.push_back(std::move(r));
        }
    }
    return IntMat::from_rows(rows, taus.size());
}

std::vector<RanksRow> ranks_table(FanPtr fan, int k_max) {
    require(fan->is_complete(), "ranks_table: fan must be complete");
    const int n = static_cast<int>(fan->ambient());
    std::vector<RanksRow> table;
    std::vector<PiecewisePolynomial> prev_basis;
    for (int k = 0; k <= k_max; ++k) {
        RanksRow row;
        std::vector<PiecewisePolynomial> basis = pp_basis(fan, k);
        row.rk_pp = basis.size();

        if (k == 0) {
            row.rk_m_pp = 0;
        } else {
            std::vector<Exps> monomials = monomial_basis(n, k);
            std::map<Exps, std::size_t> index;
            for (std::size_t e = 0; e < monomials.size(); ++e) index[monomials[e]] = e;
            const std::size_t m = fan->maximal_cones().size();
            std::vector<Vec> vectors;
            for (const PiecewisePolynomial& b : prev_basis)
                for (int v = 0; v < n; ++v) {
                    Vec coords = zero_vec(m * monomials.size());
                    for (std::size_t i = 0; i < m; ++i) {
                        Polynomial prod = b.parts[i] * Polynomial::variable(n, v);
                        for (const auto& [e, c] : prod.terms())
                            coords[i * monomials.size() + index.at(e)] = c.get_num();
                    }
                    vectors.push_back(std::move(coords));
                }
            row.rk_m_pp = vectors.empty()
                              ? 0
                              : rank_z(IntMat::from_rows(vectors, m * monomials.size()));
        }

        std::size_t cones = fan->cones_of_codim(k).size();
        row.rk_mw = cones - rank_z(balancing_matrix(*fan, k));
        table.push_back(row);
        prev_basis = std::move(basis);
    }
    return table;
}

ImageInfo iota_star_image(FanPtr fan, int k) {
    require(fan->is_complete(), "iota_star_image: fan must be complete");
    std::vector<PiecewisePolynomial> basis = pp_basis(fan, k);
    std::vector<Vec> weight_lattice = integer_kernel_basis(balancing_matrix(*fan, k));
    const std::size_t cones = fan->cones_of_codim(k).size();
    SublatticeBasis mw = sublattice_basis(weight_lattice, cones);

    ImageInfo info;
    info.weight_rank = mw.rank();
    std::vector<Vec> coords;
    for (const PiecewisePolynomial& b : basis) {
        MinkowskiWeight w = iota_star(b);
        check_internal(mw.contains(w.values), "iota_star_image: weight not balanced");
        coords.push_back(mw.coords(w.values));
    }
    SubgroupInfo sub = subgroup_index(coords, mw.rank());
    info.index = sub.index;
    info.image_hnf_basis = sub.hnf_basis;
    return info;
}

std::size_t picard_rank(FanPtr fan) {
    std::vector<Vec> gens;
    for (const Cone& c : fan->maximal_cones())
        for (const Vec& g : c.generators()) gens.push_back(g);
    require(rank_z(IntMat::from_rows(gens, fan->ambient())) == fan->ambient(),
            "picard_rank: fan support does not span");
    return pp_basis(fan, 1).size() - fan->ambient();
}

}  // namespace torloc
