#include "torloc/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace torloc {

namespace {

// all subsets of {0..count-1} of the given size, in lexicographic order
void for_each_subset(std::size_t count, std::size_t size,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    if (size > count) return;
    while (true) {
        visit(idx);
        // advance
        std::size_t i = size;
        while (i > 0) {
            --i;
            if (idx[i] + (size - i) < count) {
                ++idx[i];
                for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
        if (size == 0) return;
    }
}

// Extreme rays of {y in Z^d : <c, y> >= 0 for all c in constraints}, assuming
// the solution cone is pointed.  Every extreme ray is tight on a subset of
// constraints of rank d-1, so enumerating (d-1)-subsets is exhaustive.
std::vector<Vec> hcone_rays(const std::vector<Vec>& constraints, std::size_t d) {
    std::vector<Vec> rays;
    std::set<Vec> seen;
    if (d == 0) return rays;
    auto feasible = [&](const Vec& r) {
        for (const Vec& c : constraints)
            if (dot(c, r) < 0) return false;
        return true;
    };
    for_each_subset(constraints.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<Vec> sub;
        sub.reserve(idx.size());
        for (std::size_t i : idx) sub.push_back(constraints[i]);
        std::vector<Vec> kernel = integer_kernel_basis(IntMat::from_rows(sub, d));
        if (kernel.size() != 1) return;  // subset rank != d-1
        Vec r = primitive_of(kernel[0]);
        bool pos = feasible(r);
        Vec nr = vec_neg(r);
        bool neg = feasible(nr);
        if (pos && neg) {
            // a line would contradict pointedness; both-tight candidates are
            // possible only when every constraint vanishes on r
            throw InternalError("hcone_rays: solution cone contains a line");
        }
        if (pos && seen.insert(r).second) rays.push_back(r);
        if (neg && seen.insert(nr).second) rays.push_back(nr);
    });
    std::sort(rays.begin(), rays.end());
    return rays;
}

}  // namespace

Cone Cone::from_generators(std::size_t ambient, const std::vector<Vec>& generators) {
    Cone c;
    c.ambient_ = ambient;

    std::set<Vec> unique;
    for (const Vec& g : generators) {
        require(g.size() == ambient, "cone generator has wrong ambient rank");
        if (is_zero_vec(g)) continue;
        unique.insert(primitive_of(g));
    }
    std::vector<Vec> gens(unique.begin(), unique.end());

    // span equations and the saturated span lattice with coordinates
    if (gens.empty()) {
        c.dim_ = 0;
        IntMat id = IntMat::identity(ambient);
        c.span_eqs_ = id.row_list();
        c.span_.basis = IntMat(0, ambient);
        c.span_.coord_map = IntMat(0, ambient);
        return c;
    }
    c.span_eqs_ = integer_kernel_basis(IntMat::from_rows(gens, ambient));
    c.span_ = sublattice_basis(gens, ambient);
    const std::size_t d = c.span_.rank();
    c.dim_ = d;
    check_internal(d + c.span_eqs_.size() == ambient, "cone: span dimension bookkeeping");

    std::vector<Vec> hat;  // generators in span coordinates
    hat.reserve(gens.size());
    for (const Vec& g : gens) hat.push_back(c.span_.coords(g));

    // relative facet normals in span coordinates
    std::vector<Vec> facets_hat;
    {
        std::set<Vec> seen;
        auto all_sign = [&](const Vec& u, int sgn) {
            for (const Vec& g : hat) {
                Int p = dot(u, g);
                if (sgn > 0 && p < 0) return false;
                if (sgn < 0 && p > 0) return false;
            }
            return true;
        };
        for_each_subset(hat.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
            std::vector<Vec> sub;
            for (std::size_t i : idx) sub.push_back(hat[i]);
            std::vector<Vec> kernel = integer_kernel_basis(IntMat::from_rows(sub, d));
            if (kernel.size() != 1) return;
            Vec u = primitive_of(kernel[0]);
            if (all_sign(u, +1)) {
                if (seen.insert(u).second) facets_hat.push_back(u);
            } else if (all_sign(u, -1)) {
                Vec nu = vec_neg(u);
                if (seen.insert(nu).second) facets_hat.push_back(nu);
            }
        });
    }

    require(rank_z(IntMat::from_rows(facets_hat, d)) == d, "cone is not pointed");

    // extremality: a generator is an extreme ray iff its tight facet normals
    // have rank d-1
    std::vector<Vec> extremal;
    for (std::size_t gi = 0; gi < hat.size(); ++gi) {
        std::vector<Vec> tight;
        for (const Vec& u : facets_hat)
            if (dot(u, hat[gi]) == 0) tight.push_back(u);
        if (rank_z(IntMat::from_rows(tight, d)) == d - 1) extremal.push_back(gens[gi]);
    }
    c.gens_ = std::move(extremal);
    std::sort(c.gens_.begin(), c.gens_.end());
    check_internal(!c.gens_.empty(), "cone: no extremal generators");

    // pull facet normals back to the ambient dual lattice
    IntMat ct = c.span_.coord_map.transpose();  // n x d
    for (const Vec& u : facets_hat) c.facets_.push_back(primitive_of(ct.apply(u)));
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
}

bool Cone::contains(const Vec& v) const {
    for (const Vec& e : span_eqs_)
        if (dot(e, v) != 0) return false;
    for (const Vec& f : facets_)
        if (dot(f, v) < 0) return false;
    return true;
}

bool Cone::contains_in_relative_interior(const Vec& v) const {
    for (const Vec& e : span_eqs_)
        if (dot(e, v) != 0) return false;
    for (const Vec& f : facets_)
        if (dot(f, v) <= 0) return false;
    return true;
}

bool Cone::contains_cone(const Cone& other) const {
    for (const Vec& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

bool Cone::is_unimodular() const {
    if (!is_simplicial()) return false;
    if (gens_.empty()) return true;
    IntMat hat(gens_.size(), dim_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        Vec c = span_.coords(gens_[i]);
        for (std::size_t j = 0; j < dim_; ++j) hat(i, j) = c[j];
    }
    Int dv = det(hat);
    return dv == 1 || dv == -1;
}

Vec Cone::interior_point() const {
    Vec p = zero_vec(ambient_);
    for (const Vec& g : gens_) p = vec_add(p, g);
    return p;
}

bool Cone::has_face(const Cone& f) const {
    if (f.ambient_ != ambient_) return false;
    if (!contains_cone(f)) return false;
    std::vector<Vec> tight;
    for (const Vec& normal : facets_) {
        bool all_zero = true;
        for (const Vec& g : f.gens_)
            if (dot(normal, g) != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) tight.push_back(normal);
    }
    std::vector<Vec> face_gens;
    for (const Vec& g : gens_) {
        bool on_all = true;
        for (const Vec& normal : tight)
            if (dot(normal, g) != 0) {
                on_all = false;
                break;
            }
        if (on_all) face_gens.push_back(g);
    }
    std::sort(face_gens.begin(), face_gens.end());
    return face_gens == f.gens_;
}

std::vector<Cone> Cone::faces() const {
    std::set<Cone> out;
    const std::size_t fc = facets_.size();
    check_internal(fc < 63, "faces: too many facets");
    for (std::uint64_t mask = 0; mask < (1ULL << fc); ++mask) {
        std::vector<Vec> face_gens;
        for (const Vec& g : gens_) {
            bool on_all = true;
            for (std::size_t i = 0; i < fc && on_all; ++i)
                if ((mask >> i) & 1)
                    if (dot(facets_[i], g) != 0) on_all = false;
            if (on_all) face_gens.push_back(g);
        }
        out.insert(Cone::from_generators(ambient_, face_gens));
    }
    return std::vector<Cone>(out.begin(), out.end());
}

std::vector<Cone> Cone::facet_cones() const {
    std::vector<Cone> out;
    for (const Vec& normal : facets_) {
        std::vector<Vec> face_gens;
        for (const Vec& g : gens_)
            if (dot(normal, g) == 0) face_gens.push_back(g);
        out.push_back(Cone::from_generators(ambient_, face_gens));
    }
    return out;
}

std::string Cone::to_string() const {
    std::ostringstream os;
    os << "cone<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) os << ", ";
        os << vec_to_string(gens_[i]);
    }
    os << ">";
    return os.str();
}

Cone dual_cone(const Cone& sigma) {
    require(sigma.dim() == sigma.ambient() && sigma.ambient() > 0,
            "dual_cone: cone must be full-dimensional and pointed");
    return Cone::from_generators(sigma.ambient(), sigma.facet_normals());
}

std::vector<Vec> unimodular_dual_basis(const Cone& sigma) {
    check_internal(sigma.dim() == sigma.ambient() && sigma.is_unimodular(),
                   "unimodular_dual_basis: cone must be full-dimensional unimodular");
    const std::size_t n = sigma.ambient();
    IntMat g = IntMat::from_rows(sigma.generators(), n);
    return inverse_unimodular(g).transpose().row_list();
}

std::vector<Cone> triangulate(const Cone& sigma, ResolveStrategy strategy) {
    if (sigma.is_simplicial()) return {sigma};
    const std::vector<Vec>& gens = sigma.generators();
    Vec apex = strategy == ResolveStrategy::PullMin ? gens.front() : gens.back();
    std::vector<Cone> out;
    for (std::size_t fi = 0; fi < sigma.facet_normals().size(); ++fi) {
        const Vec& normal = sigma.facet_normals()[fi];
        if (dot(normal, apex) == 0) continue;  // facet contains the apex
        std::vector<Vec> face_gens;
        for (const Vec& g : gens)
            if (dot(normal, g) == 0) face_gens.push_back(g);
        Cone facet = Cone::from_generators(sigma.ambient(), face_gens);
        for (const Cone& piece : triangulate(facet, strategy)) {
            std::vector<Vec> joined = piece.generators();
            joined.push_back(apex);
            out.push_back(Cone::from_generators(sigma.ambient(), joined));
        }
    }
    return out;
}

std::vector<Vec> parallelepiped_points(const Cone& simplicial) {
    check_internal(simplicial.is_simplicial(), "parallelepiped_points: cone not simplicial");
    const std::size_t d = simplicial.dim();
    if (d == 0) return {};
    std::vector<Vec> hat;
    for (const Vec& g : simplicial.generators()) hat.push_back(simplicial.span_lattice().coords(g));

    // coordinate box of {sum lambda_i ghat_i : lambda in [0,1]^d}
    Vec lo = zero_vec(d), hi = zero_vec(d);
    for (const Vec& g : hat)
        for (std::size_t j = 0; j < d; ++j) {
            if (g[j] < 0) lo[j] += g[j];
            if (g[j] > 0) hi[j] += g[j];
        }

    // lambda = Ghat^{-T} x, solved via one exact matrix inverse
    QMat gt(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gt(i, j) = Rat(hat[j][i]);
    std::vector<Vec> points;
    Vec x = lo;
    while (true) {
        std::vector<Rat> lambda;
        std::vector<Rat> rhs;
        rhs.reserve(d);
        for (std::size_t i = 0; i < d; ++i) rhs.push_back(Rat(x[i]));
        bool solved = solve_q(gt, rhs, lambda);
        check_internal(solved, "parallelepiped_points: singular simplicial cone");
        bool inside = !is_zero_vec(x);
        for (std::size_t i = 0; i < d && inside; ++i)
            if (lambda[i] < 0 || lambda[i] >= 1) inside = false;
        if (inside) points.push_back(simplicial.span_lattice().lift(x));

        std::size_t j = 0;
        while (j < d) {
            ++x[j];
            if (x[j] <= hi[j]) break;
            x[j] = lo[j];
            ++j;
        }
        if (j == d) break;
    }
    return points;
}

std::vector<Cone> star_subdivide(const std::vector<Cone>& pieces, const Vec& w) {
    std::vector<Cone> out;
    for (const Cone& piece : pieces) {
        if (!piece.contains(w)) {
            out.push_back(piece);
            continue;
        }
        check_internal(piece.is_simplicial(), "star_subdivide: piece not simplicial");
        // coordinates of w in the generator basis: positive entries mark the
        // generators replaced by w
        const std::size_t d = piece.dim();
        QMat gt(d, d);
        std::vector<Vec> hat;
        for (const Vec& g : piece.generators()) hat.push_back(piece.span_lattice().coords(g));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) gt(i, j) = Rat(hat[j][i]);
        Vec what = piece.span_lattice().coords(w);
        std::vector<Rat> rhs, lambda;
        for (std::size_t i = 0; i < d; ++i) rhs.push_back(Rat(what[i]));
        bool solved = solve_q(gt, rhs, lambda);
        check_internal(solved, "star_subdivide: singular piece");
        for (std::size_t i = 0; i < d; ++i) {
            if (lambda[i] <= 0) continue;
            std::vector<Vec> joined;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i) joined.push_back(piece.generators()[j]);
            joined.push_back(w);
            out.push_back(Cone::from_generators(piece.ambient(), joined));
        }
    }
    return out;
}

std::vector<Cone> unimodular_resolve(const Cone& sigma, ResolveStrategy strategy) {
    std::vector<Cone> pieces = triangulate(sigma, strategy);
    while (true) {
        std::sort(pieces.begin(), pieces.end());
        const Cone* worst = nullptr;
        for (const Cone& p : pieces)
            if (!p.is_unimodular()) {
                worst = &p;
                break;
            }
        if (!worst) return pieces;
        std::vector<Vec> candidates = parallelepiped_points(*worst);
        check_internal(!candidates.empty(), "unimodular_resolve: non-unimodular piece with empty parallelepiped");
        const Vec* best = nullptr;
        for (const Vec& cand : candidates) {
            if (!best) {
                best = &cand;
                continue;
            }
            Int nb = norm2(*best), nc = norm2(cand);
            bool better = nc < nb;
            if (nc == nb)
                better = strategy == ResolveStrategy::PullMin ? cand < *best : cand > *best;
            if (better) best = &cand;
        }
        Vec w = primitive_of(*best);
        check_internal(w == *best, "unimodular_resolve: parallelepiped point not primitive");
        pieces = star_subdivide(pieces, w);
    }
}

std::vector<Vec> intersect_cones(const Cone& a, const Cone& b) {
    check_internal(a.ambient() == b.ambient(), "intersect_cones: ambient mismatch");
    const std::size_t n = a.ambient();
    std::vector<Vec> eqs = a.span_equations();
    eqs.insert(eqs.end(), b.span_equations().begin(), b.span_equations().end());
    std::vector<Vec> span = integer_kernel_basis(IntMat::from_rows(eqs, n));
    if (span.empty()) return {};
    SublatticeBasis sb = sublattice_basis(span, n);
    const std::size_t d = sb.rank();

    std::vector<Vec> constraints;
    for (const Vec& f : a.facet_normals()) constraints.push_back(sb.basis.apply(f));
    for (const Vec& f : b.facet_normals()) constraints.push_back(sb.basis.apply(f));

    std::vector<Vec> rays_hat = hcone_rays(constraints, d);
    std::vector<Vec> rays;
    rays.reserve(rays_hat.size());
    for (const Vec& r : rays_hat) rays.push_back(primitive_of(sb.lift(r)));
    std::sort(rays.begin(), rays.end());
    return rays;
}

}  // namespace torloc
