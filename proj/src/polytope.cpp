#include "torloc/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace torloc {

namespace {

Vec lift_point(const Vec& p) {
    Vec v;
    v.reserve(p.size() + 1);
    v.push_back(1);
    v.insert(v.end(), p.begin(), p.end());
    return v;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(std::size_t ambient, const std::vector<Vec>& points) {
    require(!points.empty(), "polytope needs at least one point");
    LatticePolytope poly;
    poly.ambient_ = ambient;
    std::vector<Vec> lifted;
    lifted.reserve(points.size());
    for (const Vec& p : points) {
        require(p.size() == ambient, "polytope point has wrong ambient rank");
        lifted.push_back(lift_point(p));
    }
    poly.lifted_ = Cone::from_generators(ambient + 1, lifted);
    for (const Vec& g : poly.lifted_.generators()) {
        check_internal(g[0] == 1, "polytope: lifted generator not at height one");
        poly.vertices_.push_back(Vec(g.begin() + 1, g.end()));
    }
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    return poly;
}

bool LatticePolytope::contains(const Vec& point) const {
    return lifted_.contains(lift_point(point));
}

LatticePolytope LatticePolytope::dilate(const Int& k) const {
    require(k >= 0, "dilate: negative factor");
    if (k == 0) return from_points(ambient_, {zero_vec(ambient_)});
    std::vector<Vec> scaled;
    scaled.reserve(vertices_.size());
    for (const Vec& v : vertices_) scaled.push_back(vec_scale(k, v));
    return from_points(ambient_, scaled);
}

std::string LatticePolytope::to_string() const {
    std::ostringstream os;
    os << "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ", ";
        os << vec_to_string(vertices_[i]);
    }
    os << "}";
    return os.str();
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    check_internal(p.ambient() == q.ambient(), "minkowski_sum: ambient mismatch");
    std::vector<Vec> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const Vec& a : p.vertices())
        for (const Vec& b : q.vertices()) sums.push_back(vec_add(a, b));
    return LatticePolytope::from_points(p.ambient(), sums);
}

std::vector<Vec> lattice_points(const LatticePolytope& p) {
    const std::size_t n = p.ambient();
    if (n == 0) return {Vec{}};
    Vec lo = p.vertices().front(), hi = p.vertices().front();
    for (const Vec& v : p.vertices())
        for (std::size_t j = 0; j < n; ++j) {
            lo[j] = std::min(lo[j], v[j]);
            hi[j] = std::max(hi[j], v[j]);
        }

    // constraints on x from the lifted cone: <(c0, u), (1, x)> >= 0 resp. == 0
    struct Row {
        Int c0;
        Vec u;
        bool equation;
        std::size_t last_nonzero;  // position of the last nonzero coefficient, or n for none
    };
    std::vector<Row> rows;
    auto push_row = [&](const Vec& lifted, bool eq) {
        Row r;
        r.c0 = lifted[0];
        r.u.assign(lifted.begin() + 1, lifted.end());
        r.equation = eq;
        r.last_nonzero = n;
        for (std::size_t j = n; j > 0; --j)
            if (r.u[j - 1] != 0) {
                r.last_nonzero = j - 1;
                break;
            }
        rows.push_back(std::move(r));
    };
    for (const Vec& f : p.lifted_cone().facet_normals()) push_row(f, false);
    for (const Vec& e : p.lifted_cone().span_equations()) push_row(e, true);

    std::vector<Vec> out;
    Vec x = lo;
    // res[r] carries c0 + sum_{j < depth} u_j x_j
    std::function<void(std::size_t, std::vector<Int>&)> walk = [&](std::size_t depth,
                                                                   std::vector<Int>& res) {
        if (depth + 1 == n) {
            Int cur_lo = lo[depth], cur_hi = hi[depth];
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const Row& row = rows[r];
                const Int& a = row.u[depth];
                const Int& rv = res[r];
                if (row.equation) {
                    if (a == 0) {
                        if (rv != 0) return;
                    } else {
                        Int nr = -rv;
                        if (nr % a != 0) return;
                        Int v = nr / a;
                        cur_lo = std::max(cur_lo, v);
                        cur_hi = std::min(cur_hi, v);
                    }
                } else {
                    if (a == 0) {
                        if (rv < 0) return;
                    } else if (a > 0) {
                        Int nr = -rv, b;
                        mpz_cdiv_q(b.get_mpz_t(), nr.get_mpz_t(), a.get_mpz_t());
                        cur_lo = std::max(cur_lo, b);
                    } else {
                        Int nr = -rv, b;
                        mpz_fdiv_q(b.get_mpz_t(), nr.get_mpz_t(), a.get_mpz_t());
                        cur_hi = std::min(cur_hi, b);
                    }
                }
            }
            for (Int v = cur_lo; v <= cur_hi; ++v) {
                Vec point = x;
                point[depth] = v;
                out.push_back(point);
            }
            return;
        }
        for (Int v = lo[depth]; v <= hi[depth]; ++v) {
            x[depth] = v;
            std::vector<Int> next = res;
            bool feasible = true;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                next[r] += rows[r].u[depth] * v;
                // constraints whose later coefficients all vanish are decided now
                if (rows[r].last_nonzero <= depth || rows[r].last_nonzero == n) {
                    if (rows[r].equation ? next[r] != 0 : next[r] < 0) {
                        feasible = false;
                        break;
                    }
                }
            }
            if (feasible) walk(depth + 1, next);
        }
    };
    std::vector<Int> res(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) res[r] = rows[r].c0;
    walk(0, res);
    std::sort(out.begin(), out.end());
    return out;
}

FanPtr normal_fan(const std::vector<LatticePolytope>& polytopes) {
    require(!polytopes.empty(), "normal_fan: no polytopes");
    const std::size_t n = polytopes.front().ambient();
    LatticePolytope sum = polytopes.front();
    for (std::size_t i = 1; i < polytopes.size(); ++i) sum = minkowski_sum(sum, polytopes[i]);
    require(sum.dim() == n, "normal_fan: Minkowski sum is not full-dimensional");

    std::vector<Cone> maximal;
    for (const Vec& v : sum.vertices()) {
        std::vector<Vec> constraints;
        for (const Vec& u : sum.vertices()) {
            if (u == v) continue;
            constraints.push_back(vec_sub(u, v));
        }
        // extreme rays of {w : <u - v, w> >= 0 for all vertices u}
        std::vector<Vec> rays;
        {
            std::set<Vec> seen;
            auto feas = [&](const Vec& r) {
                for (const Vec& c : constraints)
                    if (dot(c, r) < 0) return false;
                return true;
            };
            std::vector<std::size_t> idx(n - 1);
            std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                                    std::size_t start) {
                if (pos == n - 1) {
                    std::vector<Vec> sub;
                    for (std::size_t i : idx) sub.push_back(constraints[i]);
                    std::vector<Vec> kernel = integer_kernel_basis(IntMat::from_rows(sub, n));
                    if (kernel.size() != 1) return;
                    Vec r = primitive_of(kernel[0]);
                    if (feas(r) && seen.insert(r).second) rays.push_back(r);
                    Vec nr = vec_neg(r);
                    if (feas(nr) && seen.insert(nr).second) rays.push_back(nr);
                    return;
                }
                for (std::size_t i = start; i < constraints.size(); ++i) {
                    idx[pos] = i;
                    rec(pos + 1, i + 1);
                }
            };
            rec(0, 0);
        }
        Cone sigma = Cone::from_generators(n, rays);
        check_internal(sigma.dim() == n, "normal_fan: normal cone not full-dimensional");
        maximal.push_back(std::move(sigma));
    }
    FanPtr fan = make_fan(n, std::move(maximal));
    check_internal(fan->is_complete(), "normal_fan: fan not complete");
    return fan;
}

Vec min_vertex(const LatticePolytope& p, const Cone& sigma) {
    Vec w = sigma.interior_point();
    const Vec* best = nullptr;
    Int best_value = 0;
    bool tie = false;
    for (const Vec& v : p.vertices()) {
        Int value = dot(v, w);
        if (!best || value < best_value) {
            best = &v;
            best_value = value;
            tie = false;
        } else if (value == best_value) {
            tie = true;
        }
    }
    require(!tie, "min_vertex: minimizer is not unique on the cone");
    return *best;
}

}  // namespace torloc
