#include "doctest.h"

#include <set>

#include "support.hpp"

using namespace torloc;
using namespace torloc::testing;

namespace {

Cone cone_of(std::size_t n, std::initializer_list<Vec> gens) {
    return Cone::from_generators(n, std::vector<Vec>(gens));
}

std::set<Vec> gen_set(const Cone& c) {
    return std::set<Vec>(c.generators().begin(), c.generators().end());
}

// membership via Caratheodory certificates, independent of facet data
bool in_hull_caratheodory(const std::vector<Vec>& verts, const Vec& p) {
    const std::size_t n = p.size();
    const std::size_t k = std::min(verts.size(), n + 1);
    std::vector<std::size_t> idx(k);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            QMat m(n + 1, k);
            std::vector<Rat> rhs;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < k; ++j) m(i, j) = Rat(verts[idx[j]][i]);
                rhs.push_back(Rat(p[i]));
            }
            for (std::size_t j = 0; j < k; ++j) m(n, j) = 1;
            rhs.push_back(Rat(1));
            std::vector<Rat> sol;
            if (!solve_q(m, rhs, sol)) return false;
            for (const Rat& c : sol)
                if (c < 0) return false;
            return true;
        }
        for (std::size_t i = start; i + (k - pos - 1) < verts.size(); ++i) {
            idx[pos] = i;
            if (rec(pos + 1, i + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

TEST_CASE("dual_cone: mirror-surface pieces (with the corrected sign)") {
    // dual of <v1, v> is <b, a-b>
    Cone piece1 = cone_of(2, {vec_of({1, 1}), vec_of({1, 0})});
    CHECK(gen_set(dual_cone(piece1)) == std::set<Vec>{vec_of({0, 1}), vec_of({1, -1})});
    // dual of <v, v2> is <-b, a+b>; the prose in the source example prints b,
    // but only -b pairs nonnegatively with v2 = (1,-1), and the corrected
    // generator is what makes e(sigma_1) come out right
    Cone piece2 = cone_of(2, {vec_of({1, 0}), vec_of({1, -1})});
    CHECK(gen_set(dual_cone(piece2)) == std::set<Vec>{vec_of({0, -1}), vec_of({1, 1})});
}

TEST_CASE("dual_cone: standard cone and a derived example") {
    Cone std3 = cone_of(3, {vec_of({1, 0, 0}), vec_of({0, 1, 0}), vec_of({0, 0, 1})});
    CHECK(gen_set(dual_cone(std3)) == gen_set(std3));

    Cone c = cone_of(2, {vec_of({1, 0}), vec_of({1, 2})});
    Cone d = dual_cone(c);
    CHECK(gen_set(d) == std::set<Vec>{vec_of({0, 1}), vec_of({2, -1})});
    // every box lattice point pairing >= 0 with the cone lies in the dual
    for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y) {
            Vec u = vec_of({x, y});
            bool in_dual_def = dot(u, vec_of({1, 0})) >= 0 && dot(u, vec_of({1, 2})) >= 0;
            CHECK(d.contains(u) == in_dual_def);
        }

    CHECK_THROWS_AS(dual_cone(cone_of(2, {vec_of({1, 0})})), ValidationError);
}

TEST_CASE("dual_cone is an involution on random full-dimensional cones") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.range(0, 1);
        Cone c = random_pointed_cone(rng, n, n + 1 + rng.range(0, 1));
        CHECK(dual_cone(dual_cone(c)) == c);
    }
}

TEST_CASE("is_unimodular") {
    CHECK(cone_of(2, {vec_of({1, 0}), vec_of({0, 1})}).is_unimodular());
    CHECK(!cone_of(2, {vec_of({1, 1}), vec_of({1, -1})}).is_unimodular());
    CHECK(cone_of(2, {vec_of({1, 0}), vec_of({1, 1})}).is_unimodular());
    // lower-dimensional cones measure against the span lattice
    CHECK(cone_of(3, {vec_of({1, 1, 0})}).is_unimodular());
    CHECK(cone_of(3, {vec_of({1, 1, 0}), vec_of({1, -1, 0})}).dim() == 2);
    CHECK(!cone_of(3, {vec_of({1, 1, 0}), vec_of({1, -1, 0})}).is_unimodular());
}

TEST_CASE("cone validation rejects non-pointed input") {
    CHECK_THROWS_AS(cone_of(2, {vec_of({1, 0}), vec_of({-1, 0})}), ValidationError);
    CHECK_THROWS_AS(
        cone_of(2, {vec_of({1, 0}), vec_of({0, 1}), vec_of({-1, -1})}), ValidationError);
}

TEST_CASE("cone drops redundant generators") {
    Cone c = cone_of(2, {vec_of({1, 0}), vec_of({1, 1}), vec_of({0, 1}), vec_of({2, 4})});
    CHECK(gen_set(c) == std::set<Vec>{vec_of({1, 0}), vec_of({0, 1})});
}

TEST_CASE("unimodular_resolve: the mirror-surface subdivision") {
    Cone sigma1 = cone_of(2, {vec_of({1, 1}), vec_of({1, -1})});
    std::vector<Cone> pieces = unimodular_resolve(sigma1);
    REQUIRE(pieces.size() == 2);
    std::set<std::set<Vec>> got{gen_set(pieces[0]), gen_set(pieces[1])};
    std::set<std::set<Vec>> expected{{vec_of({1, 1}), vec_of({1, 0})},
                                     {vec_of({1, 0}), vec_of({1, -1})}};
    CHECK(got == expected);
}

TEST_CASE("unimodular_resolve: fixed points and chains") {
    Cone uni = cone_of(2, {vec_of({1, 0}), vec_of({0, 1})});
    std::vector<Cone> same = unimodular_resolve(uni);
    REQUIRE(same.size() == 1);
    CHECK(same[0] == uni);

    Cone c = cone_of(2, {vec_of({1, 0}), vec_of({1, 3})});
    std::vector<Cone> pieces = unimodular_resolve(c);
    REQUIRE(pieces.size() == 3);
    std::set<std::set<Vec>> got;
    for (const Cone& p : pieces) {
        CHECK(p.is_unimodular());
        got.insert(gen_set(p));
    }
    std::set<std::set<Vec>> expected{{vec_of({1, 0}), vec_of({1, 1})},
                                     {vec_of({1, 1}), vec_of({1, 2})},
                                     {vec_of({1, 2}), vec_of({1, 3})}};
    CHECK(got == expected);
}

TEST_CASE("unimodular_resolve tiles the cone") {
    Rng rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + rng.range(0, 1);
        Cone c = random_pointed_cone(rng, n, n + rng.range(0, 1));
        ResolveStrategy strategy =
            trial % 2 == 0 ? ResolveStrategy::PullMin : ResolveStrategy::PullMax;
        std::vector<Cone> pieces = unimodular_resolve(c, strategy);
        for (const Cone& p : pieces) {
            CHECK(p.is_unimodular());
            CHECK(p.dim() == n);
            for (const Vec& g : p.generators()) CHECK(c.contains(g));
        }
        for (int s = 0; s < 100; ++s) {
            // random rational point of sigma, scaled integral
            Vec p = zero_vec(n);
            bool interior = true;
            for (const Vec& g : c.generators()) {
                long w = rng.range(0, 5);
                if (w == 0) interior = false;
                p = vec_add(p, vec_scale(Int(w), g));
            }
            if (is_zero_vec(p)) continue;
            int closures = 0, interiors = 0;
            for (const Cone& piece : pieces) {
                if (piece.contains(p)) ++closures;
                if (piece.contains_in_relative_interior(p)) ++interiors;
            }
            CHECK(closures >= 1);
            CHECK(interiors <= 1);
            (void)interior;
        }
    }
}

TEST_CASE("fan validation and completeness") {
    CHECK(modz2_fan()->is_complete());
    CHECK(cube_fan()->is_complete());
    CHECK(fulton_fan()->is_complete());
    CHECK(threefold_fan()->is_complete());
    CHECK(p2_fan()->is_complete());
    CHECK(square_fan()->is_complete());

    // single orthant: a fan, but not complete
    FanPtr orthant = make_fan(2, {cone_of(2, {vec_of({1, 0}), vec_of({0, 1})})});
    CHECK(!orthant->is_complete());

    // overlapping cones are not a fan
    CHECK_THROWS_AS(make_fan(2, {cone_of(2, {vec_of({1, 0}), vec_of({1, 2})}),
                                 cone_of(2, {vec_of({1, 1}), vec_of({0, 1})})}),
                    NotAFanError);
    // a cone and its face both listed as maximal
    CHECK_THROWS_AS(make_fan(2, {cone_of(2, {vec_of({1, 0}), vec_of({0, 1})}),
                                 cone_of(2, {vec_of({1, 0})})}),
                    NotAFanError);
}

TEST_CASE("cube fan face closure") {
    FanPtr fan = cube_fan();
    CHECK(fan->cones().size() == 27);  // 1 + 8 + 12 + 6
    CHECK(fan->cones_of_dim(0).size() == 1);
    CHECK(fan->cones_of_dim(1).size() == 8);
    CHECK(fan->cones_of_dim(2).size() == 12);
    CHECK(fan->cones_of_dim(3).size() == 6);
    // every ridge bounds exactly two maximal cones
    for (std::size_t ci : fan->cones_of_dim(2))
        CHECK(fan->maximal_containing(ci).size() == 2);
}

TEST_CASE("star_quotient_fan") {
    FanPtr fan = cube_fan();

    // tau = 0: the quotient is the fan itself
    Cone zero = Cone::from_generators(3, {});
    StarFan s0 = star_quotient_fan(*fan, zero);
    CHECK(s0.fan->ambient() == 3);
    CHECK(s0.fan->maximal_cones().size() == 6);
    CHECK(s0.fan->is_complete());

    // tau maximal: rank-0 fan with the single zero cone
    StarFan sm = star_quotient_fan(*fan, fan->maximal_cones()[0]);
    CHECK(sm.fan->ambient() == 0);
    CHECK(sm.fan->maximal_cones().size() == 1);
    CHECK(sm.fan->is_complete());

    // tau = ray through (1,1,1): three maximal cones, complete in rank 2
    Cone ray = cone_of(3, {vec_of({1, 1, 1})});
    StarFan sr = star_quotient_fan(*fan, ray);
    CHECK(sr.fan->ambient() == 2);
    CHECK(sr.fan->maximal_cones().size() == 3);
    CHECK(sr.fan->is_complete());

    Cone outside = cone_of(3, {vec_of({5, 1, 1})});
    CHECK_THROWS_AS(star_quotient_fan(*fan, outside), ValidationError);
}

TEST_CASE("normal_fan pinned examples") {
    LatticePolytope square = LatticePolytope::from_points(
        2, {vec_of({0, 0}), vec_of({1, 0}), vec_of({0, 1}), vec_of({1, 1})});
    FanPtr f1 = normal_fan({square});
    CHECK(f1->maximal_cones().size() == 4);
    CHECK(f1->is_complete());
    for (const Cone& c : f1->maximal_cones()) {
        bool matched = false;
        for (const Cone& d : square_fan()->maximal_cones())
            if (c == d) matched = true;
        CHECK(matched);
    }

    LatticePolytope simplex =
        LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({1, 0}), vec_of({0, 1})});
    FanPtr f2 = normal_fan({simplex});
    CHECK(f2->maximal_cones().size() == 3);
    CHECK(f2->is_complete());
    // each vertex is minimal exactly on its cone, checked by sampling
    Rng rng(33);
    for (const Cone& sigma : f2->maximal_cones()) {
        Vec v = min_vertex(simplex, sigma);
        Vec w = sigma.interior_point();
        for (const Vec& u : simplex.vertices())
            if (u != v) CHECK(dot(u, w) > dot(v, w));
    }

    LatticePolytope seg1 = LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({1, 0})});
    LatticePolytope seg2 = LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({0, 1})});
    FanPtr f3 = normal_fan({seg1, seg2});
    CHECK(f3->maximal_cones().size() == 4);
    for (const Cone& c : f3->maximal_cones()) {
        bool found = false;
        for (const Cone& d : f1->maximal_cones())
            if (c == d) found = true;
        CHECK(found);
    }

    CHECK_THROWS_AS(normal_fan({seg1}), ValidationError);
}

TEST_CASE("normal fan maximal cones match sum vertices") {
    Rng rng(34);
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t n = 2 + rng.range(0, 1);
        LatticePolytope p = random_polytope(rng, n, n + 3, 3);
        if (p.dim() != n) continue;
        LatticePolytope q = random_polytope(rng, n, n + 2, 3);
        LatticePolytope sum = minkowski_sum(p, q);
        if (sum.dim() != n) continue;
        FanPtr fan = normal_fan({p, q});
        CHECK(fan->maximal_cones().size() == sum.vertices().size());
    }
}

TEST_CASE("min_vertex pinned examples") {
    LatticePolytope seg = LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({1, 0})});
    Cone pos = cone_of(2, {vec_of({1, 0}), vec_of({0, 1})});
    CHECK(min_vertex(seg, pos) == vec_of({0, 0}));

    Cone neg = cone_of(2, {vec_of({-1, 0}), vec_of({-1, 1})});
    CHECK(min_vertex(seg, neg) == vec_of({1, 0}));

    LatticePolytope square = LatticePolytope::from_points(
        2, {vec_of({0, 0}), vec_of({1, 0}), vec_of({0, 1}), vec_of({1, 1})});
    Cone nn = cone_of(2, {vec_of({-1, 0}), vec_of({0, -1})});
    CHECK(min_vertex(square, nn) == vec_of({1, 1}));

    // tie along an edge
    CHECK_THROWS_AS(min_vertex(square, cone_of(2, {vec_of({0, 1})})), ValidationError);
}

TEST_CASE("minkowski_sum and lattice_points pinned examples") {
    LatticePolytope square = LatticePolytope::from_points(
        2, {vec_of({0, 0}), vec_of({1, 0}), vec_of({0, 1}), vec_of({1, 1})});
    CHECK(lattice_points(square).size() == 4);

    LatticePolytope seg1 = LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({1, 0})});
    LatticePolytope seg2 = LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({0, 1})});
    LatticePolytope sum = minkowski_sum(seg1, seg2);
    CHECK(sum.vertices() == square.vertices());

    LatticePolytope simplex =
        LatticePolytope::from_points(2, {vec_of({0, 0}), vec_of({1, 0}), vec_of({0, 1})});
    CHECK(lattice_points(simplex.dilate(2)).size() == 6);
}

TEST_CASE("lattice_points agrees with Caratheodory membership") {
    Rng rng(35);
    int tested = 0;
    while (tested < 50) {
        std::size_t n = 2 + rng.range(0, 1);
        LatticePolytope p = random_polytope(rng, n, 3 + rng.range(0, 3), 4);
        ++tested;
        std::vector<Vec> pts = lattice_points(p);
        std::set<Vec> inside(pts.begin(), pts.end());
        // sweep the bounding box and compare membership verdicts
        Vec lo = p.vertices().front(), hi = p.vertices().front();
        for (const Vec& v : p.vertices())
            for (std::size_t j = 0; j < n; ++j) {
                lo[j] = std::min(lo[j], v[j]);
                hi[j] = std::max(hi[j], v[j]);
            }
        Vec x = lo;
        while (true) {
            bool expect = in_hull_caratheodory(p.vertices(), x);
            CHECK(expect == (inside.count(x) > 0));
            std::size_t j = 0;
            while (j < n) {
                ++x[j];
                if (x[j] <= hi[j]) break;
                x[j] = lo[j];
                ++j;
            }
            if (j == n) break;
        }
    }
}

TEST_CASE("lattice points of lower-dimensional polytopes") {
    LatticePolytope seg = LatticePolytope::from_points(3, {vec_of({0, 0, 0}), vec_of({0, 3, 0})});
    CHECK(lattice_points(seg).size() == 4);
    LatticePolytope pt = LatticePolytope::from_points(2, {vec_of({2, -1})});
    std::vector<Vec> pts = lattice_points(pt);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == vec_of({2, -1}));
}
