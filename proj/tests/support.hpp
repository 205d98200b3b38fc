#pragma once

#include "torloc/io.hpp"
#include "torloc/localization.hpp"

#include <string>

namespace torloc::testing {

inline std::string fixture(const std::string& name) {
    return std::string(TORLOC_FIXTURE_DIR) + "/" + name;
}

inline Vec random_vec(Rng& rng, std::size_t n, long bound) {
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.range(-bound, bound);
    return v;
}

// pointed full-dimensional cone: generators in the open halfspace x_0 >= 1
inline Cone random_pointed_cone(Rng& rng, std::size_t n, std::size_t count, long bound = 3) {
    while (true) {
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < count; ++i) {
            Vec g = random_vec(rng, n, bound);
            g[0] = rng.range(1, bound);
            gens.push_back(std::move(g));
        }
        if (rank_z(IntMat::from_rows(gens, n)) != n) continue;
        Cone c = Cone::from_generators(n, gens);
        if (c.dim() == n) return c;
    }
}

inline LatticePolytope random_polytope(Rng& rng, std::size_t n, std::size_t points, long bound) {
    std::vector<Vec> pts;
    for (std::size_t i = 0; i < points; ++i) pts.push_back(random_vec(rng, n, bound));
    return LatticePolytope::from_points(n, pts);
}

// random complete fan: the normal fan of a random full-dimensional polytope
inline FanPtr random_complete_fan(Rng& rng, std::size_t n, long bound = 3) {
    while (true) {
        LatticePolytope p = random_polytope(rng, n, n + 3, bound);
        if (p.dim() != n) continue;
        return normal_fan({p});
    }
}

// the four paper fans, built from their ray coordinates
FanPtr modz2_fan();
FanPtr cube_fan();
FanPtr fulton_fan();
FanPtr threefold_fan();
FanPtr p2_fan();      // rays (1,0), (0,1), (-1,-1)
FanPtr square_fan();  // complete fan on the rays +-e1, +-e2

}  // namespace torloc::testing
