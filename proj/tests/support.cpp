#include "support.hpp"

namespace torloc::testing {

namespace {

Cone cone2(long a1, long a2, long b1, long b2) {
    return Cone::from_generators(2, {vec_of({a1, a2}), vec_of({b1, b2})});
}

FanPtr cube_like_fan(const Vec& v1, const Vec& v3) {
    // rays of the cube fan with v1 = ray through (1,1,1) and v3 = ray through
    // (1,-1,1) replaceable; maximal cones over the six faces, paper order
    Vec v2 = vec_of({1, 1, -1});
    Vec v4 = vec_of({1, -1, -1});
    Vec v5 = vec_of({-1, 1, 1});
    Vec v6 = vec_of({-1, 1, -1});
    Vec v7 = vec_of({-1, -1, 1});
    Vec v8 = vec_of({-1, -1, -1});
    auto cone = [](std::initializer_list<Vec> gens) {
        return Cone::from_generators(3, std::vector<Vec>(gens));
    };
    std::vector<Cone> maximal = {
        cone({v1, v2, v3, v4}), cone({v1, v2, v5, v6}), cone({v1, v3, v5, v7}),
        cone({v2, v4, v6, v8}), cone({v3, v4, v7, v8}), cone({v5, v6, v7, v8}),
    };
    return make_fan(3, std::move(maximal));
}

}  // namespace

FanPtr modz2_fan() {
    std::vector<Cone> maximal = {
        cone2(1, 1, 1, -1),    // sigma_1 = <v1, v2>
        cone2(1, -1, -1, -1),  // sigma_2 = <v2, v3>
        cone2(-1, -1, -1, 1),  // sigma_3 = <v3, v4>
        cone2(1, 1, -1, 1),    // sigma_4 = <v1, v4>
    };
    return make_fan(2, std::move(maximal));
}

FanPtr cube_fan() { return cube_like_fan(vec_of({1, 1, 1}), vec_of({1, -1, 1})); }

FanPtr fulton_fan() { return cube_like_fan(vec_of({1, 2, 3}), vec_of({1, -1, 1})); }

FanPtr threefold_fan() { return cube_like_fan(vec_of({1, 1, 2}), vec_of({1, -1, 2})); }

FanPtr p2_fan() {
    std::vector<Cone> maximal = {cone2(1, 0, 0, 1), cone2(0, 1, -1, -1), cone2(1, 0, -1, -1)};
    return make_fan(2, std::move(maximal));
}

FanPtr square_fan() {
    std::vector<Cone> maximal = {cone2(1, 0, 0, 1), cone2(0, 1, -1, 0), cone2(-1, 0, 0, -1),
                                 cone2(0, -1, 1, 0)};
    return make_fan(2, std::move(maximal));
}

}  // namespace torloc::testing
