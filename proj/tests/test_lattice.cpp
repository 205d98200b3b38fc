#include "doctest.h"

#include "support.hpp"
#include "torloc/lattice.hpp"

using namespace torloc;
using torloc::testing::random_vec;

namespace {

IntMat mat(std::size_t r, std::size_t c, std::initializer_list<long> entries) {
    IntMat m(r, c);
    auto it = entries.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
    return m;
}

// x lies in the Z-row-span of rows: solve exactly and check integrality
bool in_z_row_span(const std::vector<Vec>& rows, const Vec& x) {
    if (rows.empty()) return is_zero_vec(x);
    const std::size_t n = x.size();
    QMat a(n, rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) a(i, j) = Rat(rows[j][i]);
    std::vector<Rat> rhs, sol;
    for (std::size_t i = 0; i < n; ++i) rhs.push_back(Rat(x[i]));
    if (!solve_q(a, rhs, sol)) return false;
    for (const Rat& c : sol)
        if (c.get_den() != 1) return false;
    // solve_q zeroes the free variables, so verify the combination
    Vec recon = zero_vec(n);
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) recon[i] += sol[j].get_num() * rows[j][i];
    return recon == x;
}

}  // namespace

TEST_CASE("hnf: identity and diagonal inputs are fixed points") {
    IntMat id = IntMat::identity(2);
    HnfResult r = hnf(id);
    CHECK(r.h == id);
    CHECK(r.u == id);

    IntMat d = mat(2, 2, {2, 0, 0, 2});
    HnfResult rd = hnf(d);
    CHECK(rd.h == d);
}

TEST_CASE("hnf: span preservation and canonical shape") {
    IntMat m = mat(2, 3, {1, 2, 3, 4, 5, 6});
    HnfResult r = hnf(m);
    CHECK(r.h(0, 0) == 1);
    CHECK(r.rank == 2);
    // U unimodular and U m = H
    Int ud = det(r.u);
    CHECK((ud == 1 || ud == -1));
    CHECK(r.u.mul(m) == r.h);
    // mutual membership of rows certifies equal row spans over Z
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(in_z_row_span(r.h.row_list(), m.row(i)));
        CHECK(in_z_row_span(m.row_list(), r.h.row(i)));
    }
    // idempotence
    CHECK(hnf(r.h).h == r.h);
}

TEST_CASE("hnf: random idempotence and unimodularity") {
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t rows = 1 + rng.range(0, 3), cols = 1 + rng.range(0, 3);
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(-6, 6);
        HnfResult r = hnf(m);
        CHECK(r.u.mul(m) == r.h);
        Int ud = det(r.u);
        CHECK((ud == 1 || ud == -1));
        CHECK(hnf(r.h).h == r.h);
    }
}

TEST_CASE("integer_kernel_basis: pinned examples") {
    std::vector<Vec> k1 = integer_kernel_basis(mat(1, 2, {1, 1}));
    REQUIRE(k1.size() == 1);
    CHECK((k1[0] == vec_of({1, -1}) || k1[0] == vec_of({-1, 1})));

    CHECK(integer_kernel_basis(IntMat::identity(3)).empty());

    std::vector<Vec> k2 = integer_kernel_basis(mat(1, 2, {2, 4}));
    REQUIRE(k2.size() == 1);
    CHECK((k2[0] == vec_of({2, -1}) || k2[0] == vec_of({-2, 1})));
}

TEST_CASE("integer_kernel_basis: saturation on random matrices") {
    Rng rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng.range(0, 2), cols = 2 + rng.range(0, 2);
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(-4, 4);
        std::vector<Vec> basis = integer_kernel_basis(m);
        for (const Vec& b : basis) CHECK(is_zero_vec(m.apply(b)));
        // saturation: primitive parts of kernel combinations stay in the span
        for (int s = 0; s < 5 && !basis.empty(); ++s) {
            Vec combo = zero_vec(cols);
            for (const Vec& b : basis) {
                Int c(rng.range(-5, 5));
                combo = vec_add(combo, vec_scale(c, b));
            }
            if (is_zero_vec(combo)) continue;
            Vec reduced = primitive_of(combo);
            CHECK(is_zero_vec(m.apply(reduced)));
            CHECK(in_z_row_span(basis, reduced));
        }
    }
}

TEST_CASE("subgroup_index: pinned examples") {
    SubgroupInfo a = subgroup_index({vec_of({2})}, 1);
    REQUIRE(a.index.has_value());
    CHECK(*a.index == 2);

    SubgroupInfo b = subgroup_index({vec_of({1, 0}), vec_of({0, 1})}, 2);
    REQUIRE(b.index.has_value());
    CHECK(*b.index == 1);

    SubgroupInfo c = subgroup_index({vec_of({2, 0}), vec_of({0, 3})}, 2);
    REQUIRE(c.index.has_value());
    CHECK(*c.index == 6);

    SubgroupInfo inf = subgroup_index({vec_of({1, 1})}, 2);
    CHECK(!inf.index.has_value());
}

TEST_CASE("subgroup_index: brute-force coset counting oracle in rank 2") {
    auto coset_count = [](const std::vector<Vec>& gens, long box) {
        std::vector<Vec> reps;
        for (long x = 0; x < box; ++x)
            for (long y = 0; y < box; ++y) {
                Vec p = vec_of({x, y});
                bool matched = false;
                for (const Vec& r : reps)
                    if (in_z_row_span(gens, vec_sub(p, r))) {
                        matched = true;
                        break;
                    }
                if (!matched) reps.push_back(p);
            }
        return Int(reps.size());
    };
    std::vector<std::vector<Vec>> cases = {
        {vec_of({2, 0}), vec_of({0, 3})},
        {vec_of({1, 2}), vec_of({3, 0})},
        {vec_of({2, 1}), vec_of({1, 2})},
    };
    for (const auto& gens : cases) {
        SubgroupInfo info = subgroup_index(gens, 2);
        REQUIRE(info.index.has_value());
        CHECK(*info.index <= 20);
        // a box of side >= index meets every coset
        CHECK(coset_count(gens, 8) == *info.index);
    }
}

TEST_CASE("primitive_of") {
    CHECK(primitive_of(vec_of({2, 4, 6})) == vec_of({1, 2, 3}));
    CHECK(primitive_of(vec_of({1, -1})) == vec_of({1, -1}));
    CHECK(primitive_of(vec_of({0, -6, 9})) == vec_of({0, -2, 3}));
    CHECK_THROWS_AS(primitive_of(vec_of({0, 0})), ValidationError);
}

TEST_CASE("quotient_lattice: pinned examples") {
    QuotientMap a = quotient_lattice(3, {vec_of({1, 1, 1})});
    CHECK(a.quotient_rank() == 2);
    CHECK(is_zero_vec(a.project(vec_of({1, 1, 1}))));

    // saturation: the sublattice generated by (2,0) saturates to contain (1,0)
    QuotientMap b = quotient_lattice(2, {vec_of({2, 0})});
    CHECK(b.quotient_rank() == 1);
    CHECK(is_zero_vec(b.project(vec_of({1, 0}))));

    QuotientMap c = quotient_lattice(3, {vec_of({1, 1, 2}), vec_of({1, -1, 2})});
    CHECK(c.quotient_rank() == 1);
    std::vector<Vec> sat = saturation_basis({vec_of({1, 1, 2}), vec_of({1, -1, 2})}, 3);
    for (const Vec& s : sat) CHECK(is_zero_vec(c.project(s)));

    CHECK_THROWS_AS(quotient_lattice(2, {vec_of({1, 0}), vec_of({0, 1})}), ValidationError);
}

TEST_CASE("quotient_lattice: projection of the section is the identity") {
    Rng rng(13);
    int checked = 0;
    while (checked < 10) {
        std::size_t n = 2 + rng.range(0, 2);
        std::size_t d = 1 + rng.range(0, n >= 3 ? 1 : 0);
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < d; ++i) gens.push_back(random_vec(rng, n, 4));
        std::vector<Vec> sat = saturation_basis(gens, n);
        if (sat.empty() || sat.size() >= n) continue;
        QuotientMap q = quotient_lattice(n, gens);
        for (int s = 0; s < 10; ++s) {
            Vec y = random_vec(rng, q.quotient_rank(), 10);
            CHECK(q.project(q.lift(y)) == y);
        }
        ++checked;
    }
}

TEST_CASE("rank computations") {
    CHECK(rank_q(QMat::from_int(IntMat::identity(4))) == 4);
    CHECK(rank_q(QMat::from_int(IntMat(3, 3))) == 0);
    CHECK(rank_q(QMat::from_int(mat(2, 2, {1, 2, 2, 4}))) == 1);
    CHECK(rank_z(mat(2, 2, {1, 2, 2, 4})) == 1);
}

TEST_CASE("snf: diagonal with divisibility and transform correctness") {
    Rng rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + rng.range(0, 2), cols = 1 + rng.range(0, 2);
        IntMat m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(-5, 5);
        SnfResult s = snf(m);
        CHECK(s.u.mul(m).mul(s.v) == s.d);
        Int du = det(s.u), dv = det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i + 1 < s.rank; ++i) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        for (std::size_t i = 0; i < s.d.rows(); ++i)
            for (std::size_t j = 0; j < s.d.cols(); ++j)
                if (i != j) CHECK(s.d(i, j) == 0);
    }
}
