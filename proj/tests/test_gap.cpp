#include "gapenergy/gap.hpp"

#include "gapenergy/rng.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace gapenergy;

TEST_SUITE("gap") {

TEST_CASE("enumerate in lexicographic tuple order") {
    Gap g(101, 0, {1, 10}, {3, 3}, GapShape::OneSided);
    // direct evaluation: tuples (1,1),(1,2),(1,3),(2,1),...
    CHECK(g.enumerate() == std::vector<int64_t>{11, 21, 31, 12, 22, 32, 13, 23, 33});
    CHECK(g.nominal_size() == 9);
}

TEST_CASE("symmetric enumeration: 9 distinct values, set symmetry") {
    Gap g(13, 0, {1, 5}, {1, 1}, GapShape::Symmetric);
    auto values = g.enumerate();
    CHECK(values.size() == 9);
    std::set<int64_t> set(values.begin(), values.end());
    CHECK(set.size() == 9);
    for (int64_t v : set) CHECK(set.count((13 - v) % 13) == 1);  // A = -A
    CHECK(set.count(0) == 1);
}

TEST_CASE("single tuple when d = 1, H = 1") {
    Gap g(13, 7, {3}, {1}, GapShape::OneSided);
    CHECK(g.enumerate() == std::vector<int64_t>{10});  // a0 + a1
}

TEST_CASE("is_proper examples") {
    CHECK(Gap(101, 0, {1, 10}, {3, 3}, GapShape::OneSided).is_proper());
    // x1 + 2 x2 with x1 in [1,4], x2 in [1,2]: 6 distinct values among 8 tuples
    Gap collide(101, 0, {1, 2}, {4, 2}, GapShape::OneSided);
    CHECK(collide.element_set().size() == 6);
    CHECK(collide.nominal_size() == 8);
    CHECK_FALSE(collide.is_proper());
    // rank 1 with H < p is always proper
    CHECK(Gap(101, 5, {37}, {100}, GapShape::OneSided).is_proper());
}

TEST_CASE("difference_progression shapes") {
    Gap g(101, 3, {1, 10}, {3, 3}, GapShape::OneSided);
    Gap diff = g.difference_progression();
    CHECK(diff.shape == GapShape::Symmetric);
    CHECK(diff.a0 == 0);
    CHECK(diff.bounds == std::vector<int64_t>{2, 2});
    CHECK(diff.is_proper());  // this instance has a proper difference

    Gap thin(101, 0, {1, 10}, {1, 4}, GapShape::OneSided);
    Gap dropped = thin.difference_progression();
    CHECK(dropped.rank() == 1);
    CHECK(dropped.bounds == std::vector<int64_t>{3});
    CHECK(dropped.coeffs == std::vector<int64_t>{10});

    Gap point(101, 0, {1, 10}, {1, 1}, GapShape::OneSided);
    CHECK_THROWS_AS(point.difference_progression(), std::invalid_argument);
    CHECK_THROWS_AS(Gap(13, 0, {1}, {2}, GapShape::Symmetric).difference_progression(), std::invalid_argument);
}

TEST_CASE("difference contains all pairwise differences") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        int64_t p = 211;
        int d = 1 + static_cast<int>(rng.below(2));
        std::vector<int64_t> coeffs(d), bounds(d);
        for (int i = 0; i < d; ++i) {
            coeffs[i] = rng.range(1, p - 1);
            bounds[i] = rng.range(2, 4);
        }
        Gap g(p, rng.range(0, p - 1), coeffs, bounds, GapShape::OneSided);
        auto elements = g.enumerate();
        auto diff_set = g.difference_progression().element_set();
        for (int64_t u : elements)
            for (int64_t v : elements) {
                int64_t w = ((u - v) % p + p) % p;
                CHECK(std::binary_search(diff_set.begin(), diff_set.end(), w));
            }
    }
}

TEST_CASE("element count vs nominal size") {
    Rng rng(33);
    for (int trial = 0; trial < 50; ++trial) {
        int64_t p = 503;
        int d = 1 + static_cast<int>(rng.below(2));
        std::vector<int64_t> coeffs(d), bounds(d);
        for (int i = 0; i < d; ++i) {
            coeffs[i] = rng.range(1, p - 1);
            bounds[i] = rng.range(1, 6);
        }
        GapShape shape = rng.below(2) ? GapShape::OneSided : GapShape::Symmetric;
        Gap g(p, shape == GapShape::OneSided ? rng.range(0, p - 1) : 0, coeffs, bounds, shape);
        const auto set = g.element_set();
        CHECK(set.size() <= g.nominal_size());
        CHECK((set.size() == g.nominal_size()) == g.is_proper());
    }
}

TEST_CASE("random_proper_gap behaviour") {
    Gap r1 = random_proper_gap(101, 1, 10, 42);
    CHECK(r1.rank() == 1);
    CHECK(r1.element_set().size() >= 10);
    CHECK(r1.is_proper());

    Gap r2 = random_proper_gap(10007, 2, 100, 43);
    CHECK(r2.rank() == 2);
    CHECK(r2.is_proper());
    CHECK(r2.nominal_size() >= 100);

    Gap sym = random_proper_gap(10007, 2, 121, 44, GapShape::Symmetric);
    CHECK(sym.shape == GapShape::Symmetric);
    CHECK(sym.is_proper());

    // deterministic for a fixed seed
    Gap again = random_proper_gap(10007, 2, 100, 43);
    CHECK(again.coeffs == r2.coeffs);
    CHECK(again.bounds == r2.bounds);
    CHECK(again.a0 == r2.a0);

    // size_target = p forces nominal > p for d = 2, so properness is impossible
    CHECK_THROWS_AS(random_proper_gap(101, 2, 101, 45), std::runtime_error);
}

TEST_CASE("constructor validation") {
    CHECK_THROWS_AS(Gap(100, 0, {1}, {1}, GapShape::OneSided), std::invalid_argument);  // composite
    CHECK_THROWS_AS(Gap(13, 0, {0}, {1}, GapShape::OneSided), std::invalid_argument);   // zero coeff
    CHECK_THROWS_AS(Gap(13, 0, {1}, {0}, GapShape::OneSided), std::invalid_argument);   // zero bound
    CHECK_THROWS_AS(Gap(13, 0, {1, 2}, {1}, GapShape::OneSided), std::invalid_argument);
    CHECK_THROWS_AS(Gap(13, 5, {1}, {2}, GapShape::Symmetric), std::invalid_argument);  // a0 != 0
}

}  // TEST_SUITE
