#include <doctest.h>

#include "support.hpp"

using namespace ndlrs;

TEST_CASE("partial order is componentwise") {
    Exponent a{1, 2}, b{2, 2}, c{0, 3};
    CHECK(a.leq(b));
    CHECK_FALSE(b.leq(a));
    CHECK_FALSE(a.leq(c));  // incomparable
    CHECK_FALSE(c.leq(a));
    CHECK(a.leq(a));
}

TEST_CASE("canonical order is lexicographic, axis 1 most significant") {
    CHECK(Exponent{0, 5} < Exponent{1, 0});
    CHECK(Exponent{1, 0} < Exponent{1, 1});
    std::vector<Exponent> pts = box_points(Exponent{0, 0}, Exponent{1, 1});
    CHECK(pts == std::vector<Exponent>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("box iteration handles empty and degenerate boxes") {
    CHECK(box_points(Exponent{1}, Exponent{0}).empty());
    CHECK(box_points(Exponent{2, 3}, Exponent{2, 3}).size() == 1);
    CHECK(box_points(Exponent{-1, -1, -1}, Exponent{0, 0, 0}).size() == 8);
}

TEST_CASE("region membership matches the interval definitions") {
    Region box = Region::box(Exponent{-2, 0}, Exponent{1, 3});
    CHECK(box.contains(Exponent{0, 2}));
    CHECK_FALSE(box.contains(Exponent{-3, 2}));
    CHECK_FALSE(box.contains(Exponent{0, 4}));

    Region low = Region::lower_set(Exponent{1, 1});
    CHECK(low.contains(Exponent{-100, 1}));
    CHECK_FALSE(low.contains(Exponent{2, 0}));
    CHECK_FALSE(low.is_finite());
    CHECK(box.is_finite());
}

TEST_CASE("box nonempty iff lo <= hi") {
    CHECK_FALSE(Region::box(Exponent{0, 0}, Exponent{1, 1}).is_empty());
    CHECK(Region::box(Exponent{0, 2}, Exponent{1, 1}).is_empty());
}

TEST_CASE("region intersection is per-axis") {
    Region a = Region::box(Exponent{-3, -3}, Exponent{2, 2});
    Region b = Region::lower_set(Exponent{0, 5});
    Region c = a.intersect(b);
    CHECK(c.contains(Exponent{0, 2}));
    CHECK_FALSE(c.contains(Exponent{1, 0}));
    CHECK(c.finite_lo() == Exponent{-3, -3});
    CHECK(c.hi() == Exponent{0, 2});
}
