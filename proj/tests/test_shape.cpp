#include <doctest.h>

#include "tabkit/errors.hpp"
#include "common.hpp"
#include "tabkit/shape.hpp"

using namespace tabkit;

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
  for (const auto& p : partitions_in_box(4, 4)) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
  }
}

TEST_CASE("trailing zeros ignored for partitions but not for levels") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK(GenPartition{2, 1, 0} != GenPartition{2, 1});
  CHECK_THROWS_AS(Partition({1, 2}), Error);
}

TEST_CASE("signed column lengths") {
  GenPartition l{4, 3, 2, -2, -3};
  CHECK(column_length(l, 1) == 3);
  CHECK(column_length(l, -1) == 2);
  CHECK(column_length(l, -2) == 2);
  CHECK(column_length(l, -3) == 1);
  CHECK(column_length(l, 4) == 1);
}

TEST_CASE("star and plus/minus") {
  CHECK(star(GenPartition{3, 2, 0, -1, -2}) == GenPartition{2, 1, 0, -2, -3});
  CHECK(star(GenPartition::zero(3)) == GenPartition::zero(3));
  CHECK(star(GenPartition{2, -1}) == GenPartition{1, -2});
  auto [p, m] = plus_minus(GenPartition{3, 2, 0, -1, -2});
  CHECK(p == Partition{3, 2});
  CHECK(m == Partition{2, 1});
  auto [p0, m0] = plus_minus(GenPartition::zero(4));
  CHECK(p0.empty());
  CHECK(m0.empty());
  for (const auto& l : gen_partitions(3, -3, 3)) {
    auto [lp, lm] = plus_minus(l);
    CHECK(l.abs_size() == lp.size() + lm.size());
    CHECK(l.degree() == lp.size() - lm.size());
    CHECK(star(star(l)) == l);
    auto [sp, sm] = plus_minus(star(l));
    CHECK(sp == lm);
    CHECK(sm == lp);
  }
}

TEST_CASE("add_rect") {
  CHECK(add_rect(GenPartition{2, -1}, 3) == GenPartition{5, 2});
  CHECK(add_rect(GenPartition{2, -1}, 0) == GenPartition{2, -1});
  CHECK(add_rect(GenPartition{3, 2, 0, -2}, 3) == GenPartition{6, 5, 3, 1});
}

TEST_CASE("rectangular complement") {
  CHECK(delta_shape(Partition{4, 3, 1, 0}, 4, 5) == Partition{5, 4, 2, 1});
  CHECK(delta_shape(Partition{3, 1}, 2, 3) == Partition{2, 0});
  CHECK_THROWS_AS(delta_shape(Partition{3}, 2, 2), Error);
  for (const auto& p : partitions_in_box(3, 3)) {
    auto d = delta_shape(p, 3, 4);
    CHECK(delta_shape(d, 3, 4) == p);
    CHECK(p.size() + d.size() == 12);
    CHECK(contains(Partition{4, 4, 4}, d));
  }
}

TEST_CASE("strips") {
  CHECK(is_horizontal_strip(Partition{3, 1}, Partition{1}));
  CHECK_FALSE(is_horizontal_strip(Partition{2, 2}, Partition{1}));
  CHECK(is_vertical_strip(Partition{2, 2}, Partition{1, 1}));
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_in_box(2, 2).size() == 6);
  CHECK(gen_partitions(2, -1, 1).size() == 6);
}
