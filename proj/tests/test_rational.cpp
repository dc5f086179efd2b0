#include <algorithm>

#include "common.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/rational.hpp"

using namespace tabkit;
using namespace tabkit::testing;

namespace {
RationalTableau rt(GenPartition sh, std::vector<std::vector<int>> rows) { return {std::move(sh), std::move(rows)}; }

std::vector<RationalTableau> sorted(std::vector<RationalTableau> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.rows < b.rows; });
  return v;
}
}  // namespace

TEST_CASE("validation of rational tableaux") {
  CHECK(validate_rational(rt({3, 2, 0, -1, -2}, {{2, 3, 5}, {4, 4}, {}, {-5}, {-3, -3}})));
  CHECK(validate_rational(rt({1, -1}, {{1}, {-2}})));
  CHECK_FALSE(validate_rational(rt({1, -1}, {{1}, {-1}})));
  CHECK_FALSE(validate_rational(rt({2, 0}, {{2, 1}, {}})));
  CHECK_FALSE(validate_rational(rt({0, -2}, {{}, {-1, -2}})));
  CHECK_FALSE(validate_rational(rt({1, 1}, {{2}, {2}})));
  CHECK_THROWS_AS(validate_rational(rt({1, 1}, {{2}, {}})), Error);
  // partition shapes: same as ordinary semistandardness
  for (const auto& lam : box(2, 2)) {
    auto ord = enumerate_sst({lam, {}}, interval(2));
    auto rat = enumerate_rational(GenPartition::pad(lam, 2));
    REQUIRE(ord.size() == rat.size());
    for (std::size_t i = 0; i < ord.size(); ++i) CHECK(to_ordinary(rat[i]) == ord[i]);
  }
}

TEST_CASE("sigma shifts the -1st column across the line") {
  auto t = rt({3, 2, 0, -1, -2}, {{2, 3, 5}, {4, 4}, {}, {-5}, {-4, -2}});
  REQUIRE(validate_rational(t));
  auto s = sigma(t);
  CHECK(s.shape == GenPartition{4, 3, 1, 0, -1});
  CHECK(s.rows == std::vector<std::vector<int>>{{1, 2, 3, 5}, {3, 4, 4}, {4}, {}, {-4}});
  CHECK(validate_rational(s));
  CHECK(sigma_inv(s) == t);
  auto full = sigma(rt({0, 0}, {{}, {}}));
  CHECK(full.rows == std::vector<std::vector<int>>{{1}, {2}});
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (const auto& x : enumerate_rational(lam)) {
      auto y = sigma(x);
      CHECK(validate_rational(y));
      CHECK(sigma_inv(y) == x);
      auto c = x.content(), d = y.content();
      CHECK(d[0] == c[0] + 1);
      CHECK(d[1] == c[1] + 1);
    }
  auto lam = GenPartition{1, -1};
  CHECK(enumerate_rational(lam).size() == enumerate_rational(add_rect(lam, 1)).size());
}

TEST_CASE("rectangular complement") {
  auto i4 = interval(4);
  auto t = tab(i4, {{"1", "2", "2", "3"}, {"3", "4", "4"}, {"4"}});
  auto neg = sigma_pow(to_rational(t, 4), -5);
  CHECK(neg.rows == std::vector<std::vector<int>>{{-4}, {-4, -3}, {-3, -3, -2, -2}, {-2, -1, -1, -1, -1}});
  auto d = delta(t, 4, 5);
  CHECK(labels_of(d) == "1 1 1 1 2/2 2 3 3/3 4/4");
  CHECK(delta(d, 4, 5) == t);
  CHECK(labels_of(delta(Tableau(interval(2)), 2, 2)) == "1 1/2 2");
  CHECK_THROWS_AS(delta(t, 4, 3), Error);
  for (const auto& x : enumerate_sst({Partition{2, 1}, {}}, interval(2))) CHECK(delta(delta(x, 2, 2), 2, 2) == x);
  for (const auto& lam : box(3, 3))
    for (const auto& x : enumerate_sst({lam, {}}, interval(3)))
      for (int k = lam[0]; k <= lam[0] + 1; ++k) {
        auto y = delta(x, 3, k);
        CHECK(y.outer().size() + lam.size() == 3 * k);
        CHECK(delta(y, 3, k) == x);
      }
}

TEST_CASE("transposed complements of the A/B product example") {
  auto i4 = interval(4);
  auto s1 = tab(i4, {{"1", "2"}});
  auto s2 = tab(i4, {{"1", "1"}, {"2"}});
  auto u1 = delta_swapped(s1, 4, 2);
  auto u2 = delta_swapped(s2, 4, 2);
  CHECK(u1.alphabet()->parity(0) == 1);
  CHECK(u1.rows() == std::vector<std::vector<int>>{{0, 2, 3}, {1, 2, 3}});
  CHECK(u2.rows() == std::vector<std::vector<int>>{{1, 2, 3}, {2, 3}});
  CHECK(labels_of(row_insert_tableau(s2, s1).result) == "1 1 1/2 2");
}

TEST_CASE("complement exchanges row and column insertion") {
  auto i2 = interval(2);
  int n = 0;
  for (const auto& mu : box(2, 2))
    for (const auto& nu : box(2, 2))
      for (const auto& t1 : enumerate_sst({mu, {}}, i2))
        for (const auto& t2 : enumerate_sst({nu, {}}, i2))
          for (int p = std::max(mu[0], 0); p <= 3; ++p)
            for (int q = std::max(nu[0], 0); q <= 3; ++q) {
              CHECK(check_stroomer(t1, t2, 2, p, q));
              ++n;
            }
  CHECK(n > 500);
  auto i3 = interval(3);
  for (const auto& t1 : enumerate_sst({Partition{2, 1}, {}}, i3))
    for (const auto& t2 : enumerate_sst({Partition{1, 1}, {}}, i3)) CHECK(check_stroomer(t1, t2, 3, 2, 1));
}

TEST_CASE("direct rational enumeration matches the shifted ordinary one") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& lam : gen_partitions(n, -2, 2)) {
      int d = min_shift(lam);
      auto shifted = add_rect(lam, d);
      std::vector<RationalTableau> via;
      for (const auto& t : enumerate_sst({shifted.to_partition(), {}}, interval(n)))
        via.push_back(sigma_pow(to_rational(t, n), -d));
      auto direct = enumerate_rational(lam);
      CHECK(direct == enumerate_rational_serial(lam));
      CHECK(sorted(direct) == sorted(via));
      for (const auto& x : direct) CHECK(validate_rational(x));
    }
}

TEST_CASE("rational Schur polynomials") {
  CHECK(rational_schur(GenPartition::zero(3)) == LaurentPoly::constant(3, 1));
  auto x1x2 = LaurentPoly::monomial({1, 1});
  CHECK(x1x2 * rational_schur({1, 0}) == rational_schur({2, 1}));
  auto adj = rational_schur({1, -1});
  CHECK(adj.size() == 3);
  CHECK(adj.coeff({1, -1}) == 1);
  CHECK(adj.coeff({0, 0}) == 1);
  CHECK(adj.coeff({-1, 1}) == 1);
  for (const auto& lam : gen_partitions(2, -2, 1))
    CHECK(rational_schur(lam).shifted({1, 1}) == rational_schur(add_rect(lam, 1)));
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka({2, 1, 0}, {1, 1, 1}) == 2);
  for (const auto& lam : gen_partitions(2, -2, 2)) {
    CHECK(kostka(lam, lam.parts()) == 1);
    for (const auto& mu : gen_partitions(2, -2, 2)) {
      std::vector<int> m = mu.parts(), m1 = add_rect(mu, 1).parts();
      CHECK(kostka(lam, m) == kostka(add_rect(lam, 1), m1));
    }
  }
  CHECK_THROWS_AS(kostka({1, 0}, {1}), Error);
}

TEST_CASE("rational JSON and ASCII") {
  auto t = rt({3, 2, 0, -1, -2}, {{2, 3, 5}, {4, 4}, {}, {-5}, {-3, -3}});
  auto j = to_json(t);
  CHECK(j["columns"]["-1"] == nlohmann::json({-5, -3}));
  CHECK(j["columns"]["1"] == nlohmann::json({2, 4}));
  CHECK(rational_from_json(j) == t);
  CHECK(to_ascii(rt({1, -1}, {{1}, {-2}})) == "   |  1\n-2 |\n");
}
