#include <set>

#include "common.hpp"
#include "tabkit/coeffs.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/rational.hpp"
#include "tabkit/switching.hpp"

using namespace tabkit;
using namespace tabkit::testing;

namespace {
// Coefficient of s_mu(x) s_nu(y) in s_lambda(x, y), by peeling Laurent polynomials.
long long branching_oracle(const GenPartition& lam, const GenPartition& mu, const GenPartition& nu) {
  auto rest = rational_schur(lam);
  const int m = mu.level(), n = nu.level();
  // repeatedly remove the lexicographically largest (x-part, y-part) dominant term
  long long found = 0;
  while (!rest.is_zero()) {
    auto top = rest.terms().rbegin()->first;
    std::vector<int> a(top.begin(), top.begin() + m), b(top.begin() + m, top.end());
    GenPartition ga(a), gb(b);
    long long k = rest.coeff(top);
    if (ga == mu && gb == nu) found = k;
    auto pa = rational_schur(ga), pb = rational_schur(gb);
    LaurentPoly prod(m + n);
    for (const auto& [ea, ca] : pa.terms())
      for (const auto& [eb, cb] : pb.terms()) {
        auto e = ea;
        e.insert(e.end(), eb.begin(), eb.end());
        prod.add(e, ca * cb);
      }
    rest -= prod * k;
  }
  return found;
}
}  // namespace

TEST_CASE("N symmetries inside (3,3,3)") {
  for (const auto& lam : box(3, 3))
    for (const auto& mu : box(3, 3)) {
      if (!contains(lam, mu)) continue;
      for (const auto& nu : partitions_of(lam.size() - mu.size())) {
        auto v = lr_coeff(lam, mu, nu);
        CHECK(v == lr_coeff(lam, nu, mu));
        CHECK(v == lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu)));
      }
    }
}

TEST_CASE("c on ordinary partitions and the unit") {
  CHECK(c({2, 1}, {1, 0}, {1, 1}) == 1);
  CHECK(c({2, 1}, {1, 1}, {1, 0}) == 1);
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (const auto& mu : gen_partitions(2, -2, 2)) CHECK(c(GenPartition::zero(2), lam, mu) == (mu == star(lam) ? 1 : 0));
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (const auto& mu : gen_partitions(2, -1, 1))
      for (const auto& nu : gen_partitions(2, -1, 1)) CHECK(c(lam, mu, nu) == c(lam, nu, mu));
  CHECK_THROWS_AS(c({1}, {1, 0}, {0, 0}), Error);
}

TEST_CASE("c expands products of rational Schur polynomials") {
  for (const auto& mu : gen_partitions(2, -1, 1))
    for (const auto& nu : gen_partitions(2, -1, 1)) {
      LaurentPoly rhs(2);
      for (const auto& lam : gen_partitions(2, -2, 2)) rhs += rational_schur(lam) * c(lam, mu, nu);
      CHECK(rational_schur(mu) * rational_schur(nu) == rhs);
    }
}

TEST_CASE("c_hat values, branching and star symmetry") {
  CHECK(c_hat({0, 0}, {0}, {0}) == 1);
  CHECK(c_hat({0, 0}, {1}, {-1}) == 0);
  CHECK(c_hat({1, -1}, {1}, {-1}) == 1);
  CHECK(c_hat({2, -2}, {1}, {-1}) == 1);
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y) {
        GenPartition mu{x}, nu{y};
        auto v = c_hat(lam, mu, nu);
        CHECK(v == branching_oracle(lam, mu, nu));
        CHECK(v == c_hat(star(lam), star(mu), star(nu)));
        CHECK(v == c_hat(lam, nu, mu));
      }
  CHECK(c_hat({1, 0, -1}, {1, -1}, {0}) == branching_oracle({1, 0, -1}, {1, -1}, {0}));
  CHECK(c_hat({1, 0, -1}, {0, 0}, {0}) == branching_oracle({1, 0, -1}, {0, 0}, {0}));
}

TEST_CASE("pi_shift") {
  auto q = enumerate_LR(Partition{2, 1}, Partition{1}, Partition{1, 1});
  REQUIRE(q.size() == 1);
  CHECK(pi_shift(q[0], 2, 0, 0) == q[0]);
  auto img = pi_shift(q[0], 2, 1, 0);
  auto target = enumerate_LR(Partition{3, 2}, Partition{2, 1}, Partition{1, 1});
  REQUIRE(target.size() == 1);
  CHECK(img == target[0]);
  for (const auto& lam : box(2, 2))
    for (const auto& mu : box(2, 2))
      for (const auto& nu : box(2, 2)) {
        if (!contains(lam, mu) || lam.size() != mu.size() + nu.size()) continue;
        auto src = enumerate_LR(lam, mu, nu);
        for (int p = 0; p <= 2; ++p)
          for (int s = 0; s <= 2; ++s) {
            auto tl = add_rect(lam, 2, p + s), tm = add_rect(mu, 2, p), tn = add_rect(nu, 2, s);
            CHECK(static_cast<long long>(src.size()) == lr_count(tl, tm, tn));
            std::set<std::string> seen;
            for (const auto& x : src) {
              auto y = pi_shift(x, 2, p, s);
              CHECK(y.outer() == tl);
              CHECK(y.inner() == tm);
              CHECK(is_LR(y, tn));
              CHECK(pi_shift_inv(y, 2, p, s) == x);
              seen.insert(labels_of(y));
            }
            CHECK(seen.size() == src.size());
          }
      }
}

TEST_CASE("pi_level") {
  int checked = 0;
  for (const auto& lam : gen_partitions(2, 0, 2))
    for (int x = 0; x <= 2; ++x)
      for (int y = 0; y <= 2; ++y) {
        auto l = lam.to_partition();
        Partition mu{x}, nu{y};
        auto small = enumerate_LR(conjugate(l), conjugate(mu), conjugate(nu));
        auto big = enumerate_LR(conjugate(add_rect(l, 2, 1)), conjugate(add_rect(mu, 1, 1)), conjugate(add_rect(nu, 1, 1)));
        CHECK(small.size() == big.size());
        for (const auto& q : big) {
          auto r = pi_level(q, 1, 1, 1);
          CHECK(pi_level_inv(r, 1, 1, 1) == q);
          ++checked;
        }
        for (const auto& q : small) CHECK(pi_level(pi_level_inv(q, 1, 1, 1), 1, 1, 1) == q);
        for (const auto& q : big) CHECK(pi_level(q, 1, 1, 0) == q);
      }
  CHECK(checked > 5);
  auto bad = enumerate_LR(Partition{2, 1}, Partition{1}, Partition{1, 1});
  CHECK_THROWS_AS(pi_level(bad[0], 1, 2, 1), Error);
  CHECK_THROWS_AS(pi_level(bad[0], 0, 1, 1), Error);
}

TEST_CASE("delta_pq_lr") {
  int n = 2;
  long long total = 0;
  for (const auto& lam : box(2, 3))
    for (const auto& mu : box(2, 2))
      for (const auto& nu : box(2, 2)) {
        if (!contains(lam, mu) || lam.size() != mu.size() + nu.size()) continue;
        for (int p = mu[0]; p <= 2; ++p)
          for (int q = nu[0]; q <= 2; ++q) {
            if (lam[0] > p + q) continue;
            auto src = enumerate_LR(lam, mu, nu);
            auto dl = delta_shape(lam, n, p + q), dm = delta_shape(mu, n, p), dn = delta_shape(nu, n, q);
            CHECK(static_cast<long long>(src.size()) == lr_count(dl, dm, dn));
            std::set<std::string> seen;
            for (const auto& x : src) {
              auto y = delta_pq_lr(x, n, p, q);
              CHECK(y.outer() == dl);
              CHECK(y.inner() == dm);
              CHECK(is_LR(y, dn));
              CHECK(delta_pq_lr_inv(y, n, p, q) == x);
              CHECK(delta_pq_lr(y, n, p, q) == x);
              seen.insert(labels_of(y));
              ++total;
            }
            CHECK(seen.size() == src.size());
          }
      }
  CHECK(total > 20);
  // empty content: Q has no cells, its complement is the full recording
  Tableau empty(nat(), Partition{1}, Partition{1}, {{}});
  auto full = delta_pq_lr(empty, 2, 1, 1);
  CHECK(full.inner() == Partition{1});
  CHECK(full.outer() == Partition{2, 1});
  CHECK(lr_content(full) == Partition{1, 1});
}

TEST_CASE("bold LR classes and star bijection") {
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y) {
        GenPartition mu{x}, nu{y};
        auto reps = lr_class_product(lam, mu, nu);
        CHECK(static_cast<long long>(reps.size()) == c_hat(lam, mu, nu));
        auto pairs = star_class(lam, mu, nu);
        std::set<std::string> img;
        auto starred = lr_class_product(star(lam), star(mu), star(nu));
        std::set<std::string> target;
        for (const auto& t : starred) target.insert(labels_of(t));
        for (const auto& [a, b] : pairs) {
          img.insert(labels_of(b));
          CHECK(target.count(labels_of(b)) == 1);
        }
        CHECK(img.size() == pairs.size());
        CHECK(img.size() == starred.size());
      }
  // identity at the zero shape
  auto z = star_class(GenPartition::zero(2), GenPartition::zero(1), GenPartition::zero(1));
  REQUIRE(z.size() == 1);
  CHECK(z[0].first == z[0].second);
  // slash classes count c
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (const auto& mu : gen_partitions(2, -1, 1))
      for (const auto& nu : gen_partitions(2, -1, 1)) {
        auto reps = lr_class_slash(lam, mu, nu);
        CHECK(static_cast<long long>(reps.size()) == c(lam, mu, nu));
        auto at = c_shift(lam, mu, nu);
        for (const auto& r : reps) {
          auto up = pi_shift(r, 2, 1, 2);
          CHECK(canonical_slash(up, lam, mu, nu, {at.p + 1, at.q + 2}) == r);
        }
      }
}

TEST_CASE("dual ring product") {
  DualElem unit{{GenPartition(), 1}};
  DualElem a{{GenPartition{1}, 1}};
  DualElem b{{GenPartition{-1}, 1}};
  CHECK(dual_product(unit, a, 4) == a);
  CHECK(dual_product(a, unit, 4) == a);
  CHECK(dual_product(unit, unit, 4) == unit);
  auto ab = dual_product(a, b, 2);
  CHECK(ab == DualElem{{GenPartition{1, -1}, 1}});
  CHECK(c_hat({0, 0}, {1}, {-1}) == 0);
  auto ab4 = dual_product(a, b, 4);
  CHECK(ab4.at(GenPartition{2, -2}) == 1);
  CHECK(dual_product(b, a, 4) == ab4);
  DualElem x{{GenPartition{1}, 2}, {GenPartition{0}, -1}};
  DualElem y{{GenPartition{-1}, 1}, {GenPartition{1, 0}, 3}};
  DualElem z{{GenPartition{0}, 1}};
  CHECK(dual_product(x, y, 3) == dual_product(y, x, 3));
  CHECK(dual_product(dual_product(x, z, 3), y, 3) == dual_product(x, dual_product(z, y, 3), 3));
  CHECK(omega(omega(x)) == x);
  CHECK(omega(dual_product(x, y, 3)) == dual_product(omega(x), omega(y), 3));
}
