#include "common.hpp"

#include <algorithm>

#include "tabkit/coeffs.hpp"
#include "tabkit/duality.hpp"
#include "tabkit/errors.hpp"

using namespace tabkit;
using namespace tabkit::testing;

namespace {

WordPair wp(const AlphabetPtr& a, const AlphabetPtr& b, std::vector<std::string> plus, std::vector<std::string> minus) {
  return {tab(a, {plus}), tab(b, {minus})};
}

AlphabetPtr mixed(const std::string& p) {
  return make_alphabet(p, {{p + "1", 0}, {p + "2", 1}});
}

}  // namespace

TEST_CASE("kappa on the two-word example") {
  auto a = letters("a", 6), b = letters("b", 6);
  std::vector<WordPair> w{wp(a, b, {"a1", "a1", "a2", "a4", "a5"}, {"b3", "b3", "b4", "b6"}),
                          wp(a, b, {"a1", "a3", "a6"}, {"b2", "b3", "b6"})};
  auto [p, q] = kappa(w, a, b);
  CHECK(p.shape == GenPartition({2, -1}));
  CHECK(p.d == 5);
  CHECK(p.inner == Partition({3}));
  CHECK(p.tplus == tab(a, {{"a1", "a3", "a5", "a6"}, {"a1", "a1", "a2", "a4"}}, Partition({3})));
  CHECK(p.tminus == tab(b, {{"b2", "b3"}, {"b3", "b3", "b4", "b6", "b6"}}, Partition({3})));
  CHECK(q == RationalTableau{GenPartition({2, -1}), {{1, 2}, {-2}}});
  CHECK(kappa_inv(p, q) == w);

  // weights
  auto wt = weight_ab(p);
  CHECK(wt.plus == std::vector<int>{3, 1, 1, 1, 1, 1});
  CHECK(wt.minus == std::vector<int>{0, 1, 3, 1, 0, 2});
  CHECK(q.content() == std::vector<int>{1, 0});

  for (int extra = 1; extra <= 2; ++extra) {
    auto [p2, q2] = kappa(w, a, b, extra);
    CHECK(p2 == p);
    CHECK(q2 == q);
  }
}

TEST_CASE("kappa on empty words") {
  auto a = letters("a", 1), b = letters("b", 1);
  auto [p, q] = kappa({WordPair{Tableau(a), Tableau(b)}}, a, b);
  CHECK(p.shape == GenPartition({0}));
  CHECK(p.tplus.empty());
  CHECK(p.tminus.empty());
  CHECK(q.rows == std::vector<std::vector<int>>{{}});
  CHECK(kappa_inv(p, q).size() == 1);
}

TEST_CASE("kappa is a weight-preserving bijection on windows") {
  auto a = letters("a", 1), b = letters("b", 1);
  for (int bound = 0; bound <= 2; ++bound) {
    auto rep = kappa_window(2, a, b, bound);
    INFO("bound " << bound);
    CHECK(rep.failures == 0);
    CHECK(rep.lhs == rep.rhs);
  }
  auto rep = kappa_window(2, mixed("a"), mixed("b"), 2);
  CHECK(rep.failures == 0);
  CHECK(rep.lhs == rep.rhs);
  auto rep3 = kappa_window(3, a, mixed("b"), 1);
  CHECK(rep3.failures == 0);
  CHECK(rep3.lhs == rep3.rhs);
}

TEST_CASE("kappa restricted to fixed charges") {
  auto a = letters("a", 1), b = letters("b", 1);
  auto r0 = kappa_content_window({0, 0}, a, b, 0);
  CHECK(r0.lhs == 1);
  CHECK(r0.rhs == 1);
  CHECK(r0.failures == 0);
  for (auto charges : {std::vector<int>{1, 0}, std::vector<int>{1, -1}}) {
    auto r = kappa_content_window(charges, a, b, 1);
    CHECK(r.failures == 0);
    CHECK(r.lhs == r.rhs);
    CHECK(r.lhs > 0);
  }
}

TEST_CASE("rho_ab on the product example") {
  auto a = letters("a", 4), b = letters("b", 3);
  auto t1 = make_ab(GenPartition({2, -1}), std::nullopt, 1, tab(a, {{"a1", "a2", "a2"}, {}}), tab(b, {{"b2"}, {"b3"}}));
  auto t2 = make_ab(GenPartition({1, -1}), std::nullopt, 2, tab(a, {{"a3", "a4"}, {"a1"}}, Partition({1})),
                    tab(b, {{"b1"}, {"b1", "b2"}}, Partition({1})));
  REQUIRE(is_canonical(t1));
  REQUIRE(is_canonical(t2));
  auto [t, r] = rho_ab(t1, t2);
  CHECK(t.shape == GenPartition({4, 0, -1, -2}));
  CHECK(t.d == 2);
  CHECK(t.tplus == tab(a, {{"a1", "a2", "a3", "a4"}, {"a1"}, {"a2"}, {}}, Partition({2, 1})));
  CHECK(t.tminus == tab(b, {{}, {"b1"}, {"b1", "b2"}, {"b2", "b3"}}, Partition({2, 1})));
  Tableau expect_r(nat(), Partition({3, 2, 1, 1, 1, 1}), Partition({2, 1, 1, 1}), {{0}, {0}, {}, {}, {1}, {2}});
  CHECK(r == expect_r);

  // the example is worked at width 4
  auto wide = widen_to(t, 4);
  CHECK(wide.tplus == tab(a, {{"a1", "a2", "a3", "a4"}, {"a1"}, {"a2"}, {}}, Partition({4, 3, 2, 2})));
  auto raw = pi_level_inv(r, 2, 2, 2);
  CHECK(raw.outer() == conjugate(Partition({8, 4, 3, 2})));
  CHECK(raw.inner() == conjugate(Partition({6, 3})));

  for (int extra = 1; extra <= 2; ++extra) {
    auto again = rho_ab(t1, t2, extra);
    CHECK(again.t == t);
    CHECK(again.r == r);
  }
  auto w = weight_ab(t), w1 = weight_ab(t1), w2 = weight_ab(t2);
  for (std::size_t i = 0; i < w.plus.size(); ++i) CHECK(w.plus[i] == w1.plus[i] + w2.plus[i]);
  for (std::size_t i = 0; i < w.minus.size(); ++i) CHECK(w.minus[i] == w1.minus[i] + w2.minus[i]);

  auto [x1, x2] = rho_ab_inv(t, r, t1.shape, t2.shape);
  CHECK(x1 == t1);
  CHECK(x2 == t2);
  // other representatives of the class set give other preimages
  for (const auto& q : lr_class_product(t.shape, t1.shape, t2.shape)) {
    if (q == r) continue;
    auto [z1, z2] = rho_ab_inv(t, q, t1.shape, t2.shape);
    CHECK_FALSE((z1 == t1 && z2 == t2));
    CHECK(rho_ab(z1, z2).r == q);
  }
}

TEST_CASE("rho_ab with an empty second factor") {
  auto a = letters("a", 2), b = letters("b", 2);
  auto t1 = make_ab(GenPartition({2, -1}), std::nullopt, 1, tab(a, {{"a1", "a2", "a2"}, {}}), tab(b, {{"b1"}, {"b2"}}));
  auto t2 = make_ab(GenPartition::zero(2), std::nullopt, 0, Tableau(a), Tableau(b));
  auto [t, r] = rho_ab(t1, t2);
  CHECK(t.shape == GenPartition({2, 0, 0, -1}));
  CHECK(lr_class_product(t.shape, t1.shape, t2.shape).size() == 1);
  CHECK(weight_ab(t) == weight_ab(t1));
  auto [y1, y2] = rho_ab_inv(t, r, t1.shape, t2.shape);
  CHECK(y1 == t1);
  CHECK(y2 == t2);

  auto s1 = make_ab(GenPartition({2, 1}), std::nullopt, 0, tab(a, {{"a1", "a1"}, {"a2"}}), Tableau(b));
  auto [u, ur] = rho_ab(s1, t2);
  CHECK(u.shape == GenPartition({2, 1, 0, 0}));
  CHECK(u.tplus == s1.tplus);
  CHECK(u.tminus.empty());
}

TEST_CASE("rho_ab is a bijection on windows") {
  auto a = letters("a", 1), b = letters("b", 1);
  for (int bound = 0; bound <= 2; ++bound)
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y) {
        auto rep = rho_ab_window(GenPartition({x}), GenPartition({y}), a, b, bound);
        INFO("mu " << x << " nu " << y << " bound " << bound);
        CHECK(rep.failures == 0);
        CHECK(rep.lhs == rep.rhs);
      }
  auto rep = rho_ab_window(GenPartition({1}), GenPartition({1, -1}), mixed("a"), mixed("b"), 2);
  CHECK(rep.failures == 0);
  CHECK(rep.lhs == rep.rhs);
  auto rep2 = rho_ab_window(GenPartition({0, -1}), GenPartition({2}), letters("a", 2), letters("b", 2), 2);
  CHECK(rep2.failures == 0);
  CHECK(rep2.lhs == rep2.rhs);
}

TEST_CASE("skew rectification with zero inner shape") {
  auto a = mixed("a"), b = mixed("b");
  for (const auto& x : enumerate_ab(GenPartition({1, -1}), std::nullopt, a, b, 2)) {
    auto [j, r] = skew_jdt_ab(x);
    CHECK(j == canonicalize(x));
    CHECK(lr_class_slash(x.shape, GenPartition::zero(2), x.shape).size() == 1);
    CHECK(skew_jdt_ab_inv(x.shape, GenPartition::zero(2), j, r) == x);
  }
}

TEST_CASE("level one skew shapes keep the empty pair") {
  auto a = letters("a", 1), b = letters("b", 1);
  auto xs = enumerate_ab(GenPartition({1}), GenPartition({1}), a, b, 2);
  REQUIRE(xs.size() == 3);
  CHECK(std::any_of(xs.begin(), xs.end(), [](const ABTableau& x) { return x.tplus.empty() && x.tminus.empty(); }));
  CHECK(character_ab(GenPartition({1}), GenPartition({1}), a, b, 2) ==
        character_ab(GenPartition({0}), std::nullopt, a, b, 2));
  auto w = skew_jdt_window(GenPartition({1}), GenPartition({1}), a, b, 3);
  CHECK(w.failures == 0);
  CHECK(w.lhs == w.rhs);
}

TEST_CASE("skew rectification windows") {
  auto a = letters("a", 1), b = letters("b", 1);
  for (int bound = 0; bound <= 2; ++bound) {
    INFO("bound " << bound);
    auto z = skew_jdt_window(GenPartition::zero(2), GenPartition({1, 0}), a, b, bound);
    CHECK(z.failures == 0);
    CHECK(z.lhs == z.rhs);
    auto s = skew_jdt_window(GenPartition({1, 0}), GenPartition({0, -1}), a, b, bound);
    CHECK(s.failures == 0);
    CHECK(s.lhs == s.rhs);
  }
  // 0/mu rectifies onto mu* only
  for (const auto& x : enumerate_ab(GenPartition::zero(2), GenPartition({1, 0}), a, b, 2))
    CHECK(skew_jdt_ab(x).j.shape == GenPartition({0, -1}));
  auto m = skew_jdt_window(GenPartition({2, 0}), GenPartition({1, -1}), mixed("a"), mixed("b"), 2);
  CHECK(m.failures == 0);
  CHECK(m.lhs == m.rhs);
  auto e = skew_jdt_window(GenPartition({1, 0, -1}), GenPartition({0, 0, -1}), letters("a", 2), letters("b", 1), 2);
  CHECK(e.failures == 0);
  CHECK(e.lhs == e.rhs);
}

TEST_CASE("skew rectification preserves weight and is stable under widening") {
  auto a = letters("a", 2), b = letters("b", 2);
  for (const auto& x : enumerate_ab(GenPartition({1, 0}), GenPartition({0, -1}), a, b, 2)) {
    auto base = skew_jdt_ab(x);
    CHECK(weight_ab(base.j) == weight_ab(x));
    auto w = skew_jdt_ab(widen(x));
    CHECK(w.j == base.j);
    CHECK(w.r == base.r);
    auto e = skew_jdt_ab(x, 1);
    CHECK(e.j == base.j);
    CHECK(e.r == base.r);
  }
}

TEST_CASE("word pair json") {
  auto a = letters("a", 3), b = letters("b", 3);
  auto w = wp(a, b, {"a1", "a3"}, {"b2"});
  auto j = to_json(w);
  CHECK(j.at("charge") == 1);
  nlohmann::json in = {{"plus", {"a1", "a3"}}, {"minus", {"b2"}}};
  CHECK(word_pair_from_json(in, a, b) == w);
  nlohmann::json bad = {{"plus", {"a3", "a1"}}, {"minus", nlohmann::json::array()}};
  CHECK_THROWS_AS(word_pair_from_json(bad, a, b), Error);
}
