#include <map>
#include <set>

#include "common.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/switching.hpp"

using namespace tabkit;
using namespace tabkit::testing;

TEST_CASE("switching a glued pair of N and N' tableaux") {
  auto n = naturals(3);
  auto np = naturals_primed(3);
  auto s = tab(n, {{"1", "1", "2"}, {"2", "3"}});
  auto t = tab(np, {{}, {"3'"}, {"1'", "2'", "3'"}}, Partition{3, 2});
  for (auto order : {ScanOrder::LastFirst, ScanOrder::FirstFirst}) {
    auto r = switch_full(s, t, order);
    CHECK(labels_of(r.tprime) == "1' 2' 3'/3'");
    CHECK(labels_of(r.sprime) == ". . ./. 1 2/1 2 3");
    // switching back
    auto back = switch_full(r.tprime, r.sprime, order);
    CHECK(back.tprime == s);
    CHECK(back.sprime == t);
  }
}

TEST_CASE("h tableau and lattice words") {
  CHECK(labels_of(h_tableau(Partition{3, 1})) == "1 1 1/2");
  CHECK(is_lattice({0, 0, 1}));
  CHECK_FALSE(is_lattice({1, 0}));
  CHECK(lr_content(h_tableau(Partition{2, 2})) == Partition{2, 2});
}

TEST_CASE("lr_count agrees with brute force inside (3,3,3)") {
  int nonzero = 0;
  for (const auto& lam : box(3, 3))
    for (const auto& mu : box(3, 3)) {
      if (!contains(lam, mu)) continue;
      for (const auto& nu : partitions_of(lam.size() - mu.size(), 3, 3)) {
        auto b = brute_lr(lam, mu, nu);
        CHECK(lr_count(lam, mu, nu) == b);
        CHECK(static_cast<long long>(enumerate_LR(lam, mu, nu).size()) == b);
        CHECK(lr_count(lam, nu, mu) == b);
        nonzero += b > 0;
      }
    }
  CHECK(nonzero > 50);
  CHECK(lr_count(Partition{3, 2, 1}, Partition{2, 1}, Partition{2, 1}) == 2);
  CHECK(lr_count(Partition{4, 2, 2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
}

TEST_CASE("theta is an involution and tau swaps to conjugates") {
  for (const auto& lam : box(3, 3))
    for (const auto& mu : box(3, 3)) {
      if (!contains(lam, mu)) continue;
      for (const auto& nu : partitions_of(lam.size() - mu.size(), 3, 3))
        for (const auto& q : enumerate_LR(lam, mu, nu)) {
          auto th = theta(q);
          CHECK(is_LR(th, mu));
          CHECK(th.inner() == nu);
          CHECK(theta(th) == q);
          auto tq = tau(q);
          CHECK(is_LR(tq, conjugate(nu)));
          CHECK(tq.inner() == conjugate(mu));
          CHECK(tq.outer() == conjugate(lam));
          CHECK(tau_inv(tq) == q);
        }
    }
}

TEST_CASE("jdt rectifies and inverts") {
  auto a = inline_alphabet("m", {{"p", 0}, {"q", 1}, {"r", 0}});
  for (const auto& lam : box(3, 3))
    for (const auto& mu : box(3, 3)) {
      if (!contains(lam, mu) || lam == mu) continue;
      std::map<std::string, int> seen;
      long long total = 0;
      for (const auto& t : enumerate_sst({lam, mu}, a)) {
        auto [rect, rec] = jdt(t);
        CHECK(rect.is_straight());
        CHECK(validate(rect));
        CHECK(weight(rect) == weight(t));
        CHECK(is_LR(rec, mu));
        CHECK(rec.inner() == rect.outer());
        CHECK(jdt(t, ScanOrder::FirstFirst).rect == rect);
        CHECK(jdt_inv(rect, rec) == t);
        // any companion of shape mu gives the same rectification
        auto companion = enumerate_sst({mu, {}}, interval(4));
        CHECK(jdt_with(companion.back(), t) == rect);
        ++seen[labels_of(rect) + "|" + labels_of(rec)];
        ++total;
      }
      for (const auto& [k, v] : seen) CHECK(v == 1);
      long long rhs = 0;
      for (const auto& nu : partitions_of(lam.size() - mu.size()))
        if (in_hook(nu, *a)) rhs += lr_count(lam, nu, mu) * count_sst({nu, {}}, a);
      CHECK(total == rhs);
    }
}

TEST_CASE("reordering the alphabet is a weight preserving bijection") {
  auto a = inline_alphabet("a", {{"p", 0}, {"q", 1}, {"r", 0}});
  auto b = inline_alphabet("b", {{"r", 0}, {"p", 0}, {"q", 1}});
  for (const auto& lam : box(3, 2))
    for (const auto& mu : box(3, 2)) {
      if (!contains(lam, mu)) continue;
      auto src = enumerate_sst({lam, mu}, a);
      CHECK(src.size() == enumerate_sst({lam, mu}, b).size());
      std::set<std::string> img;
      for (const auto& t : src) {
        auto u = reorder_bijection(t, b);
        CHECK(validate(u));
        CHECK(u.outer() == lam);
        CHECK(u.inner() == mu);
        for (const auto& l : {"p", "q", "r"}) CHECK(weight(u)[b->at(l)] == weight(t)[a->at(l)]);
        CHECK(reorder_bijection_inv(u, a) == t);
        img.insert(labels_of(u));
      }
      CHECK(img.size() == src.size());
    }
}
