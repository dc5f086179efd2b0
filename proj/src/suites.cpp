#include "tabkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "tabkit/abtableau.hpp"
#include "tabkit/charverify.hpp"
#include "tabkit/coeffs.hpp"
#include "tabkit/duality.hpp"
#include "tabkit/errors.hpp"
#include "tabkit/insertion.hpp"
#include "tabkit/rational.hpp"
#include "tabkit/switching.hpp"

namespace tabkit {

bool SuiteResult::ok() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.ok; });
}

long long SuiteResult::failed() const {
  return std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.ok; });
}

namespace {

AlphabetPtr letters(const std::string& prefix, int n) {
  std::vector<Letter> ls;
  for (int i = 1; i <= n; ++i) ls.push_back({prefix + std::to_string(i), 0});
  return make_alphabet(prefix, std::move(ls));
}

AlphabetPtr two(const std::string& p, int p1, int p2) { return make_alphabet(p, {{p + "1", p1}, {p + "2", p2}}); }
AlphabetPtr mixed3() { return inline_alphabet("m3", {{"p", 0}, {"q", 1}, {"r", 0}}); }

Tableau tab(const AlphabetPtr& a, const std::vector<std::vector<std::string>>& rows, const Partition& inner = {}) {
  std::vector<int> outer;
  for (std::size_t r = 0; r < rows.size(); ++r)
    outer.push_back(inner[static_cast<int>(r)] + static_cast<int>(rows[r].size()));
  return Tableau::from_labels(a, Partition(outer), inner, rows);
}

struct Cases {
  std::vector<CaseResult>& out;
  void operator()(std::string key, bool ok, std::string detail = "") {
    out.push_back({std::move(key), ok, ok ? "" : std::move(detail)});
  }
};

// Runs f, turning ordinary errors into a failed case. Invariant breaches propagate.
void guarded(Cases& c, const std::string& key, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Invariant) throw;
    c(key, false, e.what());
  }
}

std::string str(const GenPartition& g) { return to_string(g); }

void switching_example(SuiteResult& r) {
  Cases ok{r.cases};
  auto s = tab(naturals(3), {{"1", "1", "2"}, {"2", "3"}});
  auto t = tab(naturals_primed(3), {{}, {"3'"}, {"1'", "2'", "3'"}}, Partition{3, 2});
  auto res = switch_full(s, t);
  auto glued = glue(res.tprime, res.sprime);
  ok("glued rows", labels_of(glued) == "1' 2' 3'/3' 1 2/1 2 3", labels_of(glued));
  ok("tprime shape", res.tprime.outer() == Partition{3, 1} && res.tprime.inner().empty());
  auto back = switch_full(res.tprime, res.sprime);
  ok("switching back", back.tprime == s && back.sprime == t);
  r.data = {{"tprime", to_json(res.tprime)}, {"sprime", to_json(res.sprime)}};
}

void sigma_example(SuiteResult& r) {
  Cases ok{r.cases};
  RationalTableau t{GenPartition{3, 2, 0, -1, -2}, {{2, 3, 5}, {4, 4}, {}, {-5}, {-4, -2}}};
  ok("input valid", validate_rational(t));
  auto s = sigma(t);
  ok("shape", s.shape == GenPartition{4, 3, 1, 0, -1}, str(s.shape));
  ok("rows", s.rows == std::vector<std::vector<int>>{{1, 2, 3, 5}, {3, 4, 4}, {4}, {}, {-4}});
  ok("inverse", sigma_inv(s) == t);
  r.data = {{"input", to_json(t)}, {"sigma", to_json(s)}};
}

void complement_example(SuiteResult& r) {
  Cases ok{r.cases};
  auto t = tab(interval(4), {{"1", "2", "2", "3"}, {"3", "4", "4"}, {"4"}});
  auto d = delta(t, 4, 5);
  ok("rows", labels_of(d) == "1 1 1 1 2/2 2 3 3/3 4/4", labels_of(d));
  ok("involution", delta(d, 4, 5) == t);
  r.data = {{"input", to_json(t)}, {"complement", to_json(d)}};
}

void rsk_example(SuiteResult& r) {
  Cases ok{r.cases};
  auto a = letters("a", 6), b = letters("b", 6);
  auto wp = [&](std::vector<std::string> p, std::vector<std::string> m) { return WordPair{tab(a, {p}), tab(b, {m})}; };
  std::vector<WordPair> w{wp({"a1", "a1", "a2", "a4", "a5"}, {"b3", "b3", "b4", "b6"}),
                          wp({"a1", "a3", "a6"}, {"b2", "b3", "b6"})};
  auto [p, q] = kappa(w, a, b);
  ok("shape", p.shape == GenPartition{2, -1}, str(p.shape));
  ok("width", p.d == 5 && p.inner == Partition{3});
  ok("T+", p.tplus == tab(a, {{"a1", "a3", "a5", "a6"}, {"a1", "a1", "a2", "a4"}}, Partition{3}), labels_of(p.tplus));
  ok("T-", p.tminus == tab(b, {{"b2", "b3"}, {"b3", "b3", "b4", "b6", "b6"}}, Partition{3}), labels_of(p.tminus));
  ok("Q", q == RationalTableau{GenPartition{2, -1}, {{1, 2}, {-2}}});
  auto back = kappa_inv(p, q);
  ok("inverse", back == w);
  auto words = nlohmann::json::array();
  for (const auto& x : back) words.push_back(to_json(x));
  r.data = {{"p", to_json(p)}, {"q", to_json(q)}, {"recovered", words}};
}

void product_example(SuiteResult& r) {
  Cases ok{r.cases};
  auto a = letters("a", 4), b = letters("b", 3);
  auto t1 = make_ab(GenPartition{2, -1}, std::nullopt, 1, tab(a, {{"a1", "a2", "a2"}, {}}), tab(b, {{"b2"}, {"b3"}}));
  auto t2 = make_ab(GenPartition{1, -1}, std::nullopt, 2, tab(a, {{"a3", "a4"}, {"a1"}}, Partition{1}),
                    tab(b, {{"b1"}, {"b1", "b2"}}, Partition{1}));
  auto [t, rec] = rho_ab(t1, t2);
  ok("shape", t.shape == GenPartition{4, 0, -1, -2}, str(t.shape));
  ok("T+", t.tplus == tab(a, {{"a1", "a2", "a3", "a4"}, {"a1"}, {"a2"}, {}}, Partition{2, 1}), labels_of(t.tplus));
  ok("T-", t.tminus == tab(b, {{}, {"b1"}, {"b1", "b2"}, {"b2", "b3"}}, Partition{2, 1}), labels_of(t.tminus));
  // the recording class, as displayed at width 4
  auto raw = pi_level_inv(rec, 2, 2, 2);
  ok("recording class", raw.outer() == conjugate(Partition{8, 4, 3, 2}) && raw.inner() == conjugate(Partition{6, 3}),
    labels_of(raw));
  Tableau want(nat(), Partition{3, 2, 1, 1, 1, 1}, Partition{2, 1, 1, 1}, {{0}, {0}, {}, {}, {1}, {2}});
  ok("minimal recording", rec == want, labels_of(rec));
  auto [x1, x2] = rho_ab_inv(t, rec, t1.shape, t2.shape);
  ok("inverse", x1 == t1 && x2 == t2);
  r.data = {{"t", to_json(t)}, {"r", to_json(rec)}, {"r_width4", to_json(raw)}};
}

void highest_weight_suite(SuiteResult& r, std::uint64_t seed) {
  Cases ok{r.cases};
  GenPartition lam{4, 3, 2, -2, -3};
  auto h = highest_weight_super(lam);
  ok("diag", h.diag == std::map<int, int>{{4, 1}, {3, 2}, {2, 2}, {1, 4}, {0, -2}, {-1, -2}, {-2, -1}},
    to_json(h).dump());
  ok("central", h.central == 5);
  auto t = highest_weight_tableau(lam);
  Partition in{3, 3, 3, 1};
  auto plus = Tableau::from_labels(t.tplus.alphabet(), Partition{7, 6, 5, 1}, in,
                                   {{"1/2", "1/2", "1/2", "1/2"}, {"1", "3/2", "3/2"}, {"1", "2"}, {}, {}});
  auto minus = Tableau::from_labels(t.tminus.alphabet(), Partition{3, 3, 3, 3, 3}, in,
                                    {{}, {}, {}, {"-1", "0"}, {"-1/2", "-1/2", "0"}});
  ok("tableau", t.tplus == plus && t.tminus == minus, to_ascii(t));
  ok("canonical", is_canonical(t) && t.d == 3);
  auto g = highest_weight_gl(GenPartition{2, -1});
  ok("gl example", g.diag == std::map<int, int>{{2, 2}, {0, -1}} && g.central == -2, to_json(g).dump());
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> lv(1, 4), pt(-4, 4);
  int bad = 0;
  std::string first;
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<int> p(lv(gen));
    for (int& x : p) x = pt(gen);
    std::sort(p.rbegin(), p.rend());
    GenPartition l(p);
    auto x = highest_weight_tableau(l);
    if (half_weight(x) != highest_weight_super(l).diag || !is_canonical(x)) {
      if (!bad++) first = str(l);
    }
  }
  ok("random weights", bad == 0, "first mismatch at " + first);
  r.data = {{"highest_weight", to_json(h)}, {"tableau", to_json(t)}};
}

void cauchy_suite(SuiteResult& r) {
  struct Job {
    int n, pa, pb, d, e;
  };
  std::vector<Job> jobs;
  for (int n = 1; n <= 2; ++n)
    for (int pa = 0; pa < 4; ++pa)
      for (int pb = 0; pb < 4; ++pb)
        for (int d = 0; d <= 3; ++d)
          for (int e = 0; e <= 3; ++e) jobs.push_back({n, pa, pb, d, e});
  std::vector<CaseResult> out(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const auto& j = jobs[i];
    auto a = two("a", j.pa & 1, j.pa >> 1), b = two("b", j.pb & 1, j.pb >> 1);
    auto rep = cauchy_check(j.n, a, b, {j.d, j.e});
    out[i] = {rep.name + " parities " + std::to_string(j.pa) + "/" + std::to_string(j.pb), rep.ok(),
              rep.ok() ? "" : rep.diffs.front()};
  }
  // single letters and an empty B
  auto one0 = make_alphabet("a", {{"a", 0}}), oneb = make_alphabet("b", {{"b", 0}});
  auto [lhs, rhs] = cauchy_sides(1, one0, oneb, {3, 3});
  out.push_back({"hand value a^2 b^-1 x1", lhs.coeff({2, -1, 1}) == 1 && lhs == rhs, to_string(lhs)});
  auto ferm = make_alphabet("a", {{"a", 1}});
  auto empty = make_alphabet("none", {});
  auto [l2, r2] = cauchy_sides(1, ferm, empty, {2, 2});
  LaurentPoly want(2);
  want.add({0, 0}, 1);
  want.add({1, 1}, 1);
  out.push_back({"single fermion", l2 == want && r2 == want, to_string(l2) + " vs " + to_string(r2)});
  r.cases = std::move(out);
}

void jt_suite(SuiteResult& r) {
  auto shapes = gen_partitions(2, -2, 2);
  AlphabetFamily za = [](int k) { return z_pos(k); }, zb = [](int k) { return z_nonpos(k); };
  AlphabetFamily ha = [](int k) { return half_pos_prime(k); }, hb = [](int k) { return half_nonpos_prime(k); };
  std::vector<CaseResult> out(2 * shapes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < out.size(); ++i) {
    const bool super = i % 2;
    auto rep = jacobi_trudi_check(shapes[i / 2], super ? ha : za, super ? hb : zb, 2, 3);
    out[i] = {rep.name + (super ? " super" : " gl"), rep.ok(), rep.ok() ? "" : rep.diffs.front()};
  }
  r.cases = std::move(out);
}

void hexp_suite(SuiteResult& r) {
  Cases ok{r.cases};
  for (int pa = 0; pa < 4; ++pa) {
    auto a = two("a", pa & 1, pa >> 1), b = two("b", pa >> 1, pa & 1);
    for (const auto& mu : gen_partitions(2, -1, 2)) {
      auto rep = h_expansion_check(mu, a, b, 2);
      ok(rep.name + " parities " + std::to_string(pa), rep.ok(), rep.ok() ? "" : rep.diffs.front());
    }
  }
}

// Exhaustive bijection windows.
void roundtrip_suite(SuiteResult& r) {
  Cases ok{r.cases};
  auto a = mixed3();
  auto box = partitions_in_box(3, 3);
  std::map<Partition, std::vector<Tableau>> sst;
  for (const auto& p : box) sst[p] = enumerate_sst({p, {}}, a);

  {
    long long n = 0, bad = 0;
    std::set<std::string> img_col, img_row;
    for (const auto& mu : box)
      for (const auto& nu : box)
        for (const auto& t : sst[mu])
          for (const auto& tp : sst[nu]) {
            auto [p, q] = rho_col(t, tp);
            auto [p2, qt] = rho_row(t, tp);
            bad += rho_col_inv(p, q) != std::pair{t, tp};
            bad += rho_row_inv(p2, qt) != std::pair{t, tp};
            bad += !img_col.insert(labels_of(p) + "|" + labels_of(q)).second;
            bad += !img_row.insert(labels_of(p2) + "|" + labels_of(qt)).second;
            ++n;
          }
    ok("rho_col/rho_row " + std::to_string(n) + " pairs", bad == 0, std::to_string(bad) + " failures");
  }
  {
    std::vector<Tableau> rows;
    for (int len = 0; len <= 3; ++len)
      for (const auto& t : enumerate_sst({len ? Partition{len} : Partition{}, {}}, a)) rows.push_back(t);
    long long n = 0, bad = 0;
    std::set<std::string> img_col, img_row;
    for (const auto& x : rows)
      for (const auto& y : rows)
        for (const auto& z : rows) {
          std::vector<Tableau> in{x, y, z};
          auto mc = multi_insert_col(in, a);
          auto mr = multi_insert_row(in, a);
          bad += multi_insert_col_inv(mc.s, mc.rec) != in;
          bad += multi_insert_row_inv(mr.s, mr.rec) != in;
          bad += !img_col.insert(labels_of(mc.s) + "|" + labels_of(mc.rec)).second;
          bad += !img_row.insert(labels_of(mr.s) + "|" + labels_of(mr.rec)).second;
          ++n;
        }
    ok("multi_insert " + std::to_string(n) + " triples", bad == 0, std::to_string(bad) + " failures");
  }
  {
    long long n = 0, bad = 0;
    for (const auto& lam : box)
      for (const auto& mu : box) {
        if (!contains(lam, mu)) continue;
        std::set<std::string> img;
        for (const auto& t : enumerate_sst({lam, mu}, a)) {
          auto [rect, rec] = jdt(t);
          bad += jdt_inv(rect, rec) != t;
          bad += !img.insert(labels_of(rect) + "|" + labels_of(rec)).second;
          ++n;
        }
      }
    ok("jdt " + std::to_string(n) + " skew tableaux", bad == 0, std::to_string(bad) + " failures");
  }
  auto ab = [](const WindowReport& w) {
    return std::to_string(w.lhs) + " vs " + std::to_string(w.rhs) + ", " + std::to_string(w.failures) + " failures";
  };
  const std::vector<std::pair<AlphabetPtr, AlphabetPtr>> alph{{two("a", 0, 1), two("b", 1, 0)},
                                                               {two("a", 0, 0), two("b", 0, 0)},
                                                               {two("a", 1, 1), two("b", 0, 1)},
                                                               {mixed3(), two("b", 1, 0)}};
  for (const auto& [pa, pb] : alph) {
    auto par = [](const AlphabetPtr& x) {
      std::string s;
      for (int i = 0; i < x->size(); ++i) s += std::to_string(x->parity(i));
      return s;
    };
    const std::string tag = " over parities " + par(pa) + "/" + par(pb);
    for (int n = 1; n <= 2; ++n) {
      auto w = kappa_window(n, pa, pb, 2);
      ok("kappa n=" + std::to_string(n) + tag, w.ok(), ab(w));
    }
    std::vector<GenPartition> small;
    for (int lv = 1; lv <= 2; ++lv)
      for (const auto& g : gen_partitions(lv, -2, 2)) small.push_back(g);
    for (const auto& mu : small)
      for (const auto& nu : small) {
        auto w = rho_ab_window(mu, nu, pa, pb, 2);
        ok("rho_ab " + str(mu) + " " + str(nu) + tag, w.ok(), ab(w));
      }
    for (const auto& lam : small)
      for (const auto& mu : small) {
        if (lam.level() != mu.level()) continue;
        bool inside = true;
        for (int i = 0; i < lam.level(); ++i) inside = inside && mu[i] <= lam[i];
        if (!inside) continue;
        auto w = skew_jdt_window(lam, mu, pa, pb, 2);
        ok("skew_jdt " + str(lam) + "/" + str(mu) + tag, w.ok(), ab(w));
      }
  }
}

void coeff_suite(SuiteResult& r) {
  Cases ok{r.cases};
  long long bad = 0;
  for (const auto& lam : partitions_in_box(3, 3))
    for (const auto& mu : partitions_in_box(3, 3)) {
      if (!contains(lam, mu)) continue;
      for (const auto& nu : partitions_of(lam.size() - mu.size())) {
        auto v = lr_coeff(lam, mu, nu);
        bad += v != lr_coeff(lam, nu, mu) || v != lr_coeff(conjugate(lam), conjugate(mu), conjugate(nu));
      }
    }
  ok("N symmetric and conjugation invariant inside (3,3,3)", bad == 0, std::to_string(bad) + " failures");
  bad = 0;
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (const auto& mu : gen_partitions(2, -2, 2))
      for (const auto& nu : gen_partitions(2, -2, 2)) bad += c(lam, mu, nu) != c(lam, nu, mu);
  ok("c symmetric at level 2", bad == 0, std::to_string(bad) + " failures");
  bad = 0;
  for (const auto& lam : gen_partitions(2, -3, 3))
    for (const auto& mu : gen_partitions(2, -3, 3))
      bad += c(GenPartition::zero(2), lam, mu) != (mu == star(lam) ? 1 : 0);
  ok("c at the zero shape", bad == 0, std::to_string(bad) + " failures");
  bad = 0;
  for (const auto& lam : gen_partitions(2, -3, 3))
    for (int x = -3; x <= 3; ++x)
      for (int y = -3; y <= 3; ++y)
        bad += c_hat(lam, GenPartition{x}, GenPartition{y}) != c_hat(star(lam), GenPartition{-x}, GenPartition{-y});
  ok("c-hat star symmetry at m=n=1", bad == 0, std::to_string(bad) + " failures");
  bad = 0;
  for (const auto& lam : gen_partitions(2, -2, 2))
    for (int x = -3; x <= 3; ++x) {
      std::vector<int> content{x, lam.degree() - x};
      bad += kostka(lam, content) != kostka(add_rect(lam, 1), {x + 1, lam.degree() - x + 1});
    }
  ok("Kostka shift invariance", bad == 0, std::to_string(bad) + " failures");
}

void stroomer_suite(SuiteResult& r) {
  Cases ok{r.cases};
  auto i2 = interval(2);
  long long n = 0, bad = 0;
  for (const auto& mu : partitions_in_box(2, 2))
    for (const auto& nu : partitions_in_box(2, 2))
      for (const auto& t1 : enumerate_sst({mu, {}}, i2))
        for (const auto& t2 : enumerate_sst({nu, {}}, i2))
          for (int p = std::max(mu[0], 0); p <= 3; ++p)
            for (int q = std::max(nu[0], 0); q <= 3; ++q) {
              bad += !check_stroomer(t1, t2, 2, p, q);
              ++n;
            }
  ok("complement exchanges insertions, " + std::to_string(n) + " cases", bad == 0, std::to_string(bad) + " failures");
}

void determinism_suite(SuiteResult& r) {
  Cases ok{r.cases};
  auto a = interval(2), b = naturals_primed(2);
  auto box = partitions_in_box(3, 2);
  long long n = 0, bad = 0;
  for (const auto& lam : box)
    for (const auto& mu : box)
      for (const auto& ka : box) {
        if (!contains(lam, mu) || !contains(mu, ka)) continue;
        auto ss = enumerate_sst({mu, ka}, a);
        auto ts = enumerate_sst({lam, mu}, b);
        for (const auto& s : ss)
          for (const auto& t : ts) {
            auto x = switch_full(s, t, ScanOrder::LastFirst);
            auto y = switch_full(s, t, ScanOrder::FirstFirst);
            bad += !(x.tprime == y.tprime && x.sprime == y.sprime);
            ++n;
          }
      }
  ok("scan orders agree on " + std::to_string(n) + " pairs", bad == 0, std::to_string(bad) + " disagreements");
  n = bad = 0;
  auto m = mixed3();
  for (const auto& lam : partitions_in_box(3, 3))
    for (const auto& mu : partitions_in_box(3, 3)) {
      if (!contains(lam, mu) || lam == mu) continue;
      auto companions = enumerate_sst({mu, {}}, interval(3));
      for (const auto& t : enumerate_sst({lam, mu}, m)) {
        auto rect = jdt(t).rect;
        for (const auto& s : companions) bad += jdt_with(s, t) != rect;
        ++n;
      }
    }
  ok("jdt independent of the companion, " + std::to_string(n) + " tableaux", bad == 0,
    std::to_string(bad) + " disagreements");
}

using Runner = std::function<void(SuiteResult&, std::uint64_t)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg{
      {"switching-example", [](SuiteResult& r, std::uint64_t) { switching_example(r); }},
      {"sigma-example", [](SuiteResult& r, std::uint64_t) { sigma_example(r); }},
      {"complement-example", [](SuiteResult& r, std::uint64_t) { complement_example(r); }},
      {"example-4-2", [](SuiteResult& r, std::uint64_t) { rsk_example(r); }},
      {"product-example", [](SuiteResult& r, std::uint64_t) { product_example(r); }},
      {"hw", highest_weight_suite},
      {"cauchy", [](SuiteResult& r, std::uint64_t) { cauchy_suite(r); }},
      {"jt", [](SuiteResult& r, std::uint64_t) { jt_suite(r); }},
      {"hexp", [](SuiteResult& r, std::uint64_t) { hexp_suite(r); }},
      {"roundtrip", [](SuiteResult& r, std::uint64_t) { roundtrip_suite(r); }},
      {"coeff-symmetry", [](SuiteResult& r, std::uint64_t) { coeff_suite(r); }},
      {"stroomer", [](SuiteResult& r, std::uint64_t) { stroomer_suite(r); }},
      {"switching-determinism", [](SuiteResult& r, std::uint64_t) { determinism_suite(r); }},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, f] : registry()) v.push_back(k);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& v = suite_names();
  return std::find(v.begin(), v.end(), name) != v.end();
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
  for (const auto& [k, f] : registry()) {
    if (k != name) continue;
    SuiteResult r{name, {}, nullptr, 0};
    auto t0 = std::chrono::steady_clock::now();
    Cases ok{r.cases};
    guarded(ok, name, [&] { f(r, seed); });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::Usage, "unknown suite " + name);
}

nlohmann::json to_json(const SuiteResult& r) {
  auto cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json j{{"case", c.key}, {"ok", c.ok}};
    if (!c.ok) j["detail"] = c.detail;
    cases.push_back(std::move(j));
  }
  nlohmann::json j{{"suite", r.name}, {"ok", r.ok()}, {"failed", r.failed()}, {"cases", cases}};
  if (!r.data.is_null()) j["data"] = r.data;
  return j;
}

}  // namespace tabkit
