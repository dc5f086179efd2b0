#include "tabkit/switching.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tabkit/errors.hpp"

namespace tabkit {

MixedTableau::MixedTableau(AlphabetPtr a, AlphabetPtr b, Partition outer, Partition inner)
    : a_(std::move(a)), b_(std::move(b)), outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) throw Error(ErrorKind::ShapeMismatch, "inner not contained in outer");
  grid_.resize(outer_.length());
  for (int r = 0; r < outer_.length(); ++r) grid_[r].resize(outer_[r] - inner_[r]);
}

MixedTableau MixedTableau::glued(const Tableau& s, const Tableau& t) {
  if (s.outer() != t.inner()) throw Error(ErrorKind::ShapeMismatch, "S must fill the inner shape of T");
  MixedTableau m(s.alphabet(), t.alphabet(), t.outer(), s.inner());
  for (const auto& [r, c] : s.cells()) m.at(r, c) = {s.at(r, c), Origin::A};
  for (const auto& [r, c] : t.cells()) m.at(r, c) = {t.at(r, c), Origin::B};
  return m;
}

bool MixedTableau::valid_at(Cell p) const {
  const MixedEntry& e = at(p.r, p.c);
  const int par = parity(e);
  for (int r = 0; r < outer_.length(); ++r)
    for (int c = inner_[r]; c < outer_[r]; ++c) {
      if (r == p.r && c == p.c) continue;
      const MixedEntry& f = at(r, c);
      if (f.origin != e.origin) continue;
      if (r <= p.r && c <= p.c && f.value > e.value) return false;
      if (r >= p.r && c >= p.c && f.value < e.value) return false;
      if (f.value == e.value) {
        if (c == p.c && par == 0) return false;
        if (r == p.r && par == 1) return false;
      }
    }
  return true;
}

bool MixedTableau::valid() const {
  for (int r = 0; r < outer_.length(); ++r)
    for (int c = inner_[r]; c < outer_[r]; ++c)
      if (!valid_at({r, c})) return false;
  return true;
}

bool MixedTableau::try_switch(Cell p, Cell q) {
  if (!has_cell(q.r, q.c)) return false;
  auto& e = at(p.r, p.c);
  auto& f = at(q.r, q.c);
  if (e.origin != Origin::A || f.origin != Origin::B) return false;
  std::swap(e, f);
  if (valid_at(p) && valid_at(q)) return true;
  std::swap(e, f);
  return false;
}

std::pair<Tableau, Tableau> MixedTableau::split_b_inside() const {
  std::vector<int> nu(outer_.length());
  std::vector<std::vector<int>> bs(outer_.length()), as(outer_.length());
  for (int r = 0; r < outer_.length(); ++r) {
    nu[r] = inner_[r];
    bool seen_a = false;
    for (int c = inner_[r]; c < outer_[r]; ++c) {
      const auto& e = at(r, c);
      if (e.origin == Origin::B) {
        ensure(!seen_a, "B entry right of an A entry after switching");
        bs[r].push_back(e.value);
        ++nu[r];
      } else {
        seen_a = true;
        as[r].push_back(e.value);
      }
    }
  }
  Partition nup(nu);
  return {Tableau(b_, nup, inner_, std::move(bs)), Tableau(a_, outer_, nup, std::move(as))};
}

SwitchResult switch_full(const Tableau& s, const Tableau& t, ScanOrder order) {
  require_valid(s, "S");
  require_valid(t, "T");
  MixedTableau m = MixedTableau::glued(s, t);
  std::vector<Cell> cells;
  for (int r = 0; r < m.outer().length(); ++r)
    for (int c = m.inner()[r]; c < m.outer()[r]; ++c) cells.push_back({r, c});
  if (order == ScanOrder::LastFirst) std::reverse(cells.begin(), cells.end());
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& p : cells) {
      if (m.at(p.r, p.c).origin != Origin::A) continue;
      if (m.try_switch(p, {p.r + 1, p.c}) || m.try_switch(p, {p.r, p.c + 1})) {
        moved = true;
        break;
      }
    }
  }
  auto [tp, sp] = m.split_b_inside();
  return {std::move(tp), std::move(sp)};
}

Tableau h_tableau(const Partition& mu) {
  ensure(mu.length() <= kNatCap, "partition too long for the recording alphabet");
  std::vector<std::vector<int>> rows(mu.length());
  for (int r = 0; r < mu.length(); ++r) rows[r].assign(mu[r], r);
  return Tableau(nat(), mu, Partition{}, std::move(rows));
}

bool is_lattice(const Word& w) {
  std::vector<int> cnt;
  for (int v : w) {
    if (v >= static_cast<int>(cnt.size())) cnt.resize(v + 1, 0);
    ++cnt[v];
    if (v > 0 && cnt[v] > cnt[v - 1]) return false;
  }
  return true;
}

Partition lr_content(const Tableau& q) {
  auto w = weight(q);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] > w[i - 1]) throw Error(ErrorKind::NotLR, "content is not a partition");
  return Partition(w);
}

bool is_LR(const Tableau& t, const Partition& nu) {
  for (int i = 0; i < t.alphabet()->size(); ++i)
    if (t.alphabet()->parity(i) != 0) return false;
  if (!validate(t)) return false;
  auto w = weight(t);
  while (!w.empty() && w.back() == 0) w.pop_back();
  if (w != nu.parts()) return false;
  return is_lattice(word_col(t));
}

namespace {

// Backtracking in reading order (columns right to left, top to bottom), so the
// lattice condition prunes prefixes.
template <class Emit>
void lr_fill(const Partition& lam, const Partition& mu, const Partition& nu, Emit&& emit) {
  if (!contains(lam, mu) || !contains(lam, nu) || lam.size() != mu.size() + nu.size()) return;
  std::vector<Cell> order;
  for (int c = lam[0] - 1; c >= 0; --c)
    for (int r = 0; r < lam.length(); ++r)
      if (c >= mu[r] && c < lam[r]) order.push_back({r, c});
  std::vector<std::vector<int>> rows(lam.length());
  for (int r = 0; r < lam.length(); ++r) rows[r].assign(lam[r] - mu[r], -1);
  auto get = [&](int r, int c) { return rows[r][c - mu[r]]; };
  std::vector<int> cnt(nu.length(), 0);
  const int k = nu.length();
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      emit(rows);
      return;
    }
    auto [r, c] = order[i];
    int lo = 0, hi = k - 1;
    if (r > 0 && c >= mu[r - 1]) lo = get(r - 1, c) + 1;
    if (c + 1 < lam[r]) hi = std::min(hi, get(r, c + 1));
    for (int v = lo; v <= hi; ++v) {
      if (cnt[v] == nu[v]) continue;
      if (v > 0 && cnt[v] + 1 > cnt[v - 1]) continue;
      ++cnt[v];
      rows[r][c - mu[r]] = v;
      rec(i + 1);
      --cnt[v];
    }
    rows[r][c - mu[r]] = -1;
  };
  rec(0);
}

}  // namespace

std::vector<Tableau> enumerate_LR(const Partition& lambda, const Partition& mu, const Partition& nu) {
  std::vector<Tableau> out;
  lr_fill(lambda, mu, nu, [&](const auto& rows) { out.emplace_back(nat(), lambda, mu, rows); });
  return out;
}

long long lr_count(const Partition& lambda, const Partition& mu, const Partition& nu) {
  long long n = 0;
  lr_fill(lambda, mu, nu, [&](const auto&) { ++n; });
  return n;
}

JdtResult jdt(const Tableau& t, ScanOrder order) {
  auto r = switch_full(h_tableau(t.inner()), t, order);
  return {std::move(r.tprime), std::move(r.sprime)};
}

Tableau jdt_with(const Tableau& s, const Tableau& t) { return switch_full(s, t).tprime; }

Tableau jdt_inv(const Tableau& rect, const Tableau& rec) {
  if (!rect.is_straight() || rect.outer() != rec.inner())
    throw Error(ErrorKind::InverseMismatch, "j(T) must fill the inner shape of the recording");
  auto r = switch_full(rect, rec);
  if (!(r.tprime == h_tableau(r.tprime.outer())))
    throw Error(ErrorKind::InverseMismatch, "switching back does not produce H^mu");
  return std::move(r.sprime);
}

Tableau theta(const Tableau& q) {
  if (!is_LR(q, lr_content(q))) throw Error(ErrorKind::NotLR, labels_of(q));
  return jdt(q).rec;
}

namespace {
Tableau to_nat(const Tableau& t) { return map_entries(t, nat(), [](int v) { return v; }); }
}  // namespace

Tableau tau(const Tableau& q) {
  if (!is_LR(q, lr_content(q))) throw Error(ErrorKind::NotLR, labels_of(q));
  Partition nu = lr_content(q);
  auto r = switch_full(h_tableau(conjugate(q.inner())), transpose(q));
  ensure(r.tprime == transpose(h_tableau(nu)), "tau: switched part is not (H^nu)^t");
  return theta(r.sprime);
}

Tableau tau_inv(const Tableau& q) {
  if (!is_LR(q, lr_content(q))) throw Error(ErrorKind::NotLR, labels_of(q));
  Tableau sp = theta(q);  // LR^{lambda'}_{nu' mu'}
  Partition nu = conjugate(sp.inner());
  auto r = switch_full(transpose(h_tableau(nu)), sp);
  if (!(r.tprime == h_tableau(r.tprime.outer())))
    throw Error(ErrorKind::InverseMismatch, "tau_inv: switched part is not H^{mu'}");
  return to_nat(transpose(r.sprime));
}

namespace {

void same_letter_set(const GradedAlphabet& a, const GradedAlphabet& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::AlphabetMismatch, "alphabet sizes differ");
  for (const auto& l : a.letters()) {
    int p = b.find(l.label);
    if (p < 0 || b.parity(p) != l.parity)
      throw Error(ErrorKind::AlphabetMismatch, "letter " + l.label + " missing or regraded");
  }
}

// Adjacent transpositions (positions) that sort `from` into the order of `to`.
std::vector<int> bubble_swaps(const GradedAlphabet& from, const GradedAlphabet& to) {
  std::vector<int> rank;
  for (const auto& l : from.letters()) rank.push_back(to.at(l.label));
  std::vector<int> swaps;
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < rank.size(); ++i)
      if (rank[i] > rank[i + 1]) {
        std::swap(rank[i], rank[i + 1]);
        swaps.push_back(static_cast<int>(i));
        again = true;
      }
  }
  return swaps;
}

// Exchange the order of letters i and i+1 by switching their cells.
Tableau swap_adjacent(const Tableau& u, int i) {
  const auto& al = *u.alphabet();
  auto ls = al.letters();
  std::swap(ls[i], ls[i + 1]);
  auto next = make_alphabet(al.name(), ls, al.truncation_of());
  auto ax = make_alphabet("x", {al[i]});
  auto ay = make_alphabet("y", {al[i + 1]});
  auto sub = restrict_range(u, i, i + 1);
  auto xs = map_entries(restrict_range(sub, i, i), ax, [](int) { return 0; });
  auto ys = map_entries(restrict_range(sub, i + 1, i + 1), ay, [](int) { return 0; });
  auto sw = switch_full(xs, ys);
  auto rows = u.rows();
  auto put = [&](const Tableau& part, int val) {
    for (const auto& [r, c] : part.cells()) rows[r][c - u.inner()[r]] = val;
  };
  put(sw.tprime, i);
  put(sw.sprime, i + 1);
  return Tableau(next, u.outer(), u.inner(), std::move(rows));
}

}  // namespace

Tableau reorder_bijection(const Tableau& t, const AlphabetPtr& target) {
  same_letter_set(*t.alphabet(), *target);
  require_valid(t, "input");
  Tableau u = t;
  for (int i : bubble_swaps(*t.alphabet(), *target)) u = swap_adjacent(u, i);
  return relabel(u, target);
}

Tableau reorder_bijection_inv(const Tableau& u, const AlphabetPtr& source) {
  same_letter_set(*u.alphabet(), *source);
  require_valid(u, "input");
  auto swaps = bubble_swaps(*source, *u.alphabet());
  // replay the forward alphabets so each step can be undone in place
  std::vector<AlphabetPtr> stages{source};
  for (int i : swaps) {
    auto ls = stages.back()->letters();
    std::swap(ls[i], ls[i + 1]);
    stages.push_back(make_alphabet(source->name(), ls));
  }
  Tableau cur = relabel(u, stages.back());
  for (int k = static_cast<int>(swaps.size()) - 1; k >= 0; --k) cur = swap_adjacent(cur, swaps[k]);
  return relabel(cur, source);
}

}  // namespace tabkit
