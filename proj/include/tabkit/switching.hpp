#pragma once

#include <utility>
#include <vector>

#include "tabkit/tableau.hpp"

namespace tabkit {

enum class Origin : unsigned char { A, B };

struct MixedEntry {
  int value = -1;  // position in the alphabet of its origin
  Origin origin = Origin::A;
};

// Filling of outer/inner by entries of two disjointly tagged alphabets.
class MixedTableau {
 public:
  MixedTableau(AlphabetPtr a, AlphabetPtr b, Partition outer, Partition inner);
  static MixedTableau glued(const Tableau& s, const Tableau& t);  // S over A inside, T over B outside

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool has_cell(int r, int c) const { return r >= 0 && r < outer_.length() && c >= inner_[r] && c < outer_[r]; }
  const MixedEntry& at(int r, int c) const { return grid_[r][c - inner_[r]]; }
  MixedEntry& at(int r, int c) { return grid_[r][c - inner_[r]]; }
  int parity(const MixedEntry& e) const { return (e.origin == Origin::A ? a_ : b_)->parity(e.value); }

  // Conditions (S1)-(S3) for the whole filling.
  bool valid() const;
  // (S1)-(S3) between the entry at p and every other entry of its class.
  bool valid_at(Cell p) const;
  // Swap the A entry at p with the B entry at q (q right of or below p) if legal.
  bool try_switch(Cell p, Cell q);

  // Split a finished filling: B entries inside, A entries outside.
  std::pair<Tableau, Tableau> split_b_inside() const;

  const AlphabetPtr& alpha_a() const { return a_; }
  const AlphabetPtr& alpha_b() const { return b_; }

 private:
  AlphabetPtr a_, b_;
  Partition outer_, inner_;
  std::vector<std::vector<MixedEntry>> grid_;
};

enum class ScanOrder {
  LastFirst,   // lexicographically last switchable A cell first
  FirstFirst,  // forward row-major
};

struct SwitchResult {
  Tableau tprime;  // over T's alphabet, shape nu/kappa
  Tableau sprime;  // over S's alphabet, shape lambda/nu
};

// S of shape mu/kappa over A, T of shape lambda/mu over B.
SwitchResult switch_full(const Tableau& s, const Tableau& t, ScanOrder order = ScanOrder::LastFirst);

Tableau h_tableau(const Partition& mu);
bool is_lattice(const Word& w);
bool is_LR(const Tableau& t, const Partition& nu);
std::vector<Tableau> enumerate_LR(const Partition& lambda, const Partition& mu, const Partition& nu);
long long lr_count(const Partition& lambda, const Partition& mu, const Partition& nu);

struct JdtResult {
  Tableau rect;  // j(T)
  Tableau rec;   // j(T)_R in LR^lambda_{nu mu}
};

JdtResult jdt(const Tableau& t, ScanOrder order = ScanOrder::LastFirst);
// Rectification against an arbitrary companion S of shape mu (over any alphabet).
Tableau jdt_with(const Tableau& s, const Tableau& t);
Tableau jdt_inv(const Tableau& rect, const Tableau& rec);

// LR^lambda_{mu nu} -> LR^lambda_{nu mu}; an involution.
Tableau theta(const Tableau& q);
// LR^lambda_{mu nu} -> LR^{lambda'}_{mu' nu'} and back.
Tableau tau(const Tableau& q);
Tableau tau_inv(const Tableau& q);
// Content of an LR tableau over nat().
Partition lr_content(const Tableau& q);

// Bijection SST_A(lambda/mu) -> SST_target(lambda/mu), target a reordering of A.
Tableau reorder_bijection(const Tableau& t, const AlphabetPtr& target);
Tableau reorder_bijection_inv(const Tableau& u, const AlphabetPtr& source);

}  // namespace tabkit
