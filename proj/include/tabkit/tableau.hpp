#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tabkit/alphabet.hpp"
#include "tabkit/shape.hpp"

namespace tabkit {

struct Cell {
  int r = 0;
  int c = 0;
  auto operator<=>(const Cell&) const = default;
};

// Filling of outer/inner. Entries are positions in the alphabet, so the
// alphabet order is plain integer order. Coordinates are 0-based; row r
// holds columns inner[r] .. outer[r]-1.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(AlphabetPtr a) : alpha_(std::move(a)) {}
  Tableau(AlphabetPtr a, Partition outer, Partition inner, std::vector<std::vector<int>> rows);
  // Straight shape read off the row lengths.
  static Tableau straight(AlphabetPtr a, std::vector<std::vector<int>> rows);
  // Rows given by labels.
  static Tableau from_labels(AlphabetPtr a, const Partition& outer, const Partition& inner,
                             const std::vector<std::vector<std::string>>& rows);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  SkewShape shape() const { return {outer_, inner_}; }
  int num_rows() const { return outer_.length(); }
  int size() const { return outer_.size() - inner_.size(); }
  bool empty() const { return size() == 0; }
  bool is_straight() const { return inner_.empty(); }
  bool has_cell(int r, int c) const { return r >= 0 && r < num_rows() && c >= inner_[r] && c < outer_[r]; }

  int at(int r, int c) const { return rows_[r][c - inner_[r]]; }
  void set(int r, int c, int v) { rows_[r][c - inner_[r]] = v; }
  // Skew part of row r, left to right.
  const std::vector<int>& row(int r) const { return rows_[r]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<Cell> cells() const;  // row-major

  int parity(int v) const { return alpha_->parity(v); }

  // Same letters, same shape, same entries. Alphabet names are ignored.
  bool operator==(const Tableau& o) const;

 private:
  AlphabetPtr alpha_;
  Partition outer_;
  Partition inner_;
  std::vector<std::vector<int>> rows_;
};

using Word = std::vector<int>;

// Conditions of semistandardness; shape consistency is enforced on construction.
bool validate(const Tableau& t);
void require_valid(const Tableau& t, const std::string& what);

Word word_col(const Tableau& t);
Word word_row(const Tableau& t);
// Multiplicity of every alphabet position.
std::vector<int> weight(const Tableau& t);

Tableau transpose(const Tableau& t);
// 180 degree rotation inside a rows x cols box (defaults: smallest box).
Tableau rotate(const Tableau& t);
Tableau rotate(const Tableau& t, int rows, int cols);
Tableau sharp_t(const Tableau& t);
Tableau glue(const Tableau& s, const Tableau& t);
// Same cells and letters over another alphabet with the same label set.
Tableau relabel(const Tableau& t, const AlphabetPtr& target);
// Entries mapped through f, placed over target.
Tableau map_entries(const Tableau& t, const AlphabetPtr& target, const std::function<int(int)>& f);
// Cells with entries in [lo, hi], as a skew tableau over the same alphabet.
Tableau restrict_range(const Tableau& t, int lo, int hi);
// Column of a straight shape, top to bottom.
std::vector<int> column(const Tableau& t, int c);
// Single-row / single-column tableaux.
Tableau row_tableau(AlphabetPtr a, std::vector<int> entries);

// All semistandard fillings, in a fixed order.
std::vector<Tableau> enumerate_sst_serial(const SkewShape& sh, const AlphabetPtr& a);
std::vector<Tableau> enumerate_sst(const SkewShape& sh, const AlphabetPtr& a);  // OpenMP
long long count_sst(const SkewShape& sh, const AlphabetPtr& a);
// Visits each filling without storing; f gets the rows.
void for_each_sst(const SkewShape& sh, const AlphabetPtr& a,
                  const std::function<void(const std::vector<std::vector<int>>&)>& f);
// SST_a(p) is non-empty iff p fits the (#parity-0, #parity-1) hook.
bool in_hook(const Partition& p, const GradedAlphabet& a);

nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);
// Alphabet as a builtin name if it is one, else inline.
nlohmann::json alphabet_ref(const AlphabetPtr& a);
std::string to_ascii(const Tableau& t);
std::string labels_of(const Tableau& t);  // rows joined, for diagnostics

}  // namespace tabkit
