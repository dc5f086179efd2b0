#pragma once

#include <utility>
#include <vector>

#include "tabkit/tableau.hpp"

namespace tabkit {

struct InsertionResult {
  Tableau result;
  Tableau recording;
};

// Single letters. The returned cell is the one added (or removed).
std::pair<Tableau, Cell> col_insert_letter(const Tableau& t, int a);
std::pair<Tableau, Cell> row_insert_letter(int a, const Tableau& t);
// Reverse bumping from a corner; returns the smaller tableau and the ejected letter.
std::pair<Tableau, int> col_uninsert(const Tableau& t, Cell corner);
std::pair<Tableau, int> row_uninsert(const Tableau& t, Cell corner);

// (T <- T'): word_col(T') column-inserted, recording over nat() labelled by row of T'.
InsertionResult col_insert_tableau(const Tableau& t, const Tableau& tp);
// (T' -> T): word_row(T') row-inserted, recording over nat_primed() labelled by column of T'.
InsertionResult row_insert_tableau(const Tableau& tp, const Tableau& t);

// (P, Q) with Q in LR^lambda_{mu nu}, over nat().
std::pair<Tableau, Tableau> rho_col(const Tableau& t, const Tableau& tp);
std::pair<Tableau, Tableau> rho_col_inv(const Tableau& p, const Tableau& q);
// (P, Q^t) with Q^t in LR^{eta'}_{mu' nu'}, over nat().
std::pair<Tableau, Tableau> rho_row(const Tableau& t, const Tableau& tp);
std::pair<Tableau, Tableau> rho_row_inv(const Tableau& p, const Tableau& qt);
// Inverses from the raw recording tableaux (labels: row resp. column of T').
std::pair<Tableau, Tableau> uninsert_col(const Tableau& p, const Tableau& rec);
std::pair<Tableau, Tableau> uninsert_row(const Tableau& p, const Tableau& rec);

struct MultiResult {
  Tableau s;
  Tableau rec;  // over interval(r), horizontal strip i filled with i
};

// Single-row inputs T_1..T_r, all over the same alphabet a.
MultiResult multi_insert_col(const std::vector<Tableau>& rows, const AlphabetPtr& a);
MultiResult multi_insert_row(const std::vector<Tableau>& rows, const AlphabetPtr& a);
std::vector<Tableau> multi_insert_col_inv(const Tableau& s, const Tableau& rec);
std::vector<Tableau> multi_insert_row_inv(const Tableau& s, const Tableau& rec);

}  // namespace tabkit
