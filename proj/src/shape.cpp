#include "tabkit/shape.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tabkit/errors.hpp"

namespace tabkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorKind::ShapeMismatch, "negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorKind::ShapeMismatch, "parts not weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int n) const {
  if (length() > n) throw Error(ErrorKind::ShapeMismatch, "partition longer than " + std::to_string(n));
  std::vector<int> v(parts_);
  v.resize(n, 0);
  return v;
}

Partition conjugate(const Partition& p) {
  std::vector<int> c(p[0], 0);
  for (int r = 0; r < p.length(); ++r)
    for (int j = 0; j < p[r]; ++j) ++c[j];
  return Partition(std::move(c));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
  if (!contains(outer, inner)) return false;
  // at most one cell per column: outer_{i+1} <= inner_i
  for (int i = 0; i + 1 < outer.length(); ++i)
    if (outer[i + 1] > inner[i]) return false;
  return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
  return is_horizontal_strip(conjugate(outer), conjugate(inner));
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int v = 1; v <= bound; ++v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(cols);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_of(int n, int max_rows, int max_cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int bound) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) == max_rows) return;
    for (int v = std::min(left, bound); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(n, max_cols < 0 ? n : max_cols);
  return out;
}

Partition delta_shape(const Partition& p, int n, int k) {
  if (p.length() > n) throw Error(ErrorKind::ShapeMismatch, "partition has more than n rows");
  if (k < p[0]) throw Error(ErrorKind::RectangleTooSmall, "k=" + std::to_string(k) + " < first part");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = k - p[n - 1 - i];
  return Partition(std::move(v));
}

Partition add_rect(const Partition& p, int n, int d) {
  auto v = p.padded(n);
  for (auto& x : v) x += d;
  return Partition(std::move(v));
}

GenPartition::GenPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] > parts_[i - 1]) throw Error(ErrorKind::ShapeMismatch, "parts not weakly decreasing");
}

GenPartition GenPartition::pad(const Partition& p, int n) { return GenPartition(p.padded(n)); }

int GenPartition::degree() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int GenPartition::abs_size() const {
  int s = 0;
  for (int x : parts_) s += x < 0 ? -x : x;
  return s;
}

Partition GenPartition::to_partition() const {
  if (!is_partition()) throw Error(ErrorKind::ShapeMismatch, "negative part: " + to_string(*this));
  return Partition(parts_);
}

GenPartition star(const GenPartition& l) {
  std::vector<int> v(l.parts().rbegin(), l.parts().rend());
  for (auto& x : v) x = -x;
  return GenPartition(std::move(v));
}

std::pair<Partition, Partition> plus_minus(const GenPartition& l) {
  std::vector<int> p, m;
  for (int x : l.parts()) p.push_back(std::max(x, 0));
  for (auto it = l.parts().rbegin(); it != l.parts().rend(); ++it) m.push_back(std::max(-*it, 0));
  return {Partition(std::move(p)), Partition(std::move(m))};
}

GenPartition add_rect(const GenPartition& l, int d) {
  auto v = l.parts();
  for (auto& x : v) x += d;
  return GenPartition(std::move(v));
}

GenPartition concat_levels(const GenPartition& a, const GenPartition& b) {
  auto v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return GenPartition(std::move(v));
}

int column_length(const GenPartition& l, int col) {
  if (col == 0) throw Error(ErrorKind::Usage, "column index 0");
  int c = 0;
  for (int x : l.parts()) c += col > 0 ? (x >= col) : (x <= col);
  return c;
}

std::vector<GenPartition> gen_partitions(int n, int lo, int hi) {
  std::vector<GenPartition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int bound) {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = bound; v >= lo; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  if (n >= 0 && lo <= hi) rec(hi);
  return out;
}

GenPartition delta_shape(const GenPartition& l, int k) {
  int n = l.level();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = k - l[n - 1 - i];
  return GenPartition(std::move(v));
}

namespace {
std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}
}  // namespace

std::string to_string(const Partition& p) { return join(p.parts()); }
std::string to_string(const GenPartition& g) { return join(g.parts()); }

nlohmann::json to_json(const Partition& p) { return p.parts(); }

nlohmann::json to_json(const GenPartition& g) { return {{"level", g.level()}, {"parts", g.parts()}}; }

Partition partition_from_json(const nlohmann::json& j) { return Partition(j.get<std::vector<int>>()); }

GenPartition gen_partition_from_json(const nlohmann::json& j) {
  if (j.is_array()) return GenPartition(j.get<std::vector<int>>());
  GenPartition g(j.at("parts").get<std::vector<int>>());
  if (j.contains("level") && j["level"].get<int>() != g.level())
    throw Error(ErrorKind::ShapeMismatch, "level does not match number of parts");
  return g;
}

}  // namespace tabkit
