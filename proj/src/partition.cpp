// partition.cpp - diagram arithmetic.
#include "cyclo/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>

#include "cyclo/errors.hpp"

namespace cyclo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw InputError("parts are not weakly decreasing: " + to_string(*this));
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::column_length(int col) const {
  int len = 0;
  while (len < length() && parts_[len] >= col) ++len;
  return len;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 1; col <= part(1); ++col) out.push_back(column_length(col));
  return Partition(std::move(out));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  // Larger in lexicographic order comes first.
  return other.parts_ <=> parts_;
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> out(std::max(a.length(), b.length()));
  for (int i = 0; i < static_cast<int>(out.size()); ++i) out[i] = a.part(i + 1) + b.part(i + 1);
  return Partition(std::move(out));
}

Partition scale(const Partition& p, int k) {
  std::vector<int> out = p.parts();
  for (int& v : out) v *= k;
  return Partition(std::move(out));
}

Multipartition::Multipartition(int level) : components_(level) {
  if (level < 1) throw InputError("level must be positive");
}

Multipartition::Multipartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InputError("level must be positive");
  for (const auto& p : components_) size_ += p.size();
}

Multipartition Multipartition::with_component(int i, Partition p) const {
  auto comps = components_;
  comps.at(i) = std::move(p);
  return Multipartition(std::move(comps));
}

std::strong_ordering Multipartition::operator<=>(const Multipartition& other) const {
  if (auto c = size_ <=> other.size_; c != 0) return c;
  if (auto c = level() <=> other.level(); c != 0) return c;
  for (int i = 0; i < level(); ++i) {
    if (auto c = other.components_[i].parts() <=> components_[i].parts(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out + "]";
}

std::string to_string(const Multipartition& m) {
  std::string out = "[";
  for (int i = 0; i < m.level(); ++i) {
    if (i) out += ',';
    out += to_string(m[i]);
  }
  return out + "]";
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;  // already lexicographically descending
}

std::vector<Multipartition> enumerate_multipartitions(int level, int n) {
  if (level < 1 || n < 0) throw InputError("enumerate_multipartitions: need level >= 1, n >= 0");
  std::vector<std::vector<Partition>> by_size(n + 1);
  for (int k = 0; k <= n; ++k) by_size[k] = enumerate_partitions(k);

  std::vector<Multipartition> out;
  std::vector<Partition> cur(level);
  std::function<void(int, int)> rec = [&](int comp, int remaining) {
    if (comp == level - 1) {
      for (const auto& p : by_size[remaining]) {
        cur[comp] = p;
        out.emplace_back(cur);
      }
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      for (const auto& p : by_size[k]) {
        cur[comp] = p;
        rec(comp + 1, remaining - k);
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

long count_multipartitions(int level, int n) {
  // Coefficients of prod_k (1 - x^k)^{-level}.
  std::vector<long> coeff(n + 1, 0);
  coeff[0] = 1;
  for (int copy = 0; copy < level; ++copy) {
    for (int k = 1; k <= n; ++k) {
      for (int m = k; m <= n; ++m) coeff[m] += coeff[m - k];
    }
  }
  return coeff[n];
}

std::vector<Box> boxes(const Multipartition& m) {
  std::vector<Box> out;
  for (int i = 0; i < m.level(); ++i) {
    for (int y = 1; y <= m[i].length(); ++y) {
      for (int x = 1; x <= m[i].part(y); ++x) out.push_back({x, y, i});
    }
  }
  return out;
}

std::vector<Box> addable_boxes(const Partition& p, int comp) {
  std::vector<Box> out;
  for (int y = 1; y <= p.length() + 1; ++y) {
    if (y == 1 || p.part(y - 1) > p.part(y)) out.push_back({p.part(y) + 1, y, comp});
  }
  return out;
}

std::vector<Box> removable_boxes(const Partition& p, int comp) {
  std::vector<Box> out;
  for (int y = 1; y <= p.length(); ++y) {
    if (p.part(y) > p.part(y + 1)) out.push_back({p.part(y), y, comp});
  }
  return out;
}

std::vector<Box> addable_boxes(const Multipartition& m) {
  std::vector<Box> out;
  for (int i = 0; i < m.level(); ++i) {
    auto part = addable_boxes(m[i], i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<Box> removable_boxes(const Multipartition& m) {
  std::vector<Box> out;
  for (int i = 0; i < m.level(); ++i) {
    auto part = removable_boxes(m[i], i);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool is_addable(const Multipartition& m, const Box& b) {
  if (b.comp < 0 || b.comp >= m.level() || b.x < 1 || b.y < 1) return false;
  const Partition& p = m[b.comp];
  return p.part(b.y) == b.x - 1 && (b.y == 1 || p.part(b.y - 1) >= b.x);
}

bool is_removable(const Multipartition& m, const Box& b) {
  if (b.comp < 0 || b.comp >= m.level() || b.x < 1 || b.y < 1) return false;
  const Partition& p = m[b.comp];
  return p.part(b.y) == b.x && p.part(b.y + 1) < b.x;
}

Multipartition add_box(const Multipartition& m, const Box& b) {
  if (!is_addable(m, b))
    throw InvalidMove("box (" + std::to_string(b.x) + "," + std::to_string(b.y) + "," +
                      std::to_string(b.comp) + ") is not addable to " + to_string(m));
  std::vector<int> parts = m[b.comp].parts();
  if (b.y > static_cast<int>(parts.size())) parts.push_back(0);
  parts[b.y - 1] += 1;
  return m.with_component(b.comp, Partition(std::move(parts)));
}

Multipartition remove_box(const Multipartition& m, const Box& b) {
  if (!is_removable(m, b))
    throw InvalidMove("box (" + std::to_string(b.x) + "," + std::to_string(b.y) + "," +
                      std::to_string(b.comp) + ") is not removable from " + to_string(m));
  std::vector<int> parts = m[b.comp].parts();
  parts[b.y - 1] -= 1;
  return m.with_component(b.comp, Partition(std::move(parts)));
}

Partition transpose(const Partition& p) { return p.conjugate(); }

Multipartition transpose(const Multipartition& m) {
  std::vector<Partition> comps;
  for (const auto& p : m.components()) comps.push_back(p.conjugate());
  return Multipartition(std::move(comps));
}

Division divide_with_remainder(const Partition& nu, int e) {
  if (e < 2) throw InputError("divide_with_remainder: e must be at least 2");
  const int len = nu.length();
  std::vector<int> rem(len), quo(len);
  int below = 0;
  for (int i = len; i >= 1; --i) {
    int r = below + ((nu.part(i) - below) % e + e) % e;
    rem[i - 1] = r;
    quo[i - 1] = (nu.part(i) - r) / e;
    below = r;
  }
  return {Partition(std::move(quo)), Partition(std::move(rem))};
}

namespace {

using Cell = std::pair<int, int>;  // (row, column)

// Edge-connected and free of 2x2 squares.
bool is_border_strip(const std::set<Cell>& cells) {
  if (cells.empty()) return false;
  for (const auto& [r, c] : cells) {
    if (cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1}))
      return false;
  }
  std::set<Cell> seen;
  std::vector<Cell> stack{*cells.begin()};
  seen.insert(*cells.begin());
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (Cell n : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}}) {
      if (cells.count(n) && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == cells.size();
}

std::set<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::set<Cell> cells;
  for (int row = 1; row <= outer.length(); ++row) {
    for (int col = inner.part(row) + 1; col <= outer.part(row); ++col) cells.insert({row, col});
  }
  return cells;
}

int rows_spanned(const std::set<Cell>& cells) {
  std::set<int> rows;
  for (const auto& c : cells) rows.insert(c.first);
  return static_cast<int>(rows.size());
}

}  // namespace

std::vector<RibbonMove> ribbon_moves(const Partition& nu, int r, RibbonDirection dir) {
  if (r < 1) throw InputError("ribbon size must be positive");
  std::vector<RibbonMove> out;
  std::vector<int> cur;

  if (dir == RibbonDirection::add) {
    const int rows = nu.length() + r;
    std::function<void(int, int, int)> rec = [&](int row, int cap, int remaining) {
      if (row > rows) {
        if (remaining != 0) return;
        Partition mu(cur);
        auto cells = skew_cells(mu, nu);
        if (is_border_strip(cells)) out.push_back({mu, rows_spanned(cells) - 1});
        return;
      }
      const int base = nu.part(row);
      for (int v = std::min(cap, base + remaining); v >= base; --v) {
        cur.push_back(v);
        rec(row + 1, v, remaining - (v - base));
        cur.pop_back();
      }
    };
    rec(1, nu.part(1) + r, r);
  } else {
    if (nu.size() < r) return out;
    std::function<void(int, int, int)> rec = [&](int row, int cap, int remaining) {
      if (row > nu.length()) {
        if (remaining != 0) return;
        Partition mu(cur);
        auto cells = skew_cells(nu, mu);
        if (is_border_strip(cells)) out.push_back({mu, rows_spanned(cells) - 1});
        return;
      }
      const int top = std::min(cap, nu.part(row));
      for (int v = top; v >= std::max(0, nu.part(row) - remaining); --v) {
        cur.push_back(v);
        rec(row + 1, v, remaining - (nu.part(row) - v));
        cur.pop_back();
      }
    };
    rec(1, nu.part(1), r);
  }
  std::sort(out.begin(), out.end(),
            [](const RibbonMove& a, const RibbonMove& b) { return a.result < b.result; });
  return out;
}

}  // namespace cyclo
