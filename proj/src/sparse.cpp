#include "veronalt/sparse.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "veronalt/error.hpp"

namespace veronalt {
namespace {

// Dense scatter buffer reused across reductions on the same thread.
struct Workspace {
  std::vector<Rational> value;
  std::vector<char> live;
  std::vector<std::uint32_t> heap;
  Rational tmp;

  void ensure(std::size_t cols) {
    if (value.size() < cols) {
      value.resize(cols);
      live.resize(cols, 0);
    }
  }
  void push(std::uint32_t c) {
    heap.push_back(c);
    std::push_heap(heap.begin(), heap.end(), std::greater<>());
  }
  std::uint32_t pop() {
    std::pop_heap(heap.begin(), heap.end(), std::greater<>());
    const auto c = heap.back();
    heap.pop_back();
    return c;
  }
};

Workspace& workspace() {
  thread_local Workspace ws;
  return ws;
}

}  // namespace

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (a == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      Rational v = i->second + a * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

SparseVec scaled(SparseVec v, const Rational& a) {
  if (a == 0) return {};
  for (auto& [c, x] : v) x *= a;
  return v;
}

SparseVec collect(std::vector<std::pair<std::uint32_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, std::move(v));
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

SparseVec Echelon::reduce(const SparseVec& v) const {
  SparseVec out;
  if (v.empty()) return out;
  Workspace& ws = workspace();
  ws.ensure(cols());
  ws.heap.clear();
  for (const auto& [c, x] : v) {
    if (c >= cols()) throw Error("vector column out of range");
    ws.value[c] = x;
    ws.live[c] = 1;
    ws.push(c);
  }
  while (!ws.heap.empty()) {
    const std::uint32_t c = ws.pop();
    ws.live[c] = 0;
    if (ws.value[c] == 0) continue;
    const std::int32_t r = row_of_[c];
    if (r < 0) {
      out.emplace_back(c, std::move(ws.value[c]));
      ws.value[c] = 0;
      continue;
    }
    const SparseVec& row = rows_[static_cast<std::size_t>(r)];
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto j = row[k].first;
      mpq_mul(ws.tmp.get_mpq_t(), ws.value[c].get_mpq_t(), row[k].second.get_mpq_t());
      if (!ws.live[j]) {
        ws.live[j] = 1;
        ws.value[j] = -ws.tmp;
        ws.push(j);
      } else {
        ws.value[j] -= ws.tmp;
      }
    }
    ws.value[c] = 0;
  }
  return out;
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  const Rational lead = r.front().second;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    for (auto& [c, x] : r) x *= inv;
  }
  row_of_[r.front().first] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  reduced_ = rows_.size() <= 1 && reduced_;
  return true;
}

void Echelon::make_reduced() {
  if (reduced_) return;
  auto piv = pivots();
  for (auto it = piv.rbegin(); it != piv.rend(); ++it) {
    SparseVec& row = rows_[static_cast<std::size_t>(row_of_[*it])];
    if (row.size() <= 1) continue;
    SparseVec tail(std::make_move_iterator(row.begin() + 1), std::make_move_iterator(row.end()));
    tail = reduce(tail);
    row.resize(1);
    row.insert(row.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
  }
  reduced_ = true;
}

std::vector<std::uint32_t> Echelon::pivots() const {
  std::vector<std::uint32_t> p;
  p.reserve(rows_.size());
  for (std::uint32_t c = 0; c < row_of_.size(); ++c)
    if (row_of_[c] >= 0) p.push_back(c);
  return p;
}

std::vector<SparseVec> Echelon::basis() const {
  std::vector<SparseVec> b;
  b.reserve(rows_.size());
  for (auto c : pivots()) b.push_back(pivot_row(c));
  return b;
}

std::vector<SparseVec> left_kernel(std::span<const SparseVec> rows, std::size_t cols) {
  Echelon e(cols + rows.size());
  std::vector<SparseVec> kernel;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec aug = rows[i];
    aug.emplace_back(static_cast<std::uint32_t>(cols + i), Rational(1));
    SparseVec r = e.reduce(aug);
    if (!r.empty() && r.front().first >= cols) {
      SparseVec k;
      const Rational inv = 1 / r.front().second;
      for (auto& [c, x] : r) k.emplace_back(static_cast<std::uint32_t>(c - cols), x * inv);
      kernel.push_back(std::move(k));
    }
    e.insert(r);
  }
  return kernel;
}

std::size_t rank_of(std::span<const SparseVec> rows, std::size_t cols) {
  Echelon e(cols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace veronalt
