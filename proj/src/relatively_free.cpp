#include "veronalt/relatively_free.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <unordered_map>

#include "veronalt/component_cache.hpp"
#include "veronalt/error.hpp"

namespace veronalt {

std::size_t default_degree_cap(std::size_t rank) {
  if (rank <= 2) return 8;
  if (rank == 3) return 6;
  return 5;
}

std::size_t Component::block_code(const MultiDegree& left) const {
  std::size_t code = 0;
  for (std::size_t k = 0; k < left.rank(); ++k) code += left[k] * stride_[k];
  return code;
}

const Component::Block& Component::block(const MultiDegree& left) const {
  if (!left.divides(m_) || left.total() == 0 || left.total() == m_.total())
    throw Error("no product block " + left.to_string() + " in component " + m_.to_string());
  return blocks_[static_cast<std::size_t>(block_of_code_[block_code(left)])];
}

std::optional<std::size_t> Component::standard_index(const Monomial& t) const {
  auto it = std::lower_bound(standard_.begin(), standard_.end(), t);
  if (it == standard_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - standard_.begin());
}

SparseVec Component::product_normal_form(const MultiDegree& left, std::size_t i, std::size_t j) const {
  const Block& b = block(left);
  const auto col = b.column[i * b.right_dim + j];
  if (std_index_[col] >= 0) return {{static_cast<std::uint32_t>(std_index_[col]), Rational(1)}};
  return column_nf_[col];
}

RelativelyFreeAlgebra::RelativelyFreeAlgebra(IdentitySet ids, std::size_t rank, std::optional<std::size_t> cap)
    : ids_(std::move(ids)), rank_(rank), cap_(cap.value_or(default_degree_cap(rank))) {
  if (rank == 0 || rank > Monomial::kMaxGenerators) throw Error("rank must be between 1 and 254");
}

void RelativelyFreeAlgebra::check_cap(std::size_t degree) const {
  if (degree > cap_) throw CapExceeded(degree, cap_, rank_);
}

const Component* RelativelyFreeAlgebra::find(const MultiDegree& m) const {
  std::shared_lock lock(map_mutex_);
  auto it = components_.find(m);
  return it == components_.end() ? nullptr : it->second.get();
}

const Component& RelativelyFreeAlgebra::built(const MultiDegree& m) const {
  const Component* c = find(m);
  if (c == nullptr) throw Error("component " + m.to_string() + " has not been built");
  return *c;
}

const Component& RelativelyFreeAlgebra::component(const MultiDegree& m) {
  ensure(m);
  return built(m);
}

void RelativelyFreeAlgebra::ensure(const MultiDegree& m) {
  if (m.rank() != rank_) throw Error("multidegree " + m.to_string() + " does not match rank " + std::to_string(rank_));
  if (m.total() == 0) throw Error("empty multidegree");
  if (find(m) != nullptr) return;
  check_cap(m.total());
  std::lock_guard build_lock(build_mutex_);
  std::vector<MultiDegree> group;
  std::size_t degree = 0;
  for (const auto& a : sub_multidegrees(m)) {
    if (find(a) != nullptr) continue;
    if (a.total() != degree && !group.empty()) {
      build_all(group);
      group.clear();
    }
    degree = a.total();
    group.push_back(a);
  }
  if (!group.empty()) build_all(group);
}

void RelativelyFreeAlgebra::build_up_to(std::size_t max_degree) {
  check_cap(max_degree);
  std::lock_guard build_lock(build_mutex_);
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<MultiDegree> todo;
    for (auto& m : multidegrees_of_total(rank_, d))
      if (find(m) == nullptr) todo.push_back(std::move(m));
    if (!todo.empty()) build_all(todo);
  }
}

void RelativelyFreeAlgebra::build_all(const std::vector<MultiDegree>& todo) {
  // Every multidegree in `todo` has the same total degree, so their builds only read lower components.
  std::vector<std::unique_ptr<Component>> results(todo.size());
  std::vector<std::exception_ptr> errors(todo.size());
  const long n = static_cast<long>(todo.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads_)
  for (long i = 0; i < n; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = build(todo[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::unique_lock lock(map_mutex_);
  for (std::size_t i = 0; i < todo.size(); ++i) components_.emplace(todo[i], std::move(results[i]));
}

void RelativelyFreeAlgebra::layout_products(Component& c) const {
  const MultiDegree& m = c.m_;
  c.stride_.assign(rank_, 1);
  for (std::size_t k = 1; k < rank_; ++k) c.stride_[k] = c.stride_[k - 1] * (m[k - 1] + 1);
  c.block_of_code_.assign(c.stride_.back() * (m[rank_ - 1] + 1), -1);

  struct Cell {
    Monomial product;
    std::uint32_t block;
    std::uint32_t offset;
  };
  std::vector<Cell> cells;
  for (const auto& a : sub_multidegrees(m)) {
    if (a.total() == m.total()) continue;
    Component::Block blk;
    blk.left = a;
    blk.right = m - a;
    const Component& lc = built(blk.left);
    const Component& rc = built(blk.right);
    blk.right_dim = rc.quotient_dim();
    blk.column.resize(lc.quotient_dim() * rc.quotient_dim());
    const auto bi = static_cast<std::uint32_t>(c.blocks_.size());
    for (std::size_t i = 0; i < lc.quotient_dim(); ++i)
      for (std::size_t j = 0; j < rc.quotient_dim(); ++j)
        cells.push_back({Monomial::product(lc.standard()[i], rc.standard()[j]), bi,
                         static_cast<std::uint32_t>(i * blk.right_dim + j)});
    c.block_of_code_[c.block_code(a)] = static_cast<std::int32_t>(bi);
    c.blocks_.push_back(std::move(blk));
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) { return x.product < y.product; });
  c.std_index_.assign(cells.size(), -1);
  c.column_nf_.assign(cells.size(), {});
  c.standard_.clear();
  std::vector<Monomial> column_monomial;
  column_monomial.reserve(cells.size());
  for (std::size_t col = 0; col < cells.size(); ++col) {
    c.blocks_[cells[col].block].column[cells[col].offset] = static_cast<std::uint32_t>(col);
    column_monomial.push_back(std::move(cells[col].product));
  }
  // Temporarily park the column monomials in standard_; build() picks the standard ones out.
  c.standard_ = std::move(column_monomial);
}

SparseVec RelativelyFreeAlgebra::multiply_built(const MultiDegree& a, const SparseVec& u, const MultiDegree& b,
                                                const SparseVec& v) const {
  if (u.empty() || v.empty()) return {};
  const Component& c = built(a + b);
  const Component::Block& blk = c.block(a);
  std::vector<std::pair<std::uint32_t, Rational>> acc;
  Rational xy;
  for (const auto& [i, x] : u) {
    for (const auto& [j, y] : v) {
      const auto col = blk.column[i * blk.right_dim + j];
      mpq_mul(xy.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
      if (c.std_index_[col] >= 0) {
        acc.emplace_back(static_cast<std::uint32_t>(c.std_index_[col]), xy);
      } else {
        for (const auto& [s, w] : c.column_nf_[col]) acc.emplace_back(s, xy * w);
      }
    }
  }
  return collect(std::move(acc));
}

namespace {

struct SplitTerm {
  Rational coeff;
  Monomial left;
  Monomial right;
};

// Ordered k-tuples of nonzero multidegrees summing to m.
void compositions(const MultiDegree& rest, std::size_t parts, std::vector<MultiDegree>& current,
                  std::vector<std::vector<MultiDegree>>& out) {
  if (parts == 1) {
    current.push_back(rest);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (const auto& a : sub_multidegrees(rest)) {
    if (rest.total() - a.total() < parts - 1) continue;
    current.push_back(a);
    compositions(rest - a, parts - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SparseVec> RelativelyFreeAlgebra::relation_rows(const Component& c) const {
  std::vector<SparseVec> rows;
  const MultiDegree& m = c.m_;
  for (const auto& identity : ids_.multilinear()) {
    const std::size_t k = identity.arity;
    if (k > m.total()) continue;
    std::vector<SplitTerm> terms;
    for (const auto& [t, coeff] : identity.poly.terms()) {
      auto [l, r] = t.split();
      terms.push_back({coeff, std::move(l), std::move(r)});
    }
    std::vector<std::vector<MultiDegree>> tuples;
    std::vector<MultiDegree> current;
    compositions(m, k, current, tuples);

    for (const auto& parts : tuples) {
      std::vector<std::size_t> dims(k);
      bool empty = false;
      for (std::size_t p = 0; p < k; ++p) {
        dims[p] = built(parts[p]).quotient_dim();
        empty = empty || dims[p] == 0;
      }
      if (empty) continue;
      std::vector<std::size_t> index(k, 0);

      // Value of a subtree of the identity with each variable v set to standard monomial index[v] of parts[v].
      auto eval = [&](auto&& self, const Monomial& s) -> NormalVector {
        if (s.is_leaf()) {
          const std::size_t v = s.generator();
          return {parts[v], {{static_cast<std::uint32_t>(index[v]), Rational(1)}}};
        }
        auto [l, r] = s.split();
        NormalVector a = self(self, l);
        NormalVector b = self(self, r);
        return {a.multidegree + b.multidegree, multiply_built(a.multidegree, a.coords, b.multidegree, b.coords)};
      };

      for (;;) {
        std::vector<std::pair<std::uint32_t, Rational>> entries;
        for (const auto& term : terms) {
          NormalVector a = eval(eval, term.left);
          NormalVector b = eval(eval, term.right);
          if (a.coords.empty() || b.coords.empty()) continue;
          const Component::Block& blk = c.block(a.multidegree);
          for (const auto& [i, x] : a.coords)
            for (const auto& [j, y] : b.coords)
              entries.emplace_back(blk.column[i * blk.right_dim + j], term.coeff * x * y);
        }
        SparseVec row = collect(std::move(entries));
        if (!row.empty()) rows.push_back(std::move(row));

        std::size_t p = 0;
        while (p < k && ++index[p] == dims[p]) index[p++] = 0;
        if (p == k) break;
      }
    }
  }
  return rows;
}

std::unique_ptr<Component> RelativelyFreeAlgebra::build(const MultiDegree& m) const {
  auto c = std::make_unique<Component>();
  c->m_ = m;
  if (m.total() == 1) {
    const auto g = static_cast<std::size_t>(std::find(m.counts().begin(), m.counts().end(), 1u) - m.counts().begin());
    c->standard_.push_back(Monomial::leaf(g));
    return c;
  }
  if (ComponentCache::enabled()) {
    layout_products(*c);
    if (ComponentCache::load(ids_, rank_, *c)) return c;
  } else {
    layout_products(*c);
  }

  std::vector<Monomial> column_monomial = std::move(c->standard_);
  c->standard_.clear();

  Echelon e(column_monomial.size());
  for (const auto& row : relation_rows(*c)) e.insert(row);
  e.make_reduced();

  for (std::uint32_t col = 0; col < column_monomial.size(); ++col) {
    if (e.is_pivot(col)) continue;
    c->std_index_[col] = static_cast<std::int32_t>(c->standard_.size());
    c->standard_.push_back(std::move(column_monomial[col]));
  }
  for (std::uint32_t col = 0; col < column_monomial.size(); ++col) {
    if (!e.is_pivot(col)) continue;
    const SparseVec& row = e.pivot_row(col);
    SparseVec nf;
    nf.reserve(row.size() - 1);
    for (std::size_t k = 1; k < row.size(); ++k)
      nf.emplace_back(static_cast<std::uint32_t>(c->std_index_[row[k].first]), -row[k].second);
    c->column_nf_[col] = std::move(nf);
  }
  if (ComponentCache::enabled()) ComponentCache::store(ids_, rank_, *c);
  return c;
}

std::vector<std::size_t> RelativelyFreeAlgebra::dim_table(std::size_t max_degree) {
  build_up_to(max_degree);
  std::vector<std::size_t> dims;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::size_t total = 0;
    for (const auto& m : multidegrees_of_total(rank_, d)) total += built(m).quotient_dim();
    dims.push_back(total);
  }
  return dims;
}

SparseVec RelativelyFreeAlgebra::multiply(const MultiDegree& a, const SparseVec& u, const MultiDegree& b,
                                          const SparseVec& v) {
  ensure(a + b);
  return multiply_built(a, u, b, v);
}

NormalVector RelativelyFreeAlgebra::basis_vector(const MultiDegree& m, std::size_t i) {
  if (i >= component(m).quotient_dim()) throw Error("basis index out of range");
  return {m, {{static_cast<std::uint32_t>(i), Rational(1)}}};
}

NormalVector RelativelyFreeAlgebra::normal_form(const Monomial& t) {
  const MultiDegree m = t.multidegree(rank_);
  ensure(m);
  std::unordered_map<Monomial, SparseVec, MonomialHash> memo;
  auto nf = [&](auto&& self, const Monomial& s) -> SparseVec {
    if (s.is_leaf()) return {{0u, Rational(1)}};
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    auto [l, r] = s.split();
    SparseVec v = multiply_built(l.multidegree(rank_), self(self, l), r.multidegree(rank_), self(self, r));
    memo.emplace(s, v);
    return v;
  };
  return {m, nf(nf, t)};
}

std::map<MultiDegree, SparseVec> RelativelyFreeAlgebra::normal_form(const FreePoly& p) {
  std::map<MultiDegree, SparseVec> out;
  if (p.required_rank() > rank_) throw Error("polynomial uses generators beyond rank " + std::to_string(rank_));
  for (const auto& [m, part] : p.homogeneous_components(rank_)) out.emplace(m, normal_form(m, part));
  return out;
}

SparseVec RelativelyFreeAlgebra::normal_form(const MultiDegree& m, const FreePoly& p) {
  ensure(m);
  std::unordered_map<Monomial, SparseVec, MonomialHash> memo;
  auto nf = [&](auto&& self, const Monomial& s) -> SparseVec {
    if (s.is_leaf()) return {{0u, Rational(1)}};
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    auto [l, r] = s.split();
    SparseVec v = multiply_built(l.multidegree(rank_), self(self, l), r.multidegree(rank_), self(self, r));
    memo.emplace(s, v);
    return v;
  };
  SparseVec acc;
  for (const auto& [t, coeff] : p.terms()) {
    if (t.multidegree(rank_) != m)
      throw Error("multidegree mismatch: expected " + m.to_string() + ", got " + t.multidegree(rank_).to_string());
    axpy(acc, coeff, nf(nf, t));
  }
  return acc;
}

bool RelativelyFreeAlgebra::is_zero(const FreePoly& p) {
  for (const auto& [m, v] : normal_form(p))
    if (!v.empty()) return false;
  return true;
}

FreePoly RelativelyFreeAlgebra::to_poly(const MultiDegree& m, const SparseVec& coords) {
  const Component& c = component(m);
  FreePoly p;
  for (const auto& [i, x] : coords) p.add_term(c.standard()[i], x);
  return p;
}

FreePoly RelativelyFreeAlgebra::echelon_row(const Monomial& t) {
  const NormalVector nf = normal_form(t);
  const Component& c = component(nf.multidegree);
  if (c.standard_index(t)) return {};
  return FreePoly::monomial(t) - to_poly(nf.multidegree, nf.coords);
}

std::vector<FreePoly> RelativelyFreeAlgebra::echelon_basis(const MultiDegree& m) {
  std::vector<FreePoly> rows;
  for (const auto& t : enumerate_monomials(m)) {
    FreePoly r = echelon_row(t);
    if (!r.is_zero()) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace veronalt
