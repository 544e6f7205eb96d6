#include "veronalt/veronese_invariants.hpp"

#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "veronalt/error.hpp"

namespace veronalt {
namespace {

using Matrix = LinearGroupAction::Matrix;

Matrix identity(std::size_t rank) {
  Matrix m(rank, std::vector<Rational>(rank));
  for (std::size_t i = 0; i < rank; ++i) m[i][i] = 1;
  return m;
}

Matrix product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool invertible(Matrix m) {
  const std::size_t n = m.size();
  for (std::size_t c = 0, r = 0; c < n; ++c, ++r) {
    std::size_t p = r;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[r][j];
    }
  }
  return true;
}

using Target = std::function<DegreeSubspace(std::size_t)>;

// Shared degree-by-degree report: generated(d) is spanned by the products of
// target bases over the ordered splits d = a + b with a, b in `degrees`.
GeneratorReport generator_report(RelativelyFreeAlgebra& alg, const std::vector<std::size_t>& degrees,
                                 const Target& target) {
  GeneratorReport report;
  std::map<std::size_t, DegreeSubspace> done;
  std::map<std::size_t, std::unique_ptr<DegreeLayout>> layouts;
  auto layout = [&](std::size_t d) -> const DegreeLayout& {
    auto& slot = layouts[d];
    if (!slot) slot = std::make_unique<DegreeLayout>(alg, d);
    return *slot;
  };
  for (std::size_t d : degrees) {
    DegreeSubspace t = target(d);
    const DegreeLayout& ld = layout(d);
    Echelon generated(ld.dim());
    for (const auto& [a, sa] : done) {
      const auto it = done.find(d - a);
      if (a >= d || it == done.end()) continue;
      for (const auto& u : sa.basis) {
        for (const auto& v : it->second.basis) {
          if (generated.rank() == t.dim()) break;
          generated.insert(multiply(alg, layout(a), u, layout(d - a), v, ld));
        }
      }
    }
    DegreeReport r;
    r.degree = d;
    r.target_dim = t.dim();
    r.generated_dim = generated.rank();
    for (const auto& v : t.basis) {
      SparseVec rest = generated.reduce(v);
      if (rest.empty()) continue;
      generated.insert(rest);
      const Rational lead = rest.front().second;
      r.new_generators.push_back(scaled(std::move(rest), 1 / lead));
    }
    r.new_count = r.new_generators.size();
    if (r.generated_dim + r.new_count != r.target_dim)
      throw Error("generated subspace escapes the target at degree " + std::to_string(d));
    report.degrees.push_back(std::move(r));
    done.emplace(d, std::move(t));
  }
  return report;
}

}  // namespace

const DegreeReport* GeneratorReport::at(std::size_t degree) const {
  for (const auto& r : degrees)
    if (r.degree == degree) return &r;
  return nullptr;
}

std::vector<std::size_t> GeneratorReport::new_counts() const {
  std::vector<std::size_t> out;
  for (const auto& r : degrees) out.push_back(r.new_count);
  return out;
}

DegreeSubspace veronese_component(RelativelyFreeAlgebra& alg, std::size_t n, std::size_t degree) {
  if (n < 2) throw Error("Veronese index n must be at least 2");
  const DegreeLayout layout(alg, degree);
  DegreeSubspace s{degree, layout.dim(), {}};
  if (degree % n == 0) s.basis = unit_basis(layout.dim());
  return s;
}

GeneratorReport new_generators(RelativelyFreeAlgebra& alg, const VeroneseConfig& cfg) {
  if (cfg.n < 2) throw Error("Veronese index n must be at least 2");
  alg.check_cap(cfg.max_degree);
  std::vector<std::size_t> degrees;
  for (std::size_t d = cfg.n; d <= cfg.max_degree; d += cfg.n) degrees.push_back(d);
  return generator_report(alg, degrees, [&](std::size_t d) { return veronese_component(alg, cfg.n, d); });
}

LinearGroupAction LinearGroupAction::from_matrices(std::size_t rank, std::vector<Matrix> generators,
                                                   std::size_t bound) {
  LinearGroupAction g;
  g.rank_ = rank;
  for (const auto& m : generators) {
    if (m.size() != rank) throw Error("group matrix must be " + std::to_string(rank) + "x" + std::to_string(rank));
    for (const auto& row : m)
      if (row.size() != rank)
        throw Error("group matrix must be " + std::to_string(rank) + "x" + std::to_string(rank));
    if (!invertible(m)) throw Error("group matrix is not invertible");
  }
  g.generators_ = std::move(generators);
  std::set<Matrix> seen{identity(rank)};
  std::queue<Matrix> todo;
  todo.push(identity(rank));
  g.elements_.push_back(identity(rank));
  while (!todo.empty()) {
    const Matrix e = todo.front();
    todo.pop();
    for (const auto& s : g.generators_) {
      Matrix next = product(e, s);
      if (!seen.insert(next).second) continue;
      if (seen.size() > bound)
        throw Error("group closure exceeds " + std::to_string(bound) + " elements; is the group finite?");
      g.elements_.push_back(next);
      todo.push(std::move(next));
    }
  }
  return g;
}

LinearGroupAction LinearGroupAction::scalar(std::size_t rank, std::size_t order) {
  if (order == 0) throw Error("scalar group order must be positive");
  LinearGroupAction g;
  g.rank_ = rank;
  g.scalar_order_ = order;
  return g;
}

LinearGroupAction LinearGroupAction::swap(std::size_t rank, std::size_t i, std::size_t j) {
  Matrix m = identity(rank);
  std::swap(m[i], m[j]);
  return from_matrices(rank, {m});
}

LinearGroupAction LinearGroupAction::parse(std::size_t rank, const std::string& text, std::size_t bound) {
  std::vector<Matrix> blocks;
  Matrix current;
  std::optional<std::size_t> scalar_order;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!current.empty()) blocks.push_back(std::move(current));
    current.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (words.empty()) {
      flush();
      continue;
    }
    if (words.front() == "scalar") {
      if (words.size() != 2) throw Error("group file line " + std::to_string(line_no) + ": expected 'scalar <order>'");
      try {
        scalar_order = std::stoul(words[1]);
      } catch (const std::exception&) {
        throw Error("group file line " + std::to_string(line_no) + ": bad scalar order '" + words[1] + "'");
      }
      continue;
    }
    std::vector<Rational> row;
    for (const auto& w : words) {
      try {
        row.push_back(parse_rational(w));
      } catch (const Error& e) {
        throw Error("group file line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    current.push_back(std::move(row));
  }
  flush();
  if (scalar_order) {
    if (!blocks.empty()) throw Error("group file mixes a scalar group with matrices");
    return scalar(rank, *scalar_order);
  }
  if (blocks.empty()) throw Error("group file has no matrices");
  return from_matrices(rank, std::move(blocks), bound);
}

LinearGroupAction LinearGroupAction::from_file(std::size_t rank, const std::filesystem::path& path,
                                               std::size_t bound) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(rank, buf.str(), bound);
}

FreePoly LinearGroupAction::act(const Matrix& g, const FreePoly& p) const {
  std::vector<FreePoly> images(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (g[i][j] != 0) images[i].add_term(Monomial::leaf(j), g[i][j]);
  return substitute(p, images);
}

FreePoly reynolds(const LinearGroupAction& action, const FreePoly& p) {
  if (p.required_rank() > action.rank()) throw Error("polynomial uses more generators than the group acts on");
  if (auto k = action.scalar_order()) {
    FreePoly out;
    for (const auto& [m, part] : p.homogeneous_components(action.rank()))
      if (m.total() % *k == 0) out += part;
    return out;
  }
  FreePoly sum;
  for (const auto& g : action.elements()) sum += action.act(g, p);
  sum *= Rational(1, static_cast<long>(action.order()));
  return sum;
}

QuotientAction::QuotientAction(RelativelyFreeAlgebra& alg, const LinearGroupAction& action)
    : alg_(alg), action_(action) {
  if (action.rank() != alg.rank()) throw Error("group rank does not match the algebra rank");
}

const DegreeLayout& QuotientAction::layout(std::size_t degree) {
  auto& slot = layouts_[degree];
  if (!slot) slot = std::make_unique<DegreeLayout>(alg_, degree);
  return *slot;
}

const SparseVec& QuotientAction::image(std::size_t g, std::size_t degree, std::size_t i) {
  const DegreeLayout& ld = layout(degree);
  auto& cache = images_[{g, degree}];
  if (cache.empty()) cache.resize(ld.dim());
  if (cache[i]) return *cache[i];

  std::size_t b = 0;
  while (i >= ld.offset(b + 1)) ++b;
  const Monomial& t = alg_.component(ld.blocks()[b]).standard()[i - ld.offset(b)];
  SparseVec v;
  if (t.is_leaf()) {
    const auto& m = action_.elements()[g];
    const DegreeLayout& l1 = layout(1);
    std::vector<std::pair<std::uint32_t, Rational>> entries;
    for (std::size_t j = 0; j < action_.rank(); ++j)
      if (m[t.generator()][j] != 0) {
        const SparseVec e = l1.embed(MultiDegree::unit(alg_.rank(), j), {{0u, Rational(1)}});
        entries.emplace_back(e.front().first, m[t.generator()][j]);
      }
    v = collect(std::move(entries));
  } else {
    // Standard monomials are products of standard monomials.
    auto [l, r] = t.split();
    auto index = [&](const Monomial& s) {
      const MultiDegree md = s.multidegree(alg_.rank());
      const DegreeLayout& ls = layout(s.degree());
      return ls.offset(ls.block_of(md)) + *alg_.component(md).standard_index(s);
    };
    const SparseVec gl = image(g, l.degree(), index(l));
    const SparseVec gr = image(g, r.degree(), index(r));
    v = multiply(alg_, layout(l.degree()), gl, layout(r.degree()), gr, ld);
  }
  cache[i] = std::move(v);
  return *cache[i];
}

SparseVec QuotientAction::apply(std::size_t g, std::size_t degree, const SparseVec& v) {
  SparseVec out;
  for (const auto& [c, x] : v) axpy(out, x, image(g, degree, c));
  return out;
}

SparseVec QuotientAction::reynolds(std::size_t degree, const SparseVec& v) {
  if (auto k = action_.scalar_order()) return degree % *k == 0 ? v : SparseVec{};
  SparseVec sum;
  for (std::size_t g = 0; g < action_.elements().size(); ++g) axpy(sum, Rational(1), apply(g, degree, v));
  return scaled(std::move(sum), Rational(1, static_cast<long>(action_.order())));
}

DegreeSubspace invariant_component(QuotientAction& qa, std::size_t degree) {
  const DegreeLayout& ld = qa.layout(degree);
  std::vector<SparseVec> images;
  for (std::size_t i = 0; i < ld.dim(); ++i)
    images.push_back(qa.reynolds(degree, {{static_cast<std::uint32_t>(i), Rational(1)}}));
  return {degree, ld.dim(), reduced_span(images, ld.dim())};
}

GeneratorReport invariant_generators(QuotientAction& qa, std::size_t max_degree) {
  std::vector<std::size_t> degrees;
  for (std::size_t d = 1; d <= max_degree; ++d) degrees.push_back(d);
  return generator_report(qa.algebra(), degrees, [&](std::size_t d) { return invariant_component(qa, d); });
}

}  // namespace veronalt
