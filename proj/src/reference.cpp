#include "veronalt/reference.hpp"

#include <unordered_map>

#include "veronalt/error.hpp"
#include "veronalt/sparse.hpp"

namespace veronalt {
namespace {

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

ReferenceTIdeal::ReferenceTIdeal(IdentitySet ids, std::size_t rank, std::size_t cap)
    : ids_(std::move(ids)), rank_(rank), cap_(cap) {}

std::vector<FreePoly> ReferenceTIdeal::spanning_set(const MultiDegree& m) {
  if (m.total() == 0) throw Error("empty multidegree");
  if (m.total() > cap_) throw CapExceeded(m.total(), cap_, rank_);
  std::vector<FreePoly> out;

  for (const auto& identity : ids_.multilinear()) {
    const std::size_t k = identity.arity;
    if (k > m.total()) continue;
    std::vector<std::vector<MultiDegree>> tuples;
    std::vector<MultiDegree> current;
    compositions(m, k, current, tuples);
    for (const auto& parts : tuples) {
      std::vector<std::vector<Monomial>> choices;
      for (const auto& a : parts) choices.push_back(enumerate_monomials(a));
      std::vector<std::size_t> index(k, 0);
      std::vector<FreePoly> images(k);
      for (;;) {
        for (std::size_t v = 0; v < k; ++v) images[v] = FreePoly::monomial(choices[v][index[v]]);
        FreePoly inst = substitute(identity.poly, images);
        if (!inst.is_zero()) out.push_back(std::move(inst));
        std::size_t p = 0;
        while (p < k && ++index[p] == choices[p].size()) index[p++] = 0;
        if (p == k) break;
      }
    }
  }

  for (const auto& a : sub_multidegrees(m)) {
    if (a.total() == m.total()) continue;
    const MultiDegree b = m - a;
    const auto& left_ideal = basis(a);
    const auto& right_ideal = basis(b);
    if (!left_ideal.empty()) {
      const auto right_monomials = enumerate_monomials(b);
      for (const auto& s : left_ideal)
        for (const auto& u : right_monomials) out.push_back(s * FreePoly::monomial(u));
    }
    if (!right_ideal.empty()) {
      const auto left_monomials = enumerate_monomials(a);
      for (const auto& u : left_monomials)
        for (const auto& s : right_ideal) out.push_back(FreePoly::monomial(u) * s);
    }
  }
  return out;
}

const std::vector<FreePoly>& ReferenceTIdeal::basis(const MultiDegree& m) {
  if (auto it = basis_.find(m); it != basis_.end()) return it->second;
  std::vector<FreePoly> rows;
  if (m.total() >= 2) {
    const auto monomials = enumerate_monomials(m);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> column;
    for (std::uint32_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);
    Echelon e(monomials.size());
    for (const auto& p : spanning_set(m)) {
      std::vector<std::pair<std::uint32_t, Rational>> entries;
      for (const auto& [t, c] : p.terms()) entries.emplace_back(column.at(t), c);
      e.insert(collect(std::move(entries)));
    }
    e.make_reduced();
    for (const auto& row : e.basis()) {
      FreePoly p;
      for (const auto& [col, c] : row) p.add_term(monomials[col], c);
      rows.push_back(std::move(p));
    }
  }
  return basis_.emplace(m, std::move(rows)).first->second;
}

std::size_t ReferenceTIdeal::quotient_dim(const MultiDegree& m) {
  return static_cast<std::size_t>(shape_count(m.total()) * multinomial(m)) - basis(m).size();
}

std::vector<FreePoly> tideal_component(const IdentitySet& ids, std::size_t rank, const MultiDegree& m,
                                       std::size_t cap) {
  ReferenceTIdeal ref(ids, rank, cap);
  return ref.spanning_set(m);
}

}  // namespace veronalt
