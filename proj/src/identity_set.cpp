#include "veronalt/identity_set.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "veronalt/error.hpp"
#include "veronalt/term_parser.hpp"

namespace veronalt {

MultilinearIdentity multilinearize(const FreePoly& homogeneous, std::size_t rank) {
  MultilinearIdentity out;
  if (homogeneous.is_zero()) return out;
  const MultiDegree d = homogeneous.terms().begin()->first.multidegree(rank);
  std::vector<std::uint32_t> offset(rank, 0);
  for (std::size_t i = 1; i < rank; ++i) offset[i] = offset[i - 1] + d[i - 1];
  out.arity = d.total();

  for (const auto& [m, c] : homogeneous.terms()) {
    if (m.multidegree(rank) != d) throw Error("multilinearize expects a multihomogeneous polynomial");
    const auto word = m.word();
    std::vector<std::vector<std::size_t>> positions(rank);
    for (std::size_t p = 0; p < word.size(); ++p) positions[word[p]].push_back(p);
    std::vector<std::vector<std::uint8_t>> perm(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      perm[i].resize(d[i]);
      std::iota(perm[i].begin(), perm[i].end(), static_cast<std::uint8_t>(offset[i]));
    }
    std::vector<std::uint8_t> fresh(word.size());
    // Odometer over the product of per-variable permutations.
    for (;;) {
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t k = 0; k < positions[i].size(); ++k) fresh[positions[i][k]] = perm[i][k];
      out.poly.add_term(Monomial::from_shape(m.shape_rank(), fresh), c);
      std::size_t i = 0;
      while (i < rank && !std::next_permutation(perm[i].begin(), perm[i].end())) ++i;
      if (i == rank) break;
    }
  }
  return out;
}

IdentitySet::IdentitySet(std::string name, std::vector<FreePoly> defining)
    : name_(std::move(name)), defining_(std::move(defining)) {
  std::vector<FreePoly> seen;
  for (const auto& f : defining_) {
    const std::size_t rank = f.required_rank();
    for (const auto& [md, component] : f.homogeneous_components(rank)) {
      if (md.total() < 2)
        throw Error("identity component of degree " + std::to_string(md.total()) + " is not supported");
      MultilinearIdentity ml = multilinearize(component, rank);
      if (ml.poly.is_zero()) continue;
      FreePoly monic = ml.poly;
      monic *= 1 / monic.terms().begin()->second;
      if (std::find(seen.begin(), seen.end(), monic) != seen.end()) continue;
      seen.push_back(monic);
      multilinear_.push_back(std::move(ml));
    }
  }
}

namespace {
FreePoly var(std::size_t i) { return FreePoly::generator(i); }
}  // namespace

IdentitySet IdentitySet::associative() { return IdentitySet("assoc", {associator(var(0), var(1), var(2))}); }

IdentitySet IdentitySet::alternative() {
  return IdentitySet("alt", {associator(var(0), var(0), var(1)), associator(var(1), var(0), var(0))});
}

IdentitySet IdentitySet::right_alternative() {
  return IdentitySet("ralt", {associator(var(1), var(0), var(0))});
}

IdentitySet IdentitySet::nonassociative() { return IdentitySet("nonassoc", {}); }

IdentitySet IdentitySet::from_text(std::string name, const std::string& text) {
  std::vector<FreePoly> defining;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      defining.push_back(parse_identity(line).poly);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  return IdentitySet(std::move(name), std::move(defining));
}

IdentitySet IdentitySet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open identity file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text("custom:" + path.string(), buf.str());
}

IdentitySet IdentitySet::by_selector(const std::string& selector) {
  if (selector == "alt") return alternative();
  if (selector == "assoc") return associative();
  if (selector == "ralt") return right_alternative();
  if (selector == "nonassoc") return nonassociative();
  if (selector.rfind("custom:", 0) == 0) return from_file(selector.substr(7));
  throw Error("unknown variety '" + selector + "' (expected alt, assoc, ralt, nonassoc or custom:<path>)");
}

IdentitySet IdentitySet::extended(const std::string& name, const std::vector<FreePoly>& more) const {
  auto all = defining_;
  all.insert(all.end(), more.begin(), more.end());
  return IdentitySet(name, std::move(all));
}

std::string IdentitySet::fingerprint() const {
  std::string out;
  for (const auto& ml : multilinear_) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ml.arity; ++i) names.push_back("v" + std::to_string(i));
    out += format(ml.poly, names) + ";";
  }
  return out;
}

}  // namespace veronalt
