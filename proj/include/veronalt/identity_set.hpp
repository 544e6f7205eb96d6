#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "veronalt/free_poly.hpp"

namespace veronalt {

// A defining identity after full polarization: every monomial uses each of the
// variables 0..arity-1 exactly once.
struct MultilinearIdentity {
  std::size_t arity = 0;
  FreePoly poly;
};

// The defining identities of a variety, stored in abstract variables.
class IdentitySet {
 public:
  IdentitySet(std::string name, std::vector<FreePoly> defining);

  static IdentitySet associative();        // (x,y,z)
  static IdentitySet alternative();        // (x,x,y), (y,x,x)
  static IdentitySet right_alternative();  // (y,x,x)
  static IdentitySet nonassociative();     // none
  // One identity per line in the term language; '#' starts a comment line.
  static IdentitySet from_text(std::string name, const std::string& text);
  static IdentitySet from_file(const std::filesystem::path& path);
  // alt | assoc | ralt | nonassoc | custom:<path>
  static IdentitySet by_selector(const std::string& selector);

  const std::string& name() const { return name_; }
  const std::vector<FreePoly>& defining() const { return defining_; }
  const std::vector<MultilinearIdentity>& multilinear() const { return multilinear_; }

  // Identities obtained by adding `more` defining identities.
  IdentitySet extended(const std::string& name, const std::vector<FreePoly>& more) const;

  // Stable text describing the identities; used as a cache key.
  std::string fingerprint() const;

 private:
  std::string name_;
  std::vector<FreePoly> defining_;
  std::vector<MultilinearIdentity> multilinear_;
};

// Full polarization of a multihomogeneous polynomial: each variable of degree d
// is replaced by d fresh variables, summed over all assignments to its occurrences.
MultilinearIdentity multilinearize(const FreePoly& homogeneous, std::size_t rank);

}  // namespace veronalt
