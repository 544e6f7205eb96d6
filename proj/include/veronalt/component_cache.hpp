#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>

#include "veronalt/identity_set.hpp"
#include "veronalt/relatively_free.hpp"

namespace veronalt {

// Optional on-disk store of built components, enabled by VERONALT_CACHE_DIR.
//
// One versioned JSON blob per (variety, rank, multidegree). A blob records the
// standard product columns and the normal forms of the others; the product
// layout itself is rebuilt from lower components, so a blob is only accepted
// when its product dimension and identity fingerprint match.
class ComponentCache {
 public:
  static constexpr int kVersion = 1;

  static std::optional<std::filesystem::path> directory();
  static bool enabled() { return directory().has_value(); }

  static std::filesystem::path blob_path(const IdentitySet& ids, std::size_t rank, const MultiDegree& m);
  // `c` must have its product layout in place. Returns false when no usable blob exists.
  static bool load(const IdentitySet& ids, std::size_t rank, Component& c);
  static void store(const IdentitySet& ids, std::size_t rank, const Component& c);
};

}  // namespace veronalt
