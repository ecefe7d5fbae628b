#pragma once

// Deterministic catalog of small rings with their multiplicative sets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcr/multset.hpp"
#include "fcr/ring.hpp"

namespace fcr {

struct CatalogSpec {
  std::size_t max_size = 16;
  /// Z/n for 2 <= n <= max_size when set.
  bool include_zmod = true;
  /// Extra ring expressions, kept when their size is within max_size.
  std::vector<std::string> extras;
  /// Products of up to this many local Z/p^k factors; 1 adds none.
  std::size_t product_depth = 1;
  /// Extra trivial extensions, added when include_trivial is set.
  std::vector<std::string> trivial_extras;
  bool include_trivial = true;
  std::size_t mset_budget = 100'000;
  std::size_t module_budget = 200;
  std::uint64_t seed = 0;
  /// Restrict to these ring expressions (replay); catalog recipes are ignored when non-empty.
  std::vector<std::string> only_rings;
  /// Restrict every ring to this mult-set expression.
  std::optional<std::string> only_mset;

  /// The default recipe set; throws ConstructionError on a zero budget.
  static CatalogSpec defaults();
  void validate() const;
};

struct CatalogEntry {
  std::string expr;
  RingPtr ring;
  std::vector<MultSet> msets;
  /// Construction or enumeration failure; the ring may be absent.
  std::string error;
};

/// Ordered by recipe: Z/n, extras, products, trivial extensions; duplicates by expression dropped.
std::vector<CatalogEntry> build_catalog(const CatalogSpec& spec);

}  // namespace fcr
