#pragma once

// Localization by S-fractions, built directly from the universal construction.
// Independent of the idempotent model in multset.hpp; used only to cross-check it.

#include <optional>
#include <vector>

#include "fcr/module.hpp"
#include "fcr/multset.hpp"

namespace fcr {

struct FractionRing {
  RingPtr ring;
  /// Class of r/1 for every r.
  std::vector<Elem> canonical;
};
/// Pairs (r, s) modulo (r, s) ~ (r', s') iff t(rs' - r's) = 0 for some t in S.
FractionRing fraction_ring(const MultSet& s);

struct FractionModule {
  /// Classes x/s with the R-action r(x/s) = (rx)/s.
  ModulePtr module;
  /// Class of m/1 for every m.
  std::vector<std::size_t> canonical;
};
FractionModule fraction_module(const FiniteModule& m, const MultSet& s);

struct LocalizationCheck {
  bool sizes_match = false;
  /// Nullopt when the isomorphism search ran out of budget.
  std::optional<bool> isomorphic;
  bool kernels_match = false;
  bool ok() const noexcept { return sizes_match && isomorphic.value_or(true) && kernels_match; }
};
/// Compares R_S from fractions with localize_ring(S): isomorphic rings and equal kernels of R -> R_S.
LocalizationCheck compare_localizations(const MultSet& s);
/// Compares M_S from fractions with localize_module: isomorphic R-modules with equal kernels.
LocalizationCheck compare_module_localizations(const ModulePtr& m, const MultSet& s);

}  // namespace fcr
