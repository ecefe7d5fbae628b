#pragma once

// Freeness, projectivity and flatness oracles, S-flat / S-projective checks,
// homological dimensions and the sampled module pool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fcr/module.hpp"
#include "fcr/multset.hpp"
#include "fcr/verdict.hpp"

namespace fcr {

inline constexpr const char* kFlatJustification = "finite commutative => perfect => flat = projective";

/// Free over the whole ring: every local part free of one common rank.
Verdict is_free_local(const FiniteModule& m);
/// Every local part e_i M has |e_i M| = |R_i|^{d_i}, d_i = dim e_i M / m_i e_i M.
Verdict is_projective(const FiniteModule& m);
/// Same decision as is_projective, tagged with the flat = projective justification.
Verdict is_flat(const FiniteModule& m);

/// Exhaustive search for a section of R^k -> M, k the minimal generator count.
/// Inconclusive (never a disagreement) past `budget` candidate checks or the coordinate cap.
Verdict is_projective_split_oracle(const ModulePtr& m, std::size_t budget = 200'000);

/// Ideal criterion on one local factor: e_iI (x) e_iM -> e_iM injective for every ideal I of R_i.
/// Nullopt when a tensor product exceeds the caps.
std::optional<bool> factor_ideal_criterion(const ModulePtr& m, std::size_t factor, std::uint64_t* cost = nullptr);

/// Routes (a) M_S flat over R [authoritative], (b) M_S flat over R_S, (c) ideal criterion on the localization.
RouteSet s_flat_routes(const ModulePtr& m, const MultSet& s);
/// Throws ConsistencyError when the routes disagree; returns the authoritative verdict.
Verdict is_s_flat(const ModulePtr& m, const MultSet& s);
/// M_S projective over R.
Verdict is_s_projective(const ModulePtr& m, const MultSet& s);

enum class HomologicalDim { MinusInfinity, Zero, Infinite };
const char* to_string(HomologicalDim d);

HomologicalDim pd(const FiniteModule& m);
HomologicalDim fd(const FiniteModule& m);
/// The zero ring counts as semisimple, so its dimensions are Zero.
HomologicalDim gldim(const RingPtr& ring);
HomologicalDim wdim(const RingPtr& ring);

struct ResolutionProbe {
  /// |Omega^1|, |Omega^2|, ... up to the depth reached.
  std::vector<std::size_t> syzygy_sizes;
  /// A syzygy became zero within the depth.
  bool terminated = false;
  /// All syzygies fit the caps.
  bool complete = false;
};
/// Minimal free resolution to `depth`; ConsistencyError when termination contradicts is_projective.
ResolutionProbe resolution_probe(const ModulePtr& m, std::size_t depth = 3);

struct SamplePool {
  std::vector<ModulePtr> modules;
  bool truncated = false;
};

struct SampleOptions {
  std::size_t budget = 200;
  std::uint64_t seed = 0;
  std::size_t max_module_size = 256;
  /// Elements s for the restriction modules along R -> R/Rs; every ring element when absent.
  std::optional<std::vector<Elem>> quotient_elements;
};

/// Deterministic in (ring, options): zero module, R/I for every ideal, e_iR, residue fields,
/// free(2), restrictions along R -> R/Rs, cokernels of small matrices, then pairwise sums.
SamplePool sample_modules(const RingPtr& ring, const SampleOptions& options);

}  // namespace fcr
