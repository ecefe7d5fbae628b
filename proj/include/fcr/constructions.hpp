#pragma once

// Ring constructions that need ideals or modules: quotients and trivial extensions.

#include "fcr/ideal.hpp"
#include "fcr/module.hpp"
#include "fcr/ring.hpp"

namespace fcr {

struct QuotientRing {
  RingPtr ring;
  RingHom map;
};

/// R/I with cosets represented by their least element. R/R is the zero ring.
QuotientRing quotient_ring(const Ideal& ideal);

/// R x M with (r,m)(r',m') = (rr', rm' + r'm); carries a TrivialExtensionTag.
RingPtr trivial_extension(const RingPtr& ring, const ModulePtr& module);

}  // namespace fcr
