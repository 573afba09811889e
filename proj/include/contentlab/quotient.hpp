#pragma once

#include <utility>

#include "contentlab/finring.hpp"
#include "contentlab/ideals.hpp"

namespace contentlab {

/// R/I with cosets ordered by their least representative, plus the
/// projection R -> R/I.
std::pair<RingPtr, RingMap> make_quotient(const RingPtr& ring, const Ideal& i);

/// W^-1 R for W = R minus the union of the primes in w, computed as R/I_W with
/// I_W = {r : wr = 0 for some w in W}. In a finite ring the images of W are
/// units of R/I_W, so this is the localization.
std::pair<RingPtr, RingMap> localize(const RingPtr& ring, const SaturatedMultSet& w);

/// The kernel I_W of R -> W^-1 R.
Ideal localization_kernel(const SaturatedMultSet& w);

}  // namespace contentlab
