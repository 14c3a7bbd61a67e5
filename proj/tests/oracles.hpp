#pragma once

// Independent re-derivations used to cross-check the library.  Each oracle is
// deliberately written along a different route than the implementation: the
// intersection oracle expands the full 2^dim product, the bound oracles walk
// the defining growth sequences term by term.

#include <algorithm>
#include <vector>

#include "scrollink/base.hpp"
#include "scrollink/scroll.hpp"

namespace oracles {

using scrollink::Int;
using scrollink::ResolvedClass;
using scrollink::Scroll;

/// Expands prod_i (h_i*Ht + r_i*Rt) over all 2^dim monomials and applies
/// Ht^dim = deg, Ht^(dim-1)*Rt = 1, Rt^2 * anything = 0.
inline Int intersect_bruteforce(const Scroll& x, const std::vector<ResolvedClass>& classes) {
  const Int dim = x.dimension();
  Int total = 0;
  for (unsigned mask = 0; mask < (1u << dim); ++mask) {
    Int coefficient = 1;
    Int ruling_factors = 0;
    for (Int i = 0; i < dim; ++i) {
      if (mask & (1u << i)) {
        coefficient *= classes[static_cast<std::size_t>(i)].r;
        ++ruling_factors;
      } else {
        coefficient *= classes[static_cast<std::size_t>(i)].h;
      }
    }
    Int monomial = ruling_factors == 0 ? x.degree() : (ruling_factors == 1 ? 1 : 0);
    total += coefficient * monomial;
  }
  return total;
}

/// Classical genus bound for a nondegenerate degree-s curve in P^N, computed
/// as the total deficiency of the capped growth h(r) = min((N-1)r + 1, s).
inline Int castelnuovo_deficiency(Int s, Int N) {
  Int total = 0;
  for (Int r = 1;; ++r) {
    Int h = std::min((N - 1) * r + 1, s);
    total += s - h;
    if (h == s) break;
  }
  return total;
}

/// Genus of a profile given as explicit first differences, summed naively.
inline Int deficiency_sum(const std::vector<Int>& deltas) {
  Int mass = 0;
  for (Int delta : deltas) mass += delta;
  Int h = 0;
  Int total = 0;
  for (std::size_t r = 0; r < deltas.size(); ++r) {
    h += deltas[r];
    if (r >= 1) total += mass - h;
  }
  return total;
}

}  // namespace oracles
