#ifndef QHFORGE_ISO_HPP
#define QHFORGE_ISO_HPP

#include <functional>

#include "qhforge/radical.hpp"

namespace qhforge {

struct IsoOptions {
  uint64_t budget = 1'000'000;  // backtracking node limit
  uint64_t seed = 0;
  bool respect_grading = false;
};

struct IsoResult {
  std::optional<Mat> iso;  // target_dim × source_dim columns on source basis
  uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Backtracking search for an algebra isomorphism between two algebras with
/// labeled primitive idempotents. Idempotent-preserving images are enough up
/// to inner automorphisms, so the search matches labels, fixes the primitive
/// pairing, and backtracks over generator images inside the matching Peirce
/// block, radical layer, and degree, with multiplicative-closure pruning.
IsoResult algebra_iso_search(const Algebra& g, const Algebra& h, const IsoOptions& opts = {});

/// Visit isomorphisms until the callback returns true; returns search stats.
IsoResult algebra_iso_visit(const Algebra& g, const Algebra& h, const IsoOptions& opts,
                            const std::function<bool(const Mat&)>& visit);

/// Antiautomorphism = isomorphism onto the opposite algebra.
std::optional<AlgebraMap> antiautomorphism_search(const Algebra& g, const IsoOptions& opts = {});

}  // namespace qhforge

#endif
