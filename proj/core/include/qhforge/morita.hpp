#ifndef QHFORGE_MORITA_HPP
#define QHFORGE_MORITA_HPP

#include <functional>

#include "qhforge/radical.hpp"

namespace qhforge {

struct PrimitiveIdempotent {
  std::string label;  // names the simple it covers
  size_t simple_index;
  Vec vec;
};

struct IdempotentData {
  SemisimpleData ss;
  std::vector<PrimitiveIdempotent> prims;  // orthogonal, summing to 1
  std::vector<std::string> labels;         // one per simple, in simple order
};

/// Complete set of primitive orthogonal idempotents, lifted along J by the
/// Newton step e ← 3e² − 2e³ and orthogonalized sequentially. `labeler` names
/// simple i (defaults to "Li").
IdempotentData lift_idempotents(const Algebra& a, Rng& rng,
                                const std::function<std::string(const Module&, size_t)>& labeler = {});

/// Rebuild the algebra with its lifted idempotents attached (labels repeat
/// per class; one entry per primitive).
Algebra with_idempotents(const Algebra& a, const IdempotentData& data);

struct MoritaContext {
  Algebra algebra;  // copy of the input, idempotents attached
  Algebra basic;    // eAe, one primitive per class, unit e
  Vec projector;    // e in the input coordinates
  Mat inclusion;    // input_dim × basic_dim
  Bimodule left_progenerator;   // Ae as (A, basic)-bimodule
  Bimodule right_progenerator;  // eA as (basic, A)-bimodule
};

/// Basic algebra eAe with induced structure constants; verifies the
/// multiplicity count dim A = Σ dim P(λ)·dim L(λ) and equal Cartan matrices.
MoritaContext basic_algebra(const Algebra& a, Rng& rng);

/// Cartan matrix over the distinct labels, entry (λ,μ) = [P(μ) : L(λ)].
Mat cartan_matrix(const Algebra& a_with_idems, const std::vector<std::string>& label_order);

/// Partition of labels into blocks: components of the Cartan linkage graph.
std::vector<std::vector<std::string>> blocks(const Algebra& a_with_idems);

}  // namespace qhforge

#endif
