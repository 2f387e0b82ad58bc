#ifndef QHFORGE_RADICAL_HPP
#define QHFORGE_RADICAL_HPP

#include "qhforge/module.hpp"
#include "qhforge/poly.hpp"

namespace qhforge {

/// Raised when a simple module fails to split over GF(p); the run must stop
/// rather than silently extend the field.
class SplitError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Jacobson radical by the characteristic-p chain (Cohen–Ivanyos–Wales):
/// cut by the trace form first, then by the characteristic-coefficient forms
/// c_{p^i}((x·y)) level by level; a chain member that is a nilpotent ideal
/// equals J and ends the computation. Deterministic.
RowSpace radical(const Algebra& a);

bool is_nilpotent_ideal(const Algebra& a, const RowSpace& r, size_t* index_out = nullptr);

/// MeatAxe-style composition factors of a module (Norton irreducibility test
/// with multiplicity-one char poly factors). Randomized under the given rng;
/// result list is deterministic for a fixed seed.
std::vector<Module> composition_factors(const Module& m, Rng& rng);

struct SimpleInfo {
  Module rep;          // the simple as a left module with full action data
  size_t multiplicity; // multiplicity in the regular module
};

struct SemisimpleData {
  RowSpace rad;
  size_t nilpotency_index = 0;
  std::vector<SimpleInfo> simples;  // pairwise non-isomorphic
};

/// Radical + distinct simples of the regular module + splitness verification.
/// Cross-checks dim A − dim J = Σ (dim L)² and throws on mismatch.
SemisimpleData semisimple_structure(const Algebra& a, Rng& rng);

}  // namespace qhforge

#endif
