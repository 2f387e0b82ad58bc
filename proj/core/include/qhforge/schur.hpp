#ifndef QHFORGE_SCHUR_HPP
#define QHFORGE_SCHUR_HPP

#include <array>
#include <memory>

#include "qhforge/qh.hpp"

namespace qhforge {

class ResourceError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Orbit combinatorics of the Σ_r pair action on words of length r over
/// {0,1}: orbits are signatures (c00,c01,c10,c11) with sum r, and the orbit
/// indicator matrices form a basis of S(2,r) on tensor space.
struct OrbitData {
  uint32_t r = 0;
  std::vector<std::array<uint32_t, 4>> signatures;  // lexicographic

  size_t dim() const { return signatures.size(); }
  size_t orbit_index(const std::array<uint32_t, 4>& sig) const;
  std::array<uint32_t, 4> signature_of_pair(size_t rowword, size_t colword) const;
  std::pair<size_t, size_t> representative(size_t orbit) const;  // (rowword, colword)

  static OrbitData build(uint32_t r);
};

/// S(2,r) on tensor space: the centralizer algebra of the place-permutation
/// action, with Green's weight idempotents and the transpose operator.
struct SchurAlgebra {
  std::shared_ptr<Algebra> alg;  // primitive idempotents labeled by weight
  uint32_t p = 0, r = 0;
  std::vector<uint32_t> weights;       // dominant weights, descending
  std::map<uint32_t, Vec> xi;          // symmetrized weight idempotents
  Mat transpose_matrix;                // basis permutation by signature swap
  OrbitData orbits;
  IdempotentData idems;                // lifted within the ξ corners

  AlgebraMap transpose_map() const {
    return AlgebraMap{alg.get(), alg.get(), transpose_matrix, MapKind::Antihomomorphism};
  }
  WeightPoset dominance_poset() const;  // total order, descending
};

/// Builds S(2,r) over GF(p); r ≤ 12 (2^r tensor-space guard).
SchurAlgebra build_schur(uint32_t p, uint32_t r, Rng& rng);

/// dim S(2,r) = C(r+3,3).
size_t schur_dimension(uint32_t r);

enum class SelfdualKind { MinusTwo, MinusThree, OtherSelfdual, No };

struct SelfdualCase {
  SelfdualKind kind = SelfdualKind::No;
  uint32_t a = 0, k = 0;
  bool r_even = false;
  std::string describe() const;
};

/// Recognizes r = a·p^k − 2 / − 3 (2 ≤ a ≤ p, k ≥ 1); r < p² and
/// r = a·p^k − 1 are reported as OtherSelfdual when no −2/−3 form exists.
SelfdualCase ringel_selfdual_case(uint32_t p, uint32_t r);

}  // namespace qhforge

#endif
