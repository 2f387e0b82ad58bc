#ifndef QHFORGE_ALGEBRA_HPP
#define QHFORGE_ALGEBRA_HPP

#include <map>
#include <string>

#include "qhforge/subspace.hpp"

namespace qhforge {

using gfp::Fp;
using gfp::Mat;
using gfp::Rng;
using gfp::RowSpace;
using gfp::Vec;

struct SparseTerm {
  uint32_t k;
  uint32_t c;
};
using SparseVec = std::vector<SparseTerm>;  // sorted by k, nonzero c

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, size_t n);

struct LabeledIdem {
  std::string label;
  Vec vec;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite-dimensional associative unital algebra over GF(p) given by
/// structure constants, with labeled orthogonal idempotents and an
/// optional nonnegative grading on the basis.
class Algebra {
 public:
  Algebra() = default;
  Algebra(Fp F, size_t dim, std::vector<std::vector<SparseVec>> mult, Vec unit,
          std::vector<LabeledIdem> idems, std::optional<std::vector<uint32_t>> grading = std::nullopt);

  /// Checks associativity (full triple loop), unit law, idempotent
  /// orthogonality and sum, and grading multiplicativity. Throws AlgebraError.
  void validate() const;

  const Fp& field() const { return F_; }
  size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const std::vector<LabeledIdem>& idempotents() const { return idems_; }
  const std::optional<std::vector<uint32_t>>& grading() const { return grading_; }
  const SparseVec& mult_entry(size_t i, size_t j) const { return mult_[i][j]; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec mul3(const Vec& x, const Vec& y, const Vec& z) const;
  Vec basis_mul(size_t i, size_t j) const { return to_dense(mult_[i][j], dim_); }

  Mat left_mult(const Vec& x) const;   // y ↦ x·y
  Mat right_mult(const Vec& x) const;  // y ↦ y·x

  /// Distinct idempotent labels in first-appearance order.
  std::vector<std::string> labels() const;
  /// Sum of the primitive idempotents carrying a label.
  Vec class_idempotent(const std::string& label) const;

  Algebra opposite() const;

  /// Center as a subspace basis.
  std::vector<Vec> center() const;

  /// Deterministic small generating set (basis indices, greedy closure).
  const std::vector<size_t>& generating_set() const;

  /// Span of A·v·A for the given vectors: the two-sided ideal they generate.
  RowSpace two_sided_ideal(const std::vector<Vec>& gens) const;
  RowSpace left_ideal(const std::vector<Vec>& gens) const;
  RowSpace right_ideal(const std::vector<Vec>& gens) const;
  bool is_ideal(const RowSpace& s) const;

  /// Peirce component e·A·f as a subspace.
  RowSpace peirce(const Vec& e, const Vec& f) const;

  /// Grading degree of a homogeneous vector; throws if mixed.
  uint32_t degree_of(const Vec& v) const;

 private:
  Fp F_;
  size_t dim_ = 0;
  std::vector<std::vector<SparseVec>> mult_;
  Vec unit_;
  std::vector<LabeledIdem> idems_;
  std::optional<std::vector<uint32_t>> grading_;
  mutable std::vector<size_t> gens_;  // cached
};

/// Algebra structure on a subspace (must be multiplicatively closed and
/// contain the given unit). Returns the algebra in the subspace basis plus
/// the inclusion matrix (ambient_dim × sub_dim).
struct SubalgebraResult {
  Algebra alg;
  Mat inclusion;
  RowSpace space;
};
SubalgebraResult subalgebra_on(const Algebra& amb, const RowSpace& space, const Vec& unit,
                               const std::vector<LabeledIdem>& idems,
                               std::optional<std::vector<uint32_t>> grading = std::nullopt);

/// Corner algebra e·A·e with unit e; keeps idempotents dominated by e.
SubalgebraResult corner_algebra(const Algebra& a, const Vec& e);

/// Quotient by a two-sided ideal; nonzero idempotent images keep labels.
struct QuotientResult {
  Algebra alg;
  Mat projection;  // quot_dim × ambient_dim
  gfp::QuotientMap qmap;
};
QuotientResult quotient_algebra(const Algebra& a, const RowSpace& ideal);

/// Structure map kind for AlgebraMap.
enum class MapKind { Homomorphism, Antihomomorphism };

/// Linear map between algebras, multiplicative per kind, unit-preserving.
struct AlgebraMap {
  const Algebra* source = nullptr;
  const Algebra* target = nullptr;
  Mat matrix;
  MapKind kind = MapKind::Homomorphism;

  Vec apply(const Vec& v) const { return matrix.apply(v); }
  void validate() const;  // throws AlgebraError
  bool is_valid() const;
};

/// Direct sum of algebras; labels must stay distinct across summands.
Algebra direct_sum(const std::vector<const Algebra*>& parts);

/// Ground field as a 1-dimensional algebra.
Algebra field_algebra(Fp F, const std::string& label = "*");

}  // namespace qhforge

#endif
