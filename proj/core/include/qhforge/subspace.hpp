#ifndef QHFORGE_SUBSPACE_HPP
#define QHFORGE_SUBSPACE_HPP

#include "qhforge/gfp.hpp"

namespace qhforge::gfp {

/// Subspace of F^n kept as a reduced row echelon basis; supports incremental
/// insertion, membership, and quotient coordinates.
class RowSpace {
 public:
  RowSpace() : n_(0) {}
  RowSpace(Fp F, size_t n) : F_(F), n_(n) {}

  const Fp& field() const { return F_; }
  size_t ambient() const { return n_; }
  size_t dim() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  bool full() const { return dim() == n_; }

  /// Insert a vector; returns true if the dimension grew.
  bool insert(Vec v);
  void insert_all(const std::vector<Vec>& vs);

  bool contains(const Vec& v) const;
  bool contains(const RowSpace& other) const;

  /// Residue of v after elimination against the basis.
  Vec reduce(Vec v) const;

  /// Coordinates of v in the echelon basis; throws if v is not contained.
  Vec coords(const Vec& v) const;

  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivs_; }

  /// Standard basis vectors at non-pivot coordinates: a complement.
  std::vector<Vec> complement() const;

  static RowSpace span_of(Fp F, size_t n, const std::vector<Vec>& vs);
  static RowSpace intersect(const RowSpace& a, const RowSpace& b);
  static RowSpace sum(const RowSpace& a, const RowSpace& b);

 private:
  Fp F_;
  size_t n_ = 0;
  std::vector<Vec> rows_;     // reduced echelon rows, pivot columns increasing
  std::vector<size_t> pivs_;  // pivot column of each row
};

/// Coordinates with respect to a fixed independent spanning set (not its
/// echelonization): keeps the row-reduction transform alongside.
class SpanSolver {
 public:
  SpanSolver() = default;
  SpanSolver(Fp F, size_t n, const std::vector<Vec>& spanning);

  size_t dim() const { return d_; }
  /// Coefficients c with v = Σ c_i·spanning_i; throws if v is outside.
  Vec coords(const Vec& v) const;
  bool contains(const Vec& v) const;

 private:
  Fp F_;
  size_t n_ = 0, d_ = 0;
  std::vector<Vec> rows_;   // echelon rows, augmented with the transform
  std::vector<size_t> pivs_;
};

/// Linear projection F^n -> F^n/U in the coordinates of a chosen complement,
/// together with the section lifting those coordinates back.
class QuotientMap {
 public:
  QuotientMap() = default;
  explicit QuotientMap(const RowSpace& sub);

  size_t dim() const { return comp_.size(); }  // dim of the quotient
  size_t ambient() const { return sub_.ambient(); }

  Vec project(const Vec& v) const;  // length = dim()
  Vec lift(const Vec& q) const;     // canonical representative
  const RowSpace& subspace() const { return sub_; }
  const std::vector<size_t>& complement_coords() const { return comp_; }

 private:
  RowSpace sub_;
  std::vector<size_t> comp_;  // non-pivot coordinates of the ambient space
};

}  // namespace qhforge::gfp

#endif
