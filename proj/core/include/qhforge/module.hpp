#ifndef QHFORGE_MODULE_HPP
#define QHFORGE_MODULE_HPP

#include "qhforge/algebra.hpp"

namespace qhforge {

enum class Side { Left, Right };

/// Finite-dimensional one-sided module: one action matrix per algebra basis
/// element. Left: x·v = action[i]·v summed over coefficients of x.
class Module {
 public:
  Module() = default;
  Module(const Algebra* alg, Side side, size_t dim, std::vector<Mat> action);

  const Algebra& algebra() const { return *alg_; }
  Side side() const { return side_; }
  size_t dim() const { return dim_; }
  const Mat& action(size_t i) const { return act_[i]; }

  Mat act(const Vec& x) const;            // action matrix of an algebra element
  Vec apply(const Vec& x, const Vec& v) const;

  /// module laws on the algebra's basis pairs (throws on failure)
  void validate() const;

 private:
  const Algebra* alg_ = nullptr;
  Side side_ = Side::Left;
  size_t dim_ = 0;
  std::vector<Mat> act_;
};

Module regular_module(const Algebra& a, Side side);
Module zero_module(const Algebra& a, Side side);
Module direct_sum(const Module& m, const Module& n);
Module direct_sum_power(const Module& m, size_t k);

/// Submodule spanned by the given space (must be invariant): module on the
/// subspace basis + inclusion matrix.
struct SubmoduleResult {
  Module mod;
  Mat inclusion;  // ambient_dim × sub_dim
};
SubmoduleResult submodule(const Module& m, const RowSpace& space);

struct QuotientModuleResult {
  Module mod;
  Mat projection;  // quot_dim × ambient_dim
};
QuotientModuleResult quotient_module(const Module& m, const RowSpace& space);

/// Smallest submodule containing the vectors.
RowSpace spin(const Module& m, const std::vector<Vec>& seeds);

/// Dual: side flips, action matrices transpose.
Module dual_module(const Module& m);

/// Twist by an antiautomorphism: side flips, action(b) := action(t(b)).
Module twist_module(const Module& m, const AlgebraMap& t);

/// Restrict along an algebra map φ: B → A (same side): b acts via φ(b).
Module restrict_along(const Module& m, const AlgebraMap& phi);

/// Basis of equivariant maps m → n (same algebra, same side), as matrices
/// n.dim × m.dim acting on coordinate columns.
std::vector<Mat> hom_space(const Module& m, const Module& n);

/// Invertible element of hom_space: bounded seeded linear-combination search,
/// exhaustive fallback for small hom spaces.
std::optional<Mat> module_iso(const Module& m, const Module& n, Rng& rng);

/// Bimodule: commuting left action of A and right action of B.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(const Algebra* left, const Algebra* right, size_t dim, std::vector<Mat> lact, std::vector<Mat> ract);

  const Algebra& left_algebra() const { return *l_; }
  const Algebra& right_algebra() const { return *r_; }
  size_t dim() const { return dim_; }
  const Mat& left_action(size_t i) const { return la_[i]; }
  const Mat& right_action(size_t i) const { return ra_[i]; }
  Mat left_act(const Vec& x) const;
  Mat right_act(const Vec& x) const;

  Module as_left() const { return Module(l_, Side::Left, dim_, la_); }
  Module as_right() const { return Module(r_, Side::Right, dim_, ra_); }

  void validate() const;

 private:
  const Algebra* l_ = nullptr;
  const Algebra* r_ = nullptr;
  size_t dim_ = 0;
  std::vector<Mat> la_, ra_;
};

Bimodule regular_bimodule(const Algebra& a);

/// Dual of an (A,B)-bimodule, a (B,A)-bimodule: (b·f·a)(x) = f(a·x·b).
Bimodule dual_bimodule(const Bimodule& m);

/// m ⊗_B n for m over (A,B), n over (B,C): quotient of m ⊗_F n by balancing
/// relations. proj maps the (i⊗j) coordinates (i*dim_n+j) onto the result.
struct TensorResult {
  Bimodule bim;
  Mat proj;  // result_dim × (dim_m · dim_n)
};
TensorResult tensor_over(const Bimodule& m, const Bimodule& n);

/// Equivariant maps of bimodules (matching algebra pairs).
std::vector<Mat> bimodule_hom(const Bimodule& m, const Bimodule& n);
std::optional<Mat> bimodule_iso(const Bimodule& m, const Bimodule& n, Rng& rng);

/// Invertible W in the span of `space` (seeded combos + exhaustive fallback).
std::optional<Mat> invertible_in_span(const std::vector<Mat>& space, Rng& rng);

/// Twist a bimodule over (A,A) on both sides by an antiautomorphism:
/// the result is again an (A,A)-bimodule with a·m := m·t(a), m·a := t(a)·m.
Bimodule twist_bimodule_both(const Bimodule& m, const AlgebraMap& t);

}  // namespace qhforge

#endif
