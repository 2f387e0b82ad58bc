#ifndef QHFORGE_HOMOLOGICAL_HPP
#define QHFORGE_HOMOLOGICAL_HPP

#include "qhforge/morita.hpp"

namespace qhforge {

/// J·m as a subspace of the module (radical of the module for J = J(A)).
RowSpace radical_submodule(const Module& m, const RowSpace& jac);

/// P(λ) = A·e for the primitive idempotent labeled λ (first of its class).
struct ProjectiveModule {
  Module mod;
  Mat inclusion;  // into the regular module
  Vec generator;  // e in module coordinates
};
ProjectiveModule projective_cover_of_label(const Algebra& a_with_idems, const std::string& label);

/// Projective cover P₀ ↠ m with the cover map, built from the head of m.
struct CoverData {
  Module p0;
  Mat cover;  // m.dim × p0.dim
  std::vector<std::pair<std::string, size_t>> multiplicities;
};
CoverData projective_cover(const Module& m, const RowSpace& jac);

/// dim Ext¹(m,n) plus cocycle data for building extension modules:
/// Ext¹ = Hom(Ω m, n) / restriction of Hom(P₀, n).
struct Ext1Data {
  size_t dim = 0;
  Module omega;          // kernel of the cover, as a module
  Mat omega_inclusion;   // into P₀
  Module p0;
  std::vector<Mat> cocycles;  // maps Ω → n representing a basis of Ext¹
};
Ext1Data ext1(const Module& m, const Module& n, const RowSpace& jac);

/// Middle term of the extension 0 → n → E → m^s → 0 determined by cocycles
/// (one per copy of m); the universal extension when they span Ext¹.
Module extension_module(const Module& m, const Module& n, const Ext1Data& data,
                        const std::vector<Mat>& cocycles);

/// Multiplicity of the simple with the given primitive idempotent in the
/// head of m.
size_t head_multiplicity(const Module& m, const RowSpace& jac, const Vec& prim_idem);

/// End(m) as a based algebra (basis = hom space, product = composition
/// "apply left argument first").
struct EndAlgebra {
  Algebra alg;
  std::vector<Mat> basis;
};
EndAlgebra endomorphism_algebra(const Module& m);

/// m indecomposable iff End(m) is local (radical has codimension 1).
bool is_indecomposable(const Module& m);

}  // namespace qhforge

#endif
