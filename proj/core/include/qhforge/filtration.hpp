#ifndef QHFORGE_FILTRATION_HPP
#define QHFORGE_FILTRATION_HPP

#include "qhforge/glue.hpp"
#include "qhforge/schur.hpp"

namespace qhforge {

/// Weight intervals I_1..I_a with I_0 the complement, the idempotents f_j and
/// ε_j, and the reference algebra S(2, s_ref).
struct IntervalDecomposition {
  uint32_t a = 0, k = 0;
  bool r_even = false;
  uint32_t ref_r = 0;                       // A = S(2, ref_r)
  std::vector<std::vector<uint32_t>> I;     // I[0] = I_0, I[1..a]
  std::vector<Vec> f;                       // f[j] for j = 1..a (f[0] unused)
  std::vector<Vec> eps;                     // ε_j = Σ_{i≥j} f_i
  bool reconciled = false;                  // p = 2 table variant in use
  bool literal_valid = false, reconciled_valid = false;
};

/// Builds and validates the interval tables; at p = 2 both the literal and
/// the reconciled variant are computed and the validating one is used.
IntervalDecomposition interval_decomposition(const SchurAlgebra& s);

struct ZeroCheck {
  std::string what;
  size_t dim = 0;
  bool expect_zero = true;
  bool pass = false;
};

struct StructuralZeroReport {
  bool ok = false;
  std::vector<ZeroCheck> checks;
};

/// f_jSf_i = 0 for |i−j| > 1; isolated one-dimensional I_0 blocks;
/// f_aSf_{a−1}Sf_a = 0.
StructuralZeroReport structural_zeros(const SchurAlgebra& s, const IntervalDecomposition& d);

struct FiltrationReport {
  RowSpace N, N2;
  size_t dim_s_over_n = 0;
  std::vector<std::shared_ptr<Algebra>> alpha;   // α_1..α_a (index 0 = α_1)
  std::vector<Mat> alpha_proj;                   // S ↠ α_j on the corner
  // witnesses
  bool sections_ok = false;
  bool n_ideal = false, n2_matches = false, n3_zero = false;
  std::vector<Mat> xbar_vs_xstar;  // pairing witnesses X̄_j ≅ X_j*
  std::vector<Mat> n2_vs_alphastar;
  std::vector<size_t> x_dims;
  std::string notes;
};

FiltrationReport build_filtration(const SchurAlgebra& s, const IntervalDecomposition& d, Rng& rng);

/// X_j = f_jSf_{j+1} as an (α_j, α_{j+1})-bimodule, with the algebras the
/// report owns.
Bimodule x_bimodule(const SchurAlgebra& s, const IntervalDecomposition& d, const FiltrationReport& rep, size_t j,
                    bool bar);

/// The associated graded algebra S/N ⊕ N/N² ⊕ N², grading recorded.
Algebra associated_graded(const SchurAlgebra& s, const FiltrationReport& rep);

/// G(2,r) := S_gr(2,d)/(idempotent ideal of weights > r), d ≥ r self-dual,
/// d ≡ r (mod 2).
struct GradedQuotientResult {
  Algebra algebra;
  size_t graded_dim0 = 0, graded_dim1 = 0, graded_dim2 = 0;
};
GradedQuotientResult graded_quotient_G(uint32_t p, uint32_t r, uint32_t d, Rng& rng);

enum class GrMoritaVerdict { Isomorphic, InvariantsMatch, Refuted };

struct GrMoritaResult {
  GrMoritaVerdict verdict = GrMoritaVerdict::Refuted;
  uint32_t p = 0, r = 0;
  SelfdualCase sd;
  IntervalDecomposition intervals;
  StructuralZeroReport zeros;
  size_t basic_gr_dim = 0, target_dim = 0;
  std::optional<Mat> witness;  // basic(S_gr) → C_1^a(basic A) ⊕ F^{I_0}
  uint64_t nodes = 0;
  std::string notes;
};

/// Builds both sides of the graded Morita statement and searches for the
/// isomorphism, following the central-unit normalization of the chain of
/// pairings before falling back to the generic graded backtracking search.
GrMoritaResult verify_grmorita(uint32_t p, uint32_t r, uint64_t seed, uint64_t budget);

/// α_j-quotient data of the corner f·S·f needed by the L_2 gluing.
struct L2MiddleResult {
  L2Middle middle;
  MoritaContext basic_q;
};
L2MiddleResult make_l2_middle(const SchurAlgebra& s, const IntervalDecomposition& d, Rng& rng);

}  // namespace qhforge

#endif
