#ifndef QHFORGE_GLUE_HPP
#define QHFORGE_GLUE_HPP

#include <memory>

#include "qhforge/iso.hpp"
#include "qhforge/qh.hpp"

namespace qhforge {

/// Input pair (A, T) with the self-duality witness T ≅ T*, the seed of the
/// window constructions. The witness is kept symmetric as a pairing so that
/// the reflection σ acts as an algebra map.
struct WindowSpec {
  std::shared_ptr<Algebra> A;
  WeightPoset poset;        // certified quasi-hereditary order on A
  Bimodule T;               // over (A, A)
  Mat selfdual;             // T → T* in dual coordinates; symmetric, invertible

  static WindowSpec field_spec(Fp F);  // (F, F) with the identity witness
};

/// Validates the witness (bimodule map, invertible, symmetric), certifies A,
/// and checks that T carries Δ- and ∇-filtrations on both sides.
void validate_window_spec(const WindowSpec& spec, bool check_tilting = true);

enum class CompKind { A, T, Tstar, Astar };

struct Component {
  CompKind kind;
  int index;
  size_t offset, dim;
};

/// Finite window of the glued algebra C: A_i for lo ≤ i ≤ hi, the bimodules
/// _iT_{i+1} and their duals for lo ≤ i < hi, and A*_i on [star_lo, star_hi].
struct CWindow {
  std::shared_ptr<Algebra> alg;
  int lo = 0, hi = 0, star_lo = 0, star_hi = -1;
  std::vector<Component> comps;
  const WindowSpec* spec = nullptr;

  const Component& component(CompKind kind, int index) const;
  bool has_component(CompKind kind, int index) const;
  /// poset with λ[i] < μ[j] iff i < j (within an index, A's order)
  WeightPoset window_poset() const;
  std::string serialize() const;  // algebra JSON + component table
};

CWindow build_window(const WindowSpec& spec, int lo, int hi, int star_lo, int star_hi);

/// C_1^n-style window on [k, n]: stars on [k, n−1] (top star killed).
CWindow build_C_window(const WindowSpec& spec, int k, int n);

/// B-window: no stars at all (trivial extension of ⊕A_i by ⊕T_i).
Algebra build_B_window(const WindowSpec& spec, int k, int n);

/// The self-dual tilting bimodule T_1^n over C_1^n, with its right action
/// twisted by σ∘τ^{−n}.
struct T1nResult {
  Bimodule bim;          // over (C_1^n, C_1^n)
  Mat selfdual;          // bimodule iso onto the dual (symmetric when found)
  bool symmetric = false;
};
T1nResult build_T1n(const WindowSpec& spec, const CWindow& window, Rng& rng);

/// One application of the gluing operation: (A, T) ↦ (C_1^n, T_1^n),
/// packaged to feed back into itself.
struct CnResult {
  CWindow window;
  T1nResult tilting;
  std::shared_ptr<WindowSpec> next;  // iterate input
};
CnResult cn(const WindowSpec& spec, int n, Rng& rng);

/// Quotient epimorphism C_n(A) ↠ A onto the bottom diagonal block;
/// the kernel is an ideal spanned by every other component.
struct EpiResult {
  AlgebraMap epi;
  RowSpace kernel;
};
EpiResult cn_quotient_epi(const CWindow& window, const WindowSpec& spec);

/// Associative symmetric bilinear forms; a nondegenerate witness when one
/// exists, else the idempotent labels whose Peirce column meets the radical
/// of every candidate form.
struct SymmetryReport {
  bool symmetric = false;
  std::optional<Mat> form;
  std::vector<std::string> failing_labels;
  size_t space_dim = 0;
};
SymmetryReport check_symmetric(const Algebra& a, Rng& rng);

/// σ∘τ-reflection onto the window with mirrored star range, with the explicit
/// algebra isomorphism (exists because the witness pairing is symmetric).
struct ReflectionResult {
  CWindow reflected;
  AlgebraMap iso;  // original → reflected
};
ReflectionResult reflect_window(const WindowSpec& spec, const CWindow& window);

/// Label-level D∞ check: στσ = τ⁻¹ on component labels of a width-w window.
bool dihedral_relation_holds(int width);

/// Middle algebra assembly for an L_2 window: quotients onto the diagonal
/// blocks and the dual-of-diagonal subspaces inside q.
struct L2Middle {
  std::shared_ptr<Algebra> q;
  std::vector<std::shared_ptr<Algebra>> alpha;  // α̂_1..α̂_{a−1}
  std::vector<Mat> quotient_maps;               // q ↠ α̂_j
  std::vector<std::vector<Vec>> star_spaces;    // α̂*_j ⊂ q (basis)
};

/// Boundary data for the L_2 gluing: a tilting (A, α̂_1)-bimodule on the left
/// seam and an (α̂_{a−1}, A)-bimodule on the right seam, with the four
/// canonical pairings (supplied as matrices out of the tensor coordinates).
struct L2Boundary {
  Bimodule t_left;    // over (A_left, α̂_1)
  Bimodule t_right;   // over (α̂_{a−1}, A_right)
  Mat pair_left_out;  // T ⊗ T* → A*_0 of the left window
  Mat pair_left_in;   // T* ⊗ T → α̂*_1 ⊂ q
  Mat pair_right_in;  // T ⊗ T* → α̂*_{a−1} ⊂ q
  Mat pair_right_out; // T* ⊗ T → A*_p of the right window
};

struct L2Window {
  std::shared_ptr<Algebra> alg;
  std::vector<std::pair<std::string, std::pair<size_t, size_t>>> blocks;  // name → [offset, dim)
};

L2Window build_L2_window(const WindowSpec& left_spec, const CWindow& left, const L2Middle& q,
                         const WindowSpec& right_spec, const CWindow& right, const L2Boundary& boundary);

}  // namespace qhforge

#endif
