#ifndef QHFORGE_QH_HPP
#define QHFORGE_QH_HPP

#include <map>
#include <memory>

#include "qhforge/homological.hpp"

namespace qhforge {

/// Finite weight poset over the algebra's idempotent labels.
struct WeightPoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> lt;  // lt[i][j]: labels[i] < labels[j]

  static WeightPoset total_descending(std::vector<std::string> labels);
  static WeightPoset from_relations(std::vector<std::string> labels,
                                    const std::vector<std::pair<std::string, std::string>>& less_pairs);

  size_t index(const std::string& label) const;
  bool less(size_t i, size_t j) const { return lt[i][j]; }
  WeightPoset opposite() const;
  WeightPoset restricted(const std::vector<std::string>& sub) const;

  /// Deterministic linear extension, maximal elements first
  /// (sorted by poset rank, numeric label value as tie-break).
  std::vector<size_t> extension_descending() const;

  void validate() const;  // strict partial order, labels unique
};

struct DlabStep {
  std::string label;
  size_t dim_left = 0, dim_right = 0, dim_section = 0, chain_dim = 0;
  bool pass = false;
};

struct DlabCertificate {
  bool ok = false;
  std::vector<DlabStep> steps;
  std::optional<std::string> failure_label;
  std::string to_json() const;
};

/// Dlab's criterion along a linear extension: the multiplication map
/// (Ae/J_{>λ}Ae) ⊗ (eA/eAJ_{>λ}) → (J_{≥λ}/J_{>λ}) is bijective for each λ;
/// surjectivity holds by construction so the certificate is the dimension
/// equality per step.
DlabCertificate check_quasihereditary(const Algebra& a, const WeightPoset& poset);

/// Standard/costandard/tilting data over a certified poset.
class QhStructure {
 public:
  QhStructure(const Algebra& a, WeightPoset poset);

  const Algebra& algebra() const { return *alg_; }
  const Algebra& opposite_algebra() const { return *op_; }
  const WeightPoset& poset() const { return poset_; }
  const RowSpace& jacobson() const { return jac_; }
  const RowSpace& opposite_jacobson() const { return op_jac_; }
  const DlabCertificate& certificate() const { return cert_; }

  const Module& projective(size_t i) const { return proj_[i]; }
  const Module& standard(size_t i) const { return std_[i]; }
  /// Δ of the opposite algebra (right standard module data).
  const Module& standard_op(size_t i) const { return std_op_[i]; }
  /// ∇(λ) as a left module: dual of the opposite standard module.
  const Module& costandard(size_t i) const { return costd_[i]; }
  const Module& tilting(size_t i) const;

  size_t n() const { return poset_.labels.size(); }

 private:
  const Algebra* alg_;
  std::unique_ptr<Algebra> op_;
  WeightPoset poset_;
  RowSpace jac_, op_jac_;
  DlabCertificate cert_;
  std::vector<Module> proj_, std_, std_op_, costd_;
  mutable std::vector<std::optional<Module>> tilt_;
};

/// Δ(λ) = P(λ) / Σ_{μ>λ} trace of P(μ).
Module standard_module(const Algebra& a, const WeightPoset& poset, const std::string& label);

/// Greedy top-down peeling; multiplicities iff the module is Δ-filtered.
std::optional<std::map<std::string, size_t>> delta_multiplicities(const Module& m, const QhStructure& qh);

/// Does m admit a ∇-filtration (checked through the opposite algebra)?
std::optional<std::map<std::string, size_t>> nabla_multiplicities(const Module& m, const QhStructure& qh);

/// Indecomposable tilting module by Ringel's universal-extension tower.
Module tilting_module(const QhStructure& qh, const std::string& label);

struct RingelDual {
  Algebra algebra;            // End(⊕ T(λ)), idempotents labeled by λ
  WeightPoset poset;          // opposite order
  Module tilting_sum;         // ⊕T(λ) as a left module over the source
  std::vector<Mat> hom_basis; // basis of End used for the structure constants
};
RingelDual ringel_dual(const QhStructure& qh);

/// A^J = A/Σ_{λ∉J} Ae_λA for a downward-closed J.
QuotientResult truncate_ideal(const Algebra& a, const WeightPoset& poset, const std::vector<std::string>& J);

/// A_I = eAe, e = Σ_{λ∈I} e_λ for an upward-closed I.
SubalgebraResult truncate_coideal(const Algebra& a, const WeightPoset& poset, const std::vector<std::string>& I);

}  // namespace qhforge

#endif
