#include "qhforge/qh.hpp"

#include <algorithm>
#include <sstream>

namespace qhforge {

WeightPoset WeightPoset::total_descending(std::vector<std::string> labels) {
  WeightPoset p;
  p.labels = std::move(labels);
  size_t n = p.labels.size();
  p.lt.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j) p.lt[i][j] = true;  // later labels are smaller
  return p;
}

WeightPoset WeightPoset::from_relations(std::vector<std::string> labels,
                                        const std::vector<std::pair<std::string, std::string>>& less_pairs) {
  WeightPoset p;
  p.labels = std::move(labels);
  size_t n = p.labels.size();
  p.lt.assign(n, std::vector<bool>(n, false));
  for (const auto& [lo, hi] : less_pairs) p.lt[p.index(lo)][p.index(hi)] = true;
  // transitive closure
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (p.lt[i][k] && p.lt[k][j]) p.lt[i][j] = true;
  p.validate();
  return p;
}

size_t WeightPoset::index(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw AlgebraError("WeightPoset: unknown label " + label);
}

WeightPoset WeightPoset::opposite() const {
  WeightPoset p = *this;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = 0; j < labels.size(); ++j) p.lt[i][j] = lt[j][i];
  return p;
}

WeightPoset WeightPoset::restricted(const std::vector<std::string>& sub) const {
  WeightPoset p;
  p.labels = sub;
  p.lt.assign(sub.size(), std::vector<bool>(sub.size(), false));
  for (size_t i = 0; i < sub.size(); ++i)
    for (size_t j = 0; j < sub.size(); ++j) p.lt[i][j] = lt[index(sub[i])][index(sub[j])];
  return p;
}

void WeightPoset::validate() const {
  size_t n = labels.size();
  for (size_t i = 0; i < n; ++i) {
    if (lt[i][i]) throw AlgebraError("WeightPoset: not irreflexive");
    for (size_t j = 0; j < n; ++j) {
      if (lt[i][j] && lt[j][i]) throw AlgebraError("WeightPoset: not antisymmetric");
      for (size_t k = 0; k < n; ++k)
        if (lt[i][j] && lt[j][k] && !lt[i][k]) throw AlgebraError("WeightPoset: not transitive");
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) throw AlgebraError("WeightPoset: duplicate label");
}

std::vector<size_t> WeightPoset::extension_descending() const {
  size_t n = labels.size();
  // rank = longest chain strictly above
  std::vector<size_t> rank(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (lt[i][j] && rank[i] < rank[j] + 1) {
          rank[i] = rank[j] + 1;
          changed = true;
        }
  }
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  auto numeric = [&](size_t i) -> long long {
    try {
      return std::stoll(labels[i]);
    } catch (...) {
      return -1;
    }
  };
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (rank[a] != rank[b]) return rank[a] < rank[b];
    long long na = numeric(a), nb = numeric(b);
    if (na != nb) return na > nb;
    return labels[a] < labels[b];
  });
  return order;
}

DlabCertificate check_quasihereditary(const Algebra& a, const WeightPoset& poset) {
  const Fp& F = a.field();
  DlabCertificate cert;
  cert.ok = true;
  RowSpace chain(F, a.dim());
  for (size_t idx : poset.extension_descending()) {
    const std::string& label = poset.labels[idx];
    Vec cls = a.class_idempotent(label);
    Vec prim;
    for (const auto& e : a.idempotents())
      if (e.label == label) {
        prim = e.vec;
        break;
      }
    RowSpace next = RowSpace::sum(chain, a.two_sided_ideal({cls}));
    // dims of (Ae + J)/J and (eA + J)/J for the primitive e
    RowSpace lred = chain, rred = chain;
    RowSpace ae = a.left_ideal({prim});
    RowSpace ea = a.right_ideal({prim});
    for (const auto& v : ae.basis()) lred.insert(v);
    for (const auto& v : ea.basis()) rred.insert(v);
    DlabStep step;
    step.label = label;
    step.dim_left = lred.dim() - chain.dim();
    step.dim_right = rred.dim() - chain.dim();
    step.dim_section = next.dim() - chain.dim();
    step.chain_dim = next.dim();
    step.pass = (step.dim_section == step.dim_left * step.dim_right);
    if (!step.pass && cert.ok) {
      cert.ok = false;
      cert.failure_label = label;
    }
    cert.steps.push_back(step);
    chain = std::move(next);
  }
  if (chain.dim() != a.dim()) {
    cert.ok = false;
    if (!cert.failure_label) cert.failure_label = "<chain below full dimension>";
  }
  return cert;
}

std::string DlabCertificate::to_json() const {
  std::ostringstream os;
  os << "{\"ok\":" << (ok ? "true" : "false") << ",\"steps\":[";
  for (size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (i) os << ",";
    os << "{\"label\":\"" << s.label << "\",\"left\":" << s.dim_left << ",\"right\":" << s.dim_right
       << ",\"section\":" << s.dim_section << ",\"chain\":" << s.chain_dim
       << ",\"pass\":" << (s.pass ? "true" : "false") << "}";
  }
  os << "]";
  if (failure_label) os << ",\"failure\":\"" << *failure_label << "\"";
  os << "}";
  return os.str();
}

Module standard_module(const Algebra& a, const WeightPoset& poset, const std::string& label) {
  size_t li = poset.index(label);
  Vec prim;
  bool found = false;
  for (const auto& e : a.idempotents())
    if (e.label == label) {
      prim = e.vec;
      found = true;
      break;
    }
  if (!found) throw AlgebraError("standard_module: label absent: " + label);
  RowSpace pspace = a.left_ideal({prim});
  Module reg = regular_module(a, Side::Left);
  auto proj = submodule(reg, pspace);
  // trace of every P(μ), μ > λ: submodule generated by e_μ·A·e
  std::vector<Vec> seeds;
  for (size_t mu = 0; mu < poset.labels.size(); ++mu) {
    if (!poset.less(li, mu)) continue;
    Vec cls = a.class_idempotent(poset.labels[mu]);
    RowSpace tr = a.peirce(cls, prim);
    for (const auto& h : tr.basis()) seeds.push_back(pspace.coords(h));
  }
  RowSpace trace_sub = spin(proj.mod, seeds);
  return quotient_module(proj.mod, trace_sub).mod;
}

QhStructure::QhStructure(const Algebra& a, WeightPoset poset) : alg_(&a), poset_(std::move(poset)) {
  poset_.validate();
  cert_ = check_quasihereditary(a, poset_);
  if (!cert_.ok)
    throw AlgebraError("QhStructure: not quasi-hereditary for the given poset (first failure at " +
                       cert_.failure_label.value_or("?") + ")");
  jac_ = radical(a);
  op_ = std::make_unique<Algebra>(a.opposite());
  op_jac_ = radical(*op_);
  Module reg = regular_module(a, Side::Left);
  for (const auto& label : poset_.labels) {
    Vec prim;
    for (const auto& e : a.idempotents())
      if (e.label == label) {
        prim = e.vec;
        break;
      }
    proj_.push_back(submodule(reg, a.left_ideal({prim})).mod);
    std_.push_back(standard_module(a, poset_, label));
    std_op_.push_back(standard_module(*op_, poset_, label));
    // ∇(λ) = (opposite standard)^* as a left module
    std::vector<Mat> act;
    const Module& d = std_op_.back();
    for (size_t i = 0; i < a.dim(); ++i) act.push_back(d.action(i).transpose());
    costd_.push_back(Module(&a, Side::Left, d.dim(), std::move(act)));
  }
  tilt_.resize(poset_.labels.size());
}

namespace {

std::optional<std::map<std::string, size_t>> peel_standards(const Module& m, const Algebra& a,
                                                            const WeightPoset& poset,
                                                            const std::vector<Module>& standards) {
  std::map<std::string, size_t> mults;
  Module cur = m;
  for (size_t idx : poset.extension_descending()) {
    const std::string& label = poset.labels[idx];
    if (cur.dim() == 0) break;
    Vec prim;
    for (const auto& e : a.idempotents())
      if (e.label == label) {
        prim = e.vec;
        break;
      }
    Mat act = cur.act(prim);
    auto rr = gfp::rref(act);
    size_t mult = rr.rank;
    if (mult == 0) continue;
    std::vector<Vec> seeds;
    for (size_t c = 0; c < cur.dim(); ++c) seeds.push_back(act.col(c));
    RowSpace u = spin(cur, seeds);
    if (u.dim() != mult * standards[idx].dim()) return std::nullopt;  // peeling stalls
    mults[label] = mult;
    cur = quotient_module(cur, u).mod;
  }
  if (cur.dim() != 0) return std::nullopt;
  return mults;
}

}  // namespace

std::optional<std::map<std::string, size_t>> delta_multiplicities(const Module& m, const QhStructure& qh) {
  std::vector<Module> standards;
  for (size_t i = 0; i < qh.n(); ++i) standards.push_back(qh.standard(i));
  return peel_standards(m, qh.algebra(), qh.poset(), standards);
}

std::optional<std::map<std::string, size_t>> nabla_multiplicities(const Module& m, const QhStructure& qh) {
  // ∇-filtration of m ⟺ Δ-filtration of the dual over the opposite algebra
  const Algebra& aop = qh.opposite_algebra();
  std::vector<Mat> act;
  for (size_t i = 0; i < aop.dim(); ++i) act.push_back(m.action(i).transpose());
  Module dual_op(&aop, Side::Left, m.dim(), std::move(act));
  std::vector<Module> standards;
  for (size_t i = 0; i < qh.n(); ++i) standards.push_back(qh.standard_op(i));
  return peel_standards(dual_op, aop, qh.poset(), standards);
}

Module tilting_module(const QhStructure& qh, const std::string& label) {
  const WeightPoset& poset = qh.poset();
  size_t li = poset.index(label);
  Module t = qh.standard(li);
  size_t bound = 0;
  for (size_t i = 0; i < qh.n(); ++i) bound += qh.standard(i).dim();
  bound *= std::max<size_t>(qh.algebra().dim(), 1);

  for (size_t mu : poset.extension_descending()) {
    if (!poset.less(mu, li)) continue;
    for (int round = 0;; ++round) {
      Ext1Data ext = ext1(qh.standard(mu), t, qh.jacobson());
      if (ext.dim == 0) break;
      if (round > 8 || t.dim() > bound)
        throw AlgebraError("tilting_module: universal extension tower failed to terminate");
      t = extension_module(qh.standard(mu), t, ext, ext.cocycles);
    }
  }
  return t;
}

const Module& QhStructure::tilting(size_t i) const {
  if (!tilt_[i]) tilt_[i] = tilting_module(*this, poset_.labels[i]);
  return *tilt_[i];
}

RingelDual ringel_dual(const QhStructure& qh) {
  const Algebra& A = qh.algebra();
  const Fp& F = A.field();
  Module sum = zero_module(A, Side::Left);
  std::vector<size_t> offsets;
  for (size_t i = 0; i < qh.n(); ++i) {
    offsets.push_back(sum.dim());
    sum = direct_sum(sum, qh.tilting(i));
  }
  EndAlgebra end = endomorphism_algebra(sum);
  std::vector<Vec> flat;
  for (const auto& h : end.basis) flat.push_back(h.data());
  gfp::SpanSolver solver(F, sum.dim() * sum.dim(), flat);
  std::vector<LabeledIdem> idems;
  for (size_t i = 0; i < qh.n(); ++i) {
    Mat p(F, sum.dim(), sum.dim());
    size_t lo = offsets[i];
    size_t hi = (i + 1 < qh.n()) ? offsets[i + 1] : sum.dim();
    for (size_t d = lo; d < hi; ++d) p.at(d, d) = 1;
    idems.push_back({qh.poset().labels[i], solver.coords(p.data())});
  }
  std::vector<std::vector<SparseVec>> mult(end.alg.dim(), std::vector<SparseVec>(end.alg.dim()));
  for (size_t i = 0; i < end.alg.dim(); ++i)
    for (size_t j = 0; j < end.alg.dim(); ++j) mult[i][j] = end.alg.mult_entry(i, j);
  Algebra dual(F, end.alg.dim(), std::move(mult), end.alg.unit(), std::move(idems));
  return {std::move(dual), qh.poset().opposite(), sum, end.basis};
}

QuotientResult truncate_ideal(const Algebra& a, const WeightPoset& poset, const std::vector<std::string>& J) {
  for (const auto& l : J) {
    size_t li = poset.index(l);
    for (size_t m = 0; m < poset.labels.size(); ++m)
      if (poset.less(m, li) && std::find(J.begin(), J.end(), poset.labels[m]) == J.end())
        throw AlgebraError("truncate_ideal: label set is not downward closed (missing " + poset.labels[m] + ")");
  }
  std::vector<Vec> kill;
  for (const auto& l : poset.labels)
    if (std::find(J.begin(), J.end(), l) == J.end()) kill.push_back(a.class_idempotent(l));
  if (kill.empty()) return quotient_algebra(a, RowSpace(a.field(), a.dim()));
  return quotient_algebra(a, a.two_sided_ideal(kill));
}

SubalgebraResult truncate_coideal(const Algebra& a, const WeightPoset& poset, const std::vector<std::string>& I) {
  for (const auto& l : I) {
    size_t li = poset.index(l);
    for (size_t m = 0; m < poset.labels.size(); ++m)
      if (poset.less(li, m) && std::find(I.begin(), I.end(), poset.labels[m]) == I.end())
        throw AlgebraError("truncate_coideal: label set is not upward closed (missing " + poset.labels[m] + ")");
  }
  Vec e(a.dim(), 0);
  for (const auto& l : I) e = gfp::vec_add(a.field(), e, a.class_idempotent(l));
  return corner_algebra(a, e);
}

}  // namespace qhforge
