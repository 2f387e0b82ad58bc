#include "qhforge/module.hpp"

#include <algorithm>

namespace qhforge {

Module::Module(const Algebra* alg, Side side, size_t dim, std::vector<Mat> action)
    : alg_(alg), side_(side), dim_(dim), act_(std::move(action)) {
  if (act_.size() != alg_->dim()) throw AlgebraError("Module: one action matrix per basis element required");
  for (const auto& m : act_)
    if (m.rows() != dim_ || m.cols() != dim_) throw AlgebraError("Module: action matrix shape mismatch");
}

Mat Module::act(const Vec& x) const {
  Mat m(alg_->field(), dim_, dim_);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) m = m + act_[i].scaled(x[i]);
  return m;
}

Vec Module::apply(const Vec& x, const Vec& v) const {
  Vec out(dim_, 0);
  const Fp& F = alg_->field();
  for (size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    Vec w = act_[i].apply(v);
    gfp::vec_axpy(F, x[i], w, out);
  }
  return out;
}

void Module::validate() const {
  const Algebra& A = *alg_;
  if (!act(A.unit()).is_identity()) throw AlgebraError("Module: unit does not act as identity");
  for (size_t i = 0; i < A.dim(); ++i)
    for (size_t j = 0; j < A.dim(); ++j) {
      Vec bi(A.dim(), 0), bj(A.dim(), 0);
      bi[i] = 1;
      bj[j] = 1;
      Mat lhs = act(A.mul(bi, bj));
      Mat rhs = (side_ == Side::Left) ? act_[i] * act_[j] : act_[j] * act_[i];
      if (!(lhs == rhs)) throw AlgebraError("Module: action not multiplicative");
    }
}

Module regular_module(const Algebra& a, Side side) {
  std::vector<Mat> act;
  act.reserve(a.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    Vec b(a.dim(), 0);
    b[i] = 1;
    act.push_back(side == Side::Left ? a.left_mult(b) : a.right_mult(b));
  }
  return Module(&a, side, a.dim(), std::move(act));
}

Module zero_module(const Algebra& a, Side side) {
  return Module(&a, side, 0, std::vector<Mat>(a.dim(), Mat(a.field(), 0, 0)));
}

Module direct_sum(const Module& m, const Module& n) {
  const Algebra& A = m.algebra();
  size_t d = m.dim() + n.dim();
  std::vector<Mat> act;
  for (size_t i = 0; i < A.dim(); ++i) {
    Mat blk(A.field(), d, d);
    for (size_t r = 0; r < m.dim(); ++r)
      for (size_t c = 0; c < m.dim(); ++c) blk.at(r, c) = m.action(i).at(r, c);
    for (size_t r = 0; r < n.dim(); ++r)
      for (size_t c = 0; c < n.dim(); ++c) blk.at(m.dim() + r, m.dim() + c) = n.action(i).at(r, c);
    act.push_back(std::move(blk));
  }
  return Module(&A, m.side(), d, std::move(act));
}

Module direct_sum_power(const Module& m, size_t k) {
  Module acc = zero_module(m.algebra(), m.side());
  for (size_t i = 0; i < k; ++i) acc = direct_sum(acc, m);
  return acc;
}

SubmoduleResult submodule(const Module& m, const RowSpace& space) {
  const Fp& F = m.algebra().field();
  size_t d = space.dim();
  std::vector<Mat> act;
  for (size_t i = 0; i < m.algebra().dim(); ++i) {
    Mat blk(F, d, d);
    for (size_t j = 0; j < d; ++j) {
      Vec img = m.action(i).apply(space.basis()[j]);
      Vec co = space.coords(img);  // throws if not invariant
      for (size_t r = 0; r < d; ++r) blk.at(r, j) = co[r];
    }
    act.push_back(std::move(blk));
  }
  Mat inc(F, m.dim(), d);
  for (size_t j = 0; j < d; ++j)
    for (size_t r = 0; r < m.dim(); ++r) inc.at(r, j) = space.basis()[j][r];
  return {Module(&m.algebra(), m.side(), d, std::move(act)), std::move(inc)};
}

QuotientModuleResult quotient_module(const Module& m, const RowSpace& space) {
  const Fp& F = m.algebra().field();
  gfp::QuotientMap qm(space);
  size_t d = qm.dim();
  std::vector<Mat> act;
  for (size_t i = 0; i < m.algebra().dim(); ++i) {
    Mat blk(F, d, d);
    for (size_t j = 0; j < d; ++j) {
      Vec ej(d, 0);
      ej[j] = 1;
      Vec img = qm.project(m.action(i).apply(qm.lift(ej)));
      for (size_t r = 0; r < d; ++r) blk.at(r, j) = img[r];
    }
    act.push_back(std::move(blk));
  }
  Mat proj(F, d, m.dim());
  for (size_t c = 0; c < m.dim(); ++c) {
    Vec b(m.dim(), 0);
    b[c] = 1;
    Vec img = qm.project(b);
    for (size_t r = 0; r < d; ++r) proj.at(r, c) = img[r];
  }
  return {Module(&m.algebra(), m.side(), d, std::move(act)), std::move(proj)};
}

RowSpace spin(const Module& m, const std::vector<Vec>& seeds) {
  const Fp& F = m.algebra().field();
  RowSpace s(F, m.dim());
  std::vector<Vec> frontier;
  for (const auto& v : seeds)
    if (s.insert(v)) frontier.push_back(v);
  const auto& gens = m.algebra().generating_set();
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier) {
      for (size_t gi : gens) {
        Vec w = m.action(gi).apply(v);
        if (s.insert(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return s;
}

Module dual_module(const Module& m) {
  std::vector<Mat> act;
  for (size_t i = 0; i < m.algebra().dim(); ++i) act.push_back(m.action(i).transpose());
  return Module(&m.algebra(), m.side() == Side::Left ? Side::Right : Side::Left, m.dim(), std::move(act));
}

Module twist_module(const Module& m, const AlgebraMap& t) {
  if (t.kind != MapKind::Antihomomorphism) throw AlgebraError("twist_module: antiautomorphism required");
  std::vector<Mat> act;
  for (size_t i = 0; i < m.algebra().dim(); ++i) {
    Vec b(m.algebra().dim(), 0);
    b[i] = 1;
    act.push_back(m.act(t.apply(b)));
  }
  return Module(t.source, m.side() == Side::Left ? Side::Right : Side::Left, m.dim(), std::move(act));
}

Module restrict_along(const Module& m, const AlgebraMap& phi) {
  if (phi.kind != MapKind::Homomorphism) throw AlgebraError("restrict_along: homomorphism required");
  std::vector<Mat> act;
  for (size_t i = 0; i < phi.source->dim(); ++i) {
    Vec b(phi.source->dim(), 0);
    b[i] = 1;
    act.push_back(m.act(phi.apply(b)));
  }
  return Module(phi.source, m.side(), m.dim(), std::move(act));
}

namespace {

// X·ρ_m(g) − ρ_n(g)·X = 0 for generators g; unknowns X (n.dim × m.dim),
// column index x_{rc} ↦ r*m.dim + c.
std::vector<Mat> intertwiner_space(const std::vector<Mat>& mg, const std::vector<Mat>& ng, const Fp& F, size_t dm,
                                   size_t dn) {
  size_t unknowns = dm * dn;
  Mat sys(F, mg.size() * unknowns, unknowns);
  size_t row = 0;
  for (size_t g = 0; g < mg.size(); ++g) {
    const Mat& a = mg[g];
    const Mat& b = ng[g];
    for (size_t r = 0; r < dn; ++r)
      for (size_t c = 0; c < dm; ++c) {
        // (X·a − b·X)_{rc} = Σ_k X_{rk} a_{kc} − b_{rk} X_{kc}
        for (size_t k = 0; k < dm; ++k)
          if (a.at(k, c)) sys.at(row, r * dm + k) = F.add(sys.at(row, r * dm + k), a.at(k, c));
        for (size_t k = 0; k < dn; ++k)
          if (b.at(r, k)) sys.at(row, k * dm + c) = F.sub(sys.at(row, k * dm + c), b.at(r, k));
        ++row;
      }
  }
  std::vector<Mat> out;
  for (const Vec& v : gfp::nullspace(sys)) out.emplace_back(F, dn, dm, v);
  return out;
}

}  // namespace

std::vector<Mat> hom_space(const Module& m, const Module& n) {
  if (&m.algebra() != &n.algebra() || m.side() != n.side()) throw AlgebraError("hom_space: mismatched modules");
  if (m.dim() == 0 || n.dim() == 0) return {};
  const auto& gens = m.algebra().generating_set();
  std::vector<Mat> mg, ng;
  if (gens.empty()) {
    // algebra spanned by the unit
    mg.push_back(m.act(m.algebra().unit()));
    ng.push_back(n.act(n.algebra().unit()));
  }
  for (size_t gi : gens) {
    mg.push_back(m.action(gi));
    ng.push_back(n.action(gi));
  }
  return intertwiner_space(mg, ng, m.algebra().field(), m.dim(), n.dim());
}

std::optional<Mat> invertible_in_span(const std::vector<Mat>& space, Rng& rng) {
  if (space.empty()) return std::nullopt;
  const Fp& F = space[0].field();
  if (space[0].rows() != space[0].cols()) return std::nullopt;
  for (const auto& h : space)
    if (inverse(h)) return h;
  size_t tries = 8 * space.size() + 16;
  for (size_t t = 0; t < tries; ++t) {
    Mat cand(F, space[0].rows(), space[0].cols());
    for (const auto& h : space) cand = cand + h.scaled(rng.fp(F));
    if (inverse(cand)) return cand;
  }
  // exhaustive for small spans
  double total = 1;
  for (size_t i = 0; i < space.size(); ++i) total *= F.p();
  if (total <= 4096) {
    std::vector<uint32_t> coef(space.size(), 0);
    while (true) {
      size_t i = 0;
      while (i < coef.size()) {
        coef[i]++;
        if (coef[i] < F.p()) break;
        coef[i] = 0;
        ++i;
      }
      if (i == coef.size()) break;
      Mat cand(F, space[0].rows(), space[0].cols());
      for (size_t k = 0; k < space.size(); ++k)
        if (coef[k]) cand = cand + space[k].scaled(coef[k]);
      if (inverse(cand)) return cand;
    }
  }
  return std::nullopt;
}

std::optional<Mat> module_iso(const Module& m, const Module& n, Rng& rng) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Mat(m.algebra().field(), 0, 0);
  return invertible_in_span(hom_space(m, n), rng);
}

Bimodule::Bimodule(const Algebra* left, const Algebra* right, size_t dim, std::vector<Mat> lact, std::vector<Mat> ract)
    : l_(left), r_(right), dim_(dim), la_(std::move(lact)), ra_(std::move(ract)) {
  if (la_.size() != l_->dim() || ra_.size() != r_->dim()) throw AlgebraError("Bimodule: action count mismatch");
}

Mat Bimodule::left_act(const Vec& x) const {
  Mat m(l_->field(), dim_, dim_);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) m = m + la_[i].scaled(x[i]);
  return m;
}

Mat Bimodule::right_act(const Vec& x) const {
  Mat m(r_->field(), dim_, dim_);
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) m = m + ra_[i].scaled(x[i]);
  return m;
}

void Bimodule::validate() const {
  as_left().validate();
  as_right().validate();
  for (size_t i = 0; i < l_->dim(); ++i)
    for (size_t j = 0; j < r_->dim(); ++j)
      if (!(la_[i] * ra_[j] == ra_[j] * la_[i])) throw AlgebraError("Bimodule: actions do not commute");
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<Mat> la, ra;
  for (size_t i = 0; i < a.dim(); ++i) {
    Vec b(a.dim(), 0);
    b[i] = 1;
    la.push_back(a.left_mult(b));
    ra.push_back(a.right_mult(b));
  }
  return Bimodule(&a, &a, a.dim(), std::move(la), std::move(ra));
}

Bimodule dual_bimodule(const Bimodule& m) {
  std::vector<Mat> la, ra;
  for (size_t i = 0; i < m.right_algebra().dim(); ++i) la.push_back(m.right_action(i).transpose());
  for (size_t i = 0; i < m.left_algebra().dim(); ++i) ra.push_back(m.left_action(i).transpose());
  return Bimodule(&m.right_algebra(), &m.left_algebra(), m.dim(), std::move(la), std::move(ra));
}

TensorResult tensor_over(const Bimodule& m, const Bimodule& n) {
  if (&m.right_algebra() != &n.left_algebra()) throw AlgebraError("tensor_over: middle algebras differ");
  const Algebra& B = m.right_algebra();
  const Fp& F = B.field();
  size_t dm = m.dim(), dn = n.dim(), amb = dm * dn;
  RowSpace rel(F, amb);
  for (size_t bi = 0; bi < B.dim(); ++bi) {
    const Mat& rb = m.right_action(bi);
    const Mat& lb = n.left_action(bi);
    for (size_t u = 0; u < dm; ++u) {
      Vec ub = rb.col(u);  // (e_u)·b in m-coords
      for (size_t v = 0; v < dn; ++v) {
        Vec bv = lb.col(v);
        Vec relv(amb, 0);
        for (size_t x = 0; x < dm; ++x)
          if (ub[x]) relv[x * dn + v] = F.add(relv[x * dn + v], ub[x]);
        for (size_t y = 0; y < dn; ++y)
          if (bv[y]) relv[u * dn + y] = F.sub(relv[u * dn + y], bv[y]);
        rel.insert(std::move(relv));
      }
    }
  }
  gfp::QuotientMap qm(rel);
  size_t d = qm.dim();
  std::vector<Mat> la, ra;
  for (size_t i = 0; i < m.left_algebra().dim(); ++i) {
    const Mat& am = m.left_action(i);
    Mat blk(F, d, d);
    for (size_t j = 0; j < d; ++j) {
      Vec rep = qm.lift([&] {
        Vec e(d, 0);
        e[j] = 1;
        return e;
      }());
      Vec img(amb, 0);
      for (size_t u = 0; u < dm; ++u)
        for (size_t v = 0; v < dn; ++v) {
          uint32_t c = rep[u * dn + v];
          if (!c) continue;
          Vec au = am.col(u);
          for (size_t x = 0; x < dm; ++x)
            if (au[x]) img[x * dn + v] = F.add(img[x * dn + v], F.mul(c, au[x]));
        }
      Vec pr = qm.project(img);
      for (size_t r = 0; r < d; ++r) blk.at(r, j) = pr[r];
    }
    la.push_back(std::move(blk));
  }
  for (size_t i = 0; i < n.right_algebra().dim(); ++i) {
    const Mat& an = n.right_action(i);
    Mat blk(F, d, d);
    for (size_t j = 0; j < d; ++j) {
      Vec rep = qm.lift([&] {
        Vec e(d, 0);
        e[j] = 1;
        return e;
      }());
      Vec img(amb, 0);
      for (size_t u = 0; u < dm; ++u)
        for (size_t v = 0; v < dn; ++v) {
          uint32_t c = rep[u * dn + v];
          if (!c) continue;
          Vec av = an.col(v);
          for (size_t y = 0; y < dn; ++y)
            if (av[y]) img[u * dn + y] = F.add(img[u * dn + y], F.mul(c, av[y]));
        }
      Vec pr = qm.project(img);
      for (size_t r = 0; r < d; ++r) blk.at(r, j) = pr[r];
    }
    ra.push_back(std::move(blk));
  }
  Bimodule out(&m.left_algebra(), &n.right_algebra(), d, std::move(la), std::move(ra));
  Mat proj(F, d, amb);
  for (size_t c = 0; c < amb; ++c) {
    Vec b(amb, 0);
    b[c] = 1;
    Vec img = qm.project(b);
    for (size_t r = 0; r < d; ++r) proj.at(r, c) = img[r];
  }
  return {std::move(out), std::move(proj)};
}

std::vector<Mat> bimodule_hom(const Bimodule& m, const Bimodule& n) {
  if (&m.left_algebra() != &n.left_algebra() || &m.right_algebra() != &n.right_algebra())
    throw AlgebraError("bimodule_hom: algebra mismatch");
  const Fp& F = m.left_algebra().field();
  std::vector<Mat> mg, ng;
  for (size_t gi : m.left_algebra().generating_set()) {
    mg.push_back(m.left_action(gi));
    ng.push_back(n.left_action(gi));
  }
  for (size_t gi : m.right_algebra().generating_set()) {
    mg.push_back(m.right_action(gi));
    ng.push_back(n.right_action(gi));
  }
  if (mg.empty()) {
    mg.push_back(Mat::identity(F, m.dim()));
    ng.push_back(Mat::identity(F, n.dim()));
  }
  size_t unknowns = m.dim() * n.dim();
  Mat sys(F, mg.size() * unknowns, unknowns);
  size_t row = 0;
  for (size_t g = 0; g < mg.size(); ++g) {
    const Mat& a = mg[g];
    const Mat& b = ng[g];
    for (size_t r = 0; r < n.dim(); ++r)
      for (size_t c = 0; c < m.dim(); ++c) {
        for (size_t k = 0; k < m.dim(); ++k)
          if (a.at(k, c)) sys.at(row, r * m.dim() + k) = F.add(sys.at(row, r * m.dim() + k), a.at(k, c));
        for (size_t k = 0; k < n.dim(); ++k)
          if (b.at(r, k)) sys.at(row, k * m.dim() + c) = F.sub(sys.at(row, k * m.dim() + c), b.at(r, k));
        ++row;
      }
  }
  std::vector<Mat> out;
  for (const Vec& v : gfp::nullspace(sys)) out.emplace_back(F, n.dim(), m.dim(), v);
  return out;
}

std::optional<Mat> bimodule_iso(const Bimodule& m, const Bimodule& n, Rng& rng) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Mat(m.left_algebra().field(), 0, 0);
  return invertible_in_span(bimodule_hom(m, n), rng);
}

Bimodule twist_bimodule_both(const Bimodule& m, const AlgebraMap& t) {
  if (t.kind != MapKind::Antihomomorphism) throw AlgebraError("twist_bimodule_both: antiautomorphism required");
  const Algebra& A = *t.source;
  std::vector<Mat> la, ra;
  for (size_t i = 0; i < A.dim(); ++i) {
    Vec b(A.dim(), 0);
    b[i] = 1;
    Vec tb = t.apply(b);
    la.push_back(m.right_act(tb));
    ra.push_back(m.left_act(tb));
  }
  return Bimodule(&A, &A, m.dim(), std::move(la), std::move(ra));
}

}  // namespace qhforge
