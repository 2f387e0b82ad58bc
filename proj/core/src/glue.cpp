#include "qhforge/glue.hpp"

#include <algorithm>
#include <sstream>

#include "qhforge/json_io.hpp"

namespace qhforge {

WindowSpec WindowSpec::field_spec(Fp F) {
  WindowSpec s;
  s.A = std::make_shared<Algebra>(field_algebra(F));
  s.poset = WeightPoset::total_descending({"*"});
  s.T = regular_bimodule(*s.A);
  s.selfdual = Mat::identity(F, 1);
  return s;
}

namespace {

bool is_bimodule_map_to_dual(const Bimodule& t, const Mat& w) {
  // W·L(a) = R(a)ᵀ·W and W·R(a) = L(a)ᵀ·W on algebra generators
  const Algebra& A = t.left_algebra();
  for (size_t gi : A.generating_set()) {
    if (!(w * t.left_action(gi) == t.right_action(gi).transpose() * w)) return false;
  }
  for (size_t gi : t.right_algebra().generating_set()) {
    if (!(w * t.right_action(gi) == t.left_action(gi).transpose() * w)) return false;
  }
  return true;
}

}  // namespace

void validate_window_spec(const WindowSpec& spec, bool check_tilting) {
  const Fp& F = spec.A->field();
  if (spec.T.dim() != spec.selfdual.rows() || spec.selfdual.rows() != spec.selfdual.cols())
    throw AlgebraError("WindowSpec: witness shape mismatch");
  if (!(spec.selfdual == spec.selfdual.transpose()))
    throw AlgebraError("WindowSpec: witness pairing is not symmetric");
  if (!gfp::inverse(spec.selfdual)) throw AlgebraError("WindowSpec: witness not invertible");
  if (!is_bimodule_map_to_dual(spec.T, spec.selfdual))
    throw AlgebraError("WindowSpec: witness is not a bimodule map onto the dual");
  spec.T.validate();
  auto cert = check_quasihereditary(*spec.A, spec.poset);
  if (!cert.ok) throw AlgebraError("WindowSpec: base algebra fails the heredity certificate");
  if (check_tilting) {
    QhStructure qh(*spec.A, spec.poset);
    if (!delta_multiplicities(spec.T.as_left(), qh) || !nabla_multiplicities(spec.T.as_left(), qh))
      throw AlgebraError("WindowSpec: T is not a tilting left module");
    Algebra op = spec.A->opposite();
    QhStructure qh_op(op, spec.poset);
    Module right_as_op(&op, Side::Left, spec.T.dim(), [&] {
      std::vector<Mat> act;
      for (size_t i = 0; i < op.dim(); ++i) act.push_back(spec.T.right_action(i));
      return act;
    }());
    if (!delta_multiplicities(right_as_op, qh_op) || !nabla_multiplicities(right_as_op, qh_op))
      throw AlgebraError("WindowSpec: T is not a tilting right module");
  }
  (void)F;
}

const Component& CWindow::component(CompKind kind, int index) const {
  for (const auto& c : comps)
    if (c.kind == kind && c.index == index) return c;
  throw AlgebraError("CWindow: component not present");
}

bool CWindow::has_component(CompKind kind, int index) const {
  for (const auto& c : comps)
    if (c.kind == kind && c.index == index) return true;
  return false;
}

WeightPoset CWindow::window_poset() const {
  // λ[i] < μ[j] iff i < j; within an index, the base poset
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> rel;
  const auto& base = spec->poset;
  for (int i = lo; i <= hi; ++i)
    for (const auto& l : base.labels) labels.push_back(l + "[" + std::to_string(i) + "]");
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (size_t a = 0; a < base.labels.size(); ++a)
        for (size_t b = 0; b < base.labels.size(); ++b) {
          bool less = (i < j) || (i == j && base.less(a, b));
          if (less)
            rel.push_back({base.labels[a] + "[" + std::to_string(i) + "]",
                           base.labels[b] + "[" + std::to_string(j) + "]"});
        }
  return WeightPoset::from_relations(labels, rel);
}

namespace {

struct WindowLayout {
  const WindowSpec* spec;
  std::vector<Component> comps;
  size_t dim = 0;

  void add(CompKind kind, int index, size_t d) {
    comps.push_back({kind, index, dim, d});
    dim += d;
  }
  const Component* find(CompKind kind, int index) const {
    for (const auto& c : comps)
      if (c.kind == kind && c.index == index) return &c;
    return nullptr;
  }
};

// product of local coordinate vectors v1 (in c1) and v2 (in c2);
// returns (component, local coords) or nullopt for a structural zero
std::optional<std::pair<const Component*, Vec>> component_mul(const WindowLayout& w, const Component& c1,
                                                              const Vec& v1, const Component& c2, const Vec& v2) {
  const Algebra& A = *w.spec->A;
  const Bimodule& T = w.spec->T;
  const Fp& F = A.field();
  auto out = [&](CompKind k, int i, Vec v) -> std::optional<std::pair<const Component*, Vec>> {
    const Component* c = w.find(k, i);
    if (!c) return std::nullopt;  // killed by the window truncation
    return std::make_pair(c, std::move(v));
  };
  switch (c1.kind) {
    case CompKind::A:
      if (c2.kind == CompKind::A && c2.index == c1.index) return out(CompKind::A, c1.index, A.mul(v1, v2));
      if (c2.kind == CompKind::T && c2.index == c1.index) return out(CompKind::T, c2.index, T.left_act(v1).apply(v2));
      if (c2.kind == CompKind::Tstar && c2.index == c1.index - 1)
        return out(CompKind::Tstar, c2.index, T.right_act(v1).transpose().apply(v2));
      if (c2.kind == CompKind::Astar && c2.index == c1.index)
        return out(CompKind::Astar, c1.index, A.right_mult(v1).transpose().apply(v2));
      return std::nullopt;
    case CompKind::T:
      if (c2.kind == CompKind::A && c2.index == c1.index + 1) return out(CompKind::T, c1.index, T.right_act(v2).apply(v1));
      if (c2.kind == CompKind::Tstar && c2.index == c1.index) {
        // (t·f)(a) = f(a·t)
        Vec g(A.dim(), 0);
        for (size_t k = 0; k < A.dim(); ++k) g[k] = gfp::dot(F, v2, T.left_action(k).apply(v1));
        return out(CompKind::Astar, c1.index, std::move(g));
      }
      return std::nullopt;
    case CompKind::Tstar:
      if (c2.kind == CompKind::A && c2.index == c1.index) return out(CompKind::Tstar, c1.index, T.left_act(v2).transpose().apply(v1));
      if (c2.kind == CompKind::T && c2.index == c1.index) {
        // (f·t)(a) = f(t·a)
        Vec g(A.dim(), 0);
        for (size_t k = 0; k < A.dim(); ++k) g[k] = gfp::dot(F, v1, T.right_action(k).apply(v2));
        return out(CompKind::Astar, c1.index + 1, std::move(g));
      }
      return std::nullopt;
    case CompKind::Astar:
      if (c2.kind == CompKind::A && c2.index == c1.index)
        return out(CompKind::Astar, c1.index, A.left_mult(v2).transpose().apply(v1));
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

CWindow build_window(const WindowSpec& spec, int lo, int hi, int star_lo, int star_hi) {
  if (lo > hi) throw AlgebraError("build_window: empty index range");
  const Algebra& A = *spec.A;
  const Fp& F = A.field();
  size_t ad = A.dim(), td = spec.T.dim();

  WindowLayout layout;
  layout.spec = &spec;
  for (int i = lo; i <= hi; ++i) layout.add(CompKind::A, i, ad);
  for (int i = lo; i < hi; ++i) {
    layout.add(CompKind::T, i, td);
    layout.add(CompKind::Tstar, i, td);
  }
  for (int i = star_lo; i <= star_hi; ++i) {
    if (i < lo || i > hi) throw AlgebraError("build_window: star range outside the window");
    layout.add(CompKind::Astar, i, ad);
  }

  size_t dim = layout.dim;
  std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
  for (const auto& c1 : layout.comps)
    for (const auto& c2 : layout.comps)
      for (size_t u = 0; u < c1.dim; ++u)
        for (size_t v = 0; v < c2.dim; ++v) {
          Vec lu(c1.dim, 0), lv(c2.dim, 0);
          lu[u] = 1;
          lv[v] = 1;
          auto prod = component_mul(layout, c1, lu, c2, lv);
          if (!prod) continue;
          SparseVec sv;
          for (size_t k = 0; k < prod->second.size(); ++k)
            if (prod->second[k]) sv.push_back({static_cast<uint32_t>(prod->first->offset + k), prod->second[k]});
          mult[c1.offset + u][c2.offset + v] = std::move(sv);
        }

  Vec unit(dim, 0);
  for (const auto& c : layout.comps)
    if (c.kind == CompKind::A)
      for (size_t k = 0; k < ad; ++k) unit[c.offset + k] = A.unit()[k];

  std::vector<LabeledIdem> idems;
  for (const auto& c : layout.comps) {
    if (c.kind != CompKind::A) continue;
    for (const auto& e : A.idempotents()) {
      Vec v(dim, 0);
      for (size_t k = 0; k < ad; ++k) v[c.offset + k] = e.vec[k];
      idems.push_back({e.label + "[" + std::to_string(c.index) + "]", std::move(v)});
    }
  }

  std::vector<uint32_t> grading(dim, 0);
  for (const auto& c : layout.comps) {
    uint32_t deg = (c.kind == CompKind::A) ? 0 : (c.kind == CompKind::Astar) ? 2 : 1;
    for (size_t k = 0; k < c.dim; ++k) grading[c.offset + k] = deg;
  }

  CWindow w;
  w.alg = std::make_shared<Algebra>(F, dim, std::move(mult), std::move(unit), std::move(idems), grading);
  w.alg->validate();
  w.lo = lo;
  w.hi = hi;
  w.star_lo = star_lo;
  w.star_hi = star_hi;
  w.comps = layout.comps;
  w.spec = &spec;
  return w;
}

CWindow build_C_window(const WindowSpec& spec, int k, int n) { return build_window(spec, k, n, k, n - 1); }

Algebra build_B_window(const WindowSpec& spec, int k, int n) {
  CWindow w = build_window(spec, k, n, k, k - 1);  // empty star range
  // drop the Tstar components: the sub-window spanned by A and T parts
  const Algebra& big = *w.alg;
  RowSpace space(big.field(), big.dim());
  std::vector<LabeledIdem> idems;
  Vec unit(big.dim(), 0);
  std::vector<uint32_t> grading;
  for (const auto& c : w.comps) {
    if (c.kind != CompKind::A && c.kind != CompKind::T) continue;
    for (size_t u = 0; u < c.dim; ++u) {
      Vec v(big.dim(), 0);
      v[c.offset + u] = 1;
      space.insert(v);
      grading.push_back(c.kind == CompKind::A ? 0 : 1);
    }
  }
  for (size_t i = 0; i < big.dim(); ++i) unit[i] = big.unit()[i];
  for (const auto& e : big.idempotents()) idems.push_back(e);
  SubalgebraResult sub = subalgebra_on(big, space, unit, idems, grading);
  sub.alg.validate();
  return sub.alg;
}

T1nResult build_T1n(const WindowSpec& spec, const CWindow& window, Rng& rng) {
  const Algebra& A = *spec.A;
  const Fp& F = A.field();
  const int n = window.hi;
  if (window.lo != 1) throw AlgebraError("build_T1n: window must start at index 1");
  size_t ad = A.dim(), td = spec.T.dim();

  // ambient subalgebra of C on [0, n], all stars present
  CWindow amb = build_window(spec, 0, n, 0, n);

  // T_1^n components inside the ambient window
  WindowLayout t1n;
  t1n.spec = &spec;
  for (int i = 1; i <= n - 1; ++i) t1n.add(CompKind::A, i, ad);
  for (int i = 1; i <= n - 1; ++i) t1n.add(CompKind::Astar, i, ad);
  for (int i = 0; i <= n - 1; ++i) t1n.add(CompKind::Tstar, i, td);
  for (int i = 1; i <= n - 2; ++i) t1n.add(CompKind::T, i, td);
  size_t dim = t1n.dim;

  Mat winv = *gfp::inverse(spec.selfdual);

  // embedding of T_1^n coordinates into the ambient algebra
  auto embed_t1n = [&](const Component& c, size_t u) {
    Vec v(amb.alg->dim(), 0);
    v[amb.component(c.kind, c.index).offset + u] = 1;
    return v;
  };
  // pull an ambient vector back into T_1^n coordinates; components outside
  // the list must be zero
  auto project_t1n = [&](const Vec& av) {
    Vec out(dim, 0);
    for (const auto& ac : amb.comps) {
      bool nonzero = false;
      for (size_t k = 0; k < ac.dim; ++k)
        if (av[ac.offset + k]) {
          nonzero = true;
          break;
        }
      if (!nonzero) continue;
      const Component* tc = t1n.find(ac.kind, ac.index);
      if (!tc) throw AlgebraError("build_T1n: action leaks outside the bimodule components");
      for (size_t k = 0; k < ac.dim; ++k) out[tc->offset + k] = av[ac.offset + k];
    }
    return out;
  };
  // embedding of C_1^n elements into the ambient algebra (componentwise)
  auto embed_window = [&](size_t widx) {
    Vec v(amb.alg->dim(), 0);
    for (const auto& c : window.comps) {
      if (widx < c.offset || widx >= c.offset + c.dim) continue;
      v[amb.component(c.kind, c.index).offset + (widx - c.offset)] = 1;
    }
    return v;
  };
  // σ∘τ^{−n} image of a C_1^n basis element in the ambient algebra
  auto twist_window = [&](size_t widx) {
    Vec v(amb.alg->dim(), 0);
    for (const auto& c : window.comps) {
      if (widx < c.offset || widx >= c.offset + c.dim) continue;
      size_t u = widx - c.offset;
      switch (c.kind) {
        case CompKind::A:
          v[amb.component(CompKind::A, n - c.index).offset + u] = 1;
          break;
        case CompKind::Astar:
          v[amb.component(CompKind::Astar, n - c.index).offset + u] = 1;
          break;
        case CompKind::T: {
          Vec lu(td, 0);
          lu[u] = 1;
          Vec img = spec.selfdual.apply(lu);
          const auto& tgt = amb.component(CompKind::Tstar, n - c.index - 1);
          for (size_t k = 0; k < td; ++k) v[tgt.offset + k] = img[k];
          break;
        }
        case CompKind::Tstar: {
          Vec lu(td, 0);
          lu[u] = 1;
          Vec img = winv.apply(lu);
          const auto& tgt = amb.component(CompKind::T, n - c.index - 1);
          for (size_t k = 0; k < td; ++k) v[tgt.offset + k] = img[k];
          break;
        }
      }
    }
    return v;
  };

  std::vector<Mat> lact, ract;
  for (size_t wi = 0; wi < window.alg->dim(); ++wi) {
    Vec we = embed_window(wi);
    Vec wt = twist_window(wi);
    Mat l(F, dim, dim), r(F, dim, dim);
    for (const auto& tc : t1n.comps) {
      for (size_t u = 0; u < tc.dim; ++u) {
        Vec m = embed_t1n(tc, u);
        Vec lm = project_t1n(amb.alg->mul(we, m));
        Vec rm = project_t1n(amb.alg->mul(m, wt));
        for (size_t k = 0; k < dim; ++k) {
          l.at(k, tc.offset + u) = lm[k];
          r.at(k, tc.offset + u) = rm[k];
        }
      }
    }
    lact.push_back(std::move(l));
    ract.push_back(std::move(r));
  }

  T1nResult res;
  res.bim = Bimodule(window.alg.get(), window.alg.get(), dim, std::move(lact), std::move(ract));
  res.bim.validate();

  // self-duality witness; prefer a symmetric pairing
  Bimodule dual = dual_bimodule(res.bim);
  std::vector<Mat> homs = bimodule_hom(res.bim, dual);
  if (homs.empty()) throw AlgebraError("build_T1n: no bimodule maps onto the dual");
  // symmetric subspace of the hom span
  std::vector<Vec> flat;
  for (const auto& h : homs) flat.push_back(h.data());
  Mat sys(F, dim * dim, homs.size());
  for (size_t hidx = 0; hidx < homs.size(); ++hidx)
    for (size_t r2 = 0; r2 < dim; ++r2)
      for (size_t c2 = 0; c2 < dim; ++c2)
        sys.at(r2 * dim + c2, hidx) = F.sub(homs[hidx].at(r2, c2), homs[hidx].at(c2, r2));
  std::vector<Mat> sym;
  for (const Vec& coef : gfp::nullspace(sys)) {
    Mat m(F, dim, dim);
    for (size_t hidx = 0; hidx < homs.size(); ++hidx)
      if (coef[hidx]) m = m + homs[hidx].scaled(coef[hidx]);
    sym.push_back(std::move(m));
  }
  Rng r1 = rng.child(11);
  if (auto w = invertible_in_span(sym, r1)) {
    res.selfdual = *w;
    res.symmetric = true;
    return res;
  }
  Rng r2 = rng.child(12);
  if (auto w = invertible_in_span(homs, r2)) {
    res.selfdual = *w;
    res.symmetric = false;
    return res;
  }
  throw AlgebraError("build_T1n: self-duality witness not found (contradicts the window theory)");
}

CnResult cn(const WindowSpec& spec, int n, Rng& rng) {
  if (n < 1) throw AlgebraError("cn: n must be at least 1");
  CnResult res;
  res.window = build_C_window(spec, 1, n);
  res.tilting = build_T1n(spec, res.window, rng);
  auto next = std::make_shared<WindowSpec>();
  next->A = res.window.alg;
  next->poset = res.window.window_poset();
  next->T = res.tilting.bim;
  next->selfdual = res.tilting.selfdual;
  res.next = next;
  return res;
}

EpiResult cn_quotient_epi(const CWindow& window, const WindowSpec& spec) {
  const Algebra& A = *spec.A;
  const Fp& F = A.field();
  const Component& a1 = window.component(CompKind::A, 1);
  Mat proj(F, A.dim(), window.alg->dim());
  for (size_t k = 0; k < A.dim(); ++k) proj.at(k, a1.offset + k) = 1;
  AlgebraMap epi{window.alg.get(), &A, proj, MapKind::Homomorphism};
  epi.validate();
  RowSpace ker(F, window.alg->dim());
  for (const Vec& v : gfp::nullspace(proj)) ker.insert(v);
  if (!window.alg->is_ideal(ker)) throw AlgebraError("cn_quotient_epi: kernel is not an ideal");
  return {epi, ker};
}

SymmetryReport check_symmetric(const Algebra& a, Rng& rng) {
  const Fp& F = a.field();
  size_t d = a.dim();
  SymmetryReport rep;
  // unknown B (d×d): symmetric + associative β(xy,z) = β(x,yz)
  std::vector<Vec> rows;
  for (size_t r = 0; r < d; ++r)
    for (size_t c = r + 1; c < d; ++c) {
      Vec row(d * d, 0);
      row[r * d + c] = 1;
      row[c * d + r] = F.neg(1);
      rows.push_back(std::move(row));
    }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      for (size_t l = 0; l < d; ++l) {
        Vec row(d * d, 0);
        for (const auto& t : a.mult_entry(i, j)) row[t.k * d + l] = F.add(row[t.k * d + l], t.c);
        for (const auto& t : a.mult_entry(j, l)) row[i * d + t.k] = F.sub(row[i * d + t.k], t.c);
        if (!gfp::vec_is_zero(row)) rows.push_back(std::move(row));
      }
  Mat sys = Mat::from_rows(F, rows);
  std::vector<Mat> space;
  for (const Vec& v : gfp::nullspace(sys)) space.emplace_back(F, d, d, v);
  rep.space_dim = space.size();
  Rng r1 = rng.child(3);
  if (auto w = invertible_in_span(space, r1)) {
    rep.symmetric = true;
    rep.form = *w;
    return rep;
  }
  // common radical of all candidate forms
  Mat stacked(F, space.size() * d, d);
  for (size_t s = 0; s < space.size(); ++s)
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) stacked.at(s * d + r, c) = space[s].at(r, c);
  RowSpace rad(F, d);
  for (const Vec& v : gfp::nullspace(stacked)) rad.insert(v);
  for (const auto& label : a.labels()) {
    Vec e = a.class_idempotent(label);
    RowSpace row = a.right_ideal({e});  // e·A
    if (RowSpace::intersect(row, rad).dim() > 0) rep.failing_labels.push_back(label);
  }
  return rep;
}

ReflectionResult reflect_window(const WindowSpec& spec, const CWindow& window) {
  const int n = window.hi;
  if (window.lo != 1 || window.star_lo != 1 || window.star_hi != n - 1)
    throw AlgebraError("reflect_window: expects a C_1^n-style window");
  ReflectionResult res;
  res.reflected = build_window(spec, 1, n, 2, n);  // empty star range when n = 1
  const Fp& F = spec.A->field();
  size_t td = spec.T.dim();
  Mat winv = *gfp::inverse(spec.selfdual);
  Mat iso(F, res.reflected.alg->dim(), window.alg->dim());
  for (const auto& c : window.comps) {
    for (size_t u = 0; u < c.dim; ++u) {
      size_t col = c.offset + u;
      switch (c.kind) {
        case CompKind::A: {
          const auto& tgt = res.reflected.component(CompKind::A, n + 1 - c.index);
          iso.at(tgt.offset + u, col) = 1;
          break;
        }
        case CompKind::Astar: {
          const auto& tgt = res.reflected.component(CompKind::Astar, n + 1 - c.index);
          iso.at(tgt.offset + u, col) = 1;
          break;
        }
        case CompKind::T: {
          Vec lu(td, 0);
          lu[u] = 1;
          Vec img = spec.selfdual.apply(lu);
          const auto& tgt = res.reflected.component(CompKind::Tstar, n - c.index);
          for (size_t k = 0; k < td; ++k) iso.at(tgt.offset + k, col) = img[k];
          break;
        }
        case CompKind::Tstar: {
          Vec lu(td, 0);
          lu[u] = 1;
          Vec img = winv.apply(lu);
          const auto& tgt = res.reflected.component(CompKind::T, n - c.index);
          for (size_t k = 0; k < td; ++k) iso.at(tgt.offset + k, col) = img[k];
          break;
        }
      }
    }
  }
  res.iso = AlgebraMap{window.alg.get(), res.reflected.alg.get(), iso, MapKind::Homomorphism};
  res.iso.validate();
  return res;
}

bool dihedral_relation_holds(int width) {
  struct Lab {
    CompKind k;
    int i;
    bool operator==(const Lab&) const = default;
  };
  auto sigma = [](Lab l) -> Lab {
    switch (l.k) {
      case CompKind::A:
        return {CompKind::A, -l.i};
      case CompKind::Astar:
        return {CompKind::Astar, -l.i};
      case CompKind::T:
        return {CompKind::Tstar, -l.i - 1};
      case CompKind::Tstar:
        return {CompKind::T, -l.i - 1};
    }
    return l;
  };
  auto tau = [](Lab l) -> Lab { return {l.k, l.i + 1}; };
  for (CompKind k : {CompKind::A, CompKind::T, CompKind::Tstar, CompKind::Astar})
    for (int i = -width; i <= width; ++i) {
      Lab l{k, i};
      if (!(sigma(sigma(l)) == l)) return false;
      Lab lhs = sigma(tau(sigma(l)));
      Lab rhs{l.k, l.i - 1};  // τ⁻¹
      if (!(lhs == rhs)) return false;
    }
  return true;
}

L2Window build_L2_window(const WindowSpec& left_spec, const CWindow& left, const L2Middle& mid,
                         const WindowSpec& right_spec, const CWindow& right, const L2Boundary& bd) {
  const Fp& F = left_spec.A->field();
  const Algebra& q = *mid.q;
  size_t a_count = mid.alpha.size() + 1;  // a = p; middle holds α̂_1..α̂_{a−1}
  (void)a_count;

  // blocks: left window | T_left | T_left* | q | T_right | T_right* | right window
  struct Block {
    std::string name;
    size_t offset, dim;
  };
  std::vector<Block> blocks;
  size_t off = 0;
  auto add_block = [&](const std::string& name, size_t d) {
    blocks.push_back({name, off, d});
    off += d;
  };
  add_block("left", left.alg->dim());
  add_block("tl", bd.t_left.dim());
  add_block("tl*", bd.t_left.dim());
  add_block("q", q.dim());
  add_block("tr", bd.t_right.dim());
  add_block("tr*", bd.t_right.dim());
  add_block("right", right.alg->dim());
  size_t dim = off;

  auto block = [&](const std::string& name) -> const Block& {
    for (const auto& b : blocks)
      if (b.name == name) return b;
    throw AlgebraError("build_L2_window: unknown block");
  };

  // projections of the window algebras onto their seam diagonal blocks
  const Component& a0 = left.component(CompKind::A, 0);
  const int p_index = right.lo;
  const Component& ap = right.component(CompKind::A, p_index);
  const Component& a0star = left.component(CompKind::Astar, 0);
  const Component& apstar = right.component(CompKind::Astar, p_index);

  auto comp_coords = [&](const Vec& v, const Component& c) {
    Vec out(c.dim, 0);
    for (size_t k = 0; k < c.dim; ++k) out[k] = v[c.offset + k];
    return out;
  };

  const Mat& qm1 = mid.quotient_maps.front();                  // q ↠ α̂_1
  const Mat& qma = mid.quotient_maps.back();                   // q ↠ α̂_{a−1}
  const std::vector<Vec>& star1 = mid.star_spaces.front();     // α̂*_1 basis in q
  const std::vector<Vec>& stara = mid.star_spaces.back();      // α̂*_{a−1} basis in q

  // balance checks on the seam pairings
  {
    const Algebra& A = *left_spec.A;
    const Bimodule& T = bd.t_left;
    size_t td = T.dim();
    for (size_t gi : A.generating_set())
      for (size_t u = 0; u < td; ++u)
        for (size_t v = 0; v < td; ++v) {
          // (f·a) ⊗ t vs f ⊗ (a·t) through the inner pairing into α̂*_1
          Vec fa = T.left_action(gi).transpose().apply([&] {
            Vec e(td, 0);
            e[u] = 1;
            return e;
          }());
          Vec at = T.left_action(gi).apply([&] {
            Vec e(td, 0);
            e[v] = 1;
            return e;
          }());
          Vec lhs(bd.pair_left_in.rows(), 0), rhs(bd.pair_left_in.rows(), 0);
          for (size_t x = 0; x < td; ++x) {
            if (fa[x])
              for (size_t r = 0; r < lhs.size(); ++r)
                lhs[r] = F.add(lhs[r], F.mul(fa[x], bd.pair_left_in.at(r, x * td + v)));
            if (at[x])
              for (size_t r = 0; r < rhs.size(); ++r)
                rhs[r] = F.add(rhs[r], F.mul(at[x], bd.pair_left_in.at(r, u * td + x)));
          }
          if (lhs != rhs) throw AlgebraError("build_L2_window: left seam pairing is not balanced over A");
        }
  }
  {
    // T* ⊗ T → A*_p is balanced over the middle algebra α̂_{a−1}
    const Bimodule& T = bd.t_right;
    size_t td = T.dim();
    for (size_t gi : T.left_algebra().generating_set())
      for (size_t u = 0; u < td; ++u)
        for (size_t v = 0; v < td; ++v) {
          Vec fa = T.left_action(gi).transpose().apply([&] {
            Vec e(td, 0);
            e[u] = 1;
            return e;
          }());
          Vec at = T.left_action(gi).apply([&] {
            Vec e(td, 0);
            e[v] = 1;
            return e;
          }());
          Vec lhs(bd.pair_right_out.rows(), 0), rhs(bd.pair_right_out.rows(), 0);
          for (size_t x = 0; x < td; ++x) {
            if (fa[x])
              for (size_t r = 0; r < lhs.size(); ++r)
                lhs[r] = F.add(lhs[r], F.mul(fa[x], bd.pair_right_out.at(r, x * td + v)));
            if (at[x])
              for (size_t r = 0; r < rhs.size(); ++r)
                rhs[r] = F.add(rhs[r], F.mul(at[x], bd.pair_right_out.at(r, u * td + x)));
          }
          if (lhs != rhs) throw AlgebraError("build_L2_window: right seam pairing is not balanced over A");
        }
  }

  std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
  auto put = [&](size_t i, size_t j, size_t tgt_off, const Vec& v) {
    SparseVec sv;
    for (size_t k = 0; k < v.size(); ++k)
      if (v[k]) sv.push_back({static_cast<uint32_t>(tgt_off + k), v[k]});
    mult[i][j] = std::move(sv);
  };

  const Block& BL = block("left");
  const Block& BTL = block("tl");
  const Block& BTLs = block("tl*");
  const Block& BQ = block("q");
  const Block& BTR = block("tr");
  const Block& BTRs = block("tr*");
  const Block& BR = block("right");

  // internal products
  auto fill_internal = [&](const Block& b, const Algebra& alg) {
    for (size_t i = 0; i < alg.dim(); ++i)
      for (size_t j = 0; j < alg.dim(); ++j) {
        SparseVec sv = alg.mult_entry(i, j);
        for (auto& t : sv) t.k += static_cast<uint32_t>(b.offset);
        mult[b.offset + i][b.offset + j] = std::move(sv);
      }
  };
  fill_internal(BL, *left.alg);
  fill_internal(BQ, q);
  fill_internal(BR, *right.alg);

  size_t tld = bd.t_left.dim(), trd = bd.t_right.dim();
  for (size_t i = 0; i < left.alg->dim(); ++i) {
    Vec bi(left.alg->dim(), 0);
    bi[i] = 1;
    Vec a = comp_coords(bi, a0);
    // left × T_left  and  T_left* × left
    for (size_t u = 0; u < tld; ++u) {
      Vec eu(tld, 0);
      eu[u] = 1;
      put(BL.offset + i, BTL.offset + u, BTL.offset, bd.t_left.left_act(a).apply(eu));
      put(BTLs.offset + u, BL.offset + i, BTLs.offset, bd.t_left.left_act(a).transpose().apply(eu));
    }
  }
  for (size_t i = 0; i < q.dim(); ++i) {
    Vec bi(q.dim(), 0);
    bi[i] = 1;
    Vec al1 = qm1.apply(bi);
    Vec ala = qma.apply(bi);
    for (size_t u = 0; u < tld; ++u) {
      Vec eu(tld, 0);
      eu[u] = 1;
      // T_left × q (right through α̂_1) and q × T_left*
      put(BTL.offset + u, BQ.offset + i, BTL.offset, bd.t_left.right_act(al1).apply(eu));
      put(BQ.offset + i, BTLs.offset + u, BTLs.offset, bd.t_left.right_act(al1).transpose().apply(eu));
    }
    for (size_t u = 0; u < trd; ++u) {
      Vec eu(trd, 0);
      eu[u] = 1;
      // q × T_right (left through α̂_{a−1}) and T_right* × q
      put(BQ.offset + i, BTR.offset + u, BTR.offset, bd.t_right.left_act(ala).apply(eu));
      put(BTRs.offset + u, BQ.offset + i, BTRs.offset, bd.t_right.left_act(ala).transpose().apply(eu));
    }
  }
  for (size_t i = 0; i < right.alg->dim(); ++i) {
    Vec bi(right.alg->dim(), 0);
    bi[i] = 1;
    Vec a = comp_coords(bi, ap);
    for (size_t u = 0; u < trd; ++u) {
      Vec eu(trd, 0);
      eu[u] = 1;
      put(BTR.offset + u, BR.offset + i, BTR.offset, bd.t_right.right_act(a).apply(eu));
      put(BR.offset + i, BTRs.offset + u, BTRs.offset, bd.t_right.right_act(a).transpose().apply(eu));
    }
  }
  // seam pairings
  for (size_t u = 0; u < tld; ++u)
    for (size_t v = 0; v < tld; ++v) {
      // T_left ⊗ T_left* → A*_0 ⊂ left window
      Vec av(bd.pair_left_out.rows(), 0);
      for (size_t r = 0; r < av.size(); ++r) av[r] = bd.pair_left_out.at(r, u * tld + v);
      put(BTL.offset + u, BTLs.offset + v, BL.offset + a0star.offset, av);
      // T_left* ⊗ T_left → α̂*_1 ⊂ q
      Vec qv(q.dim(), 0);
      for (size_t s = 0; s < star1.size(); ++s) {
        uint32_t c = bd.pair_left_in.at(s, u * tld + v);
        if (c) gfp::vec_axpy(F, c, star1[s], qv);
      }
      put(BTLs.offset + u, BTL.offset + v, BQ.offset, qv);
    }
  for (size_t u = 0; u < trd; ++u)
    for (size_t v = 0; v < trd; ++v) {
      // T_right ⊗ T_right* → α̂*_{a−1} ⊂ q
      Vec qv(q.dim(), 0);
      for (size_t s = 0; s < stara.size(); ++s) {
        uint32_t c = bd.pair_right_in.at(s, u * trd + v);
        if (c) gfp::vec_axpy(F, c, stara[s], qv);
      }
      put(BTR.offset + u, BTRs.offset + v, BQ.offset, qv);
      // T_right* ⊗ T_right → A*_p ⊂ right window
      Vec av(bd.pair_right_out.rows(), 0);
      for (size_t r = 0; r < av.size(); ++r) av[r] = bd.pair_right_out.at(r, u * trd + v);
      put(BTRs.offset + u, BTR.offset + v, BR.offset + apstar.offset, av);
    }

  Vec unit(dim, 0);
  for (size_t k = 0; k < left.alg->dim(); ++k) unit[BL.offset + k] = left.alg->unit()[k];
  for (size_t k = 0; k < q.dim(); ++k) unit[BQ.offset + k] = q.unit()[k];
  for (size_t k = 0; k < right.alg->dim(); ++k) unit[BR.offset + k] = right.alg->unit()[k];

  std::vector<LabeledIdem> idems;
  auto adopt = [&](const Block& b, const Algebra& alg) {
    for (const auto& e : alg.idempotents()) {
      Vec v(dim, 0);
      for (size_t k = 0; k < alg.dim(); ++k) v[b.offset + k] = e.vec[k];
      idems.push_back({e.label, std::move(v)});
    }
  };
  adopt(BL, *left.alg);
  adopt(BQ, q);
  adopt(BR, *right.alg);

  L2Window out;
  out.alg = std::make_shared<Algebra>(F, dim, std::move(mult), std::move(unit), std::move(idems));
  out.alg->validate();
  for (const auto& b : blocks) out.blocks.push_back({b.name, {b.offset, b.dim}});
  (void)right_spec;
  return out;
}

std::string CWindow::serialize() const {
  std::ostringstream os;
  os << "{\"algebra\":" << algebra_to_json(*alg) << ",\"components\":[";
  for (size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (i) os << ",";
    const char* kind = c.kind == CompKind::A ? "A" : c.kind == CompKind::T ? "T" : c.kind == CompKind::Tstar ? "T*" : "A*";
    os << "{\"kind\":\"" << kind << "\",\"index\":" << c.index << ",\"offset\":" << c.offset << ",\"dim\":" << c.dim
       << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace qhforge
