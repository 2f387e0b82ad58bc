#include "qhforge/radical.hpp"

#include <algorithm>

namespace qhforge {

namespace {

// minimal set of basis vectors of r generating it as a two-sided ideal
std::vector<Vec> ideal_generators(const Algebra& a, const RowSpace& r) {
  std::vector<Vec> gens;
  RowSpace have(a.field(), a.dim());
  for (const auto& v : r.basis()) {
    if (have.contains(v)) continue;
    gens.push_back(v);
    have = RowSpace::sum(have, a.two_sided_ideal({v}));
    if (have.dim() == r.dim()) break;
  }
  return gens;
}

bool is_ideal_fast(const Algebra& a, const RowSpace& r) {
  const auto& gens = a.generating_set();
  for (const auto& v : r.basis()) {
    for (size_t gi : gens) {
      Vec b(a.dim(), 0);
      b[gi] = 1;
      if (!r.contains(a.mul(b, v)) || !r.contains(a.mul(v, b))) return false;
    }
  }
  return true;
}

}  // namespace

bool is_nilpotent_ideal(const Algebra& a, const RowSpace& r, size_t* index_out) {
  if (r.dim() == 0) {
    if (index_out) *index_out = 1;
    return true;
  }
  if (!is_ideal_fast(a, r)) return false;
  std::vector<Vec> igens = ideal_generators(a, r);
  // W_k = A·R^k; descends to zero iff R nilpotent
  RowSpace w = r;
  size_t index = 1;
  while (w.dim() > 0) {
    if (index > a.dim() + 1) return false;
    std::vector<Vec> seeds;
    for (const auto& g : igens)
      for (const auto& v : w.basis()) seeds.push_back(a.mul(g, v));
    RowSpace next = a.left_ideal(seeds);
    if (next.dim() >= w.dim() && next.dim() > 0) return false;  // stalled above zero
    w = std::move(next);
    ++index;
  }
  if (index_out) *index_out = index;
  return true;
}

namespace {

// trace of left multiplication, from the structure constants
Vec left_trace_vector(const Algebra& a) {
  const Fp& F = a.field();
  Vec tr(a.dim(), 0);
  for (size_t i = 0; i < a.dim(); ++i) {
    uint32_t acc = 0;
    for (size_t j = 0; j < a.dim(); ++j)
      for (const auto& t : a.mult_entry(i, j))
        if (t.k == j) acc = F.add(acc, t.c);
    tr[i] = acc;
  }
  return tr;
}

uint32_t charpoly_coeff(const Algebra& a, const Vec& z, size_t m) {
  // coefficient of t^(n-m) in charpoly(L_z); sign irrelevant for zero tests
  gfp::Poly chi = gfp::charpoly(a.left_mult(z));
  size_t idx = a.dim() - m;
  return idx < chi.c.size() ? chi.c[idx] : 0;
}

}  // namespace

RowSpace radical(const Algebra& a) {
  const Fp& F = a.field();
  const size_t n = a.dim();
  if (n == 0) return RowSpace(F, 0);

  // R_0 = A
  RowSpace r(F, n);
  for (size_t i = 0; i < n; ++i) {
    Vec b(n, 0);
    b[i] = 1;
    r.insert(b);
  }
  if (is_nilpotent_ideal(a, r)) return r;  // zero algebra only

  // level 0: trace form, assembled without characteristic polynomials
  {
    Vec tr = left_trace_vector(a);
    Mat gram(F, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint32_t acc = 0;
        for (const auto& t : a.mult_entry(i, j)) acc = F.add(acc, F.mul(t.c, tr[t.k]));
        gram.at(j, i) = acc;  // row per y=b_j, column per x=b_i
      }
    RowSpace next(F, n);
    for (const Vec& v : gfp::nullspace(gram)) next.insert(v);
    r = std::move(next);
  }
  if (is_nilpotent_ideal(a, r)) return r;

  // levels i >= 1: forms x ↦ c_{p^i}(L_{x·y}); linear in x on the chain.
  // Rows are added incrementally with periodic nilpotent-ideal checks: any
  // chain member that certifies is exactly J.
  size_t m = F.p();
  while (m <= n) {
    std::vector<Vec> rbasis = r.basis();
    RowSpace constraints(F, rbasis.size());  // rows of the current system
    size_t since_check = 0;
    for (const auto& y : rbasis) {
      Vec row(rbasis.size(), 0);
      for (size_t k = 0; k < rbasis.size(); ++k) row[k] = charpoly_coeff(a, a.mul(rbasis[k], y), m);
      bool grew = constraints.insert(std::move(row));
      if (grew && ++since_check >= 8) {
        since_check = 0;
        Mat sys = Mat::from_rows(F, constraints.basis());
        RowSpace cand(F, n);
        for (const Vec& coef : gfp::nullspace(sys)) {
          Vec v(n, 0);
          for (size_t k = 0; k < coef.size(); ++k) gfp::vec_axpy(F, coef[k], rbasis[k], v);
          cand.insert(v);
        }
        if (is_nilpotent_ideal(a, cand)) return cand;
      }
    }
    Mat sys = constraints.dim() ? Mat::from_rows(F, constraints.basis()) : Mat(F, 1, rbasis.size());
    RowSpace next(F, n);
    for (const Vec& coef : gfp::nullspace(sys)) {
      Vec v(n, 0);
      for (size_t k = 0; k < coef.size(); ++k) gfp::vec_axpy(F, coef[k], rbasis[k], v);
      next.insert(v);
    }
    r = std::move(next);
    if (is_nilpotent_ideal(a, r)) return r;
    m *= F.p();
  }
  throw AlgebraError("radical: chain exhausted without a nilpotent ideal (non-split input?)");
}

namespace {

RowSpace perp(const Fp& F, size_t n, const RowSpace& w) {
  if (w.dim() == 0) {
    RowSpace full(F, n);
    for (size_t i = 0; i < n; ++i) {
      Vec b(n, 0);
      b[i] = 1;
      full.insert(b);
    }
    return full;
  }
  Mat m = Mat::from_rows(F, w.basis());
  RowSpace out(F, n);
  for (const Vec& v : gfp::nullspace(m)) out.insert(v);
  return out;
}

Module transpose_module(const Module& m) {
  std::vector<Mat> act;
  for (size_t i = 0; i < m.algebra().dim(); ++i) act.push_back(m.action(i).transpose());
  return Module(&m.algebra(), m.side(), m.dim(), std::move(act));
}

void split_module(const Module& m, Rng& rng, std::vector<Module>& leaves) {
  const Fp& F = m.algebra().field();
  size_t d = m.dim();
  if (d == 0) return;
  if (d == 1) {
    leaves.push_back(m);
    return;
  }
  const size_t kAttempts = 64;
  for (size_t attempt = 0; attempt < kAttempts; ++attempt) {
    Vec elt = rng.vec(F, m.algebra().dim());
    Mat theta = m.act(elt);
    gfp::Poly chi = gfp::charpoly(theta);
    auto factors = gfp::factor(chi, rng);
    for (const auto& [fac, mult] : factors) {
      Mat ft = gfp::eval_at(fac, theta);
      RowSpace ker(F, d);
      for (const Vec& v : gfp::nullspace(ft)) ker.insert(v);
      if (ker.dim() == 0) continue;
      RowSpace sub = spin(m, {ker.basis()[0]});
      if (sub.dim() < d) {
        auto s = submodule(m, sub);
        auto q = quotient_module(m, sub);
        split_module(s.mod, rng, leaves);
        split_module(q.mod, rng, leaves);
        return;
      }
      if (mult == 1) {
        // Norton: spin(v) full; check the transpose module
        Module mt = transpose_module(m);
        Mat ftt = ft.transpose();
        RowSpace kert(F, d);
        for (const Vec& v : gfp::nullspace(ftt)) kert.insert(v);
        RowSpace subt = spin(mt, {kert.basis()[0]});
        if (subt.dim() < d) {
          RowSpace sub2 = perp(F, d, subt);
          auto s = submodule(m, sub2);
          auto q = quotient_module(m, sub2);
          split_module(s.mod, rng, leaves);
          split_module(q.mod, rng, leaves);
          return;
        }
        leaves.push_back(m);  // irreducible, certified
        return;
      }
    }
  }
  throw AlgebraError("composition_factors: MeatAxe failed to certify after retries");
}

}  // namespace

std::vector<Module> composition_factors(const Module& m, Rng& rng) {
  std::vector<Module> leaves;
  split_module(m, rng, leaves);
  return leaves;
}

SemisimpleData semisimple_structure(const Algebra& a, Rng& rng) {
  SemisimpleData out;
  out.rad = radical(a);
  is_nilpotent_ideal(a, out.rad, &out.nilpotency_index);
  Module reg = regular_module(a, Side::Left);
  std::vector<Module> leaves = composition_factors(reg, rng);
  for (auto& leaf : leaves) {
    bool matched = false;
    for (auto& s : out.simples) {
      if (s.rep.dim() == leaf.dim()) {
        Rng r2 = rng.child(17);
        if (module_iso(leaf, s.rep, r2)) {
          s.multiplicity++;
          matched = true;
          break;
        }
      }
    }
    if (!matched) out.simples.push_back({leaf, 1});
  }
  std::sort(out.simples.begin(), out.simples.end(), [](const SimpleInfo& x, const SimpleInfo& y) {
    return x.rep.dim() < y.rep.dim();
  });
  size_t ss = 0;
  for (const auto& s : out.simples) {
    std::vector<Mat> ends = hom_space(s.rep, s.rep);
    if (ends.size() != 1)
      throw SplitError("semisimple_structure: End(L) has dimension " + std::to_string(ends.size()) +
                       " over GF(" + std::to_string(a.field().p()) + "); simple does not split");
    ss += s.rep.dim() * s.rep.dim();
  }
  if (ss != a.dim() - out.rad.dim())
    throw AlgebraError("semisimple_structure: radical/MeatAxe cross-check failed: dim A - dim J = " +
                       std::to_string(a.dim() - out.rad.dim()) + " but sum of (dim L)^2 = " + std::to_string(ss));
  return out;
}

}  // namespace qhforge
