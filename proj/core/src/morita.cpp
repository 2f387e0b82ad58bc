#include "qhforge/morita.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace qhforge {

namespace {

Vec newton_lift(const Algebra& a, Vec e) {
  // e ← 3e² − 2e³; the defect e²−e squares each step, so nilpotency of J
  // forces termination
  const Fp& F = a.field();
  for (size_t it = 0; it < 64; ++it) {
    Vec e2 = a.mul(e, e);
    if (e2 == e) return e;
    Vec e3 = a.mul(e2, e);
    Vec next(a.dim(), 0);
    for (size_t i = 0; i < a.dim(); ++i)
      next[i] = F.sub(F.mul(F.reduce(3), e2[i]), F.mul(F.reduce(2), e3[i]));
    e = std::move(next);
  }
  throw AlgebraError("lift_idempotents: Newton iteration failed to stabilize");
}

}  // namespace

IdempotentData lift_idempotents(const Algebra& a, Rng& rng,
                                const std::function<std::string(const Module&, size_t)>& labeler) {
  IdempotentData out;
  out.ss = semisimple_structure(a, rng);
  const Fp& F = a.field();
  const auto& simples = out.ss.simples;

  // default labeling: inherit from the input's labeled idempotents (each
  // primitive covers exactly one simple), else enumerate
  auto default_label = [&](const Module& rep, size_t i) -> std::string {
    for (const auto& e : a.idempotents())
      if (!rep.act(e.vec).is_zero()) return e.label;
    if (!a.idempotents().empty())
      throw AlgebraError("lift_idempotents: a simple is not covered by any labeled idempotent");
    return "L" + std::to_string(i);
  };
  for (size_t i = 0; i < simples.size(); ++i)
    out.labels.push_back(labeler ? labeler(simples[i].rep, i) : default_label(simples[i].rep, i));
  for (size_t i = 0; i < out.labels.size(); ++i)
    for (size_t j = i + 1; j < out.labels.size(); ++j)
      if (out.labels[i] == out.labels[j])
        throw AlgebraError("lift_idempotents: two non-isomorphic simples share the label " + out.labels[i]);

  // matrix of A → ⊕ End(L_i); its kernel is J, so matrix-unit targets pull back
  size_t rows = 0;
  for (const auto& s : simples) rows += s.rep.dim() * s.rep.dim();
  Mat pi(F, rows, a.dim());
  size_t roff = 0;
  for (const auto& s : simples) {
    size_t d = s.rep.dim();
    for (size_t bi = 0; bi < a.dim(); ++bi) {
      const Mat& m = s.rep.action(bi);
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) pi.at(roff + r * d + c, bi) = m.at(r, c);
    }
    roff += d * d;
  }

  Vec accumulated(a.dim(), 0);  // sum of lifted idempotents so far
  roff = 0;
  for (size_t i = 0; i < simples.size(); ++i) {
    size_t d = simples[i].rep.dim();
    for (size_t k = 0; k < d; ++k) {
      Vec target(rows, 0);
      target[roff + k * d + k] = 1;
      auto x = gfp::solve(pi, target);
      if (!x) throw AlgebraError("lift_idempotents: semisimple projection not surjective");
      // orthogonalize against previous lifts, then lift along J
      Vec comp = gfp::vec_sub(F, a.unit(), accumulated);
      Vec v = a.mul3(comp, *x, comp);
      v = newton_lift(a, v);
      if (gfp::vec_is_zero(v)) throw AlgebraError("lift_idempotents: idempotent collapsed to zero");
      out.prims.push_back({out.labels[i], i, v});
      accumulated = gfp::vec_add(F, accumulated, v);
    }
    roff += d * d;
  }
  if (accumulated != a.unit()) throw AlgebraError("lift_idempotents: idempotents do not sum to the unit");
  return out;
}

Algebra with_idempotents(const Algebra& a, const IdempotentData& data) {
  std::vector<std::vector<SparseVec>> mult(a.dim(), std::vector<SparseVec>(a.dim()));
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j) mult[i][j] = a.mult_entry(i, j);
  std::vector<LabeledIdem> idems;
  for (const auto& p : data.prims) idems.push_back({p.label, p.vec});
  return Algebra(a.field(), a.dim(), std::move(mult), a.unit(), std::move(idems), a.grading());
}

MoritaContext basic_algebra(const Algebra& a0, Rng& rng) {
  IdempotentData data = lift_idempotents(a0, rng);
  Algebra a = with_idempotents(a0, data);
  const Fp& F = a.field();

  // one primitive per simple class
  Vec e(a.dim(), 0);
  std::vector<bool> taken(data.labels.size(), false);
  std::vector<LabeledIdem> chosen;
  for (const auto& p : data.prims) {
    if (taken[p.simple_index]) continue;
    taken[p.simple_index] = true;
    e = gfp::vec_add(F, e, p.vec);
    chosen.push_back({p.label, p.vec});
  }

  // multiplicity count: dim A = Σ dim P(λ)·dim L(λ)
  size_t total = 0;
  for (const auto& c : chosen) {
    size_t dimP = a.left_ideal({c.vec}).dim();
    size_t simple_dim = 0;
    for (const auto& p : data.prims)
      if (p.label == c.label) ++simple_dim;  // multiplicity of the class = dim L
    total += dimP * simple_dim;
  }
  if (total != a.dim()) throw AlgebraError("basic_algebra: multiplicity count failed");

  SubalgebraResult corner = corner_algebra(a, e);

  MoritaContext ctx{
      a, corner.alg, e, corner.inclusion, Bimodule(), Bimodule(),
  };

  // Ae as (A, basic)-bimodule and eA as (basic, A)-bimodule
  RowSpace Ae = a.left_ideal({e});
  RowSpace eA = a.right_ideal({e});
  auto make_bim = [&](const RowSpace& space, bool left_is_A) {
    size_t d = space.dim();
    std::vector<Mat> la, ra;
    const Algebra& B = ctx.basic;
    auto basic_lift = [&](size_t i) {
      Vec bi(B.dim(), 0);
      bi[i] = 1;
      return corner.inclusion.apply(bi);
    };
    if (left_is_A) {
      for (size_t i = 0; i < a.dim(); ++i) {
        Vec bi(a.dim(), 0);
        bi[i] = 1;
        Mat blk(F, d, d);
        for (size_t j = 0; j < d; ++j) {
          Vec img = space.coords(a.mul(bi, space.basis()[j]));
          for (size_t r = 0; r < d; ++r) blk.at(r, j) = img[r];
        }
        la.push_back(std::move(blk));
      }
      for (size_t i = 0; i < B.dim(); ++i) {
        Vec x = basic_lift(i);
        Mat blk(F, d, d);
        for (size_t j = 0; j < d; ++j) {
          Vec img = space.coords(a.mul(space.basis()[j], x));
          for (size_t r = 0; r < d; ++r) blk.at(r, j) = img[r];
        }
        ra.push_back(std::move(blk));
      }
      return Bimodule(&ctx.algebra, &ctx.basic, d, std::move(la), std::move(ra));
    }
    for (size_t i = 0; i < B.dim(); ++i) {
      Vec x = basic_lift(i);
      Mat blk(F, d, d);
      for (size_t j = 0; j < d; ++j) {
        Vec img = space.coords(a.mul(x, space.basis()[j]));
        for (size_t r = 0; r < d; ++r) blk.at(r, j) = img[r];
      }
      la.push_back(std::move(blk));
    }
    for (size_t i = 0; i < a.dim(); ++i) {
      Vec bi(a.dim(), 0);
      bi[i] = 1;
      Mat blk(F, d, d);
      for (size_t j = 0; j < d; ++j) {
        Vec img = space.coords(a.mul(space.basis()[j], bi));
        for (size_t r = 0; r < d; ++r) blk.at(r, j) = img[r];
      }
      ra.push_back(std::move(blk));
    }
    return Bimodule(&ctx.basic, &ctx.algebra, d, std::move(la), std::move(ra));
  };
  ctx.left_progenerator = make_bim(Ae, true);
  ctx.right_progenerator = make_bim(eA, false);
  return ctx;
}

Mat cartan_matrix(const Algebra& a, const std::vector<std::string>& order) {
  const Fp& F = a.field();
  size_t n = order.size();
  Mat c(F, n, n);
  // one primitive idempotent per class; entry = dim e_λ A e_μ / (dim L dims),
  // computed on primitives directly (split case)
  std::map<std::string, Vec> prim;
  for (const auto& e : a.idempotents())
    if (!prim.count(e.label)) prim[e.label] = e.vec;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto it_i = prim.find(order[i]);
      auto it_j = prim.find(order[j]);
      if (it_i == prim.end() || it_j == prim.end()) throw AlgebraError("cartan_matrix: unknown label");
      c.at(i, j) = static_cast<uint32_t>(a.peirce(it_i->second, it_j->second).dim());
    }
  return c;
}

std::vector<std::vector<std::string>> blocks(const Algebra& a) {
  std::vector<std::string> order = a.labels();
  Mat c = cartan_matrix(a, order);
  size_t n = order.size();
  std::vector<size_t> parent(n);
  for (size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (c.at(i, j) != 0) {
        size_t a1 = find(i), b1 = find(j);
        if (a1 != b1) parent[std::max(a1, b1)] = std::min(a1, b1);
      }
  std::map<size_t, std::vector<std::string>> groups;
  for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(order[i]);
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace qhforge
