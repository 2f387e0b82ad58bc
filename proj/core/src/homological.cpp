#include "qhforge/homological.hpp"

#include <algorithm>
#include <map>

namespace qhforge {

RowSpace radical_submodule(const Module& m, const RowSpace& jac) {
  RowSpace out(m.algebra().field(), m.dim());
  for (const auto& j : jac.basis()) {
    Mat act = m.act(j);
    for (size_t c = 0; c < m.dim(); ++c) out.insert(act.col(c));
  }
  return out;
}

ProjectiveModule projective_cover_of_label(const Algebra& a, const std::string& label) {
  for (const auto& e : a.idempotents()) {
    if (e.label != label) continue;
    RowSpace space = a.left_ideal({e.vec});
    Module reg = regular_module(a, Side::Left);
    auto sub = submodule(reg, space);
    return {sub.mod, sub.inclusion, space.coords(e.vec)};
  }
  throw AlgebraError("projective_cover_of_label: no idempotent labeled " + label);
}

size_t head_multiplicity(const Module& m, const RowSpace& jac, const Vec& prim) {
  RowSpace rad = radical_submodule(m, jac);
  auto quo = quotient_module(m, rad);
  gfp::RrefResult rr = gfp::rref(quo.mod.act(prim));
  return rr.rank;
}

CoverData projective_cover(const Module& m, const RowSpace& jac) {
  const Algebra& A = m.algebra();
  const Fp& F = A.field();
  RowSpace rad = radical_submodule(m, jac);
  gfp::QuotientMap head(rad);

  CoverData out;
  out.p0 = zero_module(A, Side::Left);
  std::vector<Vec> gens_in_m;          // one generator per projective summand
  std::vector<std::string> gen_label;  // its class label
  std::map<std::string, Vec> first_prim;
  for (const auto& e : A.idempotents())
    if (!first_prim.count(e.label)) first_prim[e.label] = e.vec;

  for (const auto& [label, prim] : first_prim) {
    // basis of e·head lifted into e·m
    Mat act_m = m.act(prim);
    RowSpace e_head(F, head.dim());
    std::vector<Vec> lifts;
    for (size_t c = 0; c < m.dim(); ++c) {
      Vec b(m.dim(), 0);
      b[c] = 1;
      Vec v = act_m.apply(b);  // e·b
      Vec h = head.project(v);
      if (e_head.insert(h)) lifts.push_back(v);
    }
    if (lifts.empty()) continue;
    out.multiplicities.push_back({label, lifts.size()});
    for (const auto& w : lifts) {
      gens_in_m.push_back(w);
      gen_label.push_back(label);
    }
  }
  std::vector<Mat> cover_blocks;
  for (size_t g = 0; g < gens_in_m.size(); ++g) {
    ProjectiveModule p = projective_cover_of_label(A, gen_label[g]);
    // map A·e → m, a·e ↦ a·w  (w = e·w by construction)
    Mat blk(F, m.dim(), p.mod.dim());
    for (size_t j = 0; j < p.mod.dim(); ++j) {
      Vec amb(p.inclusion.rows(), 0);
      amb = p.inclusion.apply([&] {
        Vec ej(p.mod.dim(), 0);
        ej[j] = 1;
        return ej;
      }());
      Vec img = m.apply(amb, gens_in_m[g]);
      for (size_t r = 0; r < m.dim(); ++r) blk.at(r, j) = img[r];
    }
    out.p0 = direct_sum(out.p0, p.mod);
    cover_blocks.push_back(std::move(blk));
  }
  Mat cover(F, m.dim(), out.p0.dim());
  size_t off = 0;
  for (const auto& blk : cover_blocks) {
    for (size_t r = 0; r < m.dim(); ++r)
      for (size_t c = 0; c < blk.cols(); ++c) cover.at(r, off + c) = blk.at(r, c);
    off += blk.cols();
  }
  out.cover = std::move(cover);
  // surjectivity: the images span the head, so Nakayama gives all of m
  gfp::RrefResult rr = gfp::rref(out.cover);
  if (rr.rank != m.dim()) throw AlgebraError("projective_cover: cover map is not surjective");
  return out;
}

Ext1Data ext1(const Module& m, const Module& n, const RowSpace& jac) {
  const Algebra& A = m.algebra();
  const Fp& F = A.field();
  Ext1Data out;
  CoverData cover = projective_cover(m, jac);
  out.p0 = cover.p0;

  RowSpace ker(F, cover.p0.dim());
  for (const Vec& v : gfp::nullspace(cover.cover)) ker.insert(v);
  auto sub = submodule(cover.p0, ker);
  out.omega = sub.mod;
  out.omega_inclusion = sub.inclusion;

  if (n.dim() == 0 || out.omega.dim() == 0) {
    out.dim = 0;
    return out;
  }

  std::vector<Mat> hom_omega_n = hom_space(out.omega, n);
  std::vector<Mat> hom_p0_n = hom_space(cover.p0, n);

  // restriction image inside Hom(Ω, n), as vectorized matrices
  RowSpace image(F, n.dim() * out.omega.dim());
  for (const auto& h : hom_p0_n) {
    Mat restr = h * out.omega_inclusion;
    image.insert(restr.data());
  }
  RowSpace quot_reps(F, n.dim() * out.omega.dim());
  for (const auto& h : hom_omega_n) {
    Vec reduced = image.reduce(h.data());
    if (!gfp::vec_is_zero(reduced) && quot_reps.insert(reduced))
      out.cocycles.emplace_back(F, n.dim(), out.omega.dim(), reduced);
  }
  out.dim = out.cocycles.size();
  return out;
}

Module extension_module(const Module& m, const Module& n, const Ext1Data& data, const std::vector<Mat>& cocycles) {
  const Algebra& A = m.algebra();
  const Fp& F = A.field();
  size_t s = cocycles.size();
  // ambient: n ⊕ P0^s, quotient by {(c_i(k), ..., -k in slot i, ...)}
  Module amb = n;
  for (size_t i = 0; i < s; ++i) amb = direct_sum(amb, data.p0);
  RowSpace rel(F, amb.dim());
  for (size_t i = 0; i < s; ++i) {
    for (size_t kb = 0; kb < data.omega.dim(); ++kb) {
      Vec k(data.omega.dim(), 0);
      k[kb] = 1;
      Vec in_p0 = data.omega_inclusion.apply(k);
      Vec v(amb.dim(), 0);
      Vec ck = cocycles[i].apply(k);
      for (size_t r = 0; r < n.dim(); ++r) v[r] = ck[r];
      size_t off = n.dim() + i * data.p0.dim();
      for (size_t r = 0; r < data.p0.dim(); ++r) v[off + r] = F.neg(in_p0[r]);
      rel.insert(std::move(v));
    }
  }
  auto q = quotient_module(amb, rel);
  if (q.mod.dim() != n.dim() + s * m.dim()) throw AlgebraError("extension_module: unexpected dimension");
  return q.mod;
}

EndAlgebra endomorphism_algebra(const Module& m) {
  const Fp& F = m.algebra().field();
  EndAlgebra out;
  out.basis = hom_space(m, m);
  size_t d = out.basis.size();
  std::vector<Vec> flat;
  for (const auto& h : out.basis) flat.push_back(h.data());
  gfp::SpanSolver solver(F, m.dim() * m.dim(), flat);
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Mat comp = out.basis[j] * out.basis[i];  // apply i first
      mult[i][j] = to_sparse(solver.coords(comp.data()));
    }
  Vec unit = solver.coords(Mat::identity(F, m.dim()).data());
  out.alg = Algebra(F, d, std::move(mult), std::move(unit), {});
  out.alg.validate();
  return out;
}

bool is_indecomposable(const Module& m) {
  if (m.dim() == 0) return false;
  EndAlgebra e = endomorphism_algebra(m);
  RowSpace j = radical(e.alg);
  return e.alg.dim() - j.dim() == 1;
}

}  // namespace qhforge
