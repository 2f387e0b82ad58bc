#include "qhforge/iso.hpp"

#include <algorithm>
#include <map>

namespace qhforge {

namespace {

struct SideData {
  const Algebra* a;
  std::vector<RowSpace> jpow;  // J^0 = A ⊃ J ⊃ J² ⊃ ... ⊃ 0 (last entry zero)
  std::map<std::string, std::vector<Vec>> prims_by_label;
  uint32_t max_degree = 0;

  size_t layer_of(const Vec& v) const {
    size_t l = 0;
    while (l + 1 < jpow.size() && jpow[l + 1].contains(v)) ++l;
    return l;
  }
};

SideData analyze(const Algebra& a) {
  SideData d;
  d.a = &a;
  RowSpace full(a.field(), a.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    Vec b(a.dim(), 0);
    b[i] = 1;
    full.insert(b);
  }
  d.jpow.push_back(full);
  RowSpace j = radical(a);
  RowSpace j1 = j;
  while (j.dim() > 0) {
    d.jpow.push_back(j);
    RowSpace next(a.field(), a.dim());
    for (const auto& x : j.basis())
      for (const auto& y : j1.basis()) next.insert(a.mul(x, y));
    j = std::move(next);
  }
  d.jpow.push_back(RowSpace(a.field(), a.dim()));
  for (const auto& e : a.idempotents()) d.prims_by_label[e.label].push_back(e.vec);
  if (a.grading())
    for (uint32_t g : *a.grading()) d.max_degree = std::max(d.max_degree, g);
  return d;
}

// basis of e·J^l·f, optionally intersected with one degree component
std::vector<Vec> refined_space(const SideData& s, const Vec& e, const Vec& f, size_t layer,
                               std::optional<uint32_t> degree) {
  const Algebra& a = *s.a;
  RowSpace block = a.peirce(e, f);
  RowSpace inter = RowSpace::intersect(block, s.jpow[std::min(layer, s.jpow.size() - 1)]);
  if (!degree) return inter.basis();
  RowSpace degspace(a.field(), a.dim());
  for (size_t i = 0; i < a.dim(); ++i) {
    if ((*a.grading())[i] != *degree) continue;
    Vec b(a.dim(), 0);
    b[i] = 1;
    degspace.insert(b);
  }
  return RowSpace::intersect(inter, degspace).basis();
}

struct PartialMap {
  const Algebra* g;
  const Algebra* h;
  std::vector<Vec> dom, img;
  RowSpace dom_span;

  // add a matched pair; false on inconsistency with the current span
  bool add(const Vec& x, const Vec& y) {
    if (dom_span.contains(x)) {
      gfp::SpanSolver sv(g->field(), g->dim(), dom);
      Vec c = sv.coords(x);
      Vec expect(h->dim(), 0);
      for (size_t i = 0; i < dom.size(); ++i) gfp::vec_axpy(h->field(), c[i], img[i], expect);
      return expect == y;
    }
    dom.push_back(x);
    img.push_back(y);
    dom_span.insert(x);
    return true;
  }

  bool close() {
    // process every product of matched pairs until stable
    size_t i = 0;
    while (i < dom.size()) {
      for (size_t j = 0; j < dom.size(); ++j) {
        if (!add(g->mul(dom[i], dom[j]), h->mul(img[i], img[j]))) return false;
        if (j < dom.size() && !add(g->mul(dom[j], dom[i]), h->mul(img[j], img[i]))) return false;
      }
      ++i;
    }
    return true;
  }
};

std::vector<Vec> enumerate_candidates(const Fp& F, const std::vector<Vec>& basis, const RowSpace& avoid, size_t n,
                                      bool& too_big) {
  too_big = false;
  if (basis.empty()) return {};
  double total = 1;
  for (size_t i = 0; i < basis.size(); ++i) total *= F.p();
  if (total > (1 << 16)) {
    too_big = true;
    return {};
  }
  std::vector<Vec> out;
  std::vector<uint32_t> coef(basis.size(), 0);
  while (true) {
    size_t i = 0;
    while (i < coef.size()) {
      coef[i]++;
      if (coef[i] < F.p()) break;
      coef[i] = 0;
      ++i;
    }
    if (i == coef.size()) break;
    Vec v(n, 0);
    for (size_t k = 0; k < basis.size(); ++k)
      if (coef[k]) gfp::vec_axpy(F, coef[k], basis[k], v);
    if (!avoid.contains(v)) out.push_back(std::move(v));
  }
  return out;
}

struct SearchCtx {
  const Algebra* g;
  const Algebra* h;
  IsoOptions opts;
  std::vector<std::pair<Vec, std::vector<Vec>>> gens;
  uint64_t nodes = 0;
  bool exhausted = false;
  bool done = false;
  const std::function<bool(const Mat&)>* visit;

  bool backtrack(const PartialMap& pm, size_t gi) {
    if (done || exhausted) return done;
    if (gi == gens.size()) {
      if (pm.dom_span.dim() != g->dim()) return false;
      gfp::SpanSolver sv(g->field(), g->dim(), pm.dom);
      Mat iso(h->field(), h->dim(), g->dim());
      for (size_t c = 0; c < g->dim(); ++c) {
        Vec b(g->dim(), 0);
        b[c] = 1;
        Vec coef = sv.coords(b);
        Vec out(h->dim(), 0);
        for (size_t i = 0; i < pm.dom.size(); ++i) gfp::vec_axpy(h->field(), coef[i], pm.img[i], out);
        for (size_t r = 0; r < h->dim(); ++r) iso.at(r, c) = out[r];
      }
      if (!gfp::inverse(iso)) return false;
      AlgebraMap m{g, h, iso, MapKind::Homomorphism};
      if (!m.is_valid()) return false;
      if ((*visit)(iso)) done = true;
      return done;
    }
    const auto& [gen, cands] = gens[gi];
    if (pm.dom_span.contains(gen)) return backtrack(pm, gi + 1);  // already forced
    for (const auto& cand : cands) {
      if (++nodes >= opts.budget) {
        exhausted = true;
        return false;
      }
      PartialMap next = pm;
      if (!next.add(gen, cand)) continue;
      if (!next.close()) continue;
      if (backtrack(next, gi + 1)) return true;
      if (exhausted || done) return done;
    }
    return false;
  }
};

}  // namespace

IsoResult algebra_iso_visit(const Algebra& g, const Algebra& h, const IsoOptions& opts,
                            const std::function<bool(const Mat&)>& visit) {
  IsoResult res;
  if (g.dim() != h.dim() || g.field().p() != h.field().p()) return res;
  if (g.dim() == 0) return res;
  if (g.idempotents().empty() || h.idempotents().empty())
    throw AlgebraError("algebra_iso_search: both algebras need labeled idempotents");
  if (opts.respect_grading && (!g.grading() || !h.grading()))
    throw AlgebraError("algebra_iso_search: grading requested but absent");

  SideData G = analyze(g), H = analyze(h);
  if (G.jpow.size() != H.jpow.size()) return res;
  for (size_t i = 0; i < G.jpow.size(); ++i)
    if (G.jpow[i].dim() != H.jpow[i].dim()) return res;

  std::vector<std::string> glabels = g.labels(), hlabels = h.labels();
  if (glabels.size() != hlabels.size()) return res;
  std::vector<size_t> perm(hlabels.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;

  std::vector<std::optional<uint32_t>> degs = {std::nullopt};
  if (opts.respect_grading) {
    degs.clear();
    for (uint32_t d = 0; d <= std::max(G.max_degree, H.max_degree); ++d) degs.push_back(d);
  }
  const size_t layers = G.jpow.size() - 1;  // last entry is the zero space

  do {
    bool ok = true;
    for (size_t i = 0; i < glabels.size() && ok; ++i)
      ok = G.prims_by_label[glabels[i]].size() == H.prims_by_label[hlabels[perm[i]]].size();
    if (!ok) continue;

    std::vector<std::pair<Vec, Vec>> prim_pairs;
    for (size_t i = 0; i < glabels.size(); ++i) {
      const auto& gp = G.prims_by_label[glabels[i]];
      const auto& hp = H.prims_by_label[hlabels[perm[i]]];
      for (size_t k = 0; k < gp.size(); ++k) prim_pairs.push_back({gp[k], hp[k]});
    }

    for (size_t ai = 0; ai < prim_pairs.size() && ok; ++ai)
      for (size_t bi = 0; bi < prim_pairs.size() && ok; ++bi)
        for (size_t l = 0; l < layers && ok; ++l)
          for (const auto& deg : degs) {
            auto gs = refined_space(G, prim_pairs[ai].first, prim_pairs[bi].first, l, deg);
            auto hs = refined_space(H, prim_pairs[ai].second, prim_pairs[bi].second, l, deg);
            if (gs.size() != hs.size()) {
              ok = false;
              break;
            }
          }
    if (!ok) continue;

    PartialMap base{&g, &h, {}, {}, RowSpace(g.field(), g.dim())};
    ok = base.add(g.unit(), h.unit());
    for (const auto& [ge, he] : prim_pairs)
      if (ok) ok = base.add(ge, he);
    if (ok) ok = base.close();
    if (!ok) continue;

    SearchCtx ctx;
    ctx.g = &g;
    ctx.h = &h;
    ctx.opts = opts;
    ctx.visit = &visit;

    // generator schedule: walk layers from the top, pick uncovered refined
    // pieces; the closure of previously scheduled material prunes duplicates
    bool feasible = true;
    RowSpace covered = base.dom_span;
    auto grow_cover = [&](const Vec& v) {
      covered.insert(v);
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<Vec> cur = covered.basis();
        for (const auto& x : cur)
          for (const auto& y : cur)
            if (covered.insert(g.mul(x, y))) grew = true;
      }
    };
    for (size_t l = 0; l < layers && feasible; ++l) {
      for (size_t ai = 0; ai < prim_pairs.size() && feasible; ++ai)
        for (size_t bi = 0; bi < prim_pairs.size() && feasible; ++bi)
          for (const auto& deg : degs) {
            auto gs = refined_space(G, prim_pairs[ai].first, prim_pairs[bi].first, l, deg);
            for (const auto& gv : gs) {
              if (G.layer_of(gv) != l) continue;
              if (covered.contains(gv)) continue;
              auto hs = refined_space(H, prim_pairs[ai].second, prim_pairs[bi].second, l, deg);
              bool too_big = false;
              auto cands =
                  enumerate_candidates(h.field(), hs, H.jpow[std::min(l + 1, layers)], h.dim(), too_big);
              if (too_big) {
                feasible = false;
                break;
              }
              ctx.gens.push_back({gv, std::move(cands)});
              grow_cover(gv);
            }
            if (!feasible) break;
          }
    }
    if (!feasible || covered.dim() != g.dim()) continue;

    ctx.backtrack(base, 0);
    res.nodes += ctx.nodes;
    if (ctx.done) return res;
    if (ctx.exhausted) {
      res.budget_exhausted = true;
      return res;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

IsoResult algebra_iso_search(const Algebra& g, const Algebra& h, const IsoOptions& opts) {
  std::optional<Mat> found;
  IsoResult res = algebra_iso_visit(g, h, opts, [&](const Mat& m) {
    found = m;
    return true;
  });
  res.iso = found;
  return res;
}

std::optional<AlgebraMap> antiautomorphism_search(const Algebra& g, const IsoOptions& opts) {
  Algebra op = g.opposite();
  IsoResult res = algebra_iso_search(g, op, opts);
  if (!res.iso) return std::nullopt;
  AlgebraMap m{&g, &g, *res.iso, MapKind::Antihomomorphism};
  if (!m.is_valid()) throw AlgebraError("antiautomorphism_search: witness failed validation");
  return m;
}

}  // namespace qhforge
