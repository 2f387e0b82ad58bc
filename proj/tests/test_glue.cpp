#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhforge/glue.hpp"

using namespace qhforge;

TEST_CASE("dihedral relation on component labels") { CHECK(dihedral_relation_holds(5)); }

TEST_CASE("window spec for the field validates") {
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  CHECK_NOTHROW(validate_window_spec(spec));
}

TEST_CASE("B window: size-1 range is A itself; F gives the path algebra of one arrow") {
  WindowSpec spec = WindowSpec::field_spec(Fp(2));
  Algebra b1 = build_B_window(spec, 1, 1);
  CHECK(b1.dim() == 1);
  Algebra b2 = build_B_window(spec, 1, 2);
  CHECK(b2.dim() == 3);  // e1, e2, one arrow
  CHECK_NOTHROW(b2.validate());
  // both window orders certify on the B window
  std::vector<std::string> l1 = {"*[1]", "*[2]"};
  auto cert1 = check_quasihereditary(b2, WeightPoset::total_descending(l1));
  auto cert2 = check_quasihereditary(b2, WeightPoset::total_descending({"*[2]", "*[1]"}));
  CHECK(cert1.ok);
  CHECK(cert2.ok);
}

TEST_CASE("C window of the field: structure of the 5-dimensional C_1^2") {
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  CWindow w = build_C_window(spec, 1, 2);
  const Algebra& c = *w.alg;
  CHECK(c.dim() == 5);
  CHECK_NOTHROW(c.validate());

  // basis order: e1, e2, t, t*, s with t·t* = s, t*·t = 0
  const auto& ca = w.component(CompKind::A, 1);
  const auto& cb = w.component(CompKind::A, 2);
  const auto& ct = w.component(CompKind::T, 1);
  const auto& cts = w.component(CompKind::Tstar, 1);
  const auto& cs = w.component(CompKind::Astar, 1);
  Vec t(c.dim(), 0), ts(c.dim(), 0);
  t[ct.offset] = 1;
  ts[cts.offset] = 1;
  Vec tt = c.mul(t, ts);
  CHECK(tt[cs.offset] == 1);
  CHECK(gfp::vec_is_zero(c.mul(ts, t)));
  Vec e1(c.dim(), 0), e2(c.dim(), 0);
  e1[ca.offset] = 1;
  e2[cb.offset] = 1;
  CHECK(c.mul(e1, t) == t);
  CHECK(c.mul(t, e2) == t);
  CHECK(gfp::vec_is_zero(c.mul(t, e1)));

  // grading: T·T = 0, T*·T* = 0, degree ≥ 3 products vanish
  CHECK(gfp::vec_is_zero(c.mul(t, t)));
  CHECK(gfp::vec_is_zero(c.mul(ts, ts)));
  Vec s(c.dim(), 0);
  s[cs.offset] = 1;
  CHECK(gfp::vec_is_zero(c.mul(s, t)));
  CHECK(gfp::vec_is_zero(c.mul(s, s)));
}

TEST_CASE("dim C_1^n(F) = 4n − 3") {
  WindowSpec spec = WindowSpec::field_spec(Fp(2));
  for (int n = 1; n <= 5; ++n) {
    CWindow w = build_C_window(spec, 1, n);
    CHECK(w.alg->dim() == static_cast<size_t>(4 * n - 3));
  }
}

TEST_CASE("C window certifies with the window order; the reflection carries the other order") {
  for (uint32_t p : {2u, 3u}) {
    WindowSpec spec = WindowSpec::field_spec(Fp(p));
    for (int n = 1; n <= 4; ++n) {
      CWindow w = build_C_window(spec, 1, n);
      auto cert = check_quasihereditary(*w.alg, w.window_poset());
      INFO("p=", p, " n=", n);
      CHECK(cert.ok);
      // reflected window certifies the opposite order
      ReflectionResult refl = reflect_window(spec, w);
      auto cert_op = check_quasihereditary(*refl.reflected.alg, refl.reflected.window_poset().opposite());
      CHECK(cert_op.ok);
    }
  }
}

TEST_CASE("literal window order Λ¹ fails on C_1^2 at the truncated boundary") {
  // the top star is absent in C_1^n, so the boundary breaks the Λ¹ chain;
  // the reflected window carries that structure instead
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  CWindow w = build_C_window(spec, 1, 2);
  auto cert = check_quasihereditary(*w.alg, w.window_poset().opposite());
  CHECK(!cert.ok);
}

TEST_CASE("T_1^n of the field: dimensions") {
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  Rng rng(0);
  // n = 1: only the (1,0) block, dimension dim T
  CnResult c1 = cn(spec, 1, rng);
  CHECK(c1.window.alg->dim() == 1);
  CHECK(c1.tilting.bim.dim() == 1);
  // n = 2: blocks (1,0),(1,1),(2,1) → dimension 4
  CnResult c2 = cn(spec, 2, rng);
  CHECK(c2.window.alg->dim() == 5);
  CHECK(c2.tilting.bim.dim() == 4);
  CHECK(c2.tilting.symmetric);
}

TEST_CASE("T_1^n self-duality witness exists for n ≤ 4 over F") {
  for (uint32_t p : {2u, 3u}) {
    WindowSpec spec = WindowSpec::field_spec(Fp(p));
    Rng rng(0);
    for (int n = 1; n <= 4; ++n) {
      CnResult c = cn(spec, n, rng);
      INFO("p=", p, " n=", n);
      CHECK(c.tilting.bim.dim() > 0);
      Bimodule dual = dual_bimodule(c.tilting.bim);
      // the witness is an invertible bimodule map onto the dual
      Mat w = c.tilting.selfdual;
      CHECK(gfp::inverse(w).has_value());
    }
  }
}

TEST_CASE("cn iteration: cn(F,1) is F; cn(F,2) twice gives dimension 23") {
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  Rng rng(0);
  CnResult c1 = cn(spec, 1, rng);
  CHECK(c1.window.alg->dim() == 1);
  CHECK(c1.next->A->dim() == 1);

  CnResult c2 = cn(spec, 2, rng);
  validate_window_spec(*c2.next);
  CnResult c22 = cn(*c2.next, 2, rng);
  CHECK(c22.window.alg->dim() == 23);  // 2·5 + 2·4 + 5
}

TEST_CASE("cn quotient epimorphism") {
  WindowSpec spec = WindowSpec::field_spec(Fp(2));
  Rng rng(0);
  CnResult c2 = cn(spec, 2, rng);
  EpiResult epi = cn_quotient_epi(c2.window, spec);
  CHECK(epi.kernel.dim() == 4);  // span{e2, t, t*, s}
  // kernel basis: everything outside the A_1 block
  const auto& a1 = c2.window.component(CompKind::A, 1);
  Vec e2(c2.window.alg->dim(), 0);
  e2[c2.window.component(CompKind::A, 2).offset] = 1;
  CHECK(epi.kernel.contains(e2));
  CHECK(a1.offset == 0);

  // composition of two epis from the double iteration stays surjective
  CnResult c22 = cn(*c2.next, 2, rng);
  EpiResult epi2 = cn_quotient_epi(c22.window, *c2.next);
  Mat composed = epi.epi.matrix * epi2.epi.matrix;
  auto rr = gfp::rref(composed);
  CHECK(rr.rank == 1);  // onto F
}

TEST_CASE("check_symmetric: trivial extension of dual numbers by its dual is symmetric") {
  Fp F(3);
  std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
  mult[0][0] = {{0, 1}};
  mult[0][1] = {{1, 1}};
  mult[1][0] = {{1, 1}};
  mult[1][1] = {};
  auto base = std::make_shared<Algebra>(F, 2, std::move(mult), Vec{1, 0},
                                        std::vector<LabeledIdem>{{"0", {1, 0}}});
  // trivial extension a ⋉ a*: basis 1, x, 1*, x* — assemble through the
  // window machinery is not applicable; build directly
  std::vector<std::vector<SparseVec>> m4(4, std::vector<SparseVec>(4));
  const Bimodule reg = regular_bimodule(*base);
  const Bimodule dual = dual_bimodule(reg);
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      m4[i][j] = base->mult_entry(i, j);
      SparseVec l, r;
      Vec lv = dual.left_action(i).col(j);
      for (size_t k = 0; k < 2; ++k)
        if (lv[k]) l.push_back({static_cast<uint32_t>(2 + k), lv[k]});
      m4[i][2 + j] = l;
      Vec rv = dual.right_action(i).col(j);
      for (size_t k = 0; k < 2; ++k)
        if (rv[k]) r.push_back({static_cast<uint32_t>(2 + k), rv[k]});
      m4[2 + j][i] = r;
    }
  Algebra triv(F, 4, std::move(m4), {1, 0, 0, 0}, {{"0", {1, 0, 0, 0}}});
  triv.validate();
  Rng rng(0);
  SymmetryReport rep = check_symmetric(triv, rng);
  CHECK(rep.symmetric);
}

TEST_CASE("check_symmetric: boundary failure on C_1^2(F) names index 2") {
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  CWindow w = build_C_window(spec, 1, 2);
  Rng rng(0);
  SymmetryReport rep = check_symmetric(*w.alg, rng);
  CHECK(!rep.symmetric);
  bool has2 = false;
  for (const auto& l : rep.failing_labels)
    if (l.find("[2]") != std::string::npos) has2 = true;
  CHECK(has2);
}

TEST_CASE("check_symmetric: interior of a [1,4] window carries a nondegenerate form") {
  WindowSpec spec = WindowSpec::field_spec(Fp(3));
  CWindow w = build_C_window(spec, 1, 4);
  const Algebra& c = *w.alg;
  Vec e(c.dim(), 0);
  e = gfp::vec_add(c.field(), c.class_idempotent("*[2]"), c.class_idempotent("*[3]"));
  SubalgebraResult interior = corner_algebra(c, e);
  CHECK(interior.alg.dim() == 6);
  Rng rng(0);
  SymmetryReport rep = check_symmetric(interior.alg, rng);
  CHECK(rep.symmetric);
}

TEST_CASE("L_2 gluing degenerates to a plain C window when q is a middle window") {
  // middle = subalgebra-style window [1, p−1] with both boundary stars kept
  uint32_t p = 3;
  WindowSpec spec = WindowSpec::field_spec(Fp(p));
  CWindow left = build_window(spec, -1, 0, -1, 0);
  CWindow middle = build_window(spec, 1, 2, 1, 2);
  CWindow right = build_window(spec, 3, 4, 3, 3);

  L2Middle mid;
  mid.q = middle.alg;
  const Fp F = spec.A->field();
  // quotients onto the diagonal blocks A_1, A_2 of the middle window
  for (int j = 1; j <= 2; ++j) {
    auto shared_alpha = std::make_shared<Algebra>(field_algebra(F, "*"));
    mid.alpha.push_back(shared_alpha);
    Mat qm(F, 1, middle.alg->dim());
    qm.at(0, middle.component(CompKind::A, j).offset) = 1;
    mid.quotient_maps.push_back(qm);
    Vec star(middle.alg->dim(), 0);
    star[middle.component(CompKind::Astar, j).offset] = 1;
    mid.star_spaces.push_back({star});
  }

  L2Boundary bd;
  // seam bimodules are F over (F, α̂) with scalar pairings
  auto scalar_bim = [&](const Algebra* l, const Algebra* r) {
    return Bimodule(l, r, 1, {Mat::identity(F, 1)}, {Mat::identity(F, 1)});
  };
  bd.t_left = scalar_bim(spec.A.get(), mid.alpha[0].get());
  bd.t_right = scalar_bim(mid.alpha[1].get(), spec.A.get());
  bd.pair_left_out = Mat::identity(F, 1);
  bd.pair_left_in = Mat::identity(F, 1);
  bd.pair_right_in = Mat::identity(F, 1);
  bd.pair_right_out = Mat::identity(F, 1);

  L2Window l2 = build_L2_window(spec, left, mid, spec, right, bd);
  // plain window on [−1, 4] with stars [−1, 3] has the same dimension
  CWindow plain = build_window(spec, -1, 4, -1, 3);
  CHECK(l2.alg->dim() == plain.alg->dim());
  auto cert_plain = check_quasihereditary(*plain.alg, plain.window_poset());
  CHECK(cert_plain.ok);
  // quasi-heredity of the glued algebra, ascending window order
  WeightPoset order = WeightPoset::total_descending({"*[4]", "*[3]", "*[2]", "*[1]", "*[0]", "*[-1]"});
  auto cert = check_quasihereditary(*l2.alg, order);
  CHECK(cert.ok);
}
