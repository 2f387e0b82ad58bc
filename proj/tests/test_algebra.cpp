#include "doctest.h"

#include "qhforge/algebra.hpp"
#include "qhforge/json_io.hpp"
#include "qhforge/module.hpp"

using namespace qhforge;

namespace testalg {

// GF(p)[x]/x^2, basis {1, x}
Algebra dual_numbers(uint32_t p) {
  Fp F(p);
  std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
  mult[0][0] = {{0, 1}};
  mult[0][1] = {{1, 1}};
  mult[1][0] = {{1, 1}};
  mult[1][1] = {};
  return Algebra(F, 2, std::move(mult), {1, 0}, {{"0", {1, 0}}}, std::vector<uint32_t>{0, 1});
}

// full 2x2 matrix algebra, basis E11,E12,E21,E22
Algebra mat2(uint32_t p) {
  Fp F(p);
  auto idx = [](size_t i, size_t j) { return i * 2 + j; };
  std::vector<std::vector<SparseVec>> mult(4, std::vector<SparseVec>(4));
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      for (size_t k = 0; k < 2; ++k)
        for (size_t l = 0; l < 2; ++l)
          if (j == k) mult[idx(i, j)][idx(k, l)] = {{static_cast<uint32_t>(idx(i, l)), 1}};
  Vec unit(4, 0);
  unit[idx(0, 0)] = unit[idx(1, 1)] = 1;
  Vec e1(4, 0), e2(4, 0);
  e1[idx(0, 0)] = 1;
  e2[idx(1, 1)] = 1;
  return Algebra(F, 4, std::move(mult), unit, {{"0", e1}, {"0", e2}});
}

Algebra trivial_extension(const Algebra& a, const Bimodule& m);

}  // namespace testalg

TEST_CASE("algebra validation") {
  Algebra d = testalg::dual_numbers(3);
  CHECK_NOTHROW(d.validate());
  Algebra m2 = testalg::mat2(5);
  CHECK_NOTHROW(m2.validate());

  // break associativity
  std::vector<std::vector<SparseVec>> bad(2, std::vector<SparseVec>(2));
  bad[0][0] = {{0, 1}};
  bad[0][1] = {{1, 1}};
  bad[1][0] = {{1, 1}};
  bad[1][1] = {{0, 1}};  // x*x = 1 but then (xx)x != x(xx)? actually x^2=1 is associative (group algebra)
  Algebra ok(Fp(3), 2, std::move(bad), {1, 0}, {});
  CHECK_NOTHROW(ok.validate());

  std::vector<std::vector<SparseVec>> bad2(2, std::vector<SparseVec>(2));
  bad2[0][0] = {{0, 1}};
  bad2[0][1] = {{1, 1}};
  bad2[1][0] = {{0, 1}};  // 1*x = x but x*1 = 1: unit law broken
  bad2[1][1] = {};
  Algebra notok(Fp(3), 2, std::move(bad2), {1, 0}, {});
  CHECK_THROWS_AS(notok.validate(), AlgebraError);
}

TEST_CASE("left and right multiplication matrices") {
  Algebra d = testalg::dual_numbers(5);
  Vec x{0, 1};
  Mat lx = d.left_mult(x);
  CHECK(lx.apply({1, 0}) == Vec{0, 1});  // x·1 = x
  CHECK(lx.apply({0, 1}) == Vec{0, 0});  // x·x = 0
  Mat rx = d.right_mult(x);
  CHECK(rx.apply({1, 0}) == Vec{0, 1});
}

TEST_CASE("opposite and center") {
  Algebra m2 = testalg::mat2(3);
  Algebra op = m2.opposite();
  CHECK_NOTHROW(op.validate());
  auto z = m2.center();
  CHECK(z.size() == 1);  // scalars
}

TEST_CASE("generating set and ideals") {
  Algebra m2 = testalg::mat2(3);
  auto gens = m2.generating_set();
  CHECK(!gens.empty());
  // the two-sided ideal generated by E11 is everything
  Vec e11(4, 0);
  e11[0] = 1;
  CHECK(m2.two_sided_ideal({e11}).dim() == 4);

  Algebra d = testalg::dual_numbers(3);
  RowSpace rad = d.two_sided_ideal({Vec{0, 1}});
  CHECK(rad.dim() == 1);
  CHECK(d.is_ideal(rad));
}

TEST_CASE("peirce components") {
  Algebra m2 = testalg::mat2(5);
  Vec e1(4, 0), e2(4, 0);
  e1[0] = 1;
  e2[3] = 1;
  CHECK(m2.peirce(e1, e1).dim() == 1);
  CHECK(m2.peirce(e1, e2).dim() == 1);
}

TEST_CASE("algebra JSON round-trip is byte-exact") {
  Algebra d = testalg::dual_numbers(3);
  std::string j = algebra_to_json(d);
  Algebra back = algebra_from_json(j);
  CHECK(algebra_to_json(back) == j);
  CHECK(back.dim() == 2);
  CHECK(back.grading().has_value());
}

TEST_CASE("regular bimodule and dual bimodule") {
  Algebra d = testalg::dual_numbers(3);
  Bimodule reg = regular_bimodule(d);
  CHECK_NOTHROW(reg.validate());
  Bimodule dd = dual_bimodule(reg);
  CHECK_NOTHROW(dd.validate());
  CHECK(dd.dim() == reg.dim());
  // dual of dual is naturally isomorphic to the original
  Bimodule dddd = dual_bimodule(dd);
  Rng rng(0);
  auto iso = bimodule_iso(reg, dddd, rng);
  CHECK(iso.has_value());
}

TEST_CASE("dual of the regular bimodule of the field") {
  Algebra f = field_algebra(Fp(7));
  Bimodule reg = regular_bimodule(f);
  Bimodule d = dual_bimodule(reg);
  CHECK(d.dim() == 1);
  Rng rng(0);
  CHECK(bimodule_iso(reg, d, rng).has_value());
}

TEST_CASE("tensor over unit constraints") {
  Algebra d = testalg::dual_numbers(3);
  Bimodule reg = regular_bimodule(d);
  // a ⊗_a a ≅ a
  auto t = tensor_over(reg, reg);
  CHECK(t.bim.dim() == 2);
  Rng rng(0);
  CHECK(bimodule_iso(t.bim, reg, rng).has_value());
}

TEST_CASE("tensor associativity witness on small bimodules") {
  Algebra m2 = testalg::mat2(3);
  Bimodule reg = regular_bimodule(m2);
  auto t1 = tensor_over(tensor_over(reg, reg).bim, reg);
  auto t2 = tensor_over(reg, tensor_over(reg, reg).bim);
  CHECK(t1.bim.dim() == t2.bim.dim());
  Rng rng(2);
  CHECK(bimodule_iso(t1.bim, t2.bim, rng).has_value());
}

TEST_CASE("module machinery: submodule, quotient, spin, hom") {
  Algebra d = testalg::dual_numbers(3);
  Module reg = regular_module(d, Side::Left);
  CHECK_NOTHROW(reg.validate());
  RowSpace rad = RowSpace::span_of(d.field(), 2, {{0, 1}});
  auto sub = submodule(reg, rad);
  CHECK(sub.mod.dim() == 1);
  auto quo = quotient_module(reg, rad);
  CHECK(quo.mod.dim() == 1);
  // Hom(simple, simple) is 1-dimensional (split)
  CHECK(hom_space(sub.mod, sub.mod).size() == 1);
  // Hom(M, 0) is empty
  Module z = zero_module(d, Side::Left);
  CHECK(hom_space(reg, z).empty());
  // spin of the unit is everything
  CHECK(spin(reg, {Vec{1, 0}}).dim() == 2);
  CHECK(spin(reg, {Vec{0, 1}}).dim() == 1);
}

TEST_CASE("direct sum of algebras") {
  Algebra f1 = field_algebra(Fp(3), "a");
  Algebra f2 = field_algebra(Fp(3), "b");
  Algebra s = direct_sum({&f1, &f2});
  CHECK_NOTHROW(s.validate());
  CHECK(s.dim() == 2);
  CHECK(s.labels().size() == 2);
}
