#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qhforge/homological.hpp"
#include "qhforge/schur.hpp"

using namespace qhforge;

namespace {

Algebra dual_numbers(uint32_t p) {
  Fp F(p);
  std::vector<std::vector<SparseVec>> mult(2, std::vector<SparseVec>(2));
  mult[0][0] = {{0, 1}};
  mult[0][1] = {{1, 1}};
  mult[1][0] = {{1, 1}};
  mult[1][1] = {};
  return Algebra(F, 2, std::move(mult), {1, 0}, {{"0", {1, 0}}}, std::vector<uint32_t>{0, 1});
}

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
  unit[0] = unit[3] = 1;
  return Algebra(F, 4, std::move(mult), unit, {});
}

Algebra two_fields(uint32_t p) {
  Algebra f1 = field_algebra(Fp(p), "a");
  Algebra f2 = field_algebra(Fp(p), "b");
  return direct_sum({&f1, &f2});
}

}  // namespace

TEST_CASE("radical of a full matrix algebra is zero") {
  Algebra m2 = mat2(2);
  CHECK(radical(m2).dim() == 0);
  Algebra m3 = mat2(3);
  CHECK(radical(m3).dim() == 0);
}

TEST_CASE("radical of dual numbers is the nilpotent line") {
  for (uint32_t p : {2u, 3u, 5u}) {
    Algebra d = dual_numbers(p);
    RowSpace j = radical(d);
    REQUIRE(j.dim() == 1);
    CHECK(j.contains({0, 1}));
    size_t idx = 0;
    CHECK(is_nilpotent_ideal(d, j, &idx));
    CHECK(idx == 2);
  }
}

TEST_CASE("radical of S(2,2) over GF(2) has dimension 5") {
  Rng rng(0);
  SchurAlgebra s = build_schur(2, 2, rng);
  CHECK(s.alg->dim() == 10);
  RowSpace j = radical(*s.alg);
  // oracle: dim A − Σ (dim L)² with simple dims {2,1} from the MeatAxe split
  SemisimpleData ss = semisimple_structure(*s.alg, rng);
  std::vector<size_t> dims;
  for (const auto& si : ss.simples) dims.push_back(si.rep.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<size_t>{1, 2});
  CHECK(j.dim() == 10 - (1 * 1 + 2 * 2));
  CHECK(j.dim() == 5);
}

TEST_CASE("S(2,2) over GF(3) is semisimple") {
  Rng rng(0);
  SchurAlgebra s = build_schur(3, 2, rng);
  CHECK(s.alg->dim() == 10);
  CHECK(radical(*s.alg).dim() == 0);
}

TEST_CASE("meataxe composition factors of the regular module") {
  Rng rng(5);
  Algebra d = dual_numbers(3);
  Module reg = regular_module(d, Side::Left);
  auto leaves = composition_factors(reg, rng);
  CHECK(leaves.size() == 2);
  CHECK(leaves[0].dim() == 1);
  CHECK(leaves[1].dim() == 1);

  Algebra m2 = mat2(2);
  Module reg2 = regular_module(m2, Side::Left);
  auto leaves2 = composition_factors(reg2, rng);
  CHECK(leaves2.size() == 2);
  CHECK(leaves2[0].dim() == 2);
}

TEST_CASE("idempotent lifting: semisimple direct sum") {
  Rng rng(1);
  Algebra s = two_fields(3);
  IdempotentData data = lift_idempotents(s, rng);
  REQUIRE(data.prims.size() == 2);
  RowSpace span(s.field(), 2);
  span.insert(data.prims[0].vec);
  span.insert(data.prims[1].vec);
  CHECK(span.dim() == 2);
  for (const auto& p : data.prims) {
    size_t nnz = 0;
    for (uint32_t x : p.vec)
      if (x) ++nnz;
    CHECK(nnz == 1);  // the two unit vectors
  }
}

TEST_CASE("idempotent lifting: local algebra gives the unit") {
  Rng rng(1);
  for (uint32_t p : {2u, 3u}) {
    Algebra d = dual_numbers(p);
    IdempotentData data = lift_idempotents(d, rng);
    REQUIRE(data.prims.size() == 1);
    CHECK(data.prims[0].vec == Vec{1, 0});
  }
}

TEST_CASE("idempotent lifting: S(2,2) over GF(2) has three primitives") {
  Rng rng(0);
  SchurAlgebra s = build_schur(2, 2, rng);
  // labels carry weights; L(2) is 2-dimensional so weight 2 appears twice
  size_t w2 = 0, w0 = 0;
  for (const auto& e : s.alg->idempotents()) {
    if (e.label == "2") ++w2;
    if (e.label == "0") ++w0;
  }
  CHECK(w2 == 2);
  CHECK(w0 == 1);
  CHECK(s.alg->idempotents().size() == 3);
}

TEST_CASE("basic algebra of a matrix algebra is the field") {
  Rng rng(2);
  Algebra m2 = mat2(3);
  MoritaContext ctx = basic_algebra(m2, rng);
  CHECK(ctx.basic.dim() == 1);
  CHECK_NOTHROW(ctx.basic.validate());
  CHECK_NOTHROW(ctx.left_progenerator.validate());
  CHECK_NOTHROW(ctx.right_progenerator.validate());
}

TEST_CASE("basic of an already-basic algebra keeps the dimension") {
  Rng rng(2);
  Algebra d = dual_numbers(3);
  MoritaContext ctx = basic_algebra(d, rng);
  CHECK(ctx.basic.dim() == 2);
}

TEST_CASE("S(2,1) over GF(3) is a 2x2 matrix algebra with basic GF(3)") {
  Rng rng(0);
  SchurAlgebra s = build_schur(3, 1, rng);
  CHECK(s.alg->dim() == 4);
  MoritaContext ctx = basic_algebra(*s.alg, rng);
  CHECK(ctx.basic.dim() == 1);
}

TEST_CASE("cartan matrix examples") {
  Rng rng(0);
  // semisimple: identity
  Algebra s = two_fields(5);
  MoritaContext c1 = basic_algebra(s, rng);
  Mat cm = cartan_matrix(c1.basic, c1.basic.labels());
  CHECK(cm.is_identity());

  // dual numbers: [2]
  Algebra d = dual_numbers(3);
  MoritaContext c2 = basic_algebra(d, rng);
  Mat cd = cartan_matrix(c2.basic, c2.basic.labels());
  CHECK(cd.rows() == 1);
  CHECK(cd.at(0, 0) == 2);

  // S(2,2)/GF(2), weight order (2,0): composition multiplicities
  // [P(2):L(2)] = 1, [P(2):L(0)] = 1, [P(0):L(2)] = 1, [P(0):L(0)] = 2
  SchurAlgebra s22 = build_schur(2, 2, rng);
  Mat c22 = cartan_matrix(*s22.alg, {"2", "0"});
  CHECK(c22.at(0, 0) == 1);
  CHECK(c22.at(0, 1) == 1);
  CHECK(c22.at(1, 0) == 1);
  CHECK(c22.at(1, 1) == 2);
  // BGG-consistency: Σ c_{λμ} dim L(λ) dim L(μ) = dim S = 10
  CHECK(1 * 2 * 2 + 1 * 2 * 1 + 1 * 1 * 2 + 2 * 1 * 1 == 10);

  // the basic algebra has the same Cartan matrix
  MoritaContext c3 = basic_algebra(*s22.alg, rng);
  Mat cb = cartan_matrix(c3.basic, {"2", "0"});
  CHECK(cb == c22);
  CHECK(c3.basic.dim() == 5);
}

TEST_CASE("blocks") {
  Rng rng(0);
  Algebra s = two_fields(3);
  MoritaContext c1 = basic_algebra(s, rng);
  auto b1 = blocks(c1.basic);
  CHECK(b1.size() == 2);

  SchurAlgebra s22 = build_schur(2, 2, rng);
  auto b2 = blocks(*s22.alg);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].size() == 2);
}

TEST_CASE("ext1 examples") {
  Rng rng(0);
  // Ext¹(P, N) = 0 for projective P
  Algebra d = dual_numbers(3);
  RowSpace j = radical(d);
  Module reg = regular_module(d, Side::Left);
  Module simple = quotient_module(reg, j).mod;
  Ext1Data e0 = ext1(reg, simple, j);
  CHECK(e0.dim == 0);

  // dual numbers: Ext¹(simple, simple) = 1, the unique self-extension
  Ext1Data e1 = ext1(simple, simple, j);
  CHECK(e1.dim == 1);
  Module ext = extension_module(simple, simple, e1, e1.cocycles);
  CHECK(ext.dim() == 2);
  CHECK_NOTHROW(ext.validate());
  CHECK(is_indecomposable(ext));
}

TEST_CASE("ext1 in S(2,2) over GF(2): Ext¹(L(0), L(2)) = 1") {
  Rng rng(0);
  SchurAlgebra s = build_schur(2, 2, rng);
  const Algebra& A = *s.alg;
  RowSpace j = radical(A);
  ProjectiveModule p0 = projective_cover_of_label(A, "0");
  ProjectiveModule p2 = projective_cover_of_label(A, "2");
  Module l0 = quotient_module(p0.mod, radical_submodule(p0.mod, j)).mod;
  Module l2 = quotient_module(p2.mod, radical_submodule(p2.mod, j)).mod;
  CHECK(l0.dim() == 1);
  CHECK(l2.dim() == 2);
  CHECK(ext1(l0, l2, j).dim == 1);
}

TEST_CASE("endomorphism algebra and indecomposability") {
  Rng rng(0);
  Algebra d = dual_numbers(2);
  Module reg = regular_module(d, Side::Left);
  CHECK(is_indecomposable(reg));
  Module sum = direct_sum(reg, reg);
  CHECK(!is_indecomposable(sum));
}
