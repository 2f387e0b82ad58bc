#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qhforge/gfp.hpp"
#include "qhforge/poly.hpp"
#include "qhforge/subspace.hpp"

using namespace qhforge::gfp;

TEST_CASE("field arithmetic") {
  Fp F(7);
  CHECK(F.add(5, 4) == 2);
  CHECK(F.sub(2, 5) == 4);
  CHECK(F.mul(3, 5) == 1);
  CHECK(F.inv(3) == 5);
  CHECK(F.reduce(-1) == 6);
  CHECK_THROWS(Fp(6));
  CHECK(is_prime(2));
  CHECK(!is_prime(1));
}

TEST_CASE("rref zero and identity") {
  Fp F(5);
  Mat z(F, 3, 3);
  auto rz = rref(z);
  CHECK(rz.rank == 0);
  CHECK(rz.pivots.empty());

  Mat id = Mat::identity(F, 4);
  auto ri = rref(id);
  CHECK(ri.rank == 4);
  CHECK(ri.mat == id);
}

TEST_CASE("rref char-2 row duplication") {
  Fp F(2);
  Mat m = Mat::from_rows(F, {{1, 1}, {1, 1}});
  auto r = rref(m);
  CHECK(r.rank == 1);
}

TEST_CASE("rref idempotence on random matrices") {
  Rng rng(0);
  for (uint32_t p : {2u, 3u, 5u}) {
    Fp F(p);
    for (int t = 0; t < 10; ++t) {
      Mat m(F, 5, 7);
      for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 7; ++j) m.at(i, j) = rng.fp(F);
      auto r1 = rref(m);
      auto r2 = rref(r1.mat);
      CHECK(r1.mat == r2.mat);
    }
  }
}

TEST_CASE("nullspace basics") {
  Fp F3(3);
  Mat id = Mat::identity(F3, 4);
  CHECK(nullspace(id).empty());

  Mat z(F3, 2, 3);
  CHECK(nullspace(z).size() == 3);

  Mat m = Mat::from_rows(F3, {{1, 2}});
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  // spans the same line as (1,1)
  CHECK(ns[0][0] == ns[0][1]);
  CHECK(ns[0][0] != 0);
}

TEST_CASE("rank + nullity = cols on random matrices") {
  Rng rng(1);
  for (uint32_t p : {2u, 3u, 5u}) {
    Fp F(p);
    for (int t = 0; t < 10; ++t) {
      size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
      Mat m(F, rows, cols);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rng.fp(F);
      auto r = rref(m);
      CHECK(r.rank + nullspace(m).size() == cols);
    }
  }
}

TEST_CASE("solve") {
  Fp F2(2);
  Mat id = Mat::identity(F2, 3);
  Vec b{1, 0, 1};
  auto x = solve(id, b);
  REQUIRE(x);
  CHECK(*x == b);

  Mat z(F2, 2, 2);
  CHECK(!solve(z, {1, 0}));

  Mat m = Mat::from_rows(F2, {{1, 1}});
  auto y = solve(m, {1});
  REQUIRE(y);
  CHECK(m.apply(*y) == Vec{1});
}

TEST_CASE("commutant of identity and of the full matrix algebra") {
  Fp F(3);
  std::vector<Mat> gens = {Mat::identity(F, 3)};
  CHECK(commutant(gens).size() == 9);

  // all elementary matrices on d = 2: commutant is the scalars
  std::vector<Mat> elem;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j) {
      Mat e(F, 2, 2);
      e.at(i, j) = 1;
      elem.push_back(e);
    }
  auto c = commutant_dense(elem);
  REQUIRE(c.size() == 1);
  CHECK(c[0].at(0, 0) == c[0].at(1, 1));
  CHECK(c[0].at(0, 1) == 0);
}

namespace {
// oracle: orbit count of the pair action of the symmetric group on words,
// enumerated directly over all index pairs
size_t orbit_count_sigma_r(size_t r) {
  // orbits correspond to (c00,c01,c10,c11) with sum r
  size_t count = 0;
  for (size_t a = 0; a <= r; ++a)
    for (size_t b = 0; a + b <= r; ++b)
      for (size_t c = 0; a + b + c <= r; ++c) ++count;
  return count;
}

qhforge::gfp::Mat permutation_on_words(const Fp& F, size_t r, const std::vector<size_t>& perm) {
  size_t d = size_t(1) << r;
  Mat m(F, d, d);
  for (size_t w = 0; w < d; ++w) {
    size_t img = 0;
    for (size_t pos = 0; pos < r; ++pos)
      if (w & (size_t(1) << pos)) img |= size_t(1) << perm[pos];
    m.at(img, w) = 1;
  }
  return m;
}
}  // namespace

TEST_CASE("commutant of the place-permutation action: dim S(2,2) = 10") {
  Fp F(2);
  size_t r = 2;
  std::vector<Mat> gens = {permutation_on_words(F, r, {1, 0})};
  auto basis = commutant(gens);
  CHECK(basis.size() == 10);
  CHECK(basis.size() == orbit_count_sigma_r(r));
  // cross-check against the dense stacked-constraint path
  auto dense = commutant_dense(gens);
  CHECK(dense.size() == 10);
  // same space: every orbit matrix reduces to zero against the dense basis
  RowSpace span(F, 16);
  for (const auto& m : dense) span.insert(m.data());
  for (const auto& m : basis) CHECK(span.contains(m.data()));
}

TEST_CASE("commutant closed under product") {
  Fp F(3);
  std::vector<Mat> gens = {permutation_on_words(F, 3, {1, 2, 0}), permutation_on_words(F, 3, {1, 0, 2})};
  auto basis = commutant(gens);
  RowSpace span(F, 64);
  for (const auto& m : basis) span.insert(m.data());
  for (const auto& a : basis)
    for (const auto& b : basis) CHECK(span.contains((a * b).data()));
}

TEST_CASE("subspace operations") {
  Fp F(5);
  RowSpace s(F, 3);
  CHECK(s.insert({1, 2, 3}));
  CHECK(s.insert({0, 1, 1}));
  CHECK(!s.insert({1, 3, 4}));  // sum of the two
  CHECK(s.dim() == 2);
  CHECK(s.contains({2, 4, 6 % 5}));
  auto comp = s.complement();
  CHECK(comp.size() == 1);

  RowSpace a = RowSpace::span_of(F, 3, {{1, 0, 0}, {0, 1, 0}});
  RowSpace b = RowSpace::span_of(F, 3, {{0, 1, 0}, {0, 0, 1}});
  RowSpace i = RowSpace::intersect(a, b);
  CHECK(i.dim() == 1);
  CHECK(i.contains({0, 1, 0}));
}

TEST_CASE("charpoly and factorization") {
  Fp F(3);
  Mat m = Mat::from_rows(F, {{0, 1}, {0, 0}});
  Poly chi = charpoly(m);
  CHECK(chi.degree() == 2);
  CHECK(chi.c == Vec{0, 0, 1});  // t^2

  Mat d = Mat::from_rows(F, {{1, 0}, {0, 2}});
  Poly chid = charpoly(d);
  // (t-1)(t-2) = t^2 - 3t + 2 = t^2 + 2 over GF(3)
  CHECK(eval(chid, 1) == 0);
  CHECK(eval(chid, 2) == 0);

  Rng rng(7);
  Poly f(F, {2, 0, 1});  // t^2 + 2 = (t-1)(t-2)
  auto fac = factor(f, rng);
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first.degree() == 1);
  CHECK(fac[1].first.degree() == 1);

  // irreducible quadratic over GF(2): t^2 + t + 1
  Fp F2(2);
  Poly g(F2, {1, 1, 1});
  auto fg = factor(g, rng);
  REQUIRE(fg.size() == 1);
  CHECK(fg[0].second == 1);
  CHECK(fg[0].first.degree() == 2);

  // repeated factor: (t+1)^2 over GF(2) = t^2+1
  Poly h(F2, {1, 0, 1});
  auto fh = factor(h, rng);
  REQUIRE(fh.size() == 1);
  CHECK(fh[0].second == 2);
  CHECK(fh[0].first.degree() == 1);
}

TEST_CASE("charpoly of companion-style matrices over GF(2)") {
  Fp F(2);
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    size_t n = 1 + rng.below(6);
    Mat m(F, n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m.at(i, j) = rng.fp(F);
    Poly chi = charpoly(m);
    CHECK(chi.degree() == static_cast<int>(n));
    // Cayley–Hamilton
    Mat ev = eval_at(chi, m);
    CHECK(ev.is_zero());
  }
}
