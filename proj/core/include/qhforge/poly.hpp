#ifndef QHFORGE_POLY_HPP
#define QHFORGE_POLY_HPP

#include "qhforge/gfp.hpp"

namespace qhforge::gfp {

/// Dense polynomial over GF(p); coefficient of x^i at index i, no trailing zeros.
struct Poly {
  Fp F;
  Vec c;

  Poly() = default;
  Poly(Fp f, Vec coeffs);
  static Poly zero(Fp f) { return Poly(f, {}); }
  static Poly one(Fp f) { return Poly(f, {1}); }
  static Poly x(Fp f) { return Poly(f, {0, 1}); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }  // deg 0-poly = -1
  uint32_t lead() const { return c.back(); }
  void trim();
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
bool operator==(const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& a);
Poly powmod(const Poly& base, uint64_t e, const Poly& mod);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
uint32_t eval(const Poly& a, uint32_t x);

/// p(M) for a square matrix M (Horner).
Mat eval_at(const Poly& p, const Mat& m);

/// Characteristic polynomial via Hessenberg reduction; monic, degree n.
Poly charpoly(const Mat& m);

/// Full factorization into monic irreducibles with multiplicities
/// (squarefree split, distinct-degree, Cantor–Zassenhaus equal-degree).
std::vector<std::pair<Poly, size_t>> factor(const Poly& f, Rng& rng);

}  // namespace qhforge::gfp

#endif
