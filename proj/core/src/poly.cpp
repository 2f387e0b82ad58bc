#include "qhforge/poly.hpp"

#include <algorithm>
#include <map>

namespace qhforge::gfp {

Poly::Poly(Fp f, Vec coeffs) : F(f), c(std::move(coeffs)) {
  for (auto& x : c) x %= F.p();
  trim();
}

void Poly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = a.F.add(r[i], b.c[i]);
  return Poly(a.F, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vec r(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] = a.F.sub(r[i], b.c[i]);
  return Poly(a.F, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.F);
  Vec r(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j]) r[i + j] = a.F.add(r[i + j], a.F.mul(a.c[i], b.c[j]));
  }
  return Poly(a.F, std::move(r));
}

bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("poly divmod by zero");
  const Fp& F = a.F;
  Vec rem = a.c;
  int db = b.degree();
  if (a.degree() < db) return {Poly::zero(F), a};
  Vec q(a.degree() - db + 1, 0);
  uint32_t binv = F.inv(b.lead());
  for (int i = a.degree(); i >= db; --i) {
    uint32_t f = F.mul(rem[static_cast<size_t>(i)], binv);
    if (!f) continue;
    q[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      size_t k = static_cast<size_t>(i - db + j);
      rem[k] = F.sub(rem[k], F.mul(f, b.c[static_cast<size_t>(j)]));
    }
  }
  return {Poly(F, std::move(q)), Poly(F, std::move(rem))};
}

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  uint32_t s = a.F.inv(a.lead());
  Vec r = a.c;
  for (auto& x : r) x = a.F.mul(s, x);
  return Poly(a.F, std::move(r));
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly derivative(const Poly& a) {
  if (a.c.size() <= 1) return Poly::zero(a.F);
  Vec r(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.F.mul(static_cast<uint32_t>(i % a.F.p()), a.c[i]);
  return Poly(a.F, std::move(r));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return divmod(a * b, mod).second; }

Poly powmod(const Poly& base, uint64_t e, const Poly& mod) {
  Poly acc = divmod(Poly::one(base.F), mod).second;
  Poly b = divmod(base, mod).second;
  while (e) {
    if (e & 1) acc = mulmod(acc, b, mod);
    b = mulmod(b, b, mod);
    e >>= 1;
  }
  return acc;
}

uint32_t eval(const Poly& a, uint32_t x) {
  uint32_t acc = 0;
  for (size_t i = a.c.size(); i-- > 0;) acc = a.F.add(a.F.mul(acc, x), a.c[i]);
  return acc;
}

Mat eval_at(const Poly& p, const Mat& m) {
  const Fp& F = m.field();
  size_t n = m.rows();
  Mat acc(F, n, n);
  for (size_t i = p.c.size(); i-- > 0;) {
    acc = acc * m;
    for (size_t d = 0; d < n; ++d) acc.at(d, d) = F.add(acc.at(d, d), p.c[i]);
  }
  return acc;
}

Poly charpoly(const Mat& m) {
  const Fp& F = m.field();
  size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("charpoly: square matrix required");
  if (n == 0) return Poly::one(F);
  Mat h = m;
  // Hessenberg reduction by similarity transforms.
  for (size_t c = 0; c + 2 <= n; ++c) {
    size_t piv = c + 1;
    while (piv < n && h.at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
    }
    uint32_t inv = F.inv(h.at(c + 1, c));
    for (size_t r = c + 2; r < n; ++r) {
      uint32_t f = F.mul(h.at(r, c), inv);
      if (!f) continue;
      for (size_t j = 0; j < n; ++j) h.at(r, j) = F.sub(h.at(r, j), F.mul(f, h.at(c + 1, j)));
      for (size_t i = 0; i < n; ++i) h.at(i, c + 1) = F.add(h.at(i, c + 1), F.mul(f, h.at(i, r)));
    }
  }
  // charpoly recurrence on the Hessenberg form
  std::vector<Poly> p(n + 1, Poly::one(F));
  for (size_t k = 1; k <= n; ++k) {
    // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_{i<k-1} h[i][k-1] (prod subdiag) p_i
    Poly xm(F, {F.neg(h.at(k - 1, k - 1)), 1});
    p[k] = xm * p[k - 1];
    uint32_t run = 1;
    for (size_t i = k - 1; i-- > 0;) {
      run = F.mul(run, h.at(i + 1, i));
      if (run == 0) break;
      uint32_t coeff = F.mul(h.at(i, k - 1), run);
      if (coeff) p[k] = p[k] - Poly(F, {coeff}) * p[i];
    }
  }
  return p[n];
}

namespace {

// g(x^p) has a p-th root with coefficients c[p*i] over the prime field.
Poly pth_root(const Poly& f) {
  const uint32_t p = f.F.p();
  Vec r(f.c.size() / p + 1, 0);
  for (size_t i = 0; i * p < f.c.size(); ++i) r[i] = f.c[i * p];
  return Poly(f.F, std::move(r));
}

void squarefree_decompose(const Poly& f, size_t mult, std::vector<std::pair<Poly, size_t>>& out, Rng& rng);

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const Poly& f, size_t d, std::vector<Poly>& out, Rng& rng) {
  if (static_cast<size_t>(f.degree()) == d) {
    out.push_back(monic(f));
    return;
  }
  const Fp& F = f.F;
  const uint32_t p = F.p();
  while (true) {
    Vec rc(static_cast<size_t>(f.degree()), 0);
    for (auto& x : rc) x = rng.fp(F);
    Poly r(F, std::move(rc));
    if (r.is_zero()) continue;
    Poly g;
    if (p == 2) {
      // trace map: r + r^2 + r^4 + ... + r^(2^(d-1))
      Poly t = divmod(r, f).second;
      Poly acc = t;
      for (size_t i = 1; i < d; ++i) {
        t = mulmod(t, t, f);
        acc = acc + t;
      }
      g = gcd(acc, f);
    } else {
      uint64_t e = 1;
      for (size_t i = 0; i < d; ++i) e *= p;
      Poly po = powmod(r, (e - 1) / 2, f);
      g = gcd(po - Poly::one(F), f);
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, out, rng);
      edf(divmod(f, g).first, d, out, rng);
      return;
    }
  }
}

// distinct-degree then equal-degree factorization of a squarefree monic poly
void ddf(const Poly& f0, std::vector<Poly>& out, Rng& rng) {
  const Fp& F = f0.F;
  Poly f = monic(f0);
  Poly h = divmod(Poly::x(F), f).second;  // x^(p^d) mod f, iterated
  size_t d = 0;
  while (f.degree() > 0) {
    ++d;
    if (static_cast<size_t>(f.degree()) < 2 * d) {
      out.push_back(monic(f));
      break;
    }
    h = powmod(h, F.p(), f);
    Poly g = gcd(h - Poly::x(F), f);
    if (g.degree() > 0) {
      edf(g, d, out, rng);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
  }
}

void squarefree_decompose(const Poly& f, size_t mult, std::vector<std::pair<Poly, size_t>>& out, Rng& rng) {
  const Fp& F = f.F;
  if (f.degree() <= 0) return;
  Poly df = derivative(f);
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), mult * F.p(), out, rng);
    return;
  }
  Poly g = gcd(f, df);
  Poly sqf = divmod(f, g).first;  // squarefree part
  std::vector<Poly> irr;
  ddf(sqf, irr, rng);
  Poly rest = f;
  for (const Poly& q : irr) {
    size_t m = 0;
    while (true) {
      auto [quo, rem] = divmod(rest, q);
      if (!rem.is_zero()) break;
      rest = quo;
      ++m;
    }
    out.emplace_back(q, m * mult);
  }
  if (rest.degree() > 0) squarefree_decompose(rest, mult, out, rng);
}

}  // namespace

std::vector<std::pair<Poly, size_t>> factor(const Poly& f, Rng& rng) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  std::vector<std::pair<Poly, size_t>> out;
  squarefree_decompose(monic(f), 1, out, rng);
  // merge duplicates and order deterministically
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  std::vector<std::pair<Poly, size_t>> merged;
  for (auto& pm : out) {
    if (!merged.empty() && merged.back().first == pm.first)
      merged.back().second += pm.second;
    else
      merged.push_back(pm);
  }
  return merged;
}

}  // namespace qhforge::gfp
