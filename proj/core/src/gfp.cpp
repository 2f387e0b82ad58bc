#include "qhforge/gfp.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

namespace qhforge::gfp {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(uint32_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p_, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t Fp::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("Fp::inv of zero");
  return pow(a, p_ - 2);
}

Vec vec_add(const Fp& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const Fp& F, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const Fp& F, uint32_t c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(c, a[i]);
  return r;
}

void vec_axpy(const Fp& F, uint32_t c, const Vec& x, Vec& y) {
  if (c == 0) return;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = F.add(y[i], F.mul(c, x[i]));
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

uint32_t dot(const Fp& F, const Vec& a, const Vec& b) {
  uint64_t acc = 0;
  const uint64_t cap = ~0ULL - static_cast<uint64_t>(F.p() - 1) * (F.p() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    acc += static_cast<uint64_t>(a[i]) * b[i];
    if (acc >= cap) acc %= F.p();
  }
  return static_cast<uint32_t>(acc % F.p());
}

Mat::Mat(Fp F, size_t rows, size_t cols, Vec data) : F_(F), rows_(rows), cols_(cols), d_(std::move(data)) {
  if (d_.size() != rows_ * cols_) throw std::invalid_argument("Mat: data size mismatch");
  for (auto& x : d_) x %= F_.p();
}

Mat Mat::identity(Fp F, size_t n) {
  Mat m(F, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(Fp F, const std::vector<Vec>& rows) {
  if (rows.empty()) return Mat(F, 0, 0);
  Mat m(F, rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c] % F.p();
  }
  return m;
}

Vec Mat::row(size_t r) const { return Vec(d_.begin() + r * cols_, d_.begin() + (r + 1) * cols_); }

Vec Mat::col(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: shape mismatch");
  Mat out(F_, rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint32_t a = at(i, k);
      if (!a) continue;
      const uint32_t* src = &o.d_[k * o.cols_];
      uint32_t* dst = &out.d_[i * o.cols_];
      for (size_t j = 0; j < o.cols_; ++j)
        if (src[j]) dst[j] = F_.add(dst[j], F_.mul(a, src[j]));
    }
  }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  Mat out(F_, rows_, cols_);
  for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = F_.add(d_[i], o.d_[i]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  Mat out(F_, rows_, cols_);
  for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = F_.sub(d_[i], o.d_[i]);
  return out;
}

Mat Mat::scaled(uint32_t c) const {
  Mat out(F_, rows_, cols_);
  for (size_t i = 0; i < d_.size(); ++i) out.d_[i] = F_.mul(c, d_[i]);
  return out;
}

Mat Mat::transpose() const {
  Mat out(F_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
  Vec out(rows_, 0);
  for (size_t r = 0; r < rows_; ++r) {
    uint64_t acc = 0;
    const uint32_t* rowp = &d_[r * cols_];
    for (size_t c = 0; c < cols_; ++c) acc += static_cast<uint64_t>(rowp[c]) * v[c];
    out[r] = static_cast<uint32_t>(acc % F_.p());
  }
  return out;
}

bool Mat::is_zero() const { return vec_is_zero(d_); }

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u)) return false;
  return true;
}

bool Mat::is_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<int> colhit(cols_, 0);
  for (size_t r = 0; r < rows_; ++r) {
    int ones = 0;
    for (size_t c = 0; c < cols_; ++c) {
      uint32_t v = at(r, c);
      if (v == 1) {
        ++ones;
        ++colhit[c];
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(colhit.begin(), colhit.end(), [](int k) { return k == 1; });
}

RrefResult rref(const Mat& m) {
  RrefResult res{m, 0, {}};
  Mat& a = res.mat;
  const Fp& F = a.field();
  size_t lead = 0;
  for (size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    size_t piv = lead;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
    uint32_t s = F.inv(a.at(lead, c));
    for (size_t j = c; j < a.cols(); ++j) a.at(lead, j) = F.mul(s, a.at(lead, j));
    for (size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      uint32_t f = a.at(r, c);
      if (!f) continue;
      for (size_t j = c; j < a.cols(); ++j) a.at(r, j) = F.sub(a.at(r, j), F.mul(f, a.at(lead, j)));
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::vector<Vec> nullspace(const Mat& m) {
  const Fp& F = m.field();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t fc = 0; fc < m.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(m.cols(), 0);
    v[fc] = 1;
    for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = F.neg(r.mat.at(i, fc));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  const Fp& F = m.field();
  Mat aug(F, m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r] % F.p();
  }
  RrefResult rr = rref(aug);
  for (size_t i = 0; i < rr.pivots.size(); ++i)
    if (rr.pivots[i] == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(i, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Fp& F = m.field();
  size_t n = m.rows();
  Mat aug(F, n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Mat inv(F, n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv.at(r, c) = rr.mat.at(r, n + c);
  return inv;
}

namespace {

// Orbit path: X commutes with permutation g iff X[g(i)][g(j)] = X[i][j],
// so the commutant is spanned by orbit indicator matrices of the pair action.
std::vector<Mat> commutant_permutation(std::span<const Mat> gens, size_t d) {
  const Fp& F = gens[0].field();
  std::vector<size_t> perm_of(gens.size() * d);
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t j = 0; j < d; ++j) {
      size_t img = 0;
      for (size_t i = 0; i < d; ++i)
        if (gens[g].at(i, j) == 1) img = i;  // g·e_j = e_img
      perm_of[g * d + j] = img;
    }
  std::vector<size_t> parent(d * d);
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t g = 0; g < gens.size(); ++g)
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        size_t a = find(i * d + j);
        size_t b = find(perm_of[g * d + i] * d + perm_of[g * d + j]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::vector<Mat> basis;
  std::vector<long> root_index(d * d, -1);
  for (size_t cell = 0; cell < d * d; ++cell) {
    size_t rt = find(cell);
    if (root_index[rt] < 0) {
      root_index[rt] = static_cast<long>(basis.size());
      basis.emplace_back(F, d, d);
    }
    auto& m = basis[static_cast<size_t>(root_index[rt])];
    m.at(cell / d, cell % d) = 1;
  }
  return basis;
}

}  // namespace

std::vector<Mat> commutant_dense(std::span<const Mat> gens) {
  if (gens.empty()) throw std::invalid_argument("commutant: no generators");
  const Fp& F = gens[0].field();
  size_t d = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("commutant: generators must be square of equal size");
  // Unknowns X_{ij}, one constraint row per (generator, entry (i,j)) of Xg − gX.
  Mat sys(F, gens.size() * d * d, d * d);
  size_t rix = 0;
  for (const auto& g : gens) {
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        for (size_t k = 0; k < d; ++k) {
          if (g.at(k, j)) sys.at(rix, i * d + k) = F.add(sys.at(rix, i * d + k), g.at(k, j));
          if (g.at(i, k)) sys.at(rix, k * d + j) = F.sub(sys.at(rix, k * d + j), g.at(i, k));
        }
        ++rix;
      }
  }
  std::vector<Mat> out;
  for (const Vec& v : nullspace(sys)) out.emplace_back(F, d, d, v);
  return out;
}

std::vector<Mat> commutant(std::span<const Mat> gens) {
  if (gens.empty()) throw std::invalid_argument("commutant: no generators");
  size_t d = gens[0].rows();
  bool all_perm = true;
  for (const auto& g : gens)
    if (!g.is_permutation()) {
      all_perm = false;
      break;
    }
  if (all_perm && d > 0) return commutant_permutation(gens, d);
  return commutant_dense(gens);
}

}  // namespace qhforge::gfp
