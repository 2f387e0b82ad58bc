#ifndef QHFORGE_GFP_HPP
#define QHFORGE_GFP_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhforge::gfp {

/// The prime field GF(p). All arithmetic is exact mod p.
class Fp {
 public:
  Fp() : p_(2) {}
  explicit Fp(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  bool operator==(const Fp& o) const { return p_ == o.p_; }

 private:
  uint32_t p_;
};

bool is_prime(uint32_t n);

using Vec = std::vector<uint32_t>;

Vec vec_add(const Fp& F, const Vec& a, const Vec& b);
Vec vec_sub(const Fp& F, const Vec& a, const Vec& b);
Vec vec_scale(const Fp& F, uint32_t c, const Vec& a);
void vec_axpy(const Fp& F, uint32_t c, const Vec& x, Vec& y);  // y += c*x
bool vec_is_zero(const Vec& a);
uint32_t dot(const Fp& F, const Vec& a, const Vec& b);

/// Dense row-major matrix over GF(p).
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(Fp F, size_t rows, size_t cols) : F_(F), rows_(rows), cols_(cols), d_(rows * cols, 0) {}
  Mat(Fp F, size_t rows, size_t cols, Vec data);

  static Mat identity(Fp F, size_t n);
  static Mat from_rows(Fp F, const std::vector<Vec>& rows);

  const Fp& field() const { return F_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  uint32_t& at(size_t r, size_t c) { return d_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return d_[r * cols_ + c]; }
  const Vec& data() const { return d_; }
  Vec row(size_t r) const;
  Vec col(size_t c) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const = default;
  Mat scaled(uint32_t c) const;
  Mat transpose() const;
  Vec apply(const Vec& v) const;  // m · v

  bool is_zero() const;
  bool is_identity() const;
  bool is_permutation() const;  // 0/1 with a single 1 per row and per column

 private:
  Fp F_;
  size_t rows_, cols_;
  Vec d_;
};

struct RrefResult {
  Mat mat;
  size_t rank = 0;
  std::vector<size_t> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form over GF(p).
RrefResult rref(const Mat& m);

/// Basis of {v : m·v = 0}; size = cols − rank.
std::vector<Vec> nullspace(const Mat& m);

/// Any x with m·x = b, or nullopt. no-solution is a value, not a fault.
std::optional<Vec> solve(const Mat& m, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

/// Basis of {X : X·g = g·X for all generators}, as the nullspace of the
/// stacked commutator constraints. Permutation generators take a fast path
/// (entries of a commuting X are constant on orbits of the pair action);
/// both paths produce the same space.
std::vector<Mat> commutant(std::span<const Mat> gens);
std::vector<Mat> commutant_dense(std::span<const Mat> gens);  // generic path, no fast path

/// Deterministic RNG wrapper; every randomized routine takes one explicitly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint32_t below(uint32_t n) { return static_cast<uint32_t>(eng_() % n); }
  uint32_t fp(const Fp& F) { return below(F.p()); }
  uint32_t fp_nonzero(const Fp& F) { return 1 + below(F.p() - 1); }
  Vec vec(const Fp& F, size_t n) {
    Vec v(n);
    for (auto& x : v) x = fp(F);
    return v;
  }
  /// Derived stream for an independent subcomputation.
  Rng child(uint64_t tag) {
    uint64_t s = eng_() ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
    return Rng(s);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qhforge::gfp

#endif
