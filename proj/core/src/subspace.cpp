#include "qhforge/subspace.hpp"

#include <algorithm>

namespace qhforge::gfp {

bool RowSpace::insert(Vec v) {
  if (v.size() != n_) throw std::invalid_argument("RowSpace::insert: wrong length");
  v = reduce(std::move(v));
  size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  uint32_t s = F_.inv(v[piv]);
  for (auto& x : v) x = F_.mul(s, x);
  // keep full reduction: clear this pivot from existing rows
  for (auto& row : rows_) {
    uint32_t f = row[piv];
    if (f)
      for (size_t j = 0; j < n_; ++j) row[j] = F_.sub(row[j], F_.mul(f, v[j]));
  }
  size_t pos = static_cast<size_t>(std::lower_bound(pivs_.begin(), pivs_.end(), piv) - pivs_.begin());
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivs_.insert(pivs_.begin() + pos, piv);
  return true;
}

void RowSpace::insert_all(const std::vector<Vec>& vs) {
  for (const auto& v : vs) insert(v);
}

Vec RowSpace::reduce(Vec v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t f = v[pivs_[i]];
    if (f) {
      const Vec& row = rows_[i];
      for (size_t j = pivs_[i]; j < n_; ++j)
        if (row[j]) v[j] = F_.sub(v[j], F_.mul(f, row[j]));
    }
  }
  return v;
}

bool RowSpace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool RowSpace::contains(const RowSpace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Vec RowSpace::coords(const Vec& v) const {
  Vec c(rows_.size(), 0);
  Vec w = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    uint32_t f = w[pivs_[i]];
    c[i] = f;
    if (f) {
      const Vec& row = rows_[i];
      for (size_t j = 0; j < n_; ++j)
        if (row[j]) w[j] = F_.sub(w[j], F_.mul(f, row[j]));
    }
  }
  if (!vec_is_zero(w)) throw std::invalid_argument("RowSpace::coords: vector not in subspace");
  return c;
}

std::vector<Vec> RowSpace::complement() const {
  std::vector<bool> is_piv(n_, false);
  for (size_t p : pivs_) is_piv[p] = true;
  std::vector<Vec> out;
  for (size_t c = 0; c < n_; ++c) {
    if (is_piv[c]) continue;
    Vec v(n_, 0);
    v[c] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

RowSpace RowSpace::span_of(Fp F, size_t n, const std::vector<Vec>& vs) {
  RowSpace s(F, n);
  s.insert_all(vs);
  return s;
}

RowSpace RowSpace::sum(const RowSpace& a, const RowSpace& b) {
  RowSpace s = a;
  for (const auto& r : b.basis()) s.insert(r);
  return s;
}

RowSpace RowSpace::intersect(const RowSpace& a, const RowSpace& b) {
  // Zassenhaus: echelonize rows (u | u) for u in a and (v | 0) for v in b;
  // rows with zero left half carry the intersection on the right.
  const Fp& F = a.field();
  size_t n = a.ambient();
  Mat m(F, a.dim() + b.dim(), 2 * n);
  size_t r = 0;
  for (const auto& u : a.basis()) {
    for (size_t j = 0; j < n; ++j) {
      m.at(r, j) = u[j];
      m.at(r, n + j) = u[j];
    }
    ++r;
  }
  for (const auto& v : b.basis()) {
    for (size_t j = 0; j < n; ++j) m.at(r, j) = v[j];
    ++r;
  }
  RrefResult rr = rref(m);
  RowSpace out(F, n);
  for (size_t i = 0; i < rr.rank; ++i) {
    if (rr.pivots[i] >= n) {
      Vec v(n);
      for (size_t j = 0; j < n; ++j) v[j] = rr.mat.at(i, n + j);
      out.insert(std::move(v));
    }
  }
  return out;
}

SpanSolver::SpanSolver(Fp F, size_t n, const std::vector<Vec>& spanning) : F_(F), n_(n), d_(spanning.size()) {
  // rows (B_i | e_i); echelonize with pivots confined to the first n columns
  for (size_t i = 0; i < d_; ++i) {
    Vec row(n_ + d_, 0);
    for (size_t j = 0; j < n_; ++j) row[j] = spanning[i][j];
    row[n_ + i] = 1;
    for (size_t k = 0; k < rows_.size(); ++k) {
      uint32_t f = row[pivs_[k]];
      if (f)
        for (size_t j = 0; j < n_ + d_; ++j)
          if (rows_[k][j]) row[j] = F_.sub(row[j], F_.mul(f, rows_[k][j]));
    }
    size_t piv = 0;
    while (piv < n_ && row[piv] == 0) ++piv;
    if (piv == n_) throw std::invalid_argument("SpanSolver: spanning set is dependent");
    uint32_t s = F_.inv(row[piv]);
    for (auto& x : row) x = F_.mul(s, x);
    rows_.push_back(std::move(row));
    pivs_.push_back(piv);
  }
}

Vec SpanSolver::coords(const Vec& v) const {
  Vec w(n_ + d_, 0);
  for (size_t j = 0; j < n_; ++j) w[j] = v[j];
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint32_t f = w[pivs_[k]];
    if (f)
      for (size_t j = 0; j < n_ + d_; ++j)
        if (rows_[k][j]) w[j] = F_.sub(w[j], F_.mul(f, rows_[k][j]));
  }
  for (size_t j = 0; j < n_; ++j)
    if (w[j]) throw std::invalid_argument("SpanSolver: vector not in the span");
  Vec c(d_);
  for (size_t i = 0; i < d_; ++i) c[i] = F_.neg(w[n_ + i]);
  return c;
}

bool SpanSolver::contains(const Vec& v) const {
  Vec w(n_ + d_, 0);
  for (size_t j = 0; j < n_; ++j) w[j] = v[j];
  for (size_t k = 0; k < rows_.size(); ++k) {
    uint32_t f = w[pivs_[k]];
    if (f)
      for (size_t j = 0; j < n_ + d_; ++j)
        if (rows_[k][j]) w[j] = F_.sub(w[j], F_.mul(f, rows_[k][j]));
  }
  for (size_t j = 0; j < n_; ++j)
    if (w[j]) return false;
  return true;
}

QuotientMap::QuotientMap(const RowSpace& sub) : sub_(sub) {
  std::vector<bool> is_piv(sub.ambient(), false);
  for (size_t p : sub.pivots()) is_piv[p] = true;
  for (size_t c = 0; c < sub.ambient(); ++c)
    if (!is_piv[c]) comp_.push_back(c);
}

Vec QuotientMap::project(const Vec& v) const {
  Vec w = sub_.reduce(v);
  Vec q(comp_.size());
  for (size_t i = 0; i < comp_.size(); ++i) q[i] = w[comp_[i]];
  return q;
}

Vec QuotientMap::lift(const Vec& q) const {
  if (q.size() != comp_.size()) throw std::invalid_argument("QuotientMap::lift: wrong length");
  Vec v(sub_.ambient(), 0);
  for (size_t i = 0; i < comp_.size(); ++i) v[comp_[i]] = q[i];
  return v;
}

}  // namespace qhforge::gfp
