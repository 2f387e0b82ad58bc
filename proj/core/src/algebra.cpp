#include "qhforge/algebra.hpp"

#include <algorithm>

namespace qhforge {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) s.push_back({static_cast<uint32_t>(i), v[i]});
  return s;
}

Vec to_dense(const SparseVec& s, size_t n) {
  Vec v(n, 0);
  for (const auto& t : s) v[t.k] = t.c;
  return v;
}

Algebra::Algebra(Fp F, size_t dim, std::vector<std::vector<SparseVec>> mult, Vec unit,
                 std::vector<LabeledIdem> idems, std::optional<std::vector<uint32_t>> grading)
    : F_(F), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)), idems_(std::move(idems)), grading_(std::move(grading)) {
  if (mult_.size() != dim_) throw AlgebraError("Algebra: mult table row count mismatch");
  for (const auto& row : mult_)
    if (row.size() != dim_) throw AlgebraError("Algebra: mult table column count mismatch");
  if (unit_.size() != dim_) throw AlgebraError("Algebra: unit length mismatch");
  if (grading_ && grading_->size() != dim_) throw AlgebraError("Algebra: grading length mismatch");
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec out(dim_, 0);
  for (size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      uint32_t c = F_.mul(x[i], y[j]);
      for (const auto& t : mult_[i][j]) out[t.k] = F_.add(out[t.k], F_.mul(c, t.c));
    }
  }
  return out;
}

Vec Algebra::mul3(const Vec& x, const Vec& y, const Vec& z) const { return mul(mul(x, y), z); }

Mat Algebra::left_mult(const Vec& x) const {
  Mat m(F_, dim_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (size_t j = 0; j < dim_; ++j)
      for (const auto& t : mult_[i][j]) m.at(t.k, j) = F_.add(m.at(t.k, j), F_.mul(x[i], t.c));
  }
  return m;
}

Mat Algebra::right_mult(const Vec& x) const {
  Mat m(F_, dim_, dim_);
  for (size_t j = 0; j < dim_; ++j) {
    if (!x[j]) continue;
    for (size_t i = 0; i < dim_; ++i)
      for (const auto& t : mult_[i][j]) m.at(t.k, i) = F_.add(m.at(t.k, i), F_.mul(x[j], t.c));
  }
  return m;
}

void Algebra::validate() const {
  // unit law
  for (size_t i = 0; i < dim_; ++i) {
    Vec b(dim_, 0);
    b[i] = 1;
    if (mul(unit_, b) != b || mul(b, unit_) != b) throw AlgebraError("Algebra: unit law fails at basis " + std::to_string(i));
  }
  // associativity, full triple loop
  for (size_t i = 0; i < dim_; ++i) {
    for (size_t j = 0; j < dim_; ++j) {
      Vec ij = to_dense(mult_[i][j], dim_);
      for (size_t k = 0; k < dim_; ++k) {
        Vec jk = to_dense(mult_[j][k], dim_);
        Vec left(dim_, 0), right(dim_, 0);
        for (size_t u = 0; u < dim_; ++u) {
          if (ij[u])
            for (const auto& t : mult_[u][k]) left[t.k] = F_.add(left[t.k], F_.mul(ij[u], t.c));
          if (jk[u])
            for (const auto& t : mult_[i][u]) right[t.k] = F_.add(right[t.k], F_.mul(jk[u], t.c));
        }
        if (left != right)
          throw AlgebraError("Algebra: associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
      }
    }
  }
  // idempotents: orthogonal, idempotent, sum to unit
  if (!idems_.empty()) {
    Vec sum(dim_, 0);
    for (size_t a = 0; a < idems_.size(); ++a) {
      for (size_t b = 0; b < idems_.size(); ++b) {
        Vec prod = mul(idems_[a].vec, idems_[b].vec);
        const Vec& expect = (a == b) ? idems_[a].vec : Vec(dim_, 0);
        if (prod != expect) throw AlgebraError("Algebra: idempotent orthogonality fails");
      }
      sum = gfp::vec_add(F_, sum, idems_[a].vec);
    }
    if (sum != unit_) throw AlgebraError("Algebra: idempotents do not sum to unit");
  }
  // grading multiplicativity
  if (grading_) {
    const auto& g = *grading_;
    for (size_t i = 0; i < dim_; ++i)
      for (size_t j = 0; j < dim_; ++j)
        for (const auto& t : mult_[i][j])
          if (g[t.k] != g[i] + g[j]) throw AlgebraError("Algebra: grading violated by product");
  }
}

std::vector<std::string> Algebra::labels() const {
  std::vector<std::string> out;
  for (const auto& e : idems_)
    if (std::find(out.begin(), out.end(), e.label) == out.end()) out.push_back(e.label);
  return out;
}

Vec Algebra::class_idempotent(const std::string& label) const {
  Vec sum(dim_, 0);
  bool found = false;
  for (const auto& e : idems_)
    if (e.label == label) {
      sum = gfp::vec_add(F_, sum, e.vec);
      found = true;
    }
  if (!found) throw AlgebraError("Algebra: no idempotent labeled " + label);
  return sum;
}

Algebra Algebra::opposite() const {
  std::vector<std::vector<SparseVec>> m(dim_, std::vector<SparseVec>(dim_));
  for (size_t i = 0; i < dim_; ++i)
    for (size_t j = 0; j < dim_; ++j) m[i][j] = mult_[j][i];
  return Algebra(F_, dim_, std::move(m), unit_, idems_, grading_);
}

std::vector<Vec> Algebra::center() const {
  // z with z·b_i = b_i·z for all i
  Mat sys(F_, dim_ * dim_, dim_);
  size_t r = 0;
  for (size_t i = 0; i < dim_; ++i) {
    Vec b(dim_, 0);
    b[i] = 1;
    Mat l = left_mult(b), rm = right_mult(b);
    Mat diff = l - rm;
    for (size_t row = 0; row < dim_; ++row) {
      for (size_t c = 0; c < dim_; ++c) sys.at(r, c) = diff.at(row, c);
      ++r;
    }
  }
  return gfp::nullspace(sys);
}

const std::vector<size_t>& Algebra::generating_set() const {
  if (!gens_.empty() || dim_ == 0) return gens_;
  RowSpace span(F_, dim_);
  span.insert(unit_);
  std::vector<Vec> closed = {unit_};
  for (size_t i = 0; i < dim_; ++i) {
    Vec b(dim_, 0);
    b[i] = 1;
    if (span.contains(b)) continue;
    gens_.push_back(i);
    // close span under products with everything so far
    std::vector<Vec> frontier = {b};
    span.insert(b);
    closed.push_back(b);
    while (!frontier.empty()) {
      std::vector<Vec> next;
      for (const auto& f : frontier) {
        for (const auto& c : closed) {
          for (Vec prod : {mul(f, c), mul(c, f)}) {
            if (!span.contains(prod)) {
              span.insert(prod);
              next.push_back(prod);
            }
          }
        }
      }
      for (auto& v : next) closed.push_back(v);
      frontier = std::move(next);
    }
    if (span.full()) break;
  }
  return gens_;
}

namespace {

enum CloseMode { kLeft = 1, kRight = 2 };

// closure of a span under multiplication by the algebra's generating set;
// generators suffice since the generated unital subalgebra is everything
RowSpace close_span(const Algebra& a, std::vector<Vec> seeds, int mode) {
  RowSpace s(a.field(), a.dim());
  std::vector<Vec> frontier;
  for (auto& v : seeds)
    if (s.insert(v)) frontier.push_back(std::move(v));
  const auto& gens = a.generating_set();
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (size_t gi : gens) {
        Vec b(a.dim(), 0);
        b[gi] = 1;
        if (mode & kLeft) {
          Vec w = a.mul(b, v);
          if (s.insert(w)) next.push_back(std::move(w));
        }
        if (mode & kRight) {
          Vec w = a.mul(v, b);
          if (s.insert(w)) next.push_back(std::move(w));
        }
      }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace

RowSpace Algebra::left_ideal(const std::vector<Vec>& gens) const { return close_span(*this, gens, kLeft); }

RowSpace Algebra::right_ideal(const std::vector<Vec>& gens) const { return close_span(*this, gens, kRight); }

RowSpace Algebra::two_sided_ideal(const std::vector<Vec>& gens) const {
  return close_span(*this, gens, kLeft | kRight);
}

bool Algebra::is_ideal(const RowSpace& s) const {
  for (const auto& v : s.basis()) {
    for (size_t gi : generating_set()) {
      Vec b(dim_, 0);
      b[gi] = 1;
      if (!s.contains(mul(b, v)) || !s.contains(mul(v, b))) return false;
    }
  }
  return true;
}

RowSpace Algebra::peirce(const Vec& e, const Vec& f) const {
  RowSpace s(F_, dim_);
  for (size_t i = 0; i < dim_; ++i) {
    Vec b(dim_, 0);
    b[i] = 1;
    s.insert(mul3(e, b, f));
  }
  return s;
}

uint32_t Algebra::degree_of(const Vec& v) const {
  if (!grading_) throw AlgebraError("Algebra: no grading present");
  std::optional<uint32_t> deg;
  for (size_t i = 0; i < dim_; ++i) {
    if (!v[i]) continue;
    if (deg && *deg != (*grading_)[i]) throw AlgebraError("Algebra: inhomogeneous vector");
    deg = (*grading_)[i];
  }
  return deg.value_or(0);
}

SubalgebraResult subalgebra_on(const Algebra& amb, const RowSpace& space, const Vec& unit,
                               const std::vector<LabeledIdem>& idems, std::optional<std::vector<uint32_t>> grading) {
  const Fp& F = amb.field();
  size_t d = space.dim();
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      Vec prod = amb.mul(space.basis()[i], space.basis()[j]);
      mult[i][j] = to_sparse(space.coords(prod));  // throws if not closed
    }
  std::vector<LabeledIdem> sub_idems;
  for (const auto& e : idems) sub_idems.push_back({e.label, space.coords(e.vec)});
  Algebra alg(F, d, std::move(mult), space.coords(unit), std::move(sub_idems), std::move(grading));
  Mat inc(F, amb.dim(), d);
  for (size_t j = 0; j < d; ++j)
    for (size_t r = 0; r < amb.dim(); ++r) inc.at(r, j) = space.basis()[j][r];
  return {std::move(alg), std::move(inc), space};
}

SubalgebraResult corner_algebra(const Algebra& a, const Vec& e) {
  RowSpace space = a.peirce(e, e);
  std::vector<LabeledIdem> kept;
  for (const auto& idem : a.idempotents()) {
    Vec v = a.mul3(e, idem.vec, e);
    if (v == idem.vec) kept.push_back(idem);
  }
  std::optional<std::vector<uint32_t>> grading;
  if (a.grading()) {
    std::vector<uint32_t> g;
    for (const auto& b : space.basis()) g.push_back(a.degree_of(b));
    grading = std::move(g);
  }
  return subalgebra_on(a, space, e, kept, std::move(grading));
}

QuotientResult quotient_algebra(const Algebra& a, const RowSpace& ideal) {
  if (!a.is_ideal(ideal)) throw AlgebraError("quotient_algebra: subspace is not a two-sided ideal");
  const Fp& F = a.field();
  gfp::QuotientMap qm(ideal);
  size_t d = qm.dim();
  std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
  for (size_t i = 0; i < d; ++i) {
    Vec ei(d, 0);
    ei[i] = 1;
    Vec li = qm.lift(ei);
    for (size_t j = 0; j < d; ++j) {
      Vec ej(d, 0);
      ej[j] = 1;
      mult[i][j] = to_sparse(qm.project(a.mul(li, qm.lift(ej))));
    }
  }
  std::vector<LabeledIdem> idems;
  for (const auto& e : a.idempotents()) {
    Vec img = qm.project(e.vec);
    if (!gfp::vec_is_zero(img)) idems.push_back({e.label, img});
  }
  std::optional<std::vector<uint32_t>> grading;
  if (a.grading()) {
    // quotient grading only when the ideal is homogeneous; degree of each
    // complement coordinate
    bool homogeneous = true;
    for (const auto& b : ideal.basis()) {
      try {
        a.degree_of(b);
      } catch (const AlgebraError&) {
        homogeneous = false;
        break;
      }
    }
    if (homogeneous) {
      std::vector<uint32_t> g;
      for (size_t c : qm.complement_coords()) g.push_back((*a.grading())[c]);
      grading = std::move(g);
    }
  }
  Algebra alg(F, d, std::move(mult), qm.project(a.unit()), std::move(idems), std::move(grading));
  Mat proj(F, d, a.dim());
  for (size_t c = 0; c < a.dim(); ++c) {
    Vec b(a.dim(), 0);
    b[c] = 1;
    Vec img = qm.project(b);
    for (size_t r = 0; r < d; ++r) proj.at(r, c) = img[r];
  }
  return {std::move(alg), std::move(proj), std::move(qm)};
}

void AlgebraMap::validate() const {
  if (!is_valid()) throw AlgebraError("AlgebraMap: not multiplicative or not unit-preserving");
}

bool AlgebraMap::is_valid() const {
  if (!source || !target) return false;
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) return false;
  if (apply(source->unit()) != target->unit()) return false;
  for (size_t i = 0; i < source->dim(); ++i) {
    Vec bi(source->dim(), 0);
    bi[i] = 1;
    Vec fi = apply(bi);
    for (size_t j = 0; j < source->dim(); ++j) {
      Vec bj(source->dim(), 0);
      bj[j] = 1;
      Vec lhs = apply(source->mul(bi, bj));
      Vec rhs = (kind == MapKind::Homomorphism) ? target->mul(fi, apply(bj)) : target->mul(apply(bj), fi);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Algebra direct_sum(const std::vector<const Algebra*>& parts) {
  if (parts.empty()) throw AlgebraError("direct_sum: empty");
  const Fp& F = parts[0]->field();
  size_t dim = 0;
  for (const auto* p : parts) dim += p->dim();
  std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
  Vec unit(dim, 0);
  std::vector<LabeledIdem> idems;
  bool graded = std::all_of(parts.begin(), parts.end(), [](const Algebra* p) { return p->grading().has_value(); });
  std::vector<uint32_t> grading;
  size_t off = 0;
  for (const auto* p : parts) {
    for (size_t i = 0; i < p->dim(); ++i)
      for (size_t j = 0; j < p->dim(); ++j) {
        SparseVec sv = p->mult_entry(i, j);
        for (auto& t : sv) t.k += static_cast<uint32_t>(off);
        mult[off + i][off + j] = std::move(sv);
      }
    for (size_t i = 0; i < p->dim(); ++i) unit[off + i] = p->unit()[i];
    for (const auto& e : p->idempotents()) {
      Vec v(dim, 0);
      for (size_t i = 0; i < p->dim(); ++i) v[off + i] = e.vec[i];
      idems.push_back({e.label, std::move(v)});
    }
    if (graded)
      for (size_t i = 0; i < p->dim(); ++i) grading.push_back((*p->grading())[i]);
    off += p->dim();
  }
  return Algebra(F, dim, std::move(mult), std::move(unit), std::move(idems),
                 graded ? std::optional(grading) : std::nullopt);
}

Algebra field_algebra(Fp F, const std::string& label) {
  std::vector<std::vector<SparseVec>> mult(1, std::vector<SparseVec>(1));
  mult[0][0] = {{0, 1}};
  return Algebra(F, 1, std::move(mult), {1}, {{label, {1}}}, std::vector<uint32_t>{0});
}

}  // namespace qhforge
