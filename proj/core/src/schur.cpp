#include "qhforge/schur.hpp"

#include <algorithm>
#include <sstream>

namespace qhforge {

size_t schur_dimension(uint32_t r) {
  return static_cast<size_t>(r + 1) * (r + 2) * (r + 3) / 6;
}

OrbitData OrbitData::build(uint32_t r) {
  OrbitData d;
  d.r = r;
  for (uint32_t a = 0; a <= r; ++a)
    for (uint32_t b = 0; a + b <= r; ++b)
      for (uint32_t c = 0; a + b + c <= r; ++c) d.signatures.push_back({a, b, c, r - a - b - c});
  return d;
}

size_t OrbitData::orbit_index(const std::array<uint32_t, 4>& sig) const {
  auto it = std::lower_bound(signatures.begin(), signatures.end(), sig);
  if (it == signatures.end() || *it != sig) throw AlgebraError("OrbitData: bad signature");
  return static_cast<size_t>(it - signatures.begin());
}

std::array<uint32_t, 4> OrbitData::signature_of_pair(size_t rw, size_t cw) const {
  std::array<uint32_t, 4> sig{0, 0, 0, 0};
  for (uint32_t pos = 0; pos < r; ++pos) {
    uint32_t hi = (rw >> pos) & 1, lo = (cw >> pos) & 1;
    ++sig[2 * hi + lo];
  }
  return sig;
}

std::pair<size_t, size_t> OrbitData::representative(size_t orbit) const {
  const auto& s = signatures[orbit];
  // positions: [0,c00) type (0,0); then c01 of (0,1); c10 of (1,0); c11 of (1,1)
  size_t rw = 0, cw = 0, pos = s[0];
  for (uint32_t i = 0; i < s[1]; ++i, ++pos) cw |= size_t(1) << pos;
  for (uint32_t i = 0; i < s[2]; ++i, ++pos) rw |= size_t(1) << pos;
  for (uint32_t i = 0; i < s[3]; ++i, ++pos) {
    rw |= size_t(1) << pos;
    cw |= size_t(1) << pos;
  }
  return {rw, cw};
}

WeightPoset SchurAlgebra::dominance_poset() const {
  std::vector<std::string> labels;
  for (uint32_t w : weights) labels.push_back(std::to_string(w));
  return WeightPoset::total_descending(labels);
}

SchurAlgebra build_schur(uint32_t p, uint32_t r, Rng& rng) {
  if (r > 12) throw ResourceError("build_schur: r = " + std::to_string(r) + " exceeds the 2^r tensor-space budget (r <= 12)");
  Fp F(p);
  SchurAlgebra s;
  s.p = p;
  s.r = r;
  s.orbits = OrbitData::build(r);
  const size_t dim = s.orbits.dim();
  const size_t d = size_t(1) << r;

  // products of orbit matrices, read off at one representative entry per
  // target orbit: (E_O E_O')_(i0,k0) = #{ j : (i0,j) ∈ O, (j,k0) ∈ O' }
  std::vector<std::vector<std::map<uint32_t, uint32_t>>> counts(dim, std::vector<std::map<uint32_t, uint32_t>>(dim));
  for (size_t tgt = 0; tgt < dim; ++tgt) {
    auto [i0, k0] = s.orbits.representative(tgt);
    for (size_t j = 0; j < d; ++j) {
      size_t o1 = s.orbits.orbit_index(s.orbits.signature_of_pair(i0, j));
      size_t o2 = s.orbits.orbit_index(s.orbits.signature_of_pair(j, k0));
      ++counts[o1][o2][static_cast<uint32_t>(tgt)];
    }
  }
  std::vector<std::vector<SparseVec>> mult(dim, std::vector<SparseVec>(dim));
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      SparseVec sv;
      for (const auto& [k, c] : counts[i][j]) {
        uint32_t cm = c % p;
        if (cm) sv.push_back({k, cm});
      }
      mult[i][j] = std::move(sv);
    }

  Vec unit(dim, 0);
  for (size_t o = 0; o < dim; ++o) {
    const auto& sig = s.orbits.signatures[o];
    if (sig[1] == 0 && sig[2] == 0) unit[o] = 1;  // diagonal orbit
  }

  // dominant weights, descending; ξ_w sums the two mirror weight projectors
  for (uint32_t w = r;; w -= 2) {
    s.weights.push_back(w);
    if (w < 2) break;
  }
  Algebra bare(F, dim, mult, unit, {});
  bare.validate();

  for (uint32_t w : s.weights) {
    Vec v(dim, 0);
    uint32_t m1 = (r - w) / 2;  // popcounts m1 and r−m1 carry weight ±w
    v[s.orbits.orbit_index({r - m1, 0, 0, m1})] = 1;
    v[s.orbits.orbit_index({m1, 0, 0, r - m1})] = 1;
    s.xi[w] = v;
  }

  // transpose: signature (c00,c01,c10,c11) ↦ (c00,c10,c01,c11)
  s.transpose_matrix = Mat(F, dim, dim);
  for (size_t o = 0; o < dim; ++o) {
    auto sig = s.orbits.signatures[o];
    std::swap(sig[1], sig[2]);
    s.transpose_matrix.at(s.orbits.orbit_index(sig), o) = 1;
  }

  // primitive idempotents, lifted inside each ξ corner, labeled by the
  // highest weight of the head of S·e
  RowSpace jac = radical(bare);
  std::vector<LabeledIdem> prims;
  IdempotentData collected;
  size_t corner_tag = 0;
  for (uint32_t w : s.weights) {
    SubalgebraResult corner = corner_algebra(bare, s.xi.at(w));
    if (corner.alg.dim() == 0) continue;
    Rng crng = rng.child(1000 + corner_tag++);
    IdempotentData cdata = lift_idempotents(corner.alg, crng);
    for (const auto& cp : cdata.prims) {
      Vec in_s = corner.inclusion.apply(cp.vec);
      // highest weight with ξ_w'·head(S·e) ≠ 0
      RowSpace pspace = bare.left_ideal({in_s});
      RowSpace jp(F, dim);
      for (const auto& jv : jac.basis())
        for (const auto& pv : pspace.basis()) jp.insert(bare.mul(jv, pv));
      gfp::QuotientMap head(jp);
      uint32_t label_weight = 0;
      bool found = false;
      for (uint32_t w2 : s.weights) {
        bool nonzero = false;
        for (const auto& pv : pspace.basis()) {
          if (!gfp::vec_is_zero(head.project(bare.mul(s.xi.at(w2), pv)))) {
            nonzero = true;
            break;
          }
        }
        if (nonzero) {
          label_weight = w2;
          found = true;
          break;  // weights descending: first hit is the highest
        }
      }
      if (!found) throw AlgebraError("build_schur: could not classify a primitive idempotent");
      prims.push_back({std::to_string(label_weight), in_s});
    }
  }
  // order primitives by descending weight, stable within
  std::stable_sort(prims.begin(), prims.end(), [](const LabeledIdem& a, const LabeledIdem& b) {
    return std::stoul(a.label) > std::stoul(b.label);
  });

  s.alg = std::make_shared<Algebra>(F, dim, std::move(mult), unit, std::move(prims));
  s.alg->validate();
  return s;
}

std::string SelfdualCase::describe() const {
  std::ostringstream os;
  switch (kind) {
    case SelfdualKind::MinusTwo:
      os << "r = " << a << "*p^" << k << " - 2";
      break;
    case SelfdualKind::MinusThree:
      os << "r = " << a << "*p^" << k << " - 3";
      break;
    case SelfdualKind::OtherSelfdual:
      os << "Ringel self-dual (r < p^2 or r = a*p^k - 1) but outside the -2/-3 harness";
      break;
    case SelfdualKind::No:
      os << "not Ringel self-dual";
      break;
  }
  return os.str();
}

SelfdualCase ringel_selfdual_case(uint32_t p, uint32_t r) {
  SelfdualCase out;
  std::vector<SelfdualCase> hits;
  for (uint32_t shift : {2u, 3u}) {
    uint64_t target = r + shift;
    uint64_t pk = p;
    for (uint32_t k = 1; pk <= target; ++k, pk *= p) {
      if (target % pk == 0) {
        uint64_t a = target / pk;
        if (a >= 2 && a <= p) {
          SelfdualCase c;
          c.kind = (shift == 2) ? SelfdualKind::MinusTwo : SelfdualKind::MinusThree;
          c.a = static_cast<uint32_t>(a);
          c.k = k;
          c.r_even = (r % 2 == 0);
          hits.push_back(c);
        }
      }
    }
  }
  if (!hits.empty()) {
    if (hits.size() > 1) throw AlgebraError("ringel_selfdual_case: decomposition not unique");
    return hits[0];
  }
  // r < p² or r = a·p^k − 1
  bool other = (r < p * p);
  uint64_t target = r + 1;
  uint64_t pk = p;
  for (uint32_t k = 1; pk <= target && !other; ++k, pk *= p) {
    if (target % pk == 0) {
      uint64_t a = target / pk;
      if (a >= 2 && a <= p) other = true;
    }
  }
  if (other) {
    out.kind = SelfdualKind::OtherSelfdual;
    return out;
  }
  return out;
}

}  // namespace qhforge
