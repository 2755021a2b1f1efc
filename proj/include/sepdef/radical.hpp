#pragma once
// Jacobson radical over a finite field by the characteristic-p trace chain,
// and the sampling-plus-exact separability certificate over F_q(t).
//
// Chain: A_0 = { x : tr(L_{xb}) = 0 for all basis b }, then for i = 1, 2, ...
//   A_i = { x in A_{i-1} : c_{p^i}(L_{xa}) = 0 for all a in A_{i-1} },
// where c_j is the coefficient of lambda^{n-j} in char(L).  Every stage
// contains the radical (x nilpotent-ideal-side makes L_{xa} nilpotent, which
// kills every coefficient), and the chain equals rad(A) once p^i > dim A.
// The returned basis is self-verified: two-sided ideal, nilpotent, and the
// quotient's own chain must come back zero.
//
// Cost note: on A_{i-1} the map x -> c_{p^i}(L_x) is additive (trace cross
// terms vanish there) and p^i-homogeneous, so for w = sum_k mu_k beta_k
// inside A_{i-1} we get c_{p^i}(L_w) = sum_k mu_k^{p^i} c_{p^i}(L_{beta_k}).
// One characteristic coefficient per basis vector assembles the whole stage
// system; without this identity the stage would need r^2 of them.

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sepdef/algebra.hpp"
#include "sepdef/poly.hpp"

namespace sepdef {

struct RadicalResult {
  std::vector<std::vector<FFElem>> basis;
  size_t nilpotency_exponent = 1;  // least e with rad^e = 0; 1 when rad = 0
};

namespace raddetail {

using FElem = std::vector<FFElem>;

// trace of left multiplication by each basis element: tr L_{b_i}
inline std::vector<FFElem> basis_traces(const StructAlgebra<FFDom>& A) {
  std::vector<FFElem> T(A.n, A.dom.zero());
  for (size_t i = 0; i < A.n; ++i)
    for (size_t j = 0; j < A.n; ++j)
      for (auto& [idx, c] : A.row(i, j).e)
        if (idx == j) T[i] = A.dom.add(T[i], c);
  return T;
}

// second characteristic coefficient (sum of principal 2x2 minors), O(n^2)
inline FFElem c2_of(const Mat<FFDom>& M) {
  const FFDom& d = M.dom;
  size_t n = M.rows;
  FFElem e2 = d.zero(), pre = d.zero();  // e_2 of the diagonal, prefix-summed
  for (size_t i = 0; i < n; ++i) {
    e2 = d.add(e2, d.mul(M.at(i, i), pre));
    pre = d.add(pre, M.at(i, i));
  }
  FFElem off = d.zero();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (d.is_zero(M.at(i, j)) || d.is_zero(M.at(j, i))) continue;
      off = d.add(off, d.mul(M.at(i, j), M.at(j, i)));
    }
  return d.sub(e2, off);
}

// characteristic polynomial via Hessenberg reduction; c[j] multiplies
// lambda^j, c[n] = 1
inline std::vector<FFElem> charpoly(Mat<FFDom> M) {
  const FFDom& d = M.dom;
  size_t n = M.rows;
  for (size_t col = 0; col + 2 <= n; ++col) {
    size_t piv = 0;
    bool found = false;
    for (size_t r = col + 1; r < n; ++r)
      if (!d.is_zero(M.at(r, col))) {
        piv = r;
        found = true;
        break;
      }
    if (!found) continue;
    if (piv != col + 1) {
      for (size_t k = 0; k < n; ++k) std::swap(M.at(piv, k), M.at(col + 1, k));
      for (size_t k = 0; k < n; ++k) std::swap(M.at(k, piv), M.at(k, col + 1));
    }
    FFElem inv = d.inv(M.at(col + 1, col));
    for (size_t r = col + 2; r < n; ++r) {
      if (d.is_zero(M.at(r, col))) continue;
      FFElem f = d.mul(M.at(r, col), inv);
      for (size_t k = 0; k < n; ++k)
        M.at(r, k) = d.sub(M.at(r, k), d.mul(f, M.at(col + 1, k)));
      for (size_t k = 0; k < n; ++k)
        M.at(k, col + 1) = d.add(M.at(k, col + 1), d.mul(f, M.at(k, r)));
    }
  }
  // leading-minor recurrence on the Hessenberg form:
  // p_k = (lambda - M_{k-1,k-1}) p_{k-1}
  //       - sum_i M_{i-1,k-1} (prod of subdiagonal below row i) p_{i-1}
  std::vector<std::vector<FFElem>> p(n + 1);
  p[0] = {d.one()};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<FFElem> cur(k + 1, d.zero());
    for (size_t j = 0; j < p[k - 1].size(); ++j) {
      cur[j + 1] = d.add(cur[j + 1], p[k - 1][j]);
      cur[j] = d.sub(cur[j], d.mul(M.at(k - 1, k - 1), p[k - 1][j]));
    }
    FFElem prod = d.one();
    for (size_t i = k - 1; i >= 1; --i) {
      prod = d.mul(prod, M.at(i, i - 1));
      if (d.is_zero(prod)) break;
      FFElem f = d.mul(M.at(i - 1, k - 1), prod);
      if (d.is_zero(f)) continue;
      for (size_t j = 0; j < p[i - 1].size(); ++j)
        cur[j] = d.sub(cur[j], d.mul(f, p[i - 1][j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// coefficient of lambda^{n-j} in char(L)
inline FFElem char_coeff(const Mat<FFDom>& L, size_t j) {
  if (j == 2) return c2_of(L);  // dominant case: p = 2, stage 1
  auto c = charpoly(L);
  return c[L.rows - j];
}

// one stage of the chain; prev spans A_{i-1} (for stage 0 pass the whole
// coordinate space).  Returns a canonical basis of A_i.
inline std::vector<FElem> chain_stage(const StructAlgebra<FFDom>& A,
                                      const RowSpace<FFDom>& prev,
                                      size_t stage) {
  const FFDom& d = A.dom;
  size_t n = A.n, r = prev.dim();
  uint64_t p = d.F->p;

  if (stage == 0) {
    auto T = basis_traces(A);
    Mat<FFDom> G(d, n, n);  // row a, column l: tr(L_{b_l b_a})
    for (size_t l = 0; l < n; ++l)
      for (size_t a = 0; a < n; ++a) {
        FFElem s = d.zero();
        for (auto& [idx, c] : A.row(l, a).e) s = d.add(s, d.mul(c, T[idx]));
        G.at(a, l) = s;
      }
    return kernel(G);
  }

  if (r == 0) return {};
  size_t pi = 1;
  for (size_t i = 0; i < stage; ++i) pi *= (size_t)p;

  // pass 1: phi_k = c_{p^i}(L_{beta_k})
  std::vector<FFElem> phi(r);
  for (size_t k = 0; k < r; ++k)
    phi[k] = char_coeff(left_mul_matrix(A, prev.rows[k]), pi);

  // pass 2: gamma_{a,l} = c_{p^i}(L_{beta_l beta_a})
  //                     = sum_k mu_k^{p^i} phi_k  for beta_l beta_a = sum mu_k beta_k
  Mat<FFDom> G(d, r, r);
  size_t spot = 0;
  for (size_t l = 0; l < r; ++l) {
    Mat<FFDom> L = left_mul_matrix(A, prev.rows[l]);
    for (size_t a = 0; a < r; ++a) {
      FElem w = mat_vec(L, prev.rows[a]);
      FFElem g = d.zero();
      std::vector<FFElem> mu(r);
      for (size_t k = 0; k < r; ++k) {
        mu[k] = w[prev.pivots[k]];
        if (d.is_zero(mu[k]) || d.is_zero(phi[k])) continue;
        FFElem mup = mu[k];
        for (size_t f = 0; f < stage; ++f) mup = d.F->frobenius(mup);
        g = d.add(g, d.mul(mup, phi[k]));
      }
      G.at(a, l) = g;
      // the stage spaces are two-sided ideals, so w must lie in span(prev);
      // spot-check the expansion rather than paying O(rn) on every product
      if (spot++ % 16 == 0) {
        FElem res = w;
        for (size_t k = 0; k < r; ++k)
          for (size_t c = 0; c < n; ++c)
            res[c] = d.sub(res[c], d.mul(mu[k], prev.rows[k][c]));
        for (size_t c = 0; c < n; ++c)
          if (!d.is_zero(res[c]))
            throw std::logic_error("radical chain: stage product left the stage space");
      }
    }
  }

  // the system is linear in eta_l = xi_l^{p^i}; pull kernel vectors back
  // through the Frobenius
  auto ker = kernel(G);
  std::vector<FElem> out;
  RowSpace<FFDom> rs(d, n);
  for (auto& eta : ker) {
    FElem x(n, d.zero());
    for (size_t l = 0; l < r; ++l) {
      if (d.is_zero(eta[l])) continue;
      FFElem xi = d.F->frobenius_inv(eta[l], (int)stage);
      for (size_t c = 0; c < n; ++c)
        x[c] = d.add(x[c], d.mul(xi, prev.rows[l][c]));
    }
    rs.insert(x);
  }
  return rs.rows;
}

inline Mat<FFDom> right_mul_matrix(const StructAlgebra<FFDom>& A, const FElem& v) {
  Mat<FFDom> M(A.dom, A.n, A.n);
  for (size_t j = 0; j < A.n; ++j)
    for (size_t i = 0; i < A.n; ++i) {
      if (A.dom.is_zero(v[i])) continue;
      for (auto& [idx, c] : A.row(j, i).e)
        M.at(idx, j) = A.dom.add(M.at(idx, j), A.dom.mul(v[i], c));
    }
  return M;
}

inline bool is_two_sided_ideal(const StructAlgebra<FFDom>& A,
                               const RowSpace<FFDom>& V) {
  for (auto& v : V.rows) {
    Mat<FFDom> L = left_mul_matrix(A, v);
    Mat<FFDom> R = right_mul_matrix(A, v);
    for (size_t j = 0; j < A.n; ++j) {
      FElem lc(A.n), rc(A.n);
      for (size_t i = 0; i < A.n; ++i) {
        lc[i] = L.at(i, j);
        rc[i] = R.at(i, j);
      }
      if (!V.contains(lc) || !V.contains(rc)) return false;
    }
  }
  return true;
}

// least e with V^e = 0, or 0 if the chain stops shrinking (not nilpotent)
inline size_t nilpotency_exponent_of(const StructAlgebra<FFDom>& A,
                                     const std::vector<FElem>& rad) {
  if (rad.empty()) return 1;
  RowSpace<FFDom> cur(A.dom, A.n);
  for (auto& v : rad) cur.insert(v);
  size_t e = 1;
  while (cur.dim() > 0) {
    RowSpace<FFDom> next(A.dom, A.n);
    for (auto& v : cur.rows) {
      Mat<FFDom> L = left_mul_matrix(A, v);
      for (auto& w : rad) next.insert(mat_vec(L, w));
    }
    if (next.dim() >= cur.dim()) return 0;
    ++e;
    cur = std::move(next);
  }
  return e;
}

// the chain alone, without self-verification; returns a canonical basis
inline std::vector<FElem> radical_chain(const StructAlgebra<FFDom>& A) {
  const FFDom& d = A.dom;
  uint64_t p = d.F->p;
  RowSpace<FFDom> cur(d, A.n);
  auto set_cur = [&](const std::vector<FElem>& rows) {
    cur = RowSpace<FFDom>(d, A.n);
    for (auto& v : rows) cur.insert(v);
  };
  set_cur(chain_stage(A, cur /*unused at stage 0*/, 0));
  // early certification is worthwhile only when the candidate is small;
  // a zero candidate is already exact (the chain always contains rad)
  auto certified = [&]() {
    if (cur.dim() == 0) return true;
    if (cur.dim() > 64) return false;
    return is_two_sided_ideal(A, cur) &&
           nilpotency_exponent_of(A, cur.rows) > 0;
  };
  if (certified()) return cur.rows;
  for (size_t stage = 1, pi = (size_t)p; pi <= A.n; ++stage, pi *= (size_t)p) {
    set_cur(chain_stage(A, cur, stage));
    if (certified()) return cur.rows;
  }
  return cur.rows;
}

}  // namespace raddetail

// quotient A / span(ideal_basis); the span must be a two-sided ideal
inline StructAlgebra<FFDom> quotient_by_ideal(
    const StructAlgebra<FFDom>& A, const std::vector<std::vector<FFElem>>& ideal_basis) {
  const FFDom& d = A.dom;
  RowSpace<FFDom> R(d, A.n);
  for (auto& v : ideal_basis) R.insert(v);
  std::vector<char> is_piv(A.n, 0);
  for (size_t pc : R.pivots) is_piv[pc] = 1;
  std::vector<size_t> comp;
  for (size_t c = 0; c < A.n; ++c)
    if (!is_piv[c]) comp.push_back(c);
  size_t q = comp.size();
  if (q == 0) throw std::invalid_argument("quotient_by_ideal: ideal is the whole algebra");

  auto project = [&](std::vector<FFElem> w) {
    R.reduce(w);
    std::vector<FFElem> out(q);
    for (size_t c = 0; c < q; ++c) out[c] = w[comp[c]];
    return out;
  };

  std::vector<std::string> labels(q);
  for (size_t c = 0; c < q; ++c) labels[c] = A.labels[comp[c]];
  std::vector<RowPtr<FFDom>> rows(q * q);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j) {
      std::vector<FFElem> w(A.n, d.zero());
      for (auto& [idx, c] : A.row(comp[i], comp[j]).e) w[idx] = c;
      rows[i * q + j] = algdetail::row_from_dense(d, project(std::move(w)));
    }
  return make_algebra(d, std::move(labels), std::move(rows), project(A.one),
                      AssocPolicy::Trusted);
}

// radical with self-verification: ideal + nilpotent + semisimple quotient
inline RadicalResult radical_ff(const StructAlgebra<FFDom>& A) {
  auto basis = raddetail::radical_chain(A);
  RowSpace<FFDom> R(A.dom, A.n);
  for (auto& v : basis) R.insert(v);
  if (!basis.empty() && !raddetail::is_two_sided_ideal(A, R))
    throw std::logic_error("radical_ff: candidate is not a two-sided ideal");
  size_t e = raddetail::nilpotency_exponent_of(A, basis);
  if (e == 0) throw std::logic_error("radical_ff: candidate is not nilpotent");
  if (e > A.n) throw std::logic_error("radical_ff: nilpotency exponent out of range");
  if (!basis.empty()) {
    // rad(A / rad A) = 0; when the radical is zero the quotient is A itself
    // and the chain above is already that statement
    auto Q = quotient_by_ideal(A, basis);
    if (!raddetail::radical_chain(Q).empty())
      throw std::logic_error("radical_ff: quotient by the candidate is not semisimple");
  }
  return {std::move(basis), e};
}

inline bool is_semisimple_ff(const StructAlgebra<FFDom>& A) {
  return radical_ff(A).basis.empty();
}

// ---- separability certificate over F_q(t) ----------------------------------

enum class SepVerdict { Separable, NotSeparable, Inconclusive };

inline const char* to_string(SepVerdict v) {
  switch (v) {
    case SepVerdict::Separable: return "separable";
    case SepVerdict::NotSeparable: return "not-separable";
    default: return "inconclusive";
  }
}

struct SepSample {
  unsigned ext_degree;
  FFElem t0;
  size_t radical_dim;
};

struct SepCommCheck {
  std::string poly;  // defining polynomial, as text
  std::string gcd;   // gcd(f, f'), as text
  bool gcd_is_one;
};

struct SeparabilityCertificate {
  std::vector<SepSample> samples;
  std::vector<SepCommCheck> commutative_checks;
  SepVerdict verdict = SepVerdict::Inconclusive;
};

// Samples t0 in F_{q^ext} \ {0} from a seeded generator (sequence fixed up
// front), skipping specialization poles, and decides:
//   separable      all exact gcd checks pass and every sampled radical is 0
//   not-separable  requires a witness: a gcd != 1 together with a radical
//                  obstruction that persists under one resampling
//   inconclusive   anything else
inline SeparabilityCertificate certify_separable(const StructAlgebra<RatDom>& A,
                                                 size_t samples = 3,
                                                 unsigned ext_degree = 12,
                                                 uint64_t seed = 0) {
  if (samples < 1) throw std::invalid_argument("certify_separable: samples must be >= 1");
  if (ext_degree < 1) throw std::invalid_argument("certify_separable: ext_degree must be >= 1");
  const FiniteField* base = A.dom.F;
  const FiniteField* ext = FiniteField::get(base->p, base->m * ext_degree);

  // fixed candidate sequence: the verdict is a pure function of
  // (algebra, samples, ext_degree, seed)
  std::mt19937_64 rng(seed);
  std::vector<FFElem> pool;
  size_t want = samples + 33;  // spares absorb poles and one resampling
  while (pool.size() < want) {
    std::vector<uint64_t> digs((size_t)ext->m);
    for (auto& dd : digs) dd = rng() % ext->p;
    FFElem cand{ext, ext->pack(digs)};
    if (!ext->is_zero(cand)) pool.push_back(cand);
  }

  SeparabilityCertificate cert;
  size_t next = 0;
  auto sample_one = [&]() -> size_t {
    while (next < pool.size()) {
      FFElem t0 = pool[next++];
      try {
        auto S = specialize(A, t0);
        auto rad = radical_ff(S);
        cert.samples.push_back({ext_degree, t0, rad.basis.size()});
        return rad.basis.size();
      } catch (const PoleError&) {
        continue;  // structure constants have a pole here; skip
      }
    }
    throw std::runtime_error(
        "certify_separable: every sampled t0 hit a pole; increase ext_degree");
  };

  bool nonzero_seen = false;
  for (size_t i = 0; i < samples; ++i)
    if (sample_one() > 0) nonzero_seen = true;

  bool exact_fail = false;
  if (A.defining_poly) {
    const Poly<RatDom>& f = *A.defining_poly;
    Poly<RatDom> g = gcd_monic(derivative(f), f);
    bool one = g.deg() == 0;
    cert.commutative_checks.push_back(
        {poly_to_string(f, "x"), poly_to_string(g, "x"), one});
    if (!one) exact_fail = true;
  }

  if (!nonzero_seen) {
    cert.verdict = exact_fail ? SepVerdict::NotSeparable : SepVerdict::Separable;
  } else {
    // a nonzero radical triggers one resampling at a fresh t0
    bool second_nonzero = sample_one() > 0;
    cert.verdict = (second_nonzero && exact_fail) ? SepVerdict::NotSeparable
                                                  : SepVerdict::Inconclusive;
  }
  return cert;
}

}  // namespace sepdef
