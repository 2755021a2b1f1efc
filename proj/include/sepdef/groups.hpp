#pragma once
// Concrete finite groups as multiplication tables, and their group algebras.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sepdef/algebra.hpp"

namespace sepdef {

struct GroupTable {
  size_t order = 0;
  std::vector<uint32_t> t;  // t[g*order + h] = g*h, identity at index 0
  std::vector<std::string> labels;
  std::string name;

  uint32_t mul(size_t g, size_t h) const { return t[g * order + h]; }
};

// identity at 0, closure, unique two-sided inverses, full associativity
inline void validate_group(const GroupTable& G) {
  size_t N = G.order;
  if (N == 0 || G.t.size() != N * N || G.labels.size() != N)
    throw std::invalid_argument("group table shape mismatch");
  for (auto v : G.t)
    if (v >= N) throw std::invalid_argument("group table entry out of range");
  for (size_t g = 0; g < N; ++g)
    if (G.mul(0, g) != g || G.mul(g, 0) != g)
      throw std::invalid_argument("index 0 is not a group identity");
  for (size_t g = 0; g < N; ++g) {
    bool inv = false;
    for (size_t h = 0; h < N; ++h)
      if (G.mul(g, h) == 0 && G.mul(h, g) == 0) inv = true;
    if (!inv) throw std::invalid_argument("group element has no inverse");
  }
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      for (size_t c = 0; c < N; ++c)
        if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
          throw std::invalid_argument("group table is not associative");
}

inline GroupTable cyclic_group(size_t m) {
  if (m == 0) throw std::invalid_argument("cyclic group order must be positive");
  GroupTable G;
  G.order = m;
  G.name = "C" + std::to_string(m);
  G.t.resize(m * m);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) G.t[i * m + j] = (uint32_t)((i + j) % m);
  G.labels.resize(m);
  for (size_t i = 0; i < m; ++i)
    G.labels[i] = i == 0 ? "e" : (i == 1 ? "r" : "r^" + std::to_string(i));
  validate_group(G);
  return G;
}

// C_n x| C_2 with the involution r -> r^a (needs a^2 = 1 mod n);
// element r^i f^j sits at index j*n + i
inline GroupTable semidirect_c2(size_t n, size_t a, const std::string& name) {
  if (n == 0 || (a * a) % n != 1 % n)
    throw std::invalid_argument("semidirect twist must square to 1 mod n");
  size_t N = 2 * n;
  GroupTable G;
  G.order = N;
  G.name = name;
  G.t.resize(N * N);
  auto idx = [&](size_t i, size_t j) { return j * n + i; };
  for (size_t j = 0; j < 2; ++j)
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < 2; ++l)
        for (size_t k = 0; k < n; ++k) {
          size_t kk = j == 0 ? k : (k * a) % n;
          G.t[idx(i, j) * N + idx(k, l)] = (uint32_t)idx((i + kk) % n, (j + l) % 2);
        }
  G.labels.resize(N);
  for (size_t i = 0; i < n; ++i) {
    std::string ri = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    G.labels[idx(i, 0)] = i == 0 ? "e" : ri;
    G.labels[idx(i, 1)] = i == 0 ? "f" : ri + "*f";
  }
  validate_group(G);
  return G;
}

inline GroupTable symmetric3() {
  auto G = semidirect_c2(3, 2, "S3");
  return G;
}

inline GroupTable dihedral4() { return semidirect_c2(4, 3, "D4"); }

// G_s = C_{s^2-1} x| C_2 with the involution r -> r^s
inline GroupTable gs_group(size_t s, bool trivial_twist = false) {
  if (s < 2) throw std::invalid_argument("gs_group needs s >= 2");
  size_t n = s * s - 1;
  return semidirect_c2(n, trivial_twist ? 1 : s % n,
                       "G" + std::to_string(s) + (trivial_twist ? "(untwisted)" : ""));
}

inline GroupTable quaternion8() {
  // elements 1,-1,i,-i,j,-j,k,-k at indices 2u+sign, units ordered 1,i,j,k
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // sign[a][b] = 1 when u_a u_b = -u_{unit[a][b]}: i*i=j*j=k*k=-1, i*j=k,
  // j*k=i, k*i=j and the reversed products pick up the minus sign
  GroupTable G;
  G.order = 8;
  G.name = "Q8";
  G.t.resize(64);
  for (size_t x = 0; x < 8; ++x)
    for (size_t y = 0; y < 8; ++y) {
      size_t ux = x >> 1, nx = x & 1, uy = y >> 1, ny = y & 1;
      size_t uz = (size_t)unit[ux][uy];
      size_t nz = nx ^ ny ^ (size_t)sign[ux][uy];
      G.t[x * 8 + y] = (uint32_t)(2 * uz + nz);
    }
  G.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  validate_group(G);
  return G;
}

// Group algebra FG.  The table rows are single basis vectors, so algebra
// associativity is inherited from group associativity (checked above) and the
// full triple test is skipped.
inline StructAlgebra<FFDom> group_algebra(const FFDom& dom, const GroupTable& G) {
  size_t N = G.order;
  std::vector<RowPtr<FFDom>> rows(N * N);
  for (size_t g = 0; g < N; ++g)
    for (size_t h = 0; h < N; ++h)
      rows[g * N + h] = algdetail::row_single<FFDom>(G.mul(g, h), dom.one());
  std::vector<FFElem> one(N, dom.zero());
  one[0] = dom.one();
  bool pb = N >= 2;
  for (size_t k = 0; pb && k + 1 < N; ++k)
    if (G.mul(k, 1) != k + 1) pb = false;
  return make_algebra(dom, G.labels, std::move(rows), std::move(one),
                      AssocPolicy::Trusted, pb);
}

// Does FG_s match the crossed product F[x]/(x^n - 1) twisted by x -> x^s with
// y^2 = 1, under the correspondence r -> x, f -> y?  Both tables live on the
// same index layout, so this is structure-constant equality.  The twist
// parameter exists so the check can be falsified deliberately.
inline bool iso_check_crossed_vs_group(size_t s, const FFDom& dom,
                                       bool trivial_twist = false) {
  size_t n = s * s - 1;
  auto G = gs_group(s);
  auto FG = group_algebra(dom, G);

  Poly<FFDom> mod = Poly<FFDom>::xpow(dom, n) - Poly<FFDom>::one(dom);
  auto B = quotient_algebra(mod);
  Mat<FFDom> M(dom, n, n);
  size_t a = trivial_twist ? 1 : s % n;
  for (size_t c = 0; c < n; ++c) M.at((a * c) % n, c) = dom.one();
  AlgebraMap<FFDom> eta{M};
  auto c0 = B.basis_elem(0);
  auto c1 = B.zero_elem();
  auto X = crossed_product_c2(B, eta, c0, c1);

  if (FG.n != X.n) return false;
  for (size_t i = 0; i < FG.n; ++i)
    for (size_t j = 0; j < FG.n; ++j)
      if (!algdetail::rows_equal(dom, FG.row(i, j), X.row(i, j))) return false;
  return true;
}

}  // namespace sepdef
