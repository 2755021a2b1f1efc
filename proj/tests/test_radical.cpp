#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "sepdef/groups.hpp"
#include "sepdef/radical.hpp"

using namespace sepdef;

namespace {

const FiniteField* F2 = FiniteField::get(2);
using FElem = std::vector<FFElem>;

// x^e by square-and-multiply in the algebra
FElem elem_pow(const StructAlgebra<FFDom>& A, FElem x, uint64_t e) {
  FElem acc = A.one;
  while (e) {
    if (e & 1) acc = A.mul(acc, x);
    x = A.mul(x, x);
    e >>= 1;
  }
  return acc;
}

// block-diagonal product algebra, validated in full (test sizes are tiny)
StructAlgebra<FFDom> direct_sum(const StructAlgebra<FFDom>& A,
                                const StructAlgebra<FFDom>& B) {
  const FFDom& d = A.dom;
  size_t n = A.n + B.n;
  std::vector<RowPtr<FFDom>> rows(n * n);
  auto zero = std::make_shared<SpRow<FFDom>>();
  for (auto& r : rows) r = zero;
  for (size_t i = 0; i < A.n; ++i)
    for (size_t j = 0; j < A.n; ++j) rows[i * n + j] = A.rows_[i * A.n + j];
  for (size_t i = 0; i < B.n; ++i)
    for (size_t j = 0; j < B.n; ++j) {
      auto r = std::make_shared<SpRow<FFDom>>();
      for (auto& [idx, c] : B.row(i, j).e) r->e.emplace_back((uint32_t)(A.n + idx), c);
      rows[(A.n + i) * n + (A.n + j)] = std::move(r);
    }
  std::vector<std::string> labels;
  for (auto& l : A.labels) labels.push_back("a." + l);
  for (auto& l : B.labels) labels.push_back("b." + l);
  FElem one(n, d.zero());
  for (size_t i = 0; i < A.n; ++i) one[i] = A.one[i];
  for (size_t i = 0; i < B.n; ++i) one[A.n + i] = B.one[i];
  return make_algebra(d, std::move(labels), std::move(rows), std::move(one),
                      AssocPolicy::Full);
}

// commutative-case oracle: rad = ker(a -> a^{q^dim}), and that map is linear
// over F_q because q^dim fixes the scalars
RowSpace<FFDom> frobenius_kernel_oracle(const StructAlgebra<FFDom>& A) {
  REQUIRE(A.commutative);
  const FFDom& d = A.dom;
  Mat<FFDom> M(d, A.n, A.n);
  for (size_t j = 0; j < A.n; ++j) {
    FElem z = A.basis_elem(j);
    for (size_t it = 0; it < A.n; ++it) z = elem_pow(A, z, d.F->q);
    for (size_t i = 0; i < A.n; ++i) M.at(i, j) = z[i];
  }
  RowSpace<FFDom> rs(d, A.n);
  for (auto& v : kernel(M)) rs.insert(v);
  return rs;
}

// exhaustive oracle for small algebras: rad = { x : xa is nilpotent for all
// a }, since such x generate a nil right ideal
RowSpace<FFDom> brute_nil_radical(const StructAlgebra<FFDom>& A) {
  const FFDom& d = A.dom;
  uint64_t q = d.F->q, total = 1;
  for (size_t i = 0; i < A.n; ++i) {
    total *= q;
    REQUIRE(total <= 4096);  // oracle is for tiny instances only
  }
  auto unrank = [&](uint64_t r) {
    FElem v(A.n, d.zero());
    for (size_t i = 0; i < A.n; ++i) {
      v[i] = FFElem{d.F, d.F->pack(d.F->digits(r % q))};
      r /= q;
    }
    return v;
  };
  RowSpace<FFDom> rs(d, A.n);
  size_t members = 0;
  for (uint64_t rx = 0; rx < total; ++rx) {
    FElem x = unrank(rx);
    bool in = true;
    for (uint64_t ra = 0; ra < total && in; ++ra)
      in = A.is_zero_elem(elem_pow(A, A.mul(x, unrank(ra)), A.n));
    if (in) {
      ++members;
      rs.insert(x);
    }
  }
  // the member set must be the whole subspace it spans
  uint64_t expect = 1;
  for (size_t i = 0; i < rs.dim(); ++i) expect *= q;
  REQUIRE(members == expect);
  return rs;
}

bool same_space(const RowSpace<FFDom>& U, const std::vector<FElem>& vs) {
  RowSpace<FFDom> V(U.dom, U.cols);
  for (auto& v : vs) V.insert(v);
  if (U.dim() != V.dim()) return false;
  for (auto& r : U.rows)
    if (!V.contains(r)) return false;
  return true;
}

// nilpotency exponent recomputed from scratch with element products
size_t brute_exponent(const StructAlgebra<FFDom>& A, const std::vector<FElem>& rad) {
  if (rad.empty()) return 1;
  std::vector<FElem> cur = rad;
  size_t e = 1;
  while (true) {
    RowSpace<FFDom> next(A.dom, A.n);
    for (auto& u : cur)
      for (auto& v : rad) next.insert(A.mul(u, v));
    ++e;
    if (next.dim() == 0) return e;
    REQUIRE(e <= A.n);
    cur = next.rows;
  }
}

Poly<FFDom> brute_charpoly(const Mat<FFDom>& M) {
  // determinant of lambda*I - M by minor expansion over F_q[lambda]
  const FFDom& d = M.dom;
  size_t n = M.rows;
  std::vector<std::vector<Poly<FFDom>>> P(n, std::vector<Poly<FFDom>>(n, Poly<FFDom>::zero(d)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Poly<FFDom> e = Poly<FFDom>::constant(d, d.neg(M.at(i, j)));
      if (i == j) e = e + Poly<FFDom>::x(d);
      P[i][j] = e;
    }
  std::function<Poly<FFDom>(std::vector<size_t>, size_t)> det =
      [&](std::vector<size_t> cols, size_t row) -> Poly<FFDom> {
    if (cols.empty()) return Poly<FFDom>::one(d);
    Poly<FFDom> acc = Poly<FFDom>::zero(d);
    for (size_t k = 0; k < cols.size(); ++k) {
      std::vector<size_t> rest;
      for (size_t l = 0; l < cols.size(); ++l)
        if (l != k) rest.push_back(cols[l]);
      auto term = P[row][cols[k]] * det(rest, row + 1);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  std::vector<size_t> cols(n);
  for (size_t i = 0; i < n; ++i) cols[i] = i;
  return det(cols, 0);
}

StructAlgebra<FFDom> random_commutative(std::mt19937_64& rng, const FFDom& d) {
  // a product of quotient rings F_q[x]/(f) with random monic f, dim <= 8
  size_t blocks = 1 + rng() % 3, used = 0;
  StructAlgebra<FFDom> A;
  bool first = true;
  for (size_t b = 0; b < blocks; ++b) {
    size_t deg = 1 + rng() % 4;
    if (used + deg > 8) break;
    used += deg;
    Poly<FFDom> f = Poly<FFDom>::xpow(d, deg);
    for (size_t i = 0; i < deg; ++i) {
      auto digs = d.F->digits(rng() % d.F->q);
      f.c[i] = FFElem{d.F, d.F->pack(digs)};
    }
    f.trim();
    auto Q = quotient_algebra(f);
    A = first ? Q : direct_sum(A, Q);
    first = false;
  }
  return A;
}

}  // namespace

TEST_CASE("characteristic polynomial: hessenberg matches minor expansion") {
  std::mt19937_64 rng(2024);
  for (const FiniteField* F : {FiniteField::get(2), FiniteField::get(2, 2),
                               FiniteField::get(3), FiniteField::get(5)}) {
    FFDom d{F};
    for (size_t n = 1; n <= 5; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        Mat<FFDom> M(d, n, n);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            M.at(i, j) = FFElem{F, F->pack(F->digits(rng() % F->q))};
        auto got = raddetail::charpoly(M);
        auto want = brute_charpoly(M);
        REQUIRE((int)got.size() == (int)n + 1);
        for (size_t k = 0; k <= n; ++k)
          CHECK(got[k] == want.coeff((int)k));
        if (n >= 2) CHECK(raddetail::c2_of(M) == want.coeff((int)n - 2));
      }
    }
  }

  // companion matrix of x^3 + x + 1 over F_2 reproduces its polynomial
  FFDom d2{F2};
  Mat<FFDom> C(d2, 3, 3);
  C.at(1, 0) = d2.one();
  C.at(2, 1) = d2.one();
  C.at(0, 2) = d2.one();  // -c_0
  C.at(1, 2) = d2.one();  // -c_1
  auto cp = raddetail::charpoly(C);
  CHECK(cp[0] == d2.one());
  CHECK(cp[1] == d2.one());
  CHECK(d2.is_zero(cp[2]));
  CHECK(cp[3] == d2.one());
}

TEST_CASE("radical of group algebras: maschke in both directions") {
  std::vector<GroupTable> groups;
  for (size_t n = 2; n <= 8; ++n) groups.push_back(cyclic_group(n));
  groups.push_back(symmetric3());
  groups.push_back(dihedral4());
  groups.push_back(quaternion8());
  groups.push_back(gs_group(2));
  groups.push_back(gs_group(3));

  for (uint64_t p : {2ull, 3ull, 5ull}) {
    FFDom d{FiniteField::get(p)};
    for (auto& G : groups) {
      auto A = group_algebra(d, G);
      bool ss = is_semisimple_ff(A);
      CHECK(ss == (G.order % p != 0));
    }
  }
}

TEST_CASE("radical: pinned dimensions and generators") {
  FFDom d2{F2};
  FFDom d3{FiniteField::get(3)};
  FFDom d5{FiniteField::get(5)};

  // F_2 C_2: spanned by 1 + sigma, squares to zero
  {
    auto A = group_algebra(d2, cyclic_group(2));
    auto r = radical_ff(A);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0] == FElem{d2.one(), d2.one()});
    CHECK(r.nilpotency_exponent == 2);
  }
  // F_p C_p has radical dimension p - 1
  CHECK(radical_ff(group_algebra(d3, cyclic_group(3))).basis.size() == 2);
  CHECK(radical_ff(group_algebra(d5, cyclic_group(5))).basis.size() == 4);
  CHECK(radical_ff(group_algebra(d3, cyclic_group(2))).basis.empty());

  // 2-groups over F_2: the whole augmentation ideal
  CHECK(radical_ff(group_algebra(d2, cyclic_group(8))).basis.size() == 7);
  CHECK(radical_ff(group_algebra(d2, dihedral4())).basis.size() == 7);
  CHECK(radical_ff(group_algebra(d2, quaternion8())).basis.size() == 7);
  CHECK(radical_ff(group_algebra(d2, gs_group(3))).basis.size() == 15);

  {
    auto r4 = radical_ff(group_algebra(d2, cyclic_group(4)));
    CHECK(r4.basis.size() == 3);
    CHECK(r4.nilpotency_exponent == 4);
    auto r8 = radical_ff(group_algebra(d2, cyclic_group(8)));
    CHECK(r8.nilpotency_exponent == 8);
  }
  CHECK(radical_ff(group_algebra(d2, cyclic_group(6))).basis.size() == 3);
  CHECK(radical_ff(group_algebra(d3, cyclic_group(6))).basis.size() == 4);

  // S_3 = G_2: one-dimensional radical over F_2 (the sum of all elements),
  // four-dimensional over F_3, semisimple over F_5
  {
    auto A = group_algebra(d2, symmetric3());
    auto r = radical_ff(A);
    REQUIRE(r.basis.size() == 1);
    CHECK(r.basis[0] == FElem(6, d2.one()));
    CHECK(r.nilpotency_exponent == 2);
    CHECK(same_space(brute_nil_radical(A), r.basis));
  }
  {
    auto A = group_algebra(d3, symmetric3());
    auto r = radical_ff(A);
    CHECK(r.basis.size() == 4);
    CHECK(same_space(brute_nil_radical(A), r.basis));
    CHECK(brute_exponent(A, r.basis) == r.nilpotency_exponent);
  }
  CHECK(radical_ff(group_algebra(d5, symmetric3())).basis.empty());
}

TEST_CASE("radical: simple and mixed fixed points") {
  FFDom d2{F2};
  // M_2(F_2) is simple: radical zero, exponent one
  auto idx = [](size_t a, size_t b) { return 2 * a + b; };
  std::vector<RowPtr<FFDom>> rows(16);
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b)
      for (size_t c = 0; c < 2; ++c)
        for (size_t dd = 0; dd < 2; ++dd) {
          auto r = std::make_shared<SpRow<FFDom>>();
          if (b == c) r->e.emplace_back((uint32_t)idx(a, dd), d2.one());
          rows[idx(a, b) * 4 + idx(c, dd)] = std::move(r);
        }
  FElem one(4, d2.zero());
  one[0] = one[3] = d2.one();
  auto M2 = make_algebra(d2, {"E00", "E01", "E10", "E11"}, std::move(rows),
                         std::move(one), AssocPolicy::Full);
  auto r = radical_ff(M2);
  CHECK(r.basis.empty());
  CHECK(r.nilpotency_exponent == 1);
  CHECK(is_semisimple_ff(M2));
  CHECK(same_space(brute_nil_radical(M2), r.basis));

  // upper triangular 2x2: radical = strictly upper part, though the center
  // is just the scalars (radical detection is not a center property)
  std::vector<RowPtr<FFDom>> tr(9);
  // basis: E00, E01, E11
  auto put = [&](size_t i, size_t j, std::initializer_list<int> prod) {
    auto rr = std::make_shared<SpRow<FFDom>>();
    size_t k = 0;
    for (int c : prod) {
      if (c) rr->e.emplace_back((uint32_t)k, d2.one());
      ++k;
    }
    tr[i * 3 + j] = std::move(rr);
  };
  put(0, 0, {1, 0, 0}); put(0, 1, {0, 1, 0}); put(0, 2, {0, 0, 0});
  put(1, 0, {0, 0, 0}); put(1, 1, {0, 0, 0}); put(1, 2, {0, 1, 0});
  put(2, 0, {0, 0, 0}); put(2, 1, {0, 0, 0}); put(2, 2, {0, 0, 1});
  FElem tone(3, d2.zero());
  tone[0] = tone[2] = d2.one();
  auto T = make_algebra(d2, {"E00", "E01", "E11"}, std::move(tr), std::move(tone),
                        AssocPolicy::Full);
  auto rt = radical_ff(T);
  REQUIRE(rt.basis.size() == 1);
  CHECK(rt.basis[0] == FElem{d2.zero(), d2.one(), d2.zero()});
  CHECK(rt.nilpotency_exponent == 2);
  CHECK(same_space(brute_nil_radical(T), rt.basis));

  // one-dimensional algebra
  auto F = quotient_algebra(Poly<FFDom>::x(d2));
  auto rf1 = radical_ff(F);
  CHECK(rf1.basis.empty());
  CHECK(rf1.nilpotency_exponent == 1);
}

TEST_CASE("radical vs frobenius-kernel oracle on random commutative algebras") {
  std::mt19937_64 rng(91);
  size_t nontrivial = 0;
  for (int trial = 0; trial < 50; ++trial) {
    FFDom d{trial % 2 == 0 ? F2 : FiniteField::get(2, 2)};
    auto A = random_commutative(rng, d);
    REQUIRE(A.commutative);
    auto r = radical_ff(A);
    auto oracle = frobenius_kernel_oracle(A);
    CHECK(same_space(oracle, r.basis));
    CHECK(brute_exponent(A, r.basis) == r.nilpotency_exponent);
    if (!r.basis.empty()) ++nontrivial;
  }
  CHECK(nontrivial >= 10);  // the generator must actually exercise radicals
}

TEST_CASE("radical: quotient is semisimple and centers behave") {
  FFDom d2{F2};
  auto A = group_algebra(d2, gs_group(3));
  auto r = radical_ff(A);
  REQUIRE(r.basis.size() == 15);
  auto Q = quotient_by_ideal(A, r.basis);
  CHECK(Q.n == 1);
  CHECK(is_semisimple_ff(Q));

  auto S = group_algebra(d2, symmetric3());
  auto rs = radical_ff(S);
  auto QS = quotient_by_ideal(S, rs.basis);
  CHECK(QS.n == 5);
  CHECK(is_semisimple_ff(QS));
  // F_2 S_3 / rad = F_2 x M_2(F_2): two blocks, so a 2-dimensional center
  CHECK(center(QS).size() == 2);

  CHECK_THROWS_AS(quotient_by_ideal(A, [&] {
                    std::vector<FElem> all;
                    for (size_t i = 0; i < A.n; ++i) all.push_back(A.basis_elem(i));
                    return all;
                  }()),
                  std::invalid_argument);
}

TEST_CASE("separability certificate: exact and sampled paths") {
  RatDom r2{F2};

  // F_2(t)[x]/(pi_2), pi_2 = (1+t)^3 x^3 + 1: separable, and the stored
  // defining polynomial feeds the exact gcd check
  auto B2 = quotient_algebra(parse_poly("(t^3+t^2+t+1)*x^3+1", r2));
  REQUIRE(B2.defining_poly != nullptr);
  auto cert = certify_separable(B2, 3, 12, 5);
  CHECK(cert.verdict == SepVerdict::Separable);
  REQUIRE(cert.samples.size() == 3);
  for (auto& s : cert.samples) {
    CHECK(s.radical_dim == 0);
    CHECK(s.ext_degree == 12);
    CHECK(!s.t0.F->is_zero(s.t0));
  }
  REQUIRE(cert.commutative_checks.size() == 1);
  CHECK(cert.commutative_checks[0].gcd_is_one);

  // discriminant consistency: every sampled point also has disc(f)(t0) != 0
  {
    auto disc = discriminant(*B2.defining_poly);
    for (auto& s : cert.samples) {
      auto v = eval_at_t(disc, s.t0);
      CHECK(!s.t0.F->is_zero(v));
    }
  }

  // determinism: the sample sequence is a pure function of the seed
  auto cert2 = certify_separable(B2, 3, 12, 5);
  REQUIRE(cert2.samples.size() == cert.samples.size());
  for (size_t i = 0; i < cert.samples.size(); ++i)
    CHECK(cert2.samples[i].t0 == cert.samples[i].t0);
  CHECK(cert2.verdict == cert.verdict);

  // x^2: derivative vanishes, gcd check fails, every sample has a radical;
  // the resampling confirms and the verdict is a witnessed not-separable
  auto N = quotient_algebra(parse_poly("x^2", r2));
  auto certn = certify_separable(N, 3, 12, 7);
  CHECK(certn.verdict == SepVerdict::NotSeparable);
  REQUIRE(certn.samples.size() == 4);  // three scheduled plus one resample
  for (auto& s : certn.samples) CHECK(s.radical_dim == 1);
  REQUIRE(certn.commutative_checks.size() == 1);
  CHECK(!certn.commutative_checks[0].gcd_is_one);

  // z^2 + t z + 1: derivative is the unit t, hence exact-separable
  auto Z = quotient_algebra(parse_poly("x^2+(t)*x+1", r2));
  auto certz = certify_separable(Z, 2, 12, 11);
  CHECK(certz.verdict == SepVerdict::Separable);
  CHECK(certz.commutative_checks[0].gcd_is_one);

  // an algebra with no defining polynomial only gets sampled
  {
    RatDom rd{F2};
    std::vector<RowPtr<RatDom>> rows{algdetail::row_single<RatDom>(0, rd.one())};
    auto One = make_algebra(rd, {"1"}, std::move(rows),
                            std::vector<RatFunc>{rd.one()}, AssocPolicy::Full);
    auto c1 = certify_separable(One, 2, 4, 3);
    CHECK(c1.commutative_checks.empty());
    CHECK(c1.verdict == SepVerdict::Separable);
  }

  // ext_degree 1 over F_2 leaves only t0 = 1, which is a pole of B2's table
  CHECK_THROWS_AS(certify_separable(B2, 2, 1, 9), std::runtime_error);
  CHECK_THROWS_AS(certify_separable(B2, 0, 12, 9), std::invalid_argument);
}

TEST_CASE("separability certificate: specializations at honest points") {
  RatDom r2{F2};
  auto B2 = quotient_algebra(parse_poly("(t^3+t^2+t+1)*x^3+1", r2));
  // t = 0 is not a pole here: the fiber is F_2[x]/(x^3+1), which is etale
  auto S0 = specialize(B2, F2->zero());
  CHECK(radical_ff(S0).basis.empty());

  // a hand-made inseparable fiber: specializing x^2 anywhere keeps x nilpotent
  auto N = quotient_algebra(parse_poly("x^2", r2));
  const FiniteField* F16 = FiniteField::get(2, 4);
  auto SN = specialize(N, F16->gen());
  auto rn = radical_ff(SN);
  REQUIRE(rn.basis.size() == 1);
  CHECK(rn.nilpotency_exponent == 2);
}
