#pragma once

#include "sepdef/ff.hpp"

#include <algorithm>
#include <cassert>

namespace sepdef {

/// Dense polynomial in t over a finite field.  Coefficient index = degree.
/// Canonical form: no trailing zeros (the zero polynomial has an empty vector).
struct TPoly {
    const FiniteField* F = nullptr;
    std::vector<uint64_t> c;

    TPoly() = default;
    explicit TPoly(const FiniteField* f) : F(f) {}
    TPoly(const FiniteField* f, std::vector<uint64_t> coeffs) : F(f), c(std::move(coeffs)) { trim(); }

    static TPoly zero(const FiniteField* f) { return TPoly(f); }
    static TPoly one(const FiniteField* f) { return TPoly(f, {1}); }
    static TPoly t(const FiniteField* f) { return TPoly(f, {0, 1}); }
    static TPoly constant(const FiniteField* f, FFElem a) {
        if (a.F != f) throw std::invalid_argument("constant from wrong field");
        return TPoly(f, {a.v});
    }

    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    FFElem lc() const { return c.empty() ? FFElem{F, 0} : FFElem{F, c.back()}; }
    FFElem coeff(int i) const { return {F, i >= 0 && i < (int)c.size() ? c[i] : 0}; }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

    bool operator==(const TPoly& o) const { return F == o.F && c == o.c; }
    bool operator!=(const TPoly& o) const { return !(*this == o); }
};

inline void tp_check(const TPoly& a, const TPoly& b) {
    if (a.F != b.F) throw std::invalid_argument("t-polynomials over different fields");
}

inline TPoly tp_add(const TPoly& a, const TPoly& b) {
    tp_check(a, b);
    TPoly r(a.F);
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = a.F->addv(r.c[i], b.c[i]);
    r.trim();
    return r;
}

inline TPoly tp_neg(const TPoly& a) {
    TPoly r = a;
    for (auto& x : r.c) x = a.F->negv(x);
    return r;
}

inline TPoly tp_sub(const TPoly& a, const TPoly& b) { return tp_add(a, tp_neg(b)); }

inline TPoly tp_mul(const TPoly& a, const TPoly& b) {
    tp_check(a, b);
    if (a.is_zero() || b.is_zero()) return TPoly(a.F);
    TPoly r(a.F);
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    const FiniteField* F = a.F;
    for (size_t i = 0; i < a.c.size(); ++i) {
        uint64_t ai = a.c[i];
        if (!ai) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j]) r.c[i + j] = F->addv(r.c[i + j], F->mulv(ai, b.c[j]));
    }
    r.trim();
    return r;
}

inline TPoly tp_scale(const TPoly& a, FFElem s) {
    if (s.F != a.F) throw std::invalid_argument("scalar from wrong field");
    TPoly r = a;
    for (auto& x : r.c) x = a.F->mulv(x, s.v);
    r.trim();
    return r;
}

/// Division with remainder; the divisor's leading coefficient is inverted.
inline void tp_divrem(const TPoly& a, const TPoly& b, TPoly& qout, TPoly& rout) {
    tp_check(a, b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const FiniteField* F = a.F;
    uint64_t lcinv = F->invv(b.c.back());
    TPoly r = a;
    TPoly q(a.F);
    int db = b.deg();
    if (r.deg() >= db) q.c.assign(r.deg() - db + 1, 0);
    while (r.deg() >= db) {
        int k = r.deg() - db;
        uint64_t f = F->mulv(r.c.back(), lcinv);
        q.c[k] = f;
        for (int i = 0; i <= db; ++i)
            r.c[k + i] = F->subv(r.c[k + i], F->mulv(f, b.c[i]));
        r.trim();
    }
    q.trim();
    qout = std::move(q);
    rout = std::move(r);
}

inline TPoly tp_rem(const TPoly& a, const TPoly& b) {
    TPoly q, r;
    tp_divrem(a, b, q, r);
    return r;
}

inline TPoly tp_exact_div(const TPoly& a, const TPoly& b) {
    TPoly q, r;
    tp_divrem(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

inline TPoly tp_monic(const TPoly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return tp_scale(a, a.F->inv(a.lc()));
}

inline TPoly tp_gcd(TPoly a, TPoly b) {
    tp_check(a, b);
    while (!b.is_zero()) {
        TPoly r = tp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return tp_monic(a);
}

inline TPoly tp_pow(TPoly a, uint64_t e) {
    TPoly r = TPoly::one(a.F);
    while (e) {
        if (e & 1) r = tp_mul(r, a);
        a = tp_mul(a, a);
        e >>= 1;
    }
    return r;
}

/// Multiplicity of t (order of vanishing at t = 0); -1 for the zero polynomial.
inline int tp_t_multiplicity(const TPoly& a) {
    if (a.is_zero()) return -1;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) return (int)i;
    return -1;
}

inline TPoly tp_shift_down(const TPoly& a, int k) {  // divide by t^k (must be exact)
    if (k == 0) return a;
    assert(tp_t_multiplicity(a) >= k || a.is_zero());
    TPoly r(a.F);
    if ((int)a.c.size() > k) r.c.assign(a.c.begin() + k, a.c.end());
    return r;
}

/// Evaluate at a point of the coefficient field or of an extension of the
/// prime field (coefficients must then lie in the prime subfield).
inline FFElem tp_eval(const TPoly& a, FFElem t0) {
    const FiniteField* T = t0.F;
    auto lift = [&](uint64_t v) -> uint64_t {
        if (T == a.F) return v;
        if (a.F->m == 1 && T->p == a.F->p) return v;  // prime subfield embeds digit-wise
        throw std::invalid_argument("unsupported coefficient-field embedding in evaluation");
    };
    uint64_t acc = 0;
    for (int i = a.deg(); i >= 0; --i)
        acc = T->addv(T->mulv(acc, t0.v), lift(a.c[i]));
    return {T, acc};
}

}  // namespace sepdef
