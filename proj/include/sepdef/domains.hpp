#pragma once

#include "sepdef/text.hpp"

namespace sepdef {

/// Coefficient domain descriptors.  A domain instance pins the base finite
/// field; Poly and the algebra layer are generic over these three.

struct FFDom {
    using Scalar = FFElem;
    static constexpr bool is_field = true;
    const FiniteField* F = nullptr;

    Scalar zero() const { return F->zero(); }
    Scalar one() const { return F->one(); }
    bool is_zero(const Scalar& a) const { return a.v == 0; }
    bool is_one(const Scalar& a) const { return a.v == 1; }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
    Scalar add(const Scalar& a, const Scalar& b) const { return F->add(a, b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return F->sub(a, b); }
    Scalar neg(const Scalar& a) const { return F->neg(a); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return F->mul(a, b); }
    Scalar inv(const Scalar& a) const { return F->inv(a); }
    Scalar div(const Scalar& a, const Scalar& b) const { return F->div(a, b); }
    Scalar exact_div(const Scalar& a, const Scalar& b) const { return F->div(a, b); }
    bool is_unit(const Scalar& a) const { return a.v != 0; }
    Scalar from_int(long long n) const { return F->from_int(n); }

    std::string to_string(const Scalar& a) const { return ff_to_string(a); }
    Scalar parse_scalar(TextScanner& sc) const {
        bool par = sc.accept('(');
        TPoly v = textdetail::parse_tsum(sc, F);
        if (par) sc.expect(')');
        if (v.deg() > 0) sc.fail("t is not allowed over a finite field");
        return v.coeff(0);
    }
    bool same(const FFDom& o) const { return F == o.F; }
};

struct TPolyDom {
    using Scalar = TPoly;
    static constexpr bool is_field = false;
    const FiniteField* F = nullptr;

    Scalar zero() const { return TPoly::zero(F); }
    Scalar one() const { return TPoly::one(F); }
    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_one(const Scalar& a) const { return a.is_one(); }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
    Scalar add(const Scalar& a, const Scalar& b) const { return tp_add(a, b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return tp_sub(a, b); }
    Scalar neg(const Scalar& a) const { return tp_neg(a); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return tp_mul(a, b); }
    Scalar exact_div(const Scalar& a, const Scalar& b) const { return tp_exact_div(a, b); }
    bool is_unit(const Scalar& a) const { return a.deg() == 0; }
    Scalar inv(const Scalar& a) const {
        if (!is_unit(a)) throw std::domain_error("non-unit inverse over F_q[t]");
        return TPoly(F, {F->invv(a.c[0])});
    }
    Scalar div(const Scalar& a, const Scalar& b) const { return exact_div(a, b); }
    Scalar from_int(long long n) const { return TPoly::constant(F, F->from_int(n)); }

    std::string to_string(const Scalar& a) const { return tpoly_to_string(a); }
    Scalar parse_scalar(TextScanner& sc) const {
        if (sc.accept('(')) {
            TPoly v = textdetail::parse_tsum(sc, F);
            sc.expect(')');
            if (sc.accept('/')) sc.fail("fractions are not allowed over F_q[t]");
            return v;
        }
        return textdetail::parse_tsum(sc, F);
    }
    bool same(const TPolyDom& o) const { return F == o.F; }
};

struct RatDom {
    using Scalar = RatFunc;
    static constexpr bool is_field = true;
    const FiniteField* F = nullptr;

    Scalar zero() const { return RatFunc::zero(F); }
    Scalar one() const { return RatFunc::one(F); }
    bool is_zero(const Scalar& a) const { return a.is_zero(); }
    bool is_one(const Scalar& a) const { return a.is_one(); }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
    Scalar add(const Scalar& a, const Scalar& b) const { return rf_add(a, b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return rf_sub(a, b); }
    Scalar neg(const Scalar& a) const { return rf_neg(a); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return rf_mul(a, b); }
    Scalar inv(const Scalar& a) const { return rf_inv(a); }
    Scalar div(const Scalar& a, const Scalar& b) const { return rf_div(a, b); }
    Scalar exact_div(const Scalar& a, const Scalar& b) const { return rf_div(a, b); }
    bool is_unit(const Scalar& a) const { return !a.is_zero(); }
    Scalar from_int(long long n) const { return RatFunc::constant(F->from_int(n)); }

    std::string to_string(const Scalar& a) const { return ratfunc_to_string(a); }
    Scalar parse_scalar(TextScanner& sc) const { return parse_ratfunc(sc, F); }
    bool same(const RatDom& o) const { return F == o.F; }
};

}  // namespace sepdef
