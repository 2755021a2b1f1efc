#pragma once

#include "sepdef/tpoly.hpp"

#include <limits>

namespace sepdef {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// t-adic valuation value: an integer, or +infinity for 0.
struct TAdic {
    bool infinite = false;
    long v = 0;

    static TAdic infinity() { return {true, 0}; }
    static TAdic of(long x) { return {false, x}; }
    bool operator==(const TAdic& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    TAdic operator+(const TAdic& o) const {
        if (infinite || o.infinite) return infinity();
        return of(v + o.v);
    }
};

/// Element of F_q(t) in canonical reduced form: gcd(num, den) = 1, den monic,
/// and zero is 0/1.  Equality of representations equals field equality.
struct RatFunc {
    TPoly num, den;

    RatFunc() = default;
    explicit RatFunc(const FiniteField* F) : num(F), den(TPoly::one(F)) {}
    RatFunc(TPoly n, TPoly d) : num(std::move(n)), den(std::move(d)) { reduce(); }
    static RatFunc of(TPoly n) {
        RatFunc r;
        r.den = TPoly::one(n.F);
        r.num = std::move(n);
        return r;
    }
    static RatFunc zero(const FiniteField* F) { return RatFunc(F); }
    static RatFunc one(const FiniteField* F) { return of(TPoly::one(F)); }
    static RatFunc t(const FiniteField* F) { return of(TPoly::t(F)); }
    static RatFunc constant(FFElem a) { return of(TPoly::constant(a.F, a)); }

    const FiniteField* field() const { return num.F; }
    bool is_zero() const { return num.is_zero(); }
    bool is_one() const { return num.is_one() && den.is_one(); }
    bool is_poly() const { return den.is_one(); }

    void reduce() {
        tp_check(num, den);
        if (den.is_zero()) throw std::domain_error("zero denominator");
        if (num.is_zero()) {
            den = TPoly::one(num.F);
            return;
        }
        TPoly g = tp_gcd(num, den);
        if (g.deg() > 0) {
            num = tp_exact_div(num, g);
            den = tp_exact_div(den, g);
        }
        if (!den.is_monic()) {
            FFElem s = den.F->inv(den.lc());
            num = tp_scale(num, s);
            den = tp_scale(den, s);
        }
    }

    bool operator==(const RatFunc& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
};

inline RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
    return RatFunc(tp_add(tp_mul(a.num, b.den), tp_mul(b.num, a.den)), tp_mul(a.den, b.den));
}
inline RatFunc rf_neg(const RatFunc& a) {
    RatFunc r = a;
    r.num = tp_neg(r.num);
    return r;
}
inline RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return rf_add(a, rf_neg(b)); }
inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    return RatFunc(tp_mul(a.num, b.num), tp_mul(a.den, b.den));
}
inline RatFunc rf_inv(const RatFunc& a) {
    if (a.is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(a.den, a.num);
}
inline RatFunc rf_div(const RatFunc& a, const RatFunc& b) { return rf_mul(a, rf_inv(b)); }

/// t-adic valuation: multiplicity of t in num minus multiplicity in den.
inline TAdic t_valuation(const RatFunc& a) {
    if (a.is_zero()) return TAdic::infinity();
    return TAdic::of(tp_t_multiplicity(a.num) - tp_t_multiplicity(a.den));
}

/// Evaluate at t = t0; throws PoleError when den(t0) = 0.
inline FFElem eval_at_t(const RatFunc& a, FFElem t0) {
    FFElem d = tp_eval(a.den, t0);
    if (d.v == 0) throw PoleError("pole at sampled t0");
    FFElem n = tp_eval(a.num, t0);
    return t0.F->div(n, d);
}

}  // namespace sepdef
