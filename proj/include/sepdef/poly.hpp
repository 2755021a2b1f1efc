#pragma once

#include "sepdef/domains.hpp"

namespace sepdef {

/// Dense univariate polynomial in x over a coefficient domain.
/// Canonical: no trailing zero coefficients; deg(0) = -1 stands in for -inf.
template <class D>
struct Poly {
    using Scalar = typename D::Scalar;
    D dom;
    std::vector<Scalar> c;

    Poly() = default;
    explicit Poly(D d) : dom(d) {}
    Poly(D d, std::vector<Scalar> coeffs) : dom(d), c(std::move(coeffs)) { trim(); }

    static Poly zero(D d) { return Poly(d); }
    static Poly one(D d) { return Poly(d, {d.one()}); }
    static Poly x(D d) { return Poly(d, {d.zero(), d.one()}); }
    static Poly xpow(D d, int k) {
        std::vector<Scalar> v((size_t)k + 1, d.zero());
        v[(size_t)k] = d.one();
        return Poly(d, std::move(v));
    }
    static Poly constant(D d, Scalar s) { return Poly(d, {std::move(s)}); }

    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Scalar coeff(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : dom.zero(); }
    Scalar lc() const { return c.empty() ? dom.zero() : c.back(); }
    bool is_monic() const { return !c.empty() && dom.is_one(c.back()); }

    void trim() {
        while (!c.empty() && dom.is_zero(c.back())) c.pop_back();
    }

    bool operator==(const Poly& o) const {
        if (!dom.same(o.dom) || c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!dom.eq(c[i], o.c[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

template <class D>
void pcheck(const Poly<D>& a, const Poly<D>& b) {
    if (!a.dom.same(b.dom)) throw std::invalid_argument("polynomials over different coefficient domains");
}

template <class D>
Poly<D> operator+(const Poly<D>& a, const Poly<D>& b) {
    pcheck(a, b);
    Poly<D> r(a.dom);
    r.c.resize(std::max(a.c.size(), b.c.size()), a.dom.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = a.dom.add(r.c[i], b.c[i]);
    r.trim();
    return r;
}

template <class D>
Poly<D> operator-(const Poly<D>& a) {
    Poly<D> r = a;
    for (auto& s : r.c) s = a.dom.neg(s);
    return r;
}

template <class D>
Poly<D> operator-(const Poly<D>& a, const Poly<D>& b) { return a + (-b); }

template <class D>
Poly<D> operator*(const Poly<D>& a, const Poly<D>& b) {
    pcheck(a, b);
    if (a.is_zero() || b.is_zero()) return Poly<D>::zero(a.dom);
    Poly<D> r(a.dom);
    r.c.assign(a.c.size() + b.c.size() - 1, a.dom.zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.dom.is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            if (!b.dom.is_zero(b.c[j]))
                r.c[i + j] = a.dom.add(r.c[i + j], a.dom.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

template <class D>
Poly<D> pscale(const Poly<D>& a, const typename D::Scalar& s) {
    Poly<D> r = a;
    for (auto& x : r.c) x = a.dom.mul(x, s);
    r.trim();
    return r;
}

template <class D>
Poly<D> ppow(Poly<D> a, uint64_t e) {
    Poly<D> r = Poly<D>::one(a.dom);
    while (e) {
        if (e & 1) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

/// f = q*g + r with deg r < deg g.  Over a ring the divisor must be monic or
/// have a unit leading coefficient.
template <class D>
void divrem(const Poly<D>& f, const Poly<D>& g, Poly<D>& q, Poly<D>& r) {
    pcheck(f, g);
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!D::is_field && !g.dom.is_unit(g.lc()) && !g.is_monic())
        throw std::domain_error("divisor leading coefficient is not invertible");
    auto lcinv = g.is_monic() ? g.dom.one() : g.dom.inv(g.lc());
    r = f;
    q = Poly<D>(f.dom);
    int dg = g.deg();
    if (r.deg() >= dg) q.c.assign((size_t)(r.deg() - dg + 1), f.dom.zero());
    while (r.deg() >= dg) {
        int k = r.deg() - dg;
        auto fac = f.dom.mul(r.c.back(), lcinv);
        q.c[(size_t)k] = fac;
        for (int i = 0; i <= dg; ++i)
            r.c[(size_t)(k + i)] = f.dom.sub(r.c[(size_t)(k + i)], f.dom.mul(fac, g.c[(size_t)i]));
        r.trim();
    }
    q.trim();
}

template <class D>
Poly<D> prem_poly(const Poly<D>& f, const Poly<D>& g) {  // true remainder
    Poly<D> q, r;
    divrem(f, g, q, r);
    return r;
}

template <class D>
Poly<D> exact_div(const Poly<D>& f, const Poly<D>& g) {
    Poly<D> q, r;
    divrem(f, g, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

/// f(g(x)) by Horner.
template <class D>
Poly<D> compose(const Poly<D>& f, const Poly<D>& g) {
    pcheck(f, g);
    Poly<D> acc = Poly<D>::zero(f.dom);
    for (int i = f.deg(); i >= 0; --i) {
        acc = acc * g;
        acc = acc + Poly<D>::constant(f.dom, f.c[(size_t)i]);
    }
    return acc;
}

/// Formal derivative (char-p aware: the p-th multiples vanish).
template <class D>
Poly<D> derivative(const Poly<D>& f) {
    Poly<D> r(f.dom);
    if (f.deg() < 1) return r;
    r.c.assign((size_t)f.deg(), f.dom.zero());
    for (int i = 1; i <= f.deg(); ++i) {
        auto m = f.dom.from_int(i);
        r.c[(size_t)(i - 1)] = f.dom.mul(f.c[(size_t)i], m);
    }
    r.trim();
    return r;
}

template <class D>
Poly<D> make_monic(const Poly<D>& f) {
    static_assert(D::is_field, "monic normalization needs a field");
    if (f.is_zero() || f.is_monic()) return f;
    return pscale(f, f.dom.inv(f.lc()));
}

// --- subresultant machinery over an integral coefficient domain ---

/// Pseudo-remainder: lc(g)^{deg f - deg g + 1} * f = q*g + R.
template <class D>
Poly<D> pseudo_rem(const Poly<D>& f, const Poly<D>& g) {
    pcheck(f, g);
    if (g.is_zero()) throw std::domain_error("pseudo-division by zero");
    int e = f.deg() - g.deg() + 1;
    auto lcg = g.lc();
    Poly<D> r = f;
    while (!r.is_zero() && r.deg() >= g.deg()) {
        int k = r.deg() - g.deg();
        auto lr = r.lc();
        Poly<D> shifted = Poly<D>::xpow(f.dom, k) * g;
        r = pscale(r, lcg) - pscale(shifted, lr);
        --e;
    }
    if (e > 0) {
        auto s = f.dom.one();
        for (int i = 0; i < e; ++i) s = f.dom.mul(s, lcg);
        r = pscale(r, s);
    }
    return r;
}

namespace polydetail {

inline TPoly content_of(const Poly<TPolyDom>& f) {
    TPoly g = TPoly::zero(f.dom.F);
    for (auto& s : f.c)
        if (!s.is_zero()) g = g.is_zero() ? tp_monic(s) : tp_gcd(g, s);
    return g;
}

inline Poly<TPolyDom> primitive_part(const Poly<TPolyDom>& f) {
    TPoly ct = content_of(f);
    if (ct.deg() <= 0) {
        // still normalize the scalar content so results are unit-canonical
        if (f.is_zero()) return f;
        Poly<TPolyDom> r = f;
        FFElem u = f.lc().lc();
        if (u.v != 1) {
            TPoly s(f.dom.F, {f.dom.F->invv(u.v)});
            for (auto& cc : r.c) cc = tp_mul(cc, s);
        }
        return r;
    }
    Poly<TPolyDom> r(f.dom);
    r.c.reserve(f.c.size());
    for (auto& s : f.c) r.c.push_back(s.is_zero() ? s : tp_exact_div(s, ct));
    r.trim();
    Poly<TPolyDom> pp = r;
    FFElem u = pp.lc().lc();
    if (u.v != 1) {
        TPoly s(f.dom.F, {f.dom.F->invv(u.v)});
        for (auto& cc : pp.c) cc = tp_mul(cc, s);
    }
    return pp;
}

/// Subresultant PRS gcd over F_q[t][x]; returns a primitive gcd with monic
/// leading t-coefficient (unit-canonical).
inline Poly<TPolyDom> prs_gcd(Poly<TPolyDom> A, Poly<TPolyDom> B) {
    const TPolyDom dom = A.dom;
    if (A.is_zero()) return primitive_part(B);
    if (B.is_zero()) return primitive_part(A);
    TPoly contA = content_of(A), contB = content_of(B);
    TPoly cont = tp_gcd(contA, contB);
    A = primitive_part(A);
    B = primitive_part(B);
    if (A.deg() < B.deg()) std::swap(A, B);
    TPoly g = TPoly::one(dom.F), h = TPoly::one(dom.F);
    while (true) {
        int delta = A.deg() - B.deg();
        Poly<TPolyDom> R = pseudo_rem(A, B);
        if (R.is_zero()) break;
        if (R.deg() == 0) {  // gcd of primitive parts is a constant
            Poly<TPolyDom> unit = Poly<TPolyDom>::one(dom);
            return cont.deg() > 0 || !cont.is_one()
                       ? Poly<TPolyDom>(dom, {cont})
                       : unit;
        }
        A = B;
        TPoly divisor = tp_mul(g, tp_pow(h, (uint64_t)delta));
        Poly<TPolyDom> nb(dom);
        nb.c.reserve(R.c.size());
        for (auto& s : R.c) nb.c.push_back(s.is_zero() ? s : tp_exact_div(s, divisor));
        nb.trim();
        B = std::move(nb);
        g = A.lc();
        if (delta > 0) h = tp_exact_div(tp_pow(g, (uint64_t)delta), tp_pow(h, (uint64_t)(delta - 1)));
        // delta == 0 leaves h unchanged
    }
    Poly<TPolyDom> pp = primitive_part(B);
    if (cont.deg() > 0 || !cont.is_one()) {
        Poly<TPolyDom> cp(A.dom, {cont});
        return pp * cp;
    }
    return pp;
}

}  // namespace polydetail

/// Monic gcd over a coefficient field.  Over F_q(t) the computation clears
/// denominators and runs the subresultant PRS over F_q[t] (the scan's hot
/// path); over finite fields it is the plain Euclidean algorithm.
inline Poly<FFDom> gcd_monic(Poly<FFDom> a, Poly<FFDom> b) {
    while (!b.is_zero()) {
        Poly<FFDom> r = prem_poly(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

inline Poly<TPolyDom> clear_denominators(const Poly<RatDom>& f) {
    const FiniteField* F = f.dom.F;
    TPoly l = TPoly::one(F);
    for (auto& s : f.c) {
        if (s.is_zero()) continue;
        TPoly g = tp_gcd(l, s.den);
        l = tp_mul(tp_exact_div(l, g), s.den);  // lcm
    }
    Poly<TPolyDom> r(TPolyDom{F});
    r.c.reserve(f.c.size());
    for (auto& s : f.c) {
        if (s.is_zero()) r.c.push_back(TPoly::zero(F));
        else r.c.push_back(tp_mul(s.num, tp_exact_div(l, s.den)));
    }
    r.trim();
    return r;
}

inline Poly<RatDom> to_ratdom(const Poly<TPolyDom>& f) {
    Poly<RatDom> r(RatDom{f.dom.F});
    r.c.reserve(f.c.size());
    for (auto& s : f.c) r.c.push_back(RatFunc::of(s));
    r.trim();
    return r;
}

inline Poly<RatDom> gcd_monic(const Poly<RatDom>& a, const Poly<RatDom>& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    Poly<TPolyDom> g = polydetail::prs_gcd(clear_denominators(a), clear_denominators(b));
    return make_monic(to_ratdom(g));
}

/// Resultant via the subresultant PRS (fraction-free over rings).
template <class D>
typename D::Scalar resultant(const Poly<D>& f, const Poly<D>& g) {
    pcheck(f, g);
    const D dom = f.dom;
    if (f.is_zero() || g.is_zero()) return dom.zero();
    if (f.deg() == 0) {
        auto r = dom.one();
        for (int i = 0; i < g.deg(); ++i) r = dom.mul(r, f.c[0]);
        return r;
    }
    if (g.deg() == 0) {
        auto r = dom.one();
        for (int i = 0; i < f.deg(); ++i) r = dom.mul(r, g.c[0]);
        return r;
    }
    Poly<D> A = f, B = g;
    bool negate = false;
    if (A.deg() < B.deg()) {
        if ((A.deg() & 1) && (B.deg() & 1)) negate = !negate;
        std::swap(A, B);
    }
    auto gg = dom.one(), h = dom.one();
    auto powd = [&](typename D::Scalar base, int e) {
        auto r = dom.one();
        for (int i = 0; i < e; ++i) r = dom.mul(r, base);
        return r;
    };
    while (true) {
        int delta = A.deg() - B.deg();
        if ((A.deg() & 1) && (B.deg() & 1)) negate = !negate;
        Poly<D> R = pseudo_rem(A, B);
        A = B;
        if (R.is_zero()) return dom.zero();  // positive-degree common factor
        auto divisor = dom.mul(gg, powd(h, delta));
        Poly<D> nb(dom);
        nb.c.reserve(R.c.size());
        for (auto& s : R.c) nb.c.push_back(dom.is_zero(s) ? s : dom.exact_div(s, divisor));
        nb.trim();
        B = std::move(nb);
        gg = A.lc();
        if (delta > 0) h = dom.exact_div(powd(gg, delta), powd(h, delta - 1));
        if (B.deg() == 0) {
            int d = A.deg();
            auto res = dom.exact_div(powd(B.c[0], d), powd(h, d - 1));
            return negate ? dom.neg(res) : res;
        }
    }
}

/// disc(f) = (-1)^{n(n-1)/2} res(f, f') / lc(f).
template <class D>
typename D::Scalar discriminant(const Poly<D>& f) {
    if (f.deg() < 1) throw std::domain_error("discriminant needs degree >= 1");
    Poly<D> fp = derivative(f);
    auto r = fp.is_zero() ? f.dom.zero() : resultant(f, fp);
    int n = f.deg();
    if (((n * (n - 1)) / 2) & 1) r = f.dom.neg(r);
    return f.dom.exact_div(r, f.lc());
}

template <class D>
bool is_separable(const Poly<D>& f) {
    static_assert(D::is_field, "separability test needs a coefficient field");
    Poly<D> d = derivative(f);
    if (d.is_zero()) return f.deg() == 0;  // nonconstant with zero derivative: p-th power
    return gcd_monic(f, d).deg() == 0;
}

/// Coefficient-wise evaluation at t = 0 (errors on t-poles).
inline Poly<FFDom> reduce_mod_t(const Poly<RatDom>& f) {
    const FiniteField* F = f.dom.F;
    Poly<FFDom> r(FFDom{F});
    r.c.reserve(f.c.size());
    FFElem z = F->zero();
    for (auto& s : f.c) {
        TAdic v = t_valuation(s);
        if (!v.infinite && v.v < 0) throw PoleError("coefficient has a t-pole at t = 0");
        r.c.push_back(s.is_zero() ? z : eval_at_t(s, z));
    }
    r.trim();
    return r;
}

inline Poly<FFDom> reduce_mod_t(const Poly<TPolyDom>& f) {
    Poly<FFDom> r(FFDom{f.dom.F});
    r.c.reserve(f.c.size());
    for (auto& s : f.c) r.c.push_back(s.coeff(0));
    r.trim();
    return r;
}

// --- text form ---

namespace polydetail {

inline std::string coeff_text(const FFDom&, const FFElem& s) {
    std::string v = ff_to_string(s);
    return v[0] == '[' ? "(" + v + ")" : v;
}
inline std::string coeff_text(const TPolyDom& d, const TPoly& s) {
    if (s.deg() <= 0) return coeff_text(FFDom{d.F}, s.coeff(0));
    return "(" + tpoly_to_string(s) + ")";
}
inline std::string coeff_text(const RatDom& d, const RatFunc& s) {
    if (s.is_poly() && s.num.deg() <= 0) return coeff_text(FFDom{d.F}, s.num.coeff(0));
    return ratfunc_to_string(s);  // already parenthesized beyond constants
}

}  // namespace polydetail

template <class D>
std::string poly_to_string(const Poly<D>& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.deg(); i >= 0; --i) {
        if (f.dom.is_zero(f.c[(size_t)i])) continue;
        if (!out.empty()) out += '+';
        std::string cs = polydetail::coeff_text(f.dom, f.c[(size_t)i]);
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

/// poly := [-] term ((+|-) term)*, term := coeff '*' xpart | coeff | xpart,
/// xpart := 'x' ['^' nat], coeff := '(' scalar ')' | scalar-atom.
template <class D>
Poly<D> parse_poly(TextScanner& sc, D dom, char var = 'x') {
    Poly<D> acc = Poly<D>::zero(dom);
    bool neg = sc.accept('-');
    while (true) {
        typename D::Scalar coeff = dom.one();
        long xdeg = 0;
        bool have_any = false;
        char c = sc.peek();
        if (c == '(' || c == '[' || std::isdigit((unsigned char)c) || c == 't') {
            coeff = dom.parse_scalar(sc);
            have_any = true;
            if (sc.accept('*')) {
                if (!sc.accept(var)) sc.fail(std::string("expected '") + var + "'");
                xdeg = 1;
                if (sc.accept('^')) xdeg = (long)sc.read_nat();
            }
        } else if (sc.accept(var)) {
            have_any = true;
            xdeg = 1;
            if (sc.accept('^')) xdeg = (long)sc.read_nat();
        }
        if (!have_any) sc.fail("expected a term");
        Poly<D> term = pscale(Poly<D>::xpow(dom, (int)xdeg), coeff);
        acc = neg ? acc - term : acc + term;
        if (sc.accept('+')) neg = false;
        else if (sc.accept('-')) neg = true;
        else break;
    }
    return acc;
}

template <class D>
Poly<D> parse_poly(const std::string& s, D dom, char var = 'x') {
    TextScanner sc(s);
    Poly<D> p = parse_poly(sc, dom, var);
    sc.expect_end();
    return p;
}

}  // namespace sepdef
