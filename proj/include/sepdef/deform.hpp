#pragma once

#include "sepdef/algebra.hpp"

namespace sepdef {

// The deformed power map h and the modulus pi = h(h(x))/x - 1 it induces.
// "Default" is h = x^s + t*x^2; the "s5fix" variant x^5 + t*(x^3 + x^2)
// repairs the one exponent where the default modulus is inseparable.

enum class Variant { Default, S5Fix };

inline const char* to_string(Variant v) {
    return v == Variant::Default ? "default" : "s5fix";
}

inline Variant parse_variant(const std::string& s) {
    if (s == "default") return Variant::Default;
    if (s == "s5fix") return Variant::S5Fix;
    throw std::invalid_argument("unknown variant '" + s + "' (expected default or s5fix)");
}

struct DeformationSpec {
    size_t s = 0;
    Variant variant = Variant::Default;
    Poly<RatDom> h;   // deformed s-th power map
    Poly<RatDom> pi;  // h(h(x))/x - 1, the quotient modulus
};

inline Poly<RatDom> build_h(const RatDom& dom, size_t s, Variant variant = Variant::Default) {
    if (s < 2) throw std::invalid_argument("deformation needs s >= 2");
    if (variant == Variant::S5Fix && s != 5)
        throw std::invalid_argument("the s5fix variant is defined only at s = 5");
    RatFunc t = RatFunc::t(dom.F);
    Poly<RatDom> h(dom);
    h.c.assign(s + 1, dom.zero());
    h.c[s] = dom.one();
    h.c[2] = dom.add(h.c[2], t);  // add, not assign: at s = 2 both terms land here
    if (variant == Variant::S5Fix) h.c[3] = dom.add(h.c[3], t);
    h.trim();
    return h;
}

// pi = h(h(x))/x - 1.  The division is exact because h(0) = 0.  Everything
// the rest of the construction leans on is asserted here:
//   deg pi = s^2 - 1,  h(h(x)) = x*(pi + 1),  pi === x^{s^2-1} - 1 at t = 0.
inline Poly<RatDom> build_pi(const Poly<RatDom>& h) {
    const RatDom& dom = h.dom;
    int s = h.deg();
    if (s < 2 || !dom.is_zero(h.coeff(0)))
        throw std::invalid_argument("build_pi needs deg h >= 2 with h(0) = 0");
    Poly<RatDom> hh = compose(h, h);
    Poly<RatDom> pi = exact_div(hh, Poly<RatDom>::x(dom)) - Poly<RatDom>::one(dom);
    size_t n = (size_t)s * (size_t)s - 1;
    if ((size_t)pi.deg() != n) throw std::logic_error("pi has the wrong degree");
    if (!(Poly<RatDom>::x(dom) * (pi + Poly<RatDom>::one(dom)) == hh))
        throw std::logic_error("x*(pi + 1) does not reproduce h(h(x))");
    Poly<FFDom> fiber = reduce_mod_t(pi);
    FFDom ff{dom.F};
    Poly<FFDom> expect =
        Poly<FFDom>::xpow(ff, (int)n) - Poly<FFDom>::one(ff);
    if (!(fiber == expect)) throw std::logic_error("pi does not reduce to x^n - 1 at t = 0");
    return pi;
}

inline DeformationSpec make_deformation(const RatDom& dom, size_t s,
                                        Variant variant = Variant::Default) {
    DeformationSpec spec;
    spec.s = s;
    spec.variant = variant;
    spec.h = build_h(dom, s, variant);
    spec.pi = build_pi(spec.h);
    return spec;
}

// Exact separability decision for pi over F_q(t).  Fast path: specialize at a
// point t0 where lc(pi) survives; since the Sylvester matrix of (pi, pi')
// specializes entry-wise, gcd(pi(t0), pi'(t0)) = 1 forces res(pi, pi') != 0
// as a rational function, which already certifies separability.  Only when
// every candidate point fails does this fall back to the gcd over F_q(t)
// (the separable case almost never gets there; the inseparable case does,
// and there the exact gcd is the certificate).
inline bool check_pi_separable(const Poly<RatDom>& pi) {
    if (pi.deg() < 1) return false;
    const FiniteField* F = pi.dom.F;
    auto ext_size = [&](unsigned d) {
        uint64_t q = 1;
        for (unsigned i = 0; i < F->m * d; ++i) {
            q *= F->p;
            if (q > (1u << 20)) return uint64_t(0);  // over the table cap
        }
        return q;
    };
    unsigned d = 12;
    while (d > 1 && ext_size(d) == 0) --d;
    const FiniteField* ext = FiniteField::get(F->p, F->m * d);
    FFDom fdom{ext};
    uint64_t qv = ext_size(d);  // 0 only for a prime field past the cap
    uint64_t ncand = qv ? std::min<uint64_t>(8, qv - 1) : 8;
    for (uint64_t cand = 1; cand <= ncand; ++cand) {
        FFElem t0{ext, cand};
        try {
            if (eval_at_t(pi.lc(), t0).v == 0) continue;
            Poly<FFDom> f(fdom);
            f.c.reserve(pi.c.size());
            for (auto& c : pi.c) f.c.push_back(eval_at_t(c, t0));
            f.trim();
            if (gcd_monic(f, derivative(f)).deg() == 0) return true;
        } catch (const PoleError&) {
            continue;
        }
    }
    return is_separable(pi);
}

// eta: x^i |-> h(x)^i on B = F_q(t)[x]/(pi), built by chained multiplication
// with h(x).  The construction is only a linear map a priori; everything that
// makes it the order-2 algebra automorphism is verified before returning.
inline AlgebraMap<RatDom> build_eta(const StructAlgebra<RatDom>& B,
                                    const DeformationSpec& spec) {
    using Elem = StructAlgebra<RatDom>::Elem;
    const RatDom& dom = B.dom;
    size_t n = B.n;
    if (!B.power_basis) throw std::invalid_argument("build_eta needs a power-basis quotient");
    if ((size_t)spec.pi.deg() != n)
        throw std::invalid_argument("quotient dimension does not match deg pi");
    if (spec.h.deg() < 1 || (size_t)spec.h.deg() >= n)
        throw std::invalid_argument("deg h must lie strictly between 0 and deg pi");

    Elem hv = B.zero_elem();
    for (int i = 0; i <= spec.h.deg(); ++i) hv[(size_t)i] = spec.h.coeff(i);

    Mat<RatDom> M(dom, n, n);
    Elem cur = B.basis_elem(0);
    M.at(0, 0) = dom.one();
    for (size_t c = 1; c < n; ++c) {
        cur = B.mul(cur, hv);
        for (size_t r = 0; r < n; ++r) M.at(r, c) = cur[r];
    }

    // pi(h(x)) = 0 in B: sum the columns (= powers of h(x)) against pi's
    // coefficients, plus the one power the matrix does not hold.
    Elem acc = B.zero_elem();
    acc[0] = spec.pi.coeff(0);
    for (size_t c = 1; c < n; ++c) {
        const RatFunc& pc = spec.pi.coeff((int)c);
        if (dom.is_zero(pc)) continue;
        for (size_t r = 0; r < n; ++r)
            acc[r] = dom.add(acc[r], dom.mul(pc, M.at(r, c)));
    }
    Elem top = B.mul(cur, hv);  // h(x)^n
    acc = B.add(acc, B.scale(spec.pi.lc(), top));
    if (!B.is_zero_elem(acc)) throw std::logic_error("h(x) is not a root of pi");

    AlgebraMap<RatDom> eta{std::move(M)};
    if (!map_is_unital(B, eta)) throw std::logic_error("eta is not unital");
    if (!map_is_multiplicative_power_basis(B, eta))
        throw std::logic_error("eta is not multiplicative");
    if (!map_has_order_two(B, eta)) throw std::logic_error("eta^2 != id or eta = id");
    return eta;
}

// The deformation contract for eta against the undeformed Frobenius-type map:
//   eta(x) - x^s is exactly the t-part of h, with strictly positive valuation;
//   no matrix entry has a pole at t = 0;
//   at t = 0 the matrix becomes the permutation x^j |-> x^{s*j mod n}
//   (the map x |-> x^s on F_q[x]/(x^n - 1)).
// Returns false instead of throwing: this is the falsifiable check the tests
// drive with perturbed maps.
inline bool check_eta_deforms(const StructAlgebra<RatDom>& B, const AlgebraMap<RatDom>& eta,
                              const DeformationSpec& spec) {
    const RatDom& dom = B.dom;
    size_t n = B.n;
    if (eta.M.rows != n || eta.M.cols != n || (size_t)spec.pi.deg() != n) return false;
    if (spec.s < 2 || (size_t)spec.h.deg() != spec.s) return false;

    for (const auto& e : eta.M.a) {
        TAdic v = t_valuation(e);
        if (!v.infinite && v.v < 0) return false;
    }

    // eta(x) - x^s = h - x^s coordinate-wise, every term vanishing at t = 0
    Poly<RatDom> tpart = spec.h - Poly<RatDom>::xpow(dom, (int)spec.s);
    for (size_t r = 0; r < n; ++r) {
        RatFunc want = (int)r <= tpart.deg() ? tpart.coeff((int)r) : dom.zero();
        RatFunc got = eta.M.at(r, 1);
        if (r == spec.s) got = dom.sub(got, dom.one());
        if (!dom.eq(got, want)) return false;
        TAdic v = t_valuation(want);
        if (!v.infinite && v.v < 1) return false;
    }

    FFElem z = dom.F->zero();
    for (size_t c = 0; c < n; ++c) {
        size_t target = (spec.s * c) % n;
        for (size_t r = 0; r < n; ++r) {
            const RatFunc& e = eta.M.at(r, c);
            FFElem at0 = e.is_zero() ? z : eval_at_t(e, z);
            bool hit = r == target;
            if (hit ? !(at0.v == 1) : !(at0.v == 0)) return false;
        }
    }
    return true;
}

// Unit certificate for h(x) in B.  The default family carries a closed-form
// inverse,
//   w = x^{s-2} * (x^{s-1} + t*x)^{s-1} + t * (x^{s-1} + t*x),
// which is verified by multiplying out; the s5fix variant has no such form
// here, so its inverse is solved linearly and verified the same way.
inline std::vector<RatFunc> inverse_witness(const StructAlgebra<RatDom>& B,
                                            const DeformationSpec& spec) {
    using Elem = StructAlgebra<RatDom>::Elem;
    const RatDom& dom = B.dom;
    size_t n = B.n, s = spec.s;
    if (!B.power_basis || (size_t)spec.pi.deg() != n)
        throw std::invalid_argument("inverse_witness needs the power-basis quotient of pi");

    Elem hv = B.zero_elem();
    for (int i = 0; i <= spec.h.deg(); ++i) hv[(size_t)i] = spec.h.coeff(i);

    Elem w;
    if (spec.variant == Variant::Default) {
        RatFunc t = RatFunc::t(dom.F);
        Elem u = B.zero_elem();
        u[s - 1] = dom.add(u[s - 1], dom.one());
        u[1] = dom.add(u[1], t);
        Elem p = B.basis_elem(0);
        for (size_t k = 0; k + 1 < s; ++k) p = B.mul(p, u);  // u^{s-1}
        w = B.add(B.mul(B.basis_elem(s - 2), p), B.scale(t, u));
    } else {
        if (!solve(left_mul_matrix(B, hv), B.one, w))
            throw std::logic_error("h(x) is not invertible in B");
    }
    if (!B.eq_elem(B.mul(hv, w), B.one))
        throw std::logic_error("witness fails to invert h(x)");
    return w;
}

}  // namespace sepdef
