#pragma once

#include "sepdef/algebra.hpp"

namespace sepdef {

// Decomposition of a commutative separable B relative to an order-2
// automorphism eta: the "type 2" part is the largest ideal eta fixes
// pointwise, the "type 1" part is its complement.  Only the type 2 part
// contributes a correction term to the quadratic relation of the crossed
// product; everything here feeds that synthesis.

struct ComponentReport {
    int type = 1;               // 2: eta = id on the component, 1: eta moves it
    std::vector<RatFunc> e;     // component idempotent
    std::vector<RatFunc> q;     // unit of the component entering the y-term
    long n_e = 0;               // lattice depth of q^{1-p} * e (see below)
    size_t dim = 0;             // dimension of e*B
};

struct QtResult {
    size_t m = 1;               // exponent of the t-multiplier
    std::vector<RatFunc> c0, c1;  // deformed relation y^2 = c0 + c1*y
    std::vector<ComponentReport> components;
};

namespace engdetail {

// largest k such that some coordinate sits at valuation -k; the coordinates
// live on the monomial basis x^i, so this measures how far the element falls
// outside the F_q[t]-lattice spanned by the x^i
inline long lattice_depth(const std::vector<RatFunc>& v) {
    long d = 0;
    for (const auto& c : v) {
        TAdic val = t_valuation(c);
        if (!val.infinite && val.v < -d) d = -val.v;
    }
    return d;
}

// inverse of q inside the unital ideal e*B (q must be a unit there)
inline std::vector<RatFunc> ideal_inverse(const StructAlgebra<RatDom>& B,
                                          const std::vector<RatFunc>& q,
                                          const std::vector<RatFunc>& e) {
    const RatDom& dom = B.dom;
    RowSpace<RatDom> sp(dom, B.n);
    for (size_t j = 0; j < B.n; ++j) sp.insert(B.mul(e, B.basis_elem(j)));
    size_t r = sp.dim();
    if (r == 0) throw std::invalid_argument("ideal_inverse: zero ideal");
    Mat<RatDom> M(dom, B.n, r);
    for (size_t k = 0; k < r; ++k) {
        auto col = B.mul(q, sp.rows[k]);
        for (size_t i = 0; i < B.n; ++i) M.at(i, k) = col[i];
    }
    std::vector<RatFunc> mu;
    if (!solve(M, e, mu)) throw std::invalid_argument("ideal_inverse: not a unit of e*B");
    auto z = B.zero_elem();
    for (size_t k = 0; k < r; ++k)
        for (size_t i = 0; i < B.n; ++i)
            z[i] = dom.add(z[i], dom.mul(mu[k], sp.rows[k][i]));
    if (!B.eq_elem(B.mul(q, z), e))
        throw std::logic_error("ideal_inverse: verification product is off");
    return z;
}

}  // namespace engdetail

// Splits B = e2*B + e1*B along eta in characteristic 2:
//   Fix(eta)  ->  largest ideal inside it  ->  that ideal's identity e2.
// The list comes back with the type 2 entry first.  All the exactness this
// rests on is re-verified on the way out.
inline std::vector<ComponentReport> classify_components_comm_p2(
    const StructAlgebra<RatDom>& B, const AlgebraMap<RatDom>& eta) {
    const RatDom& dom = B.dom;
    if (dom.F->p != 2)
        throw std::invalid_argument("component classification is specific to characteristic 2");
    if (!B.commutative)
        throw std::invalid_argument("component classification needs a commutative algebra");

    auto fix = fixed_subspace(B, eta);
    auto ideal = largest_ideal_in(B, fix);
    auto e2 = unit_of_ideal(B, ideal);  // zero element when the ideal is zero
    auto e1 = B.sub(B.one, e2);

    if (!B.is_zero_elem(B.mul(e1, e2)))
        throw std::logic_error("component idempotents are not orthogonal");
    if (!B.eq_elem(B.mul(e1, e1), e1))
        throw std::logic_error("complementary idempotent fails");
    if (!B.eq_elem(eta.apply(e1), e1) || !B.eq_elem(eta.apply(e2), e2))
        throw std::logic_error("component idempotents are not eta-invariant");

    RowSpace<RatDom> isp(dom, B.n);
    for (auto& v : ideal) isp.insert(v);
    std::vector<std::vector<RatFunc>> fix1;
    for (size_t j = 0; j < B.n; ++j) {
        auto w = B.mul(e2, B.basis_elem(j));
        if (!B.eq_elem(eta.apply(w), w))
            throw std::logic_error("eta moves a point of the fixed ideal");
        if (!isp.contains(w))
            throw std::logic_error("e2*B escapes the fixed ideal");
    }
    for (auto& f : fix) fix1.push_back(B.mul(e1, f));
    if (!largest_ideal_in(B, fix1).empty())
        throw std::logic_error("the complement still contains a fixed ideal");

    std::vector<ComponentReport> out;
    if (!B.is_zero_elem(e2)) {
        ComponentReport c;
        c.type = 2;
        c.e = e2;
        c.q = e2;
        c.n_e = engdetail::lattice_depth(e2);
        c.dim = isp.dim();
        out.push_back(std::move(c));
    }
    if (!B.is_zero_elem(e1)) {
        ComponentReport c;
        c.type = 1;
        c.e = e1;
        c.q = e1;
        c.dim = B.n - isp.dim();
        out.push_back(std::move(c));
    }
    return out;
}

// smallest admissible exponent: strictly clears every type 2 lattice depth
inline size_t choose_m(const std::vector<ComponentReport>& components) {
    long d = 0;
    for (const auto& c : components)
        if (c.type == 2 && c.n_e > d) d = c.n_e;
    return (size_t)(1 + d);
}

// q_t from explicitly supplied components: 0 from type 1, -t^m * q^{1-p} * e
// from type 2, as the coefficient of y.  m must clear every lattice depth.
inline QtResult qt_formula_mode(const StructAlgebra<RatDom>& B,
                                const std::vector<ComponentReport>& components,
                                uint64_t p, size_t m) {
    const RatDom& dom = B.dom;
    if (p != dom.F->p)
        throw std::invalid_argument("formula exponent p must match the characteristic");
    if (m < 1) throw std::invalid_argument("m must be positive");

    RatFunc tm = RatFunc::one(dom.F);
    for (size_t k = 0; k < m; ++k) tm = dom.mul(tm, RatFunc::t(dom.F));

    QtResult r;
    r.m = m;
    r.c0 = B.one;
    r.c1 = B.zero_elem();
    r.components = components;
    for (const auto& comp : components) {
        if (comp.type != 2) continue;
        auto qp = comp.e;
        for (uint64_t k = 1; k < p; ++k) qp = B.mul(qp, comp.q);
        auto qinv = engdetail::ideal_inverse(B, qp, comp.e);  // q^{1-p} on e*B
        long depth = engdetail::lattice_depth(qinv);
        if ((long)m <= depth)
            throw std::invalid_argument("m does not clear the lattice depth of q^{1-p}");
        r.c1 = B.sub(r.c1, B.scale(tm, qinv));
    }
    return r;
}

// The characteristic-2 synthesis used by the pipeline: classify, pick the
// minimal m (callers may push it up, never down), and emit y^2 = 1 + t^m*e2*y.
// Away from characteristic 2 the relation stays undeformed.  The direct
// coefficient is cross-checked against the formula path before returning.
inline QtResult synthesize_qt(const StructAlgebra<RatDom>& B, const AlgebraMap<RatDom>& eta,
                              size_t m_override = 0) {
    const RatDom& dom = B.dom;
    if (dom.F->p != 2) {
        QtResult r;
        r.m = m_override ? m_override : 1;
        r.c0 = B.one;
        r.c1 = B.zero_elem();
        return r;
    }
    auto components = classify_components_comm_p2(B, eta);
    size_t m_min = choose_m(components);
    size_t m = m_override ? m_override : m_min;
    if (m < m_min)
        throw std::invalid_argument("m override sits below the minimal admissible exponent");

    QtResult r = qt_formula_mode(B, components, 2, m);
    if (!components.empty() && components[0].type == 2) {
        RatFunc tm = RatFunc::one(dom.F);
        for (size_t k = 0; k < m; ++k) tm = dom.mul(tm, RatFunc::t(dom.F));
        if (!B.eq_elem(r.c1, B.scale(tm, components[0].e)))
            throw std::logic_error("formula and direct coefficients disagree");
    } else if (!B.is_zero_elem(r.c1)) {
        throw std::logic_error("type 1 only, yet the correction term is nonzero");
    }
    for (const auto& c : r.c1) {
        TAdic v = t_valuation(c);
        if (!v.infinite && v.v < 1)
            throw std::logic_error("correction coefficient does not vanish at t = 0");
    }
    return r;
}

}  // namespace sepdef
