#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepdef {

class FiniteField;

/// Element of a finite field; carries its parent so cross-field use is an error.
struct FFElem {
    const FiniteField* F = nullptr;
    uint64_t v = 0;  // packed base-p digits, digit i = coefficient of g^i

    bool operator==(const FFElem& o) const { return F == o.F && v == o.v; }
    bool operator!=(const FFElem& o) const { return !(*this == o); }
};

/// F_{p^m} with a monic irreducible modulus over F_p.  Instances are interned:
/// FiniteField::get returns one canonical object per (p, m, modulus), so parent
/// pointers compare equal iff the fields are the same.
class FiniteField {
  public:
    uint64_t p;
    int m;
    uint64_t q;                    // p^m
    std::vector<uint64_t> modulus; // coefficients, index = degree, modulus[m] = 1

    /// Field with the lexicographically least monic irreducible modulus
    /// (coefficients compared from degree m-1 down to 0).
    static const FiniteField* get(uint64_t p, int m = 1);
    /// Field with a caller-supplied monic irreducible modulus (checked).
    static const FiniteField* get(uint64_t p, const std::vector<uint64_t>& modulus);

    FFElem zero() const { return {this, 0}; }
    FFElem one() const { return {this, m == 0 ? 0 : 1u}; }
    FFElem gen() const {
        if (m < 2) throw std::logic_error("gen(): prime field has no extension generator");
        return {this, p};  // the class of g
    }
    /// Canonical representative of an integer in the prime subfield.
    FFElem from_int(long long n) const {
        long long r = n % (long long)p;
        if (r < 0) r += (long long)p;
        return {this, (uint64_t)r};
    }

    bool is_zero(FFElem a) const { check(a); return a.v == 0; }
    bool is_one(FFElem a) const { check(a); return a.v == 1; }

    FFElem add(FFElem a, FFElem b) const { check(a); check(b); return {this, addv(a.v, b.v)}; }
    FFElem sub(FFElem a, FFElem b) const { check(a); check(b); return {this, subv(a.v, b.v)}; }
    FFElem neg(FFElem a) const { check(a); return {this, negv(a.v)}; }
    FFElem mul(FFElem a, FFElem b) const { check(a); check(b); return {this, mulv(a.v, b.v)}; }
    FFElem inv(FFElem a) const {
        check(a);
        if (a.v == 0) throw std::domain_error("division by zero in finite field");
        return {this, invv(a.v)};
    }
    FFElem div(FFElem a, FFElem b) const { return mul(a, inv(b)); }
    FFElem pow(FFElem a, long long e) const;
    /// Frobenius x -> x^p.
    FFElem frobenius(FFElem a) const { return pow(a, (long long)p); }
    /// Inverse of the i-th Frobenius iterate (x -> x^{p^i})^{-1}.
    FFElem frobenius_inv(FFElem a, int i) const;

    // Raw-value arithmetic used by inner loops; values must belong to this field.
    uint64_t addv(uint64_t a, uint64_t b) const;
    uint64_t subv(uint64_t a, uint64_t b) const { return addv(a, negv(b)); }
    uint64_t negv(uint64_t a) const;
    uint64_t mulv(uint64_t a, uint64_t b) const;
    uint64_t invv(uint64_t a) const;

    // Digit (coefficient-of-g^i) access for packing-aware code.
    std::vector<uint64_t> digits(uint64_t v) const;
    uint64_t pack(const std::vector<uint64_t>& d) const;

    ~FiniteField() = default;
    FiniteField(const FiniteField&) = delete;
    FiniteField& operator=(const FiniteField&) = delete;

  private:
    FiniteField(uint64_t p_, int m_, std::vector<uint64_t> mod);
    void check(FFElem a) const {
        if (a.F != this) throw std::invalid_argument("finite-field element used with the wrong parent field");
    }
    uint64_t mul_poly(uint64_t a, uint64_t b) const;  // table-free multiply (used to build tables)
    void build_tables();

    std::vector<uint32_t> log_;  // index: packed value; log_[0] unused
    std::vector<uint32_t> exp_;  // length 2(q-1); exp_[i] = g^i packed
    bool tables_ = false;
};

namespace detail {

inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal F_p[x] helpers used only for modulus validation / search.
using PPoly = std::vector<uint64_t>;  // index = degree, values in [0,p)

inline int ppdeg(const PPoly& a) {
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}
inline PPoly ppmulmod(const PPoly& a, const PPoly& b, const PPoly& f, uint64_t p) {
    int df = ppdeg(f);
    PPoly r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    for (int d = ppdeg(r); d >= df; d = ppdeg(r)) {
        uint64_t c = r[d];
        for (int i = 0; i <= df; ++i) {
            uint64_t t = (c * f[i]) % p;
            r[d - df + i] = (r[d - df + i] + p * p - t) % p;  // p*p padding keeps it nonnegative
        }
    }
    r.resize(df > 0 ? df : 1);
    return r;
}
inline PPoly ppgcd(PPoly a, PPoly b, uint64_t p) {
    auto inv_mod = [p](uint64_t x) {
        uint64_t r = 1, e = p - 2, base = x % p;
        while (e) { if (e & 1) r = r * base % p; base = base * base % p; e >>= 1; }
        return r;
    };
    while (ppdeg(b) >= 0) {
        int db = ppdeg(b);
        uint64_t lcinv = inv_mod(b[db]);
        while (ppdeg(a) >= db) {
            int da = ppdeg(a);
            uint64_t c = a[da] * lcinv % p;
            for (int i = 0; i <= db; ++i)
                a[da - db + i] = (a[da - db + i] + p * p - c * b[i] % p) % p;
        }
        std::swap(a, b);
    }
    return a;
}

inline bool is_irreducible(const PPoly& f, uint64_t p) {
    int m = ppdeg(f);
    if (m < 1) return false;
    // x^{p^i} mod f by repeated p-th powering; a degree-m polynomial is irreducible
    // iff gcd(f, x^{p^i} - x) = 1 for 1 <= i < m and x^{p^m} = x mod f.
    PPoly xp = {0, 1};  // x
    for (int i = 1; i <= m; ++i) {
        PPoly acc = {1};
        PPoly base = xp;
        uint64_t e = p;
        while (e) {
            if (e & 1) acc = ppmulmod(acc, base, f, p);
            base = ppmulmod(base, base, f, p);
            e >>= 1;
        }
        xp = acc;  // x^{p^i} mod f
        PPoly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        if (i < m) {
            if (ppdeg(ppgcd(diff, f, p)) != 0) return false;
        } else {
            if (ppdeg(diff) >= 0) return false;  // x^{p^m} must equal x
        }
    }
    return true;
}

}  // namespace detail

inline FiniteField::FiniteField(uint64_t p_, int m_, std::vector<uint64_t> mod)
    : p(p_), m(m_), modulus(std::move(mod)) {
    q = 1;
    for (int i = 0; i < m; ++i) {
        if (q > (uint64_t)1 << 40) throw std::invalid_argument("field too large");
        q *= p;
    }
    if (m >= 2) {
        if (q > (uint64_t)1 << 20)
            throw std::invalid_argument("extension field too large for table-based arithmetic");
        build_tables();
    }
}

inline uint64_t FiniteField::addv(uint64_t a, uint64_t b) const {
    if (m == 1) { uint64_t s = a + b; return s >= p ? s - p : s; }
    if (p == 2) return a ^ b;
    uint64_t r = 0, mul = 1;
    while (a || b) {
        uint64_t s = a % p + b % p;
        if (s >= p) s -= p;
        r += s * mul;
        mul *= p;
        a /= p;
        b /= p;
    }
    return r;
}

inline uint64_t FiniteField::negv(uint64_t a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    uint64_t r = 0, mul = 1;
    while (a) {
        uint64_t d = a % p;
        r += (d ? p - d : 0) * mul;
        mul *= p;
        a /= p;
    }
    return r;
}

inline uint64_t FiniteField::mul_poly(uint64_t a, uint64_t b) const {
    // schoolbook product of digit vectors, reduced by the modulus
    std::vector<uint64_t> da = digits(a), db = digits(b);
    std::vector<uint64_t> prod(2 * m, 0);
    for (int i = 0; i < (int)da.size(); ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < (int)db.size(); ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (int d = 2 * m - 2; d >= m; --d) {
        uint64_t c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i)
            prod[d - m + i] = (prod[d - m + i] + (p - 1) * c % p * modulus[i]) % p;
    }
    prod.resize(m);
    return pack(prod);
}

inline uint64_t FiniteField::mulv(uint64_t a, uint64_t b) const {
    if (m == 1) return a * b % p;
    if (a == 0 || b == 0) return 0;
    if (tables_) return exp_[log_[a] + log_[b]];
    return mul_poly(a, b);
}

inline uint64_t FiniteField::invv(uint64_t a) const {
    if (a == 0) throw std::domain_error("division by zero in finite field");
    if (m == 1) {
        // Fermat
        uint64_t r = 1, e = p - 2, base = a;
        while (e) { if (e & 1) r = r * base % p; base = base * base % p; e >>= 1; }
        return r;
    }
    if (tables_) {
        uint32_t l = log_[a];
        return l == 0 ? 1 : exp_[(q - 1) - l];
    }
    // table-free fallback: a^{q-2}
    uint64_t r = 1, base = a, e = q - 2;
    while (e) { if (e & 1) r = mul_poly(r, base); base = mul_poly(base, base); e >>= 1; }
    return r;
}

inline FFElem FiniteField::pow(FFElem a, long long e) const {
    check(a);
    if (a.v == 0) {
        if (e < 0) throw std::domain_error("division by zero in finite field");
        return e == 0 ? one() : zero();
    }
    long long ord = (long long)(q - 1);
    long long r = e % ord;
    if (r < 0) r += ord;
    if (tables_ && m >= 2) {
        unsigned __int128 idx = (unsigned __int128)log_[a.v] * (uint64_t)r % (uint64_t)ord;
        return {this, exp_[(uint64_t)idx]};
    }
    uint64_t acc = 1, base = a.v;
    uint64_t ee = (uint64_t)r;
    while (ee) {
        if (ee & 1) acc = mulv(acc, base);
        base = mulv(base, base);
        ee >>= 1;
    }
    return {this, acc};
}

inline FFElem FiniteField::frobenius_inv(FFElem a, int i) const {
    check(a);
    int k = ((i % m) + m) % m;         // Frobenius has order m
    if (k == 0) return a;
    long long e = 1;
    for (int j = 0; j < m - k; ++j) e *= (long long)p;  // p^{m-k}
    return pow(a, e);
}

inline std::vector<uint64_t> FiniteField::digits(uint64_t v) const {
    std::vector<uint64_t> d(m, 0);
    for (int i = 0; i < m && v; ++i) { d[i] = v % p; v /= p; }
    return d;
}

inline uint64_t FiniteField::pack(const std::vector<uint64_t>& d) const {
    uint64_t v = 0;
    for (int i = (int)d.size() - 1; i >= 0; --i) v = v * p + d[i] % p;
    return v;
}

inline void FiniteField::build_tables() {
    // factor q-1, then find a generator by increasing packed value
    std::vector<uint64_t> pf;
    uint64_t n = q - 1;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) { pf.push_back(d); while (n % d == 0) n /= d; }
    if (n > 1) pf.push_back(n);

    auto powv = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        while (e) { if (e & 1) r = mul_poly(r, a); a = mul_poly(a, a); e >>= 1; }
        return r;
    };
    uint64_t g = 0;
    for (uint64_t cand = 2; cand < q; ++cand) {
        bool ok = true;
        for (uint64_t f : pf)
            if (powv(cand, (q - 1) / f) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }
    if (!g) throw std::logic_error("no generator found");
    log_.assign(q, 0);
    exp_.assign(2 * (q - 1), 0);
    uint64_t cur = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
        exp_[i] = (uint32_t)cur;
        exp_[i + (q - 1)] = (uint32_t)cur;
        log_[cur] = (uint32_t)i;
        cur = mul_poly(cur, g);
    }
    if (cur != 1) throw std::logic_error("generator order mismatch");
    tables_ = true;
}

inline const FiniteField* FiniteField::get(uint64_t p, int m) {
    if (!detail::is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (m == 1) return get(p, std::vector<uint64_t>{0, 1});  // modulus x (unused for m=1)
    // lexicographically least monic irreducible: scan codes whose digits are
    // (c_{m-1}, ..., c_0) in ascending order
    uint64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= p;
    for (uint64_t code = 0; code < qm; ++code) {
        // ascending code enumerates (c_{m-1},...,c_0) lexicographically: the
        // low code digit is c_0, and higher-degree coefficients weigh more
        std::vector<uint64_t> f(m + 1, 0);
        f[m] = 1;
        uint64_t c = code;
        for (int i = 0; i < m; ++i) { f[i] = c % p; c /= p; }
        if (detail::is_irreducible(f, p)) return get(p, f);
    }
    throw std::logic_error("no irreducible modulus found");
}

inline const FiniteField* FiniteField::get(uint64_t p, const std::vector<uint64_t>& modulus) {
    if (!detail::is_prime_u64(p)) throw std::invalid_argument("characteristic must be prime");
    int m = detail::ppdeg(modulus);
    if (m < 1) throw std::invalid_argument("modulus must be nonconstant");
    std::vector<uint64_t> mod(modulus.begin(), modulus.begin() + m + 1);
    for (auto& c : mod) c %= p;
    if (mod[m] != 1) throw std::invalid_argument("modulus must be monic");
    if (m == 1) mod = {0, 1};  // canonical: every degree-1 modulus gives the same F_p
    if (m >= 2 && !detail::is_irreducible(mod, p))
        throw std::invalid_argument("modulus is reducible");

    static std::mutex mu;
    static std::map<std::pair<std::pair<uint64_t, int>, std::vector<uint64_t>>,
                    std::unique_ptr<FiniteField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(std::make_pair(p, m), mod);
    auto it = registry.find(key);
    if (it == registry.end()) {
        auto* f = new FiniteField(p, m == 1 ? 1 : m, mod);
        it = registry.emplace(key, std::unique_ptr<FiniteField>(f)).first;
    }
    return it->second.get();
}

}  // namespace sepdef
