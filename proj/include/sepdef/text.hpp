#pragma once

#include "sepdef/ratfunc.hpp"

#include <cctype>
#include <string>

namespace sepdef {

/// Parse failure with the character position that caused it.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t at)
        : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

namespace textdetail {

inline std::string gsum_to_string(const FiniteField* F, uint64_t v) {
    // polynomial in the extension generator g, descending powers
    auto d = F->digits(v);
    std::string out;
    for (int i = (int)d.size() - 1; i >= 0; --i) {
        if (!d[i]) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(d[0]);
        } else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += 'g';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace textdetail

inline std::string ff_to_string(FFElem a) {
    if (a.v < a.F->p) return std::to_string(a.v);  // prime-subfield value
    return "[" + textdetail::gsum_to_string(a.F, a.v) + "]";
}

inline std::string tpoly_to_string(const TPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.deg(); i >= 0; --i) {
        if (!f.c[i]) continue;
        if (!out.empty()) out += '+';
        std::string cs = ff_to_string({f.F, f.c[i]});
        if (i == 0) {
            out += cs;
        } else {
            if (cs != "1") out += cs + "*";
            out += 't';
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string ratfunc_to_string(const RatFunc& r) {
    if (r.is_poly())
        return r.num.deg() <= 0 ? tpoly_to_string(r.num) : "(" + tpoly_to_string(r.num) + ")";
    return "(" + tpoly_to_string(r.num) + ")/(" + tpoly_to_string(r.den) + ")";
}

/// Single-string scanner shared by the scalar and polynomial grammars.
class TextScanner {
  public:
    explicit TextScanner(const std::string& s) : s_(s) {}

    size_t pos() const { return pos_; }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    char peek_at(size_t k) const { return pos_ + k >= s_.size() ? '\0' : s_[pos_ + k]; }
    bool accept(char c) {
        if (peek() == c) { ++pos_; return true; }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    uint64_t read_nat() {
        if (!std::isdigit((unsigned char)peek())) fail("expected a number");
        uint64_t v = 0;
        while (std::isdigit((unsigned char)peek())) {
            v = v * 10 + (uint64_t)(s_[pos_] - '0');
            if (v > (uint64_t)1 << 62) fail("number too large");
            ++pos_;
        }
        return v;
    }

    void expect_end() const {
        if (!done()) throw ParseError("unexpected trailing input", pos_);
    }

  private:
    const std::string& s_;
    size_t pos_ = 0;
};

namespace textdetail {

// gsum := gterm (('+'|'-') gterm)*, gterm := [nat '*'] 'g' ['^' nat] | nat
inline FFElem parse_gsum(TextScanner& sc, const FiniteField* F) {
    if (F->m < 2) sc.fail("no extension generator over a prime field");
    FFElem acc = F->zero();
    bool neg = sc.accept('-');
    while (true) {
        FFElem term;
        if (std::isdigit((unsigned char)sc.peek())) {
            uint64_t n = sc.read_nat();
            if (sc.accept('*')) {
                if (!sc.accept('g')) sc.fail("expected 'g'");
                uint64_t k = 1;
                if (sc.accept('^')) k = sc.read_nat();
                term = F->mul(F->from_int((long long)n), F->pow(F->gen(), (long long)k));
            } else {
                term = F->from_int((long long)n);
            }
        } else if (sc.accept('g')) {
            uint64_t k = 1;
            if (sc.accept('^')) k = sc.read_nat();
            term = F->pow(F->gen(), (long long)k);
        } else {
            sc.fail("expected a coefficient term");
        }
        acc = neg ? F->sub(acc, term) : F->add(acc, term);
        if (sc.accept('+')) neg = false;
        else if (sc.accept('-')) neg = true;
        else break;
    }
    return acc;
}

// coefficient atom inside t-polynomials: nat | '[' gsum ']'
inline FFElem parse_coeff_atom(TextScanner& sc, const FiniteField* F) {
    if (sc.accept('[')) {
        FFElem v = parse_gsum(sc, F);
        sc.expect(']');
        return v;
    }
    if (std::isdigit((unsigned char)sc.peek()))
        return F->from_int((long long)sc.read_nat());
    sc.fail("expected a coefficient");
}

// tsum := tterm (('+'|'-') tterm)*, tterm := coeff ['*' tpow] | tpow, tpow := 't' ['^' nat]
inline TPoly parse_tsum(TextScanner& sc, const FiniteField* F) {
    TPoly acc(F);
    bool neg = sc.accept('-');
    while (true) {
        FFElem coeff = F->one();
        long tdeg = 0;
        bool have_any = false;
        if (sc.peek() == '[' || std::isdigit((unsigned char)sc.peek())) {
            coeff = parse_coeff_atom(sc, F);
            have_any = true;
            // '*' belongs to this grammar only before 't'; leave "2*x" to the caller
            if (sc.peek() == '*' && sc.peek_at(1) == 't') {
                sc.expect('*');
                sc.expect('t');
                tdeg = 1;
                if (sc.accept('^')) tdeg = (long)sc.read_nat();
            }
        } else if (sc.accept('t')) {
            have_any = true;
            tdeg = 1;
            if (sc.accept('^')) tdeg = (long)sc.read_nat();
        }
        if (!have_any) sc.fail("expected a term");
        TPoly term(F, [&] {
            std::vector<uint64_t> c((size_t)tdeg + 1, 0);
            c[(size_t)tdeg] = coeff.v;
            return c;
        }());
        acc = neg ? tp_sub(acc, term) : tp_add(acc, term);
        if (sc.accept('+')) neg = false;
        else if (sc.accept('-')) neg = true;
        else break;
    }
    return acc;
}

}  // namespace textdetail

/// ratfunc := '(' ratfunc ')' | '(' tsum ')' ['/' '(' tsum ')'] | tsum
inline RatFunc parse_ratfunc(TextScanner& sc, const FiniteField* F) {
    if (sc.accept('(')) {
        RatFunc num;
        if (sc.peek() == '(') {  // nested, e.g. "((1)/(t))"
            num = parse_ratfunc(sc, F);
        } else {
            num = RatFunc::of(textdetail::parse_tsum(sc, F));
        }
        sc.expect(')');
        if (sc.accept('/')) {
            sc.expect('(');
            TPoly den = textdetail::parse_tsum(sc, F);
            sc.expect(')');
            if (den.is_zero()) sc.fail("zero denominator");
            return rf_div(num, RatFunc::of(std::move(den)));
        }
        return num;
    }
    return RatFunc::of(textdetail::parse_tsum(sc, F));
}

inline RatFunc parse_ratfunc(const std::string& s, const FiniteField* F) {
    TextScanner sc(s);
    RatFunc r = parse_ratfunc(sc, F);
    sc.expect_end();
    return r;
}

/// Finite-field scalar from the same grammar restricted to t-free input.
inline FFElem parse_ff(const std::string& s, const FiniteField* F) {
    TextScanner sc(s);
    TPoly v = textdetail::parse_tsum(sc, F);
    sc.expect_end();
    if (v.deg() > 0) throw ParseError("t is not allowed in a field constant", 0);
    return v.coeff(0);
}

}  // namespace sepdef
