#pragma once
// Text serialization of structure-constant algebras.
//
//   sepdef-algebra 1
//   dim 3
//   base_field GF(2)(t)
//   labels 1 x x^2
//   one 1 0 0
//   table
//   <n*n lines, line (i,j) = coordinates of b_i * b_j>
//   end
//
// Scalar entries use the same text grammar as the rest of the library, so a
// written file parses back to bit-identical structure constants.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sepdef/algebra.hpp"

namespace sepdef {

struct AlgFileError : std::runtime_error {
  size_t line;
  AlgFileError(size_t l, const std::string& msg)
      : std::runtime_error("line " + std::to_string(l) + ": " + msg), line(l) {}
};

using AnyAlgebra = std::variant<StructAlgebra<FFDom>, StructAlgebra<RatDom>>;

namespace algfiledetail {

inline std::string field_name(const FFDom& d) {
  std::string s = "GF(" + std::to_string(d.F->p);
  if (d.F->m > 1) s += "^" + std::to_string(d.F->m);
  return s + ")";
}
inline std::string field_name(const RatDom& d) {
  return field_name(FFDom{d.F}) + "(t)";
}

template <class D>
void write_body(std::ostream& os, const StructAlgebra<D>& A) {
  os << "sepdef-algebra 1\n";
  os << "dim " << A.n << "\n";
  os << "base_field " << field_name(A.dom) << "\n";
  os << "labels";
  for (auto& l : A.labels) os << " " << l;
  os << "\n";
  os << "one";
  for (auto& c : A.one) os << " " << A.dom.to_string(c);
  os << "\n";
  os << "table\n";
  auto z = A.dom.to_string(A.dom.zero());
  for (size_t i = 0; i < A.n; ++i)
    for (size_t j = 0; j < A.n; ++j) {
      const auto& r = A.row(i, j);
      size_t k = 0;
      for (size_t c = 0; c < A.n; ++c) {
        if (c) os << " ";
        if (k < r.e.size() && r.e[k].first == c)
          os << A.dom.to_string(r.e[k++].second);
        else
          os << z;
      }
      os << "\n";
    }
  os << "end\n";
}

struct LineReader {
  std::istream& is;
  size_t line = 0;
  bool next(std::string& out) {
    while (std::getline(is, out)) {
      ++line;
      size_t a = out.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;  // skip blank lines
      if (out[a] == '#') continue;           // and comments
      size_t b = out.find_last_not_of(" \t\r");
      out = out.substr(a, b - a + 1);
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw AlgFileError(line, msg); }
};

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

template <class D>
StructAlgebra<D> read_body(LineReader& lr, const D& dom, size_t n,
                           const std::vector<std::string>& labels,
                           const std::vector<std::string>& one_toks,
                           AssocPolicy policy) {
  auto parse_one = [&](const std::string& tok) {
    TextScanner sc{tok};
    auto v = dom.parse_scalar(sc);
    sc.expect_end();
    return v;
  };
  if (one_toks.size() != n) lr.fail("expected " + std::to_string(n) + " entries for one");
  typename StructAlgebra<D>::Elem one;
  for (auto& tk : one_toks) {
    try {
      one.push_back(parse_one(tk));
    } catch (const ParseError& e) {
      lr.fail("bad scalar '" + tk + "': " + e.what());
    }
  }
  std::string ln;
  if (!lr.next(ln) || ln != "table") lr.fail("expected 'table'");
  std::vector<RowPtr<D>> rows(n * n);
  for (size_t idx = 0; idx < n * n; ++idx) {
    if (!lr.next(ln)) lr.fail("unexpected end of file inside table");
    auto toks = split_ws(ln);
    if (toks.size() != n)
      lr.fail("table row " + std::to_string(idx / n) + "," + std::to_string(idx % n) +
              ": expected " + std::to_string(n) + " entries, got " +
              std::to_string(toks.size()));
    auto r = std::make_shared<SpRow<D>>();
    for (size_t c = 0; c < n; ++c) {
      try {
        auto v = parse_one(toks[c]);
        if (!dom.is_zero(v)) r->e.emplace_back((uint32_t)c, v);
      } catch (const ParseError& e) {
        lr.fail("bad scalar '" + toks[c] + "': " + e.what());
      }
    }
    rows[idx] = std::move(r);
  }
  if (!lr.next(ln) || ln != "end") lr.fail("expected 'end'");
  try {
    return make_algebra(dom, labels, std::move(rows), std::move(one), policy);
  } catch (const std::exception& e) {
    lr.fail(std::string("algebra validation failed: ") + e.what());
  }
}

}  // namespace algfiledetail

template <class D>
void write_algebra(std::ostream& os, const StructAlgebra<D>& A) {
  algfiledetail::write_body(os, A);
}

template <class D>
void write_algebra_file(const std::string& path, const StructAlgebra<D>& A) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_algebra(f, A);
}

inline AnyAlgebra read_algebra(std::istream& is, AssocPolicy policy = AssocPolicy::Full) {
  using namespace algfiledetail;
  LineReader lr{is};
  std::string ln;
  if (!lr.next(ln)) lr.fail("empty file");
  {
    auto toks = split_ws(ln);
    if (toks.size() != 2 || toks[0] != "sepdef-algebra" || toks[1] != "1")
      lr.fail("expected header 'sepdef-algebra 1'");
  }
  if (!lr.next(ln)) lr.fail("missing dim");
  size_t n = 0;
  {
    auto toks = split_ws(ln);
    if (toks.size() != 2 || toks[0] != "dim") lr.fail("expected 'dim <n>'");
    try {
      n = std::stoul(toks[1]);
    } catch (...) {
      lr.fail("bad dimension '" + toks[1] + "'");
    }
    if (n == 0) lr.fail("dimension must be positive");
  }
  if (!lr.next(ln)) lr.fail("missing base_field");
  std::string fieldspec;
  {
    auto toks = split_ws(ln);
    if (toks.size() != 2 || toks[0] != "base_field") lr.fail("expected 'base_field ...'");
    fieldspec = toks[1];
  }
  // GF(p), GF(p^m), GF(p)(t), GF(p^m)(t)
  bool rat = false;
  std::string core = fieldspec;
  if (core.size() >= 3 && core.compare(core.size() - 3, 3, "(t)") == 0) {
    rat = true;
    core = core.substr(0, core.size() - 3);
  }
  uint64_t p = 0, m = 1;
  {
    if (core.size() < 5 || core.compare(0, 3, "GF(") != 0 || core.back() != ')')
      lr.fail("unrecognized base_field '" + fieldspec + "'");
    std::string inner = core.substr(3, core.size() - 4);
    auto caret = inner.find('^');
    try {
      if (caret == std::string::npos) {
        p = std::stoull(inner);
      } else {
        p = std::stoull(inner.substr(0, caret));
        m = std::stoull(inner.substr(caret + 1));
      }
    } catch (...) {
      lr.fail("unrecognized base_field '" + fieldspec + "'");
    }
  }
  const FiniteField* F;
  try {
    F = FiniteField::get(p, m);
  } catch (const std::exception& e) {
    lr.fail(std::string("bad base_field: ") + e.what());
  }
  if (!lr.next(ln)) lr.fail("missing labels");
  auto lab_toks = split_ws(ln);
  if (lab_toks.empty() || lab_toks[0] != "labels") lr.fail("expected 'labels ...'");
  lab_toks.erase(lab_toks.begin());
  if (lab_toks.size() != n) lr.fail("expected " + std::to_string(n) + " labels");
  if (!lr.next(ln)) lr.fail("missing one");
  auto one_toks = split_ws(ln);
  if (one_toks.empty() || one_toks[0] != "one") lr.fail("expected 'one ...'");
  one_toks.erase(one_toks.begin());

  if (rat)
    return algfiledetail::read_body(lr, RatDom{F}, n, lab_toks, one_toks, policy);
  return algfiledetail::read_body(lr, FFDom{F}, n, lab_toks, one_toks, policy);
}

inline AnyAlgebra read_algebra_file(const std::string& path,
                                    AssocPolicy policy = AssocPolicy::Full) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_algebra(f, policy);
}

}  // namespace sepdef
