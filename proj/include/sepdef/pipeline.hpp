#pragma once
// One-command verification.  run_verify builds the deformation for a single s,
// runs every check in dependency order, samples specializations, and folds the
// outcome into a report; run_scan drives a range of s.  Reports are pure
// functions of (s, variant, options): serializing one twice gives identical
// bytes, and the parallel scan merges by index so worker scheduling cannot
// leak into the output.

#include <cstdint>
#include <future>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepdef/algfile.hpp"
#include "sepdef/deform.hpp"
#include "sepdef/engine.hpp"
#include "sepdef/groups.hpp"
#include "sepdef/radical.hpp"

namespace sepdef {

struct T0Sample {
  unsigned ext_degree = 1;
  std::string t0;
  size_t radical_dim = 0;
  bool operator==(const T0Sample&) const = default;
};

struct VerifyReport {
  size_t s = 0;
  uint64_t characteristic = 0;
  std::string field;    // coefficient field of the group algebra being deformed
  std::string variant;  // construction variant actually used
  size_t pi_degree = 0;
  bool pi_separable = false;
  bool reduction_ok = false;
  bool eta_order2_ok = false;
  bool eta_deforms_ok = false;
  bool inverse_witness_ok = false;
  size_t m = 0;
  std::vector<size_t> component_dims;  // [type 2, type 1]
  size_t crossed_dim = 0;
  std::vector<T0Sample> t0_samples;
  size_t t0_zero_radical_dim = 0;  // contrast: the special fiber must be non-semisimple
  bool fiber_identity_ok = false;  // t=0 table equals the undeformed crossed product
  bool group_iso_ok = false;       // undeformed crossed product matches the group algebra
  bool verdict = false;
  bool operator==(const VerifyReport&) const = default;
};

struct VerifyOptions {
  size_t samples = 3;
  unsigned ext_degree = 12;
  uint64_t seed = 0;
  size_t m_override = 0;  // 0 = minimal admissible m
};

// If pi is inseparable there is nothing downstream to verify: eta would still
// exist, but no choice of q_t can make the crossed product separable, so the
// report stops after the pi fields and the verdict stays "fail".
inline VerifyReport run_verify(size_t s, Variant variant = Variant::Default,
                               const VerifyOptions& opt = {}) {
  const FiniteField* F = FiniteField::get(2, 1);
  RatDom dom{F};
  FFDom k{F};

  VerifyReport r;
  r.s = s;
  r.characteristic = F->p;
  r.field = algfiledetail::field_name(k);
  r.variant = to_string(variant);

  auto spec = make_deformation(dom, s, variant);
  size_t n = spec.pi.deg();
  r.pi_degree = n;
  r.reduction_ok =
      reduce_mod_t(spec.pi) == Poly<FFDom>::xpow(k, n) + Poly<FFDom>::one(k);
  r.pi_separable = check_pi_separable(spec.pi);
  if (!r.pi_separable) return r;

  auto B = quotient_algebra(spec.pi);
  auto eta = build_eta(B, spec);
  r.eta_order2_ok = map_has_order_two(B, eta);
  r.eta_deforms_ok = check_eta_deforms(B, eta, spec);
  try {
    inverse_witness(B, spec);
    r.inverse_witness_ok = true;
  } catch (const std::logic_error&) {
    r.inverse_witness_ok = false;
  }

  auto qt = synthesize_qt(B, eta, opt.m_override);
  r.m = qt.m;
  size_t d2 = 0, d1 = 0;
  for (auto& c : qt.components) (c.type == 2 ? d2 : d1) += c.dim;
  r.component_dims = {d2, d1};

  auto C = crossed_product_c2(B, eta, qt.c0, qt.c1, CrossedValidation::Auto);
  r.crossed_dim = C.n;

  auto cert = certify_separable(C, opt.samples, opt.ext_degree, opt.seed);
  bool all_zero = true;
  for (auto& smp : cert.samples) {
    r.t0_samples.push_back({smp.ext_degree, ff_to_string(smp.t0), smp.radical_dim});
    if (smp.radical_dim > 0) all_zero = false;
  }

  auto S0 = specialize(C, FFElem{F, 0});
  r.t0_zero_radical_dim = radical_ff(S0).basis.size();

  auto B0 = quotient_algebra(Poly<FFDom>::xpow(k, n) + Poly<FFDom>::one(k));
  Mat<FFDom> M(k, n, n);
  for (size_t c = 0; c < n; ++c) M.at((s % n) * c % n, c) = k.one();
  auto X0 = crossed_product_c2(B0, AlgebraMap<FFDom>{M}, B0.basis_elem(0),
                               B0.zero_elem(), CrossedValidation::Auto);
  r.fiber_identity_ok = S0.n == X0.n;
  for (size_t i = 0; r.fiber_identity_ok && i < S0.n; ++i)
    for (size_t j = 0; r.fiber_identity_ok && j < S0.n; ++j)
      if (!algdetail::rows_equal(k, S0.row(i, j), X0.row(i, j)))
        r.fiber_identity_ok = false;
  r.group_iso_ok = iso_check_crossed_vs_group(s, k);

  r.verdict = r.reduction_ok && r.eta_order2_ok && r.eta_deforms_ok &&
              r.inverse_witness_ok && r.fiber_identity_ok && r.group_iso_ok &&
              all_zero && r.t0_zero_radical_dim > 0;
  return r;
}

// ---- report serialization ---------------------------------------------------

using ojson = nlohmann::ordered_json;

inline ojson report_to_json(const VerifyReport& r) {
  ojson j;
  j["schema"] = 1;
  j["s"] = r.s;
  j["char"] = r.characteristic;
  j["field"] = r.field;
  j["variant"] = r.variant;
  j["pi_degree"] = r.pi_degree;
  j["pi_separable"] = r.pi_separable;
  j["reduction_ok"] = r.reduction_ok;
  j["eta_order2_ok"] = r.eta_order2_ok;
  j["eta_deforms_ok"] = r.eta_deforms_ok;
  j["inverse_witness_ok"] = r.inverse_witness_ok;
  j["m"] = r.m;
  j["component_dims"] = r.component_dims;
  j["crossed_dim"] = r.crossed_dim;
  ojson arr = ojson::array();
  for (auto& smp : r.t0_samples)
    arr.push_back(ojson{{"ext_degree", smp.ext_degree},
                        {"t0", smp.t0},
                        {"radical_dim", smp.radical_dim}});
  j["t0_samples"] = std::move(arr);
  j["t0_zero_radical_dim"] = r.t0_zero_radical_dim;
  j["fiber_identity_ok"] = r.fiber_identity_ok;
  j["group_iso_ok"] = r.group_iso_ok;
  j["verdict"] = r.verdict ? "pass" : "fail";
  return j;
}

inline VerifyReport report_from_json(const ojson& j) {
  if (j.at("schema").get<int>() != 1)
    throw std::invalid_argument("unsupported report schema");
  VerifyReport r;
  r.s = j.at("s").get<size_t>();
  r.characteristic = j.at("char").get<uint64_t>();
  r.field = j.at("field").get<std::string>();
  r.variant = j.at("variant").get<std::string>();
  r.pi_degree = j.at("pi_degree").get<size_t>();
  r.pi_separable = j.at("pi_separable").get<bool>();
  r.reduction_ok = j.at("reduction_ok").get<bool>();
  r.eta_order2_ok = j.at("eta_order2_ok").get<bool>();
  r.eta_deforms_ok = j.at("eta_deforms_ok").get<bool>();
  r.inverse_witness_ok = j.at("inverse_witness_ok").get<bool>();
  r.m = j.at("m").get<size_t>();
  r.component_dims = j.at("component_dims").get<std::vector<size_t>>();
  r.crossed_dim = j.at("crossed_dim").get<size_t>();
  for (auto& e : j.at("t0_samples"))
    r.t0_samples.push_back({e.at("ext_degree").get<unsigned>(),
                            e.at("t0").get<std::string>(),
                            e.at("radical_dim").get<size_t>()});
  r.t0_zero_radical_dim = j.at("t0_zero_radical_dim").get<size_t>();
  r.fiber_identity_ok = j.at("fiber_identity_ok").get<bool>();
  r.group_iso_ok = j.at("group_iso_ok").get<bool>();
  std::string v = j.at("verdict").get<std::string>();
  if (v != "pass" && v != "fail") throw std::invalid_argument("bad verdict '" + v + "'");
  r.verdict = v == "pass";
  return r;
}

// ---- range scan -------------------------------------------------------------

// Even s and s+1 a power of 2 fall to older constructions; "novel" marks the
// rows those don't cover.
inline std::string novelty_of(size_t s) {
  if (s % 2 == 0) return "even-s";
  size_t q = s + 1;
  return (q & (q - 1)) == 0 ? "s+1-power-of-2" : "novel";
}

// s = 5 needs the corrected h; everything else runs the default construction.
inline Variant scan_variant(size_t s, bool force_default = false) {
  return (!force_default && s == 5) ? Variant::S5Fix : Variant::Default;
}

struct ScanRow {
  size_t s = 0;
  std::string variant;
  std::string novelty;
  size_t pi_degree = 0;
  bool pi_separable = false;
  bool reduction_ok = false;
  std::string mode;  // "full" below the verify cap, else "pi-only"
  size_t m = 0;                     // 0 when pi-only
  size_t crossed_dim = 0;           // 0 when pi-only
  size_t t0_zero_radical_dim = 0;   // 0 when pi-only
  bool pass = false;
  bool operator==(const ScanRow&) const = default;
};

struct ScanOptions {
  size_t s_lo = 2, s_hi = 20;
  size_t verify_cap = 12;
  unsigned parallel = 1;
  bool force_default_variant = false;
  VerifyOptions verify;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::vector<VerifyReport> reports;  // full-mode rows only, in row order
  bool all_pass = true;
};

namespace pipedetail {

struct ScanCell {
  ScanRow row;
  std::optional<VerifyReport> report;
};

inline ScanCell scan_one(size_t s, const ScanOptions& opt) {
  ScanCell cell;
  ScanRow& row = cell.row;
  Variant v = scan_variant(s, opt.force_default_variant);
  row.s = s;
  row.variant = to_string(v);
  row.novelty = novelty_of(s);
  if (s <= opt.verify_cap) {
    cell.report = run_verify(s, v, opt.verify);
    const VerifyReport& r = *cell.report;
    row.pi_degree = r.pi_degree;
    row.pi_separable = r.pi_separable;
    row.reduction_ok = r.reduction_ok;
    row.mode = "full";
    row.m = r.m;
    row.crossed_dim = r.crossed_dim;
    row.t0_zero_radical_dim = r.t0_zero_radical_dim;
    row.pass = r.verdict;
  } else {
    RatDom dom{FiniteField::get(2, 1)};
    FFDom k{dom.F};
    auto spec = make_deformation(dom, s, v);
    row.pi_degree = spec.pi.deg();
    row.reduction_ok = reduce_mod_t(spec.pi) ==
                       Poly<FFDom>::xpow(k, row.pi_degree) + Poly<FFDom>::one(k);
    row.pi_separable = check_pi_separable(spec.pi);
    row.mode = "pi-only";
    row.pass = row.pi_separable && row.reduction_ok;
  }
  return cell;
}

}  // namespace pipedetail

inline ScanResult run_scan(const ScanOptions& opt) {
  if (opt.s_lo < 2) throw std::invalid_argument("scan: s must be >= 2");
  if (opt.s_hi < opt.s_lo) throw std::invalid_argument("scan: empty s range");
  size_t count = opt.s_hi - opt.s_lo + 1;
  std::vector<pipedetail::ScanCell> cells(count);
  size_t workers = std::min<size_t>(std::max(1u, opt.parallel), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) cells[i] = pipedetail::scan_one(opt.s_lo + i, opt);
  } else {
    // the field registry is the one shared structure and it locks internally;
    // worker w owns indices w, w+W, ... so cell writes never alias
    std::vector<std::future<void>> fs;
    for (size_t w = 0; w < workers; ++w)
      fs.push_back(std::async(std::launch::async, [&, w] {
        for (size_t i = w; i < count; i += workers)
          cells[i] = pipedetail::scan_one(opt.s_lo + i, opt);
      }));
    for (auto& f : fs) f.get();
  }
  ScanResult res;
  for (auto& c : cells) {
    res.all_pass = res.all_pass && c.row.pass;
    res.rows.push_back(std::move(c.row));
    if (c.report) res.reports.push_back(std::move(*c.report));
  }
  return res;
}

// ---- CSV --------------------------------------------------------------------
//
// Fixed columns; pi-only rows leave the pipeline columns empty.  No field can
// contain a comma (numbers plus a closed label vocabulary), so the reader
// splits naively and the table round-trips byte-for-byte.

inline const char* kScanCsvHeader =
    "s,variant,novelty,pi_degree,pi_separable,reduction_ok,mode,m,crossed_dim,"
    "t0_zero_radical_dim,verdict";

inline std::string scan_rows_to_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream out;
  out << kScanCsvHeader << '\n';
  for (auto& r : rows) {
    out << r.s << ',' << r.variant << ',' << r.novelty << ',' << r.pi_degree << ','
        << (r.pi_separable ? "true" : "false") << ','
        << (r.reduction_ok ? "true" : "false") << ',' << r.mode << ',';
    if (r.mode == "full")
      out << r.m << ',' << r.crossed_dim << ',' << r.t0_zero_radical_dim;
    else
      out << ",,";
    out << ',' << (r.pass ? "pass" : "fail") << '\n';
  }
  return out.str();
}

inline std::vector<ScanRow> scan_rows_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader)
    throw std::invalid_argument("bad scan CSV header");
  auto split = [](const std::string& ln) {
    std::vector<std::string> f;
    size_t p = 0;
    while (true) {
      size_t q = ln.find(',', p);
      f.push_back(ln.substr(p, q == std::string::npos ? q : q - p));
      if (q == std::string::npos) return f;
      p = q + 1;
    }
  };
  auto num = [](const std::string& f) -> size_t { return f.empty() ? 0 : std::stoul(f); };
  auto boolean = [](const std::string& f) {
    if (f != "true" && f != "false") throw std::invalid_argument("bad CSV bool '" + f + "'");
    return f == "true";
  };
  std::vector<ScanRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line);
    if (f.size() != 11) throw std::invalid_argument("bad scan CSV row: " + line);
    ScanRow r;
    r.s = num(f[0]);
    r.variant = f[1];
    r.novelty = f[2];
    r.pi_degree = num(f[3]);
    r.pi_separable = boolean(f[4]);
    r.reduction_ok = boolean(f[5]);
    r.mode = f[6];
    r.m = num(f[7]);
    r.crossed_dim = num(f[8]);
    r.t0_zero_radical_dim = num(f[9]);
    if (f[10] != "pass" && f[10] != "fail")
      throw std::invalid_argument("bad CSV verdict '" + f[10] + "'");
    r.pass = f[10] == "pass";
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace sepdef
