// sepdef: separable deformations of the modular group algebras kG_s,
// G_s = C_{s^2-1} x| C_2 over GF(2).  Subcommands build the deformed
// polynomial, run the full verification pipeline for one s, scan a range,
// compute radicals of algebras from files, and inspect the groups themselves.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sepdef/algfile.hpp"
#include "sepdef/pipeline.hpp"

namespace {

using namespace sepdef;

Variant pick_variant(size_t s, const std::string& flag, bool force_default) {
  if (force_default) return Variant::Default;
  if (flag == "auto") return scan_variant(s);
  return parse_variant(flag);
}

std::pair<size_t, size_t> parse_range(const std::string& txt) {
  auto dots = txt.find("..");
  try {
    if (dots == std::string::npos) {
      size_t v = std::stoul(txt);
      return {v, v};
    }
    return {std::stoul(txt.substr(0, dots)), std::stoul(txt.substr(dots + 2))};
  } catch (...) {
    throw std::invalid_argument("bad s range '" + txt + "' (expected A..B)");
  }
}

const char* yn(bool b) { return b ? "true" : "false"; }

int cmd_pi(size_t s, Variant v) {
  RatDom dom{FiniteField::get(2, 1)};
  FFDom k{dom.F};
  auto spec = make_deformation(dom, s, v);
  size_t n = spec.pi.deg();
  bool reduction =
      reduce_mod_t(spec.pi) == Poly<FFDom>::xpow(k, n) + Poly<FFDom>::one(k);
  bool sep = check_pi_separable(spec.pi);
  std::cout << "s: " << s << '\n'
            << "variant: " << to_string(v) << '\n'
            << "h: " << poly_to_string(spec.h) << '\n'
            << "pi: " << poly_to_string(spec.pi) << '\n'
            << "pi_degree: " << n << '\n'
            << "pi_separable: " << yn(sep) << '\n'
            << "reduction_ok: " << yn(reduction) << '\n';
  return sep && reduction ? 0 : 2;
}

int cmd_verify(size_t s, Variant v, const VerifyOptions& opt, const std::string& json_path) {
  auto r = run_verify(s, v, opt);
  auto j = report_to_json(r);
  if (!json_path.empty()) {
    std::ofstream f(json_path);
    if (!f) throw std::runtime_error("cannot open " + json_path + " for writing");
    f << j.dump(2) << '\n';
  }
  for (auto& [key, val] : j.items()) {
    if (key == "t0_samples") {
      std::cout << "t0_samples:" << (val.empty() ? " none\n" : "\n");
      for (auto& smp : val)
        std::cout << "  ext_degree " << smp["ext_degree"].get<unsigned>() << "  t0 "
                  << smp["t0"].get<std::string>() << "  radical_dim "
                  << smp["radical_dim"].get<size_t>() << '\n';
    } else if (val.is_string()) {
      std::cout << key << ": " << val.get<std::string>() << '\n';
    } else {
      std::cout << key << ": " << val.dump() << '\n';
    }
  }
  return r.verdict ? 0 : 2;
}

int cmd_scan(const ScanOptions& opt, const std::string& csv_path) {
  auto res = run_scan(opt);
  std::cout << std::left << std::setw(4) << "s" << std::setw(9) << "variant"
            << std::setw(16) << "novelty" << std::setw(7) << "degpi" << std::setw(11)
            << "separable" << std::setw(9) << "mode" << std::setw(4) << "m"
            << std::setw(9) << "crossed" << std::setw(10) << "rad(t=0)"
            << "verdict" << '\n';
  for (auto& r : res.rows) {
    std::cout << std::left << std::setw(4) << r.s << std::setw(9) << r.variant
              << std::setw(16) << r.novelty << std::setw(7) << r.pi_degree
              << std::setw(11) << yn(r.pi_separable) << std::setw(9) << r.mode;
    if (r.mode == "full")
      std::cout << std::setw(4) << r.m << std::setw(9) << r.crossed_dim
                << std::setw(10) << r.t0_zero_radical_dim;
    else
      std::cout << std::setw(4) << "-" << std::setw(9) << "-" << std::setw(10) << "-";
    std::cout << (r.pass ? "pass" : "FAIL") << '\n';
  }
  if (!csv_path.empty()) {
    std::ofstream f(csv_path);
    if (!f) throw std::runtime_error("cannot open " + csv_path + " for writing");
    f << scan_rows_to_csv(res.rows);
  }
  return res.all_pass ? 0 : 2;
}

int cmd_radical(const std::string& path) {
  auto any = read_algebra_file(path);
  if (std::holds_alternative<StructAlgebra<RatDom>>(any))
    throw std::invalid_argument(
        path + " is an algebra over a rational function field; "
               "the radical command needs a finite base field");
  const auto& A = std::get<StructAlgebra<FFDom>>(any);
  auto rad = radical_ff(A);
  auto Q = rad.basis.empty() ? A : quotient_by_ideal(A, rad.basis);
  std::cout << "file: " << path << '\n'
            << "dim: " << A.n << '\n'
            << "base_field: " << algfiledetail::field_name(A.dom) << '\n'
            << "radical_dim: " << rad.basis.size() << '\n'
            << "nilpotency_exponent: " << rad.nilpotency_exponent << '\n'
            << "semisimple: " << yn(rad.basis.empty()) << '\n'
            << "components: " << center(Q).size() << '\n';
  return 0;
}

int cmd_group(size_t s, bool check_iso) {
  auto G = gs_group(s);
  std::cout << "group: " << G.name << '\n'
            << "order: " << G.order << '\n'
            << "structure: C" << s * s - 1 << " x| C2, involution r -> r^" << s << '\n';
  if (!check_iso) return 0;
  FFDom k{FiniteField::get(2, 1)};
  bool ok = iso_check_crossed_vs_group(s, k);
  std::cout << "crossed_vs_group_iso: " << (ok ? "pass" : "fail") << '\n';
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separable deformations of the modular group algebras kG_s"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value config file ([section] per subcommand); flags win");

  size_t pi_s = 0, verify_s = 0, group_s = 0;
  std::string pi_variant = "auto", verify_variant = "auto";
  bool pi_force = false, verify_force = false, scan_force = false, check_iso = false;
  VerifyOptions vopt, sopt_v;
  std::string json_path, csv_path, range_txt = "2..20", alg_path;
  ScanOptions sopt;

  auto* pi = app.add_subcommand("pi", "build pi for one s and check degree/reduction/separability");
  pi->add_option("--s", pi_s, "family parameter, s >= 2")->required();
  pi->add_option("--variant", pi_variant, "default | s5fix | auto")->capture_default_str();
  pi->add_flag("--force-default-variant", pi_force, "use the default h even at s = 5");

  auto* verify = app.add_subcommand("verify", "full deformation pipeline for one s");
  verify->add_option("--s", verify_s, "family parameter, s >= 2")->required();
  verify->add_option("--variant", verify_variant, "default | s5fix | auto")->capture_default_str();
  verify->add_flag("--force-default-variant", verify_force, "use the default h even at s = 5");
  verify->add_option("--samples", vopt.samples, "specialization sample count")->capture_default_str();
  verify->add_option("--ext", vopt.ext_degree, "extension degree for sampled t0")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "sampling seed")->envname("SEPDEF_SEED")->capture_default_str();
  verify->add_option("--m", vopt.m_override, "override the exponent m upward (0 = minimal)")
      ->capture_default_str();
  verify->add_option("--json", json_path, "write the report as JSON to this path");

  auto* scan = app.add_subcommand("scan", "run the pipeline across a range of s");
  scan->add_option("--s-range,--s", range_txt, "range A..B")->capture_default_str();
  scan->add_option("--verify-cap", sopt.verify_cap,
                   "run the full pipeline for s up to this bound; larger s get pi-only checks")
      ->capture_default_str();
  scan->add_option("--parallel", sopt.parallel, "worker count")->capture_default_str();
  scan->add_option("--samples", sopt_v.samples, "specialization sample count")->capture_default_str();
  scan->add_option("--ext", sopt_v.ext_degree, "extension degree for sampled t0")->capture_default_str();
  scan->add_option("--seed", sopt_v.seed, "sampling seed")->envname("SEPDEF_SEED")->capture_default_str();
  scan->add_flag("--force-default-variant", scan_force, "use the default h even at s = 5");
  scan->add_option("--csv", csv_path, "write the table as CSV to this path");

  auto* radical = app.add_subcommand("radical", "Jacobson radical of an algebra file");
  radical->add_option("file", alg_path, "algebra file over a finite field")->required();

  auto* group = app.add_subcommand("group", "the group G_s behind the construction");
  group->add_option("--s", group_s, "family parameter, s >= 2")->required();
  group->add_flag("--check-iso", check_iso, "check crossed product vs group algebra tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (pi->parsed()) return cmd_pi(pi_s, pick_variant(pi_s, pi_variant, pi_force));
    if (verify->parsed())
      return cmd_verify(verify_s, pick_variant(verify_s, verify_variant, verify_force), vopt,
                        json_path);
    if (scan->parsed()) {
      auto [lo, hi] = parse_range(range_txt);
      sopt.s_lo = lo;
      sopt.s_hi = hi;
      sopt.force_default_variant = scan_force;
      sopt.verify = sopt_v;
      return cmd_scan(sopt, csv_path);
    }
    if (radical->parsed()) return cmd_radical(alg_path);
    if (group->parsed()) return cmd_group(group_s, check_iso);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
