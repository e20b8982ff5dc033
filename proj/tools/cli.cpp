#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "radmap/continuum.hpp"
#include "radmap/harness.hpp"
#include "radmap/mapping.hpp"
#include "radmap/profiles.hpp"
#include "radmap/verify.hpp"

namespace radmap::cli {

namespace {

using nlohmann::json;

enum class Format { json_fmt, csv, text };

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json_fmt;
  if (f == "csv") return Format::csv;
  if (f == "text") return Format::text;
  throw std::invalid_argument("unknown format '" + f + "'");
}

struct Sink {
  std::ostream& fallback;
  std::string path;

  void write(const std::string& payload) const {
    if (path.empty()) {
      fallback << payload;
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    out << payload;
  }
};

// rows as (column -> value) with a fixed column order
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  void add_row(std::initializer_list<json> values) { rows.emplace_back(values); }

  json to_json() const {
    json out = json::array();
    for (const auto& r : rows) {
      json obj;
      for (size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
      out.push_back(obj);
    }
    return out;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << std::setprecision(17);
    for (size_t i = 0; i < columns.size(); ++i)
      os << columns[i] << (i + 1 < columns.size() ? ',' : '\n');
    for (const auto& r : rows) {
      for (size_t i = 0; i < r.size(); ++i) {
        if (r[i].is_number_float())
          os << r[i].get<double>();
        else
          os << r[i].dump();
        os << (i + 1 < r.size() ? ',' : '\n');
      }
    }
    return os.str();
  }

  std::string to_text() const {
    std::ostringstream os;
    os << std::setprecision(12);
    for (const auto& c : columns) os << std::setw(18) << c;
    os << '\n';
    for (const auto& r : rows) {
      for (const auto& v : r) {
        if (v.is_number_float())
          os << std::setw(18) << v.get<double>();
        else
          os << std::setw(18) << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      os << '\n';
    }
    return os.str();
  }
};

std::string render(const Table& table, const std::string& command, Format fmt) {
  if (fmt == Format::csv) return table.to_csv();
  if (fmt == Format::text) return table.to_text();
  json out{{"command", command}, {"rows", table.to_json()}};
  return out.dump(2) + "\n";
}

json report_to_json(const mapping::MapReport& r) {
  return json{{"d_star", r.d_star},
              {"n_star", r.n_star},
              {"l_star", r.l_star},
              {"D_star", r.D_star},
              {"N_star", r.N_star},
              {"L_star", r.L_star},
              {"a", r.a},
              {"A", r.A},
              {"K", r.K},
              {"max_pointwise_rel_error", r.max_pointwise_rel_error},
              {"energy_residual", r.energy_residual},
              {"k_norm_deviation", r.k_norm_deviation},
              {"k_verified", r.k_verified},
              {"k_convention", r.k_convention}};
}

json suite_to_json(const harness::SuiteResult& s) {
  json checks = json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"value", c.value},
                      {"tolerance", c.tolerance}});
  }
  return json{{"suite", s.suite},
              {"passed", s.all_passed()},
              {"runtime_seconds", s.runtime_seconds},
              {"checks", checks}};
}

constexpr double kMapPointwiseTol = 1e-10;
constexpr double kMapEnergyTol = 1e-12;
constexpr double kContinuumResidualTol = 1e-6;
constexpr double kContinuumRatioTol = 1e-8;

struct MapCmd {
  std::string kind;
  int d = 3, n = 1, l = 0, lambda = 0;
  std::string profile, osc_profile;
  int J = 0;
  bool has_J = false;
  std::string exact = "coulomb";
  double E = 1.0;
  std::string sign = "outgoing";
};

int run_map(const MapCmd& c, const Sink& sink) {
  json out{{"command", "map"}, {"kind", c.kind}};
  bool pass = true;

  if (c.kind == "classic") {
    const auto r = mapping::classic_map(c.d, c.lambda, c.n, c.l);
    const auto target = systems::oscillator_state(r.image);
    double sup = 0.0, err = 0.0;
    for (double Y : systems::oscillator_grid()) {
      sup = std::max(sup, std::abs(target(Y).value));
      err = std::max(err, std::abs(r.transported(Y).value - target(Y).value));
    }
    const double E = systems::coulomb_energy({c.d, c.n, c.l});
    const double energy_residual =
        std::abs(systems::oscillator_energy(r.image) - 2.0 * std::sqrt(1.0 / -E));
    pass = err / sup <= kMapPointwiseTol && energy_residual <= kMapEnergyTol;
    out["image"] = {{"D", r.image.D}, {"N", r.image.N}, {"L", r.image.L}};
    out["K"] = r.K;
    out["max_pointwise_rel_error"] = err / sup;
    out["energy_residual"] = energy_residual;
  } else if (c.kind == "general" || c.kind == "three-dim") {
    mapping::MapSpec spec = [&] {
      if (c.kind == "three-dim") {
        const auto which = c.exact == "oscillator"
                               ? mapping::ThreeDimExact::oscillator_exact
                               : mapping::ThreeDimExact::coulomb_exact;
        return mapping::three_dim_map(c.lambda, which, c.n, c.l);
      }
      const auto cp = c.profile.empty() ? sqdt::CoulombDefectProfile{}
                                        : profiles::load_coulomb_profile(c.profile);
      sqdt::OscillatorDefectProfile op;
      if (!c.osc_profile.empty()) {
        op = profiles::load_oscillator_profile(c.osc_profile);
      } else {
        // derive the oscillator side from A = 2a with I = 0
        op.dim_shift = c.has_J ? c.J : 0;
        op.tail_defect = 0.5 * op.dim_shift -
                         2.0 * (cp.tail_filled - cp.tail_defect);
        for (const auto& row : cp.rows) {
          op.rows.push_back({2 * row.l + c.lambda, 0,
                             0.5 * op.dim_shift - 2.0 * (row.filled - row.defect)});
        }
      }
      return mapping::make_map_spec(c.lambda, cp, c.d, c.n, c.l, op);
    }();
    const auto res = mapping::general_map(spec);
    pass = res.report.max_pointwise_rel_error <= kMapPointwiseTol &&
           res.report.energy_residual <= kMapEnergyTol && res.report.k_verified;
    out["report"] = report_to_json(res.report);
    out["base_image"] = {{"D", spec.D}, {"N", spec.N}, {"L", spec.L}};
  } else if (c.kind == "continuum" || c.kind == "repulsive") {
    const auto sign = c.sign == "incoming" ? continuum::WaveSign::incoming
                                           : continuum::WaveSign::outgoing;
    const auto r = c.kind == "continuum"
                       ? continuum::continuum_map(c.d, c.E, c.l, c.lambda, sign)
                       : continuum::repulsive_map(c.d, c.E, c.l, c.lambda, sign);
    const auto op = continuum::inverted_oscillator_operator(r.D, r.L, r.F);
    const double residual =
        verify::residual_scan(op, r.transported.eval,
                              continuum::oscillator_continuum_grid())
            .max_rel;
    pass =
        r.ratio_deviation <= kContinuumRatioTol && residual <= kContinuumResidualTol;
    out["image"] = {{"D", r.D}, {"L", r.L}, {"F", r.F}};
    out["ratio_deviation"] = r.ratio_deviation;
    out["fitted_constant"] = {{"re", r.fitted_constant.real()},
                              {"im", r.fitted_constant.imag()}};
    out["residual"] = residual;
  } else {
    throw std::invalid_argument("unknown map kind '" + c.kind + "'");
  }

  out["passed"] = pass;
  sink.write(out.dump(2) + "\n");
  return pass ? 0 : 1;
}

int run_table1(bool check, const Sink& sink, Format fmt) {
  const auto rows = mapping::sodium_table(1);
  Table table;
  table.columns = {"l", "i", "n_min", "ns_min", "delta",
                   "L", "I", "N_min", "Ns_min", "Delta"};
  for (const auto& r : rows) {
    table.add_row({r.l, r.i, r.n_min, r.ns_min, r.delta, r.L, r.I, r.N_min,
                   r.Ns_min, r.Delta});
  }

  int code = 0;
  json check_block;
  if (check) {
    const auto suite = harness::table1_reproduction();
    check_block = suite_to_json(suite);
    code = suite.all_passed() ? 0 : 1;
  }

  if (fmt == Format::text) {
    // the text view rounds the derived defect to its published precision
    static const int decimals[5] = {2, 3, 2, 2, 1};
    std::ostringstream os;
    os << "  l  i  n>=  ns>=  delta      L  I  N>=  Ns>=  Delta\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << std::setw(3) << r.l << std::setw(3) << r.i << std::setw(5) << r.n_min
         << std::setw(6) << r.ns_min << "  " << std::fixed << std::setprecision(3)
         << r.delta << std::defaultfloat << std::setw(6) << r.L << std::setw(3)
         << r.I << std::setw(5) << r.N_min << std::setw(6) << r.Ns_min << "  "
         << std::fixed << std::setprecision(decimals[i]) << r.Delta
         << std::defaultfloat << '\n';
    }
    if (check) os << (code == 0 ? "check: pass\n" : "check: FAIL\n");
    sink.write(os.str());
  } else if (fmt == Format::csv) {
    sink.write(table.to_csv());
  } else {
    json out{{"command", "table1"}, {"rows", table.to_json()}};
    if (check) out["check"] = check_block;
    sink.write(out.dump(2) + "\n");
  }
  return code;
}

int run_verify(const std::string& suite, int d, int l, const std::string& profile,
               const Sink& sink) {
  std::vector<harness::SuiteResult> results;
  if (suite == "orthonormality") {
    results.push_back(harness::orthonormality());
  } else if (suite == "residuals") {
    results.push_back(harness::eigen_residuals());
  } else if (suite == "susy") {
    results.push_back(harness::susy_structure(d, l));
  } else if (suite == "maps") {
    results.push_back(harness::classic_map_identities());
    results.push_back(harness::odd_dimension_map());
    results.push_back(harness::three_dim_special_cases());
    results.push_back(harness::figure_commutativity());
    results.push_back(harness::continuum_maps());
  } else if (suite == "fd-oracle") {
    const auto p = profile.empty() ? sqdt::sodium_coulomb_profile()
                                   : profiles::load_coulomb_profile(profile);
    results.push_back(harness::fd_oracle(p, l));
  } else if (suite == "all") {
    results = harness::run_all();
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }

  bool all = true;
  json suites = json::array();
  for (const auto& r : results) {
    all = all && r.all_passed();
    suites.push_back(suite_to_json(r));
  }
  json out{{"command", "verify"}, {"passed", all}, {"suites", suites}};
  sink.write(out.dump(2) + "\n");
  return all ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"radial Coulomb <-> oscillator systems: spectra, wave functions, "
               "quadratic maps, and verification"};
  app.name("radmap");
  app.require_subcommand(1);
  app.fallthrough();  // --format / --output may follow the subcommand

  std::string format = "json";
  std::string output_path;
  app.add_option("--format", format, "json, csv, or text")->capture_default_str();
  app.add_option("--output", output_path, "write to a file instead of stdout");

  int exit_code = 0;

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue tables");
  std::string sp_system;
  int sp_d = 3, sp_l = 0, sp_D = 3, sp_L = 0, sp_nmax = 0, sp_count = 4;
  std::string sp_profile = "sodium";
  spectrum
      ->add_option("system", sp_system,
                   "coulomb|oscillator|sqdt-coulomb|sqdt-oscillator")
      ->required()
      ->check(CLI::IsMember(
          {"coulomb", "oscillator", "sqdt-coulomb", "sqdt-oscillator"}));
  spectrum->add_option("--d", sp_d, "Coulomb dimension (>= 2)");
  spectrum->add_option("--l", sp_l, "Coulomb angular momentum");
  spectrum->add_option("--D", sp_D, "oscillator dimension (>= 1)");
  spectrum->add_option("--L", sp_L, "oscillator angular momentum");
  spectrum->add_option("--n-max", sp_nmax, "largest principal quantum number");
  spectrum->add_option("--count", sp_count, "number of levels");
  spectrum->add_option("--profile", sp_profile, "defect profile path or 'sodium'");
  spectrum->callback([&] {
    Table table;
    if (sp_system == "coulomb") {
      const int n_hi = sp_nmax > 0 ? sp_nmax : sp_l + sp_count;
      table.columns = {"d", "n", "l", "energy"};
      for (int n = sp_l + 1; n <= n_hi; ++n)
        table.add_row({sp_d, n, sp_l, systems::coulomb_energy({sp_d, n, sp_l})});
    } else if (sp_system == "oscillator") {
      table.columns = {"D", "N", "L", "energy"};
      for (int k = 0; k < sp_count; ++k)
        table.add_row({sp_D, sp_L + 2 * k, sp_L,
                       systems::oscillator_energy({sp_D, sp_L + 2 * k, sp_L})});
    } else if (sp_system == "sqdt-coulomb") {
      const auto p = profiles::load_coulomb_profile(sp_profile);
      table.columns = {"d", "n", "n_s", "n_star", "energy"};
      for (int n = sp_l + 1; n <= sp_l + sp_count; ++n) {
        const auto st = sqdt::coulomb_starred(p, sp_d, n, sp_l);
        table.add_row({sp_d, n, st.n_s, st.n_star,
                       sqdt::sqdt_coulomb_energy(p, sp_d, n, sp_l)});
      }
    } else {
      const auto p = profiles::load_oscillator_profile(sp_profile);
      table.columns = {"D", "N", "N_s", "N_star", "energy"};
      for (int k = 0; k < sp_count; ++k) {
        const int N = sp_L + 2 * k;
        const auto st = sqdt::oscillator_starred(p, sp_D, N, sp_L);
        table.add_row({sp_D, N, st.N_s, st.N_star,
                       sqdt::sqdt_oscillator_energy(p, sp_D, N, sp_L)});
      }
    }
    Sink sink{out, output_path};
    sink.write(render(table, "spectrum", parse_format(format)));
  });

  // wavefn
  auto* wavefn = app.add_subcommand("wavefn", "sampled radial functions");
  std::string wf_system;
  int wf_d = 3, wf_n = 1, wf_l = 0, wf_D = 3, wf_N = 0, wf_L = 0;
  double wf_E = 1.0, wf_F = 2.0;
  std::string wf_profile, wf_sign = "outgoing", wf_radii;
  double wf_min = 0.0, wf_max = 0.0;
  int wf_points = 0;
  wavefn
      ->add_option("system", wf_system,
                   "coulomb|oscillator|sqdt-coulomb|sqdt-oscillator|"
                   "coulomb-continuum|inverted-oscillator")
      ->required()
      ->check(CLI::IsMember({"coulomb", "oscillator", "sqdt-coulomb",
                             "sqdt-oscillator", "coulomb-continuum",
                             "inverted-oscillator"}));
  wavefn->add_option("--d", wf_d, "Coulomb dimension");
  wavefn->add_option("--n", wf_n, "Coulomb principal quantum number");
  wavefn->add_option("--l", wf_l, "Coulomb angular momentum");
  wavefn->add_option("--D", wf_D, "oscillator dimension");
  wavefn->add_option("--N", wf_N, "oscillator principal quantum number");
  wavefn->add_option("--L", wf_L, "oscillator angular momentum");
  wavefn->add_option("--E", wf_E, "continuum energy in units of E0 (> 0)");
  wavefn->add_option("--F", wf_F, "inverted-oscillator energy in units of F0");
  wavefn->add_option("--profile", wf_profile, "defect profile path or 'sodium'");
  wavefn->add_option("--sign", wf_sign, "outgoing or incoming")
      ->check(CLI::IsMember({"outgoing", "incoming"}));
  wavefn->add_option("--grid-min", wf_min, "grid lower end (default per system)");
  wavefn->add_option("--grid-max", wf_max, "grid upper end");
  wavefn->add_option("--grid-count", wf_points, "grid point count (default 200)");
  wavefn->add_option("--radii", wf_radii, "comma-separated explicit radii");
  wavefn->callback([&] {
    const auto sign = wf_sign == "incoming" ? continuum::WaveSign::incoming
                                            : continuum::WaveSign::outgoing;
    const bool complex_valued =
        wf_system == "coulomb-continuum" || wf_system == "inverted-oscillator";

    std::function<RadialEval(double)> real_eval;
    std::function<ComplexEval(double)> cplx_eval;
    std::vector<double> grid;
    auto make_grid = [&](double hi) {
      grid = geometric_grid(wf_min > 0 ? wf_min : 1e-3, wf_max > 0 ? wf_max : hi,
                            wf_points > 0 ? wf_points : 200);
    };
    if (wf_system == "coulomb") {
      real_eval = systems::coulomb_state({wf_d, wf_n, wf_l}).eval;
      make_grid(40.0 * (wf_n + 0.5 * (wf_d - 3.0)));
    } else if (wf_system == "oscillator") {
      real_eval = systems::oscillator_state({wf_D, wf_N, wf_L}).eval;
      make_grid(8.0);
    } else if (wf_system == "sqdt-coulomb") {
      const auto p = profiles::load_coulomb_profile(
          wf_profile.empty() ? "sodium" : wf_profile);
      real_eval = sqdt::sqdt_coulomb_state(p, wf_d, wf_n, wf_l).eval;
      const auto st = sqdt::coulomb_starred(p, wf_d, wf_n, wf_l);
      make_grid(40.0 * (st.n_star + st.gamma_star));
    } else if (wf_system == "sqdt-oscillator") {
      const auto p = profiles::load_oscillator_profile(
          wf_profile.empty() ? "sodium" : wf_profile);
      real_eval = sqdt::sqdt_oscillator_state(p, wf_D, wf_N, wf_L).eval;
      make_grid(8.0);
    } else if (wf_system == "coulomb-continuum") {
      cplx_eval = continuum::coulomb_continuum_wave(wf_d, wf_E, wf_l, sign).eval;
      grid = continuum::coulomb_continuum_grid();
      if (wf_min > 0 || wf_max > 0 || wf_points > 0)
        make_grid(wf_max > 0 ? wf_max : 20.0);
    } else {
      cplx_eval = continuum::inverted_oscillator_wave(wf_D, wf_F, wf_L, sign).eval;
      grid = continuum::oscillator_continuum_grid();
      if (wf_min > 0 || wf_max > 0 || wf_points > 0)
        make_grid(wf_max > 0 ? wf_max : 6.0);
    }
    if (!wf_radii.empty()) {
      grid.clear();
      std::istringstream is(wf_radii);
      std::string tok;
      while (std::getline(is, tok, ',')) grid.push_back(std::stod(tok));
    }

    Table table;
    if (complex_valued) {
      table.columns = {"radius", "re", "im"};
      for (double r : grid) {
        const auto v = cplx_eval(r);
        table.add_row({r, v.value.real(), v.value.imag()});
      }
    } else {
      table.columns = {"radius", "value", "derivative"};
      for (double r : grid) {
        const auto v = real_eval(r);
        table.add_row({r, v.value, v.d1});
      }
    }
    Sink sink{out, output_path};
    sink.write(render(table, "wavefn", parse_format(format)));
  });

  // map
  auto* map_cmd = app.add_subcommand("map", "quadratic transformations with checks");
  MapCmd mc;
  map_cmd
      ->add_option("kind", mc.kind, "classic|general|three-dim|continuum|repulsive")
      ->required()
      ->check(CLI::IsMember(
          {"classic", "general", "three-dim", "continuum", "repulsive"}));
  map_cmd->add_option("--d", mc.d, "Coulomb dimension");
  map_cmd->add_option("--n", mc.n, "principal quantum number");
  map_cmd->add_option("--l", mc.l, "angular momentum");
  map_cmd->add_option("--lambda", mc.lambda, "free integer map parameter");
  map_cmd->add_option("--profile", mc.profile, "Coulomb defect profile");
  map_cmd->add_option("--osc-profile", mc.osc_profile, "oscillator defect profile");
  auto* jopt = map_cmd->add_option(
      "--J", mc.J,
      "oscillator dimension shift (oscillator side derived from A = 2a when "
      "--osc-profile is absent)");
  map_cmd->add_option("--exact", mc.exact, "three-dim: which side stays exact")
      ->check(CLI::IsMember({"oscillator", "coulomb"}));
  map_cmd->add_option("--E", mc.E, "continuum energy in units of E0");
  map_cmd->add_option("--sign", mc.sign, "outgoing or incoming")
      ->check(CLI::IsMember({"outgoing", "incoming"}));
  map_cmd->callback([&] {
    mc.has_J = jopt->count() > 0;
    exit_code = run_map(mc, Sink{out, output_path});
  });

  // table1
  auto* table1 = app.add_subcommand("table1", "sodium-to-oscillator parameter table");
  bool check = false;
  table1->add_flag("--check", check, "compare against the published values");
  table1->callback([&] {
    exit_code = run_table1(check, Sink{out, output_path}, parse_format(format));
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "invariant suites");
  std::string suite;
  int vd = 8, vl = 3;
  std::string vprofile;
  verify_cmd
      ->add_option("suite", suite, "orthonormality|residuals|susy|maps|fd-oracle|all")
      ->required()
      ->check(CLI::IsMember(
          {"orthonormality", "residuals", "susy", "maps", "fd-oracle", "all"}));
  verify_cmd->add_option("--d", vd, "largest dimension for the susy suite");
  verify_cmd->add_option("--l", vl,
                         "largest angular momentum (susy) / fd-oracle stack l");
  verify_cmd->add_option("--profile", vprofile, "fd-oracle defect profile");
  verify_cmd->callback([&] {
    const int fd_l = suite == "fd-oracle" && vl == 3 ? 0 : vl;
    exit_code = run_verify(suite, vd, fd_l, vprofile, Sink{out, output_path});
  });

  std::vector<const char*> argv;
  argv.push_back("radmap");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    json msg{{"error", e.what()}};
    err << msg.dump(2) << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace radmap::cli
