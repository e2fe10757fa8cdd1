#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyeig/polyeig.hpp"

namespace polyeig::cli {

namespace {

using nlohmann::json;

std::string sci(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5e", v);
  return buf;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

json jnum(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json jcomplex(Complex z) { return json::array({jnum(z.real()), jnum(z.imag())}); }

json jannulus(const Annulus& a) { return {{"inner", jnum(a.inner)}, {"outer", jnum(a.outer)}, {"count", a.count}}; }

MatrixPolynomial load(const std::string& file) { return MatrixPolynomial::normalize(read_coefficients(file)); }

InitStrategy parse_init(const std::string& name, std::optional<double> radius) {
  if (name == "newton") return {InitKind::tropical_circles, radius};
  if (name == "circle") return {InitKind::unit_circle, radius};
  if (name == "uv") return {InitKind::uv_circles, radius};
  throw BadInput("unknown init strategy '" + name + "' (newton, circle, uv)");
}

UpdateOrder parse_order(const std::string& name) {
  if (name == "sequential") return UpdateOrder::sequential;
  if (name == "simultaneous") return UpdateOrder::simultaneous;
  throw BadInput("unknown order '" + name + "' (sequential, simultaneous)");
}

void stripped_note(const MatrixPolynomial& p, std::ostream& out) {
  if (p.stripped_power() > 0)
    out << "# x^" << p.stripped_power() << " factored out: " << p.size() * static_cast<long>(p.stripped_power())
        << " zero eigenvalues\n";
}

}  // namespace

int cmd_tropical(const TropicalArgs& args, std::ostream& out) {
  const auto p = load(args.file);
  const auto w = norm_majorant(p);
  const auto poly = tropical_roots(w);
  if (!args.plot.empty()) {
    std::ofstream tsv(args.plot);
    if (!tsv) throw BadInput("cannot write " + args.plot);
    write_polygon_tsv(tsv, w.w, poly);
  }
  if (args.json) {
    json edges = json::array();
    for (std::size_t e = 0; e < poly.edges(); ++e)
      edges.push_back({{"radius", poly.radii[e]}, {"multiplicity", poly.multiplicities[e]}});
    out << json{{"vertices", poly.vertices}, {"edges", edges}, {"norms_degraded", w.degraded}}.dump() << '\n';
    return ok;
  }
  stripped_note(p, out);
  if (w.degraded) out << "# some norms fell back to Frobenius\n";
  out << "vertices";
  for (auto k : poly.vertices) out << ' ' << k;
  out << "\nedge  radius        multiplicity\n";
  for (std::size_t e = 0; e < poly.edges(); ++e)
    out << e + 1 << "     " << sci(poly.radii[e]) << "  " << poly.multiplicities[e] << '\n';
  return ok;
}

int cmd_bounds(const BoundsArgs& args, std::ostream& out) {
  const auto p = load(args.file);
  const auto intervals = matrix_pellet(p);
  const auto m = static_cast<std::size_t>(p.size());

  std::optional<Localization> loc;
  LocalizationConstants k = LocalizationConstants::matrix();
  if (args.q_class) loc = tropical_localize(p, tropical_roots(norm_majorant(p)), k);

  if (args.json) {
    json pellet = json::array();
    for (const auto& iv : intervals)
      pellet.push_back({{"kappa", iv.kappa}, {"status", to_string(iv.status)}, {"s", jnum(iv.s)}, {"t", jnum(iv.t)}});
    json doc{{"pellet", pellet}};
    const auto report = annuli_report(intervals, m);
    json annuli{{"inclusion", json::array()}, {"exclusion", json::array()}, {"notes", report.notes}};
    for (const auto& a : report.inclusion) annuli["inclusion"].push_back(jannulus(a));
    for (const auto& a : report.exclusion) annuli["exclusion"].push_back(jannulus(a));
    if (report.inner_disk) annuli["inner_disk"] = jannulus(*report.inner_disk);
    if (report.outer_region) annuli["outer_region"] = jannulus(*report.outer_region);
    if (loc) {
      json tl = json::array();
      for (const auto& la : loc->annuli)
        tl.push_back({{"edge", la.edge}, {"radius", la.radius}, {"applicable", la.applicable},
                      {"annulus", jannulus(la.annulus)}, {"refined", jannulus(la.refined)}});
      annuli["tropical"] = tl;
      doc["constants"] = {{"f", k.f}, {"g", k.g}, {"g_endpoint", k.g_endpoint}};
      doc["max_condition"] = jnum(loc->max_condition);
    }
    doc["annuli"] = annuli;
    out << doc.dump() << '\n';
    return ok;
  }

  stripped_note(p, out);
  out << "kappa  status                s             t\n";
  for (const auto& iv : intervals) {
    out << iv.kappa << "      " << to_string(iv.status);
    if (iv.has_roots()) out << "  " << sci(iv.s) << "  " << sci(iv.t);
    out << '\n';
  }
  const auto report = annuli_report(intervals, m);
  for (const auto& a : report.inclusion)
    out << "inclusion [" << sci(a.inner) << ", " << sci(a.outer) << "]  count " << a.count << '\n';
  for (const auto& a : report.exclusion) out << "exclusion (" << sci(a.inner) << ", " << sci(a.outer) << ")\n";
  if (report.inner_disk) out << "inner disk |x| <= " << sci(report.inner_disk->outer) << "  count " << report.inner_disk->count << '\n';
  if (report.outer_region) out << "outer region |x| >= " << sci(report.outer_region->inner) << "  count " << report.outer_region->count << '\n';
  for (const auto& note : report.notes) out << "note: " << note << '\n';

  if (loc) {
    out << "tropical localization f=" << num(k.f) << " g=" << num(k.g) << " g'=" << num(k.g_endpoint) << '\n';
    if (loc->conditioning_warning)
      out << "warning: coefficient condition number " << sci(loc->max_condition)
          << " is far from 1; the annuli are heuristic\n";
    for (const auto& la : loc->annuli) {
      out << "edge " << la.edge << "  r=" << sci(la.radius) << "  [" << sci(la.annulus.inner) << ", "
          << sci(la.annulus.outer) << "]  count " << la.annulus.count;
      if (la.applicable)
        out << "  refined [" << sci(la.refined.inner) << ", " << sci(la.refined.outer) << "]\n";
      else
        out << "  not separated\n";
    }
  }
  return ok;
}

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto p = load(args.file);
  SolveOptions opts;
  opts.eps = args.eps;
  opts.delta = args.delta;
  opts.max_sweeps = args.max_sweeps;
  opts.order = parse_order(args.order);
  const auto r = solve(p, parse_init(args.init, args.radius), opts);
  const int code = r.all_converged() ? ok : not_converged;

  if (args.json) {
    json eigs = json::array();
    json stop = json::array();
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      eigs.push_back(r.infinite[i] ? json(nullptr) : jcomplex(r.eigenvalues[i]));
      stop.push_back(to_string(r.stop[i]));
    }
    json annuli = json::array();
    if (p.degree() > 0) {
      try {
        for (const auto& a : annuli_report(matrix_pellet(p), static_cast<std::size_t>(p.size())).inclusion)
          annuli.push_back(jannulus(a));
      } catch (const NoBounds&) {
      }
    }
    out << json{{"eigenvalues", eigs}, {"nu", r.nu},           {"stop", stop},
                {"simul_it", r.simul_it}, {"aver_it", r.aver_it}, {"annuli", annuli},
                {"reversed", r.reversed}}
               .dump()
        << '\n';
    return code;
  }

  out << "#   re            im            |x|           nu    stop\n";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    const Complex z = r.eigenvalues[i];
    out << i << "  ";
    if (r.infinite[i])
      out << "inf           inf           inf         ";
    else
      out << sci(z.real()) << "  " << sci(z.imag()) << "  " << sci(std::abs(z));
    out << "  " << r.nu[i] << "  " << to_string(r.stop[i]) << '\n';
  }
  if (r.reversed) out << "# solved on the reversed polynomial (singular leading coefficient)\n";
  out << "simul_it " << r.simul_it << "\naver_it " << num(r.aver_it) << '\n';
  return code;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
  BenchSpec spec;
  if (args.cls == "Q")
    spec.cls = BenchClass::q_class;
  else if (args.cls == "random_scaled")
    spec.cls = BenchClass::random_scaled;
  else
    throw BadInput("unknown class '" + args.cls + "' (Q, random_scaled)");
  spec.m = args.m;
  if (!args.sigma.empty()) spec.sigma = args.sigma;
  spec.seed = args.seed;
  spec.strategies.clear();
  for (const auto& name : args.init) spec.strategies.push_back(parse_init(name, std::nullopt));
  SolveOptions opts;
  opts.order = parse_order(args.order);

  const auto result = run_bench(spec, opts);
  const bool normalized = spec.cls == BenchClass::random_scaled;
  if (args.json) {
    json rows = json::array();
    for (const auto& row : result.rows)
      rows.push_back({{"init", to_string(row.strategy.kind)}, {"simul_it", row.simul_it},
                      {"aver_it", row.aver_it}, {"converged", row.converged}});
    out << json{{"class", to_string(spec.cls)}, {"m", spec.m}, {"seed", spec.seed}, {"sigma", spec.sigma},
                {"normalized_coefficients", normalized}, {"max_condition", jnum(result.max_condition)},
                {"rows", rows}}
               .dump()
        << '\n';
    return ok;
  }
  out << "class " << to_string(spec.cls) << "  m " << spec.m << "  seed " << spec.seed << '\n';
  if (normalized) out << "# random coefficients normalized to unit 2-norm before scaling by sigma\n";
  out << "max coefficient condition " << sci(result.max_condition) << '\n';
  out << "init     simul_it  aver_it\n";
  for (const auto& row : result.rows) {
    std::string name = to_string(row.strategy.kind);
    name.resize(9, ' ');
    std::string it = std::to_string(row.simul_it);
    it.resize(10, ' ');
    out << name << it << num(row.aver_it) << (row.converged ? "" : "  (not converged)") << '\n';
  }
  return ok;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  const auto p = load(args.file);
  std::vector<Complex> eigs;
  try {
    if (!args.reverse) {
      eigs = oracle_eigenvalues(p);
    } else {
      eigs = oracle_eigenvalues(p.reversed());
      for (auto& z : eigs) z = z == Complex(0.0) ? Complex(INFINITY, 0.0) : 1.0 / z;
      eigs.insert(eigs.end(), static_cast<std::size_t>(p.size()) * p.stripped_power(), Complex(0.0));
      std::sort(eigs.begin(), eigs.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    }
  } catch (const SingularLeading& e) {
    throw SingularLeading(std::string(e.what()) + "; rerun with --reverse");
  }
  if (args.json) {
    json arr = json::array();
    for (auto z : eigs) arr.push_back(jcomplex(z));
    out << json{{"eigenvalues", arr}}.dump() << '\n';
    return ok;
  }
  out << "#   re            im            |x|\n";
  for (std::size_t i = 0; i < eigs.size(); ++i)
    out << i << "  " << sci(eigs[i].real()) << "  " << sci(eigs[i].imag()) << "  " << sci(std::abs(eigs[i])) << '\n';
  return ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenvalues of matrix polynomials: tropical roots, Pellet bounds, Ehrlich-Aberth iteration"};
  app.require_subcommand(1);

  TropicalArgs trop;
  auto* c_trop = app.add_subcommand("tropical", "Newton polygon of the norm majorant");
  c_trop->add_option("file", trop.file, "polynomial file (.json for the structured format)")->required();
  c_trop->add_option("--plot", trop.plot, "write i/log_w/vertex TSV");
  c_trop->add_flag("--json", trop.json);

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Pellet annuli and tropical localization");
  c_bounds->add_option("file", bounds.file)->required();
  c_bounds->add_flag("--q-class", bounds.q_class, "also print localization annuli (coefficients assumed scaled unitary)");
  c_bounds->add_flag("--json", bounds.json);

  SolveArgs sol;
  auto* c_solve = app.add_subcommand("solve", "Ehrlich-Aberth iteration");
  c_solve->add_option("file", sol.file)->required();
  c_solve->add_option("--init", sol.init, "newton | circle | uv")->capture_default_str();
  c_solve->add_option("--radius", sol.radius, "circle radius for --init circle");
  c_solve->add_option("--eps", sol.eps)->capture_default_str();
  c_solve->add_option("--delta", sol.delta)->capture_default_str();
  c_solve->add_option("--max-sweeps", sol.max_sweeps)->capture_default_str();
  c_solve->add_option("--order", sol.order, "sequential | simultaneous")->capture_default_str();
  c_solve->add_flag("--json", sol.json);

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "compare starting strategies on generated instances");
  c_bench->add_option("--class", bench.cls, "Q | random_scaled")->capture_default_str();
  c_bench->add_option("-m,--size", bench.m)->capture_default_str();
  c_bench->add_option("--sigma", bench.sigma, "coefficient scales sigma_0 .. sigma_n")->delimiter(',');
  c_bench->add_option("--seed", bench.seed)->capture_default_str();
  c_bench->add_option("--init", bench.init, "strategies to compare")->delimiter(',');
  c_bench->add_option("--order", bench.order)->capture_default_str();
  c_bench->add_flag("--json", bench.json);

  OracleArgs orc;
  auto* c_oracle = app.add_subcommand("oracle", "companion matrix eigenvalues");
  c_oracle->add_option("file", orc.file)->required();
  c_oracle->add_flag("--reverse", orc.reverse, "solve the reversed polynomial (singular leading coefficient)");
  c_oracle->add_flag("--json", orc.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return parse_error;
  }

  try {
    if (c_trop->parsed()) return cmd_tropical(trop, out);
    if (c_bounds->parsed()) return cmd_bounds(bounds, out);
    if (c_solve->parsed()) return cmd_solve(sol, out);
    if (c_bench->parsed()) return cmd_bench(bench, out);
    if (c_oracle->parsed()) return cmd_oracle(orc, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const NoBounds& e) {
    err << "no bounds: " << e.what() << '\n';
    return no_bounds;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
  return failure;
}

}  // namespace polyeig::cli
