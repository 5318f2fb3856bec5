#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vtwist/census/census.hpp"
#include "vtwist/census/report.hpp"
#include "vtwist/cubicfield/cubic_field.hpp"
#include "vtwist/errors.hpp"
#include "vtwist/kummer/e37b.hpp"
#include "vtwist/kummer/surface.hpp"
#include "vtwist/numcore/integer.hpp"

using namespace vtwist;

namespace {

census::CurveConfig load_curve(const std::string& spec) {
  if (std::filesystem::exists(spec)) return census::load_config(spec);
  return census::builtin_config(spec);
}

mpq_class parse_q(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ConfigError("not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

std::vector<double> decades(std::uint64_t X) {
  std::vector<double> out;
  for (double x = 1e4; x <= static_cast<double>(X); x *= 10) out.push_back(x);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vtwist: vanishing of twisted central L-values"};
  app.require_subcommand(1);

  std::string curve = "37b";
  int ell = 3;
  std::uint64_t X = 100;
  long H = 30;
  int threads = 1;
  int precision = 0;
  std::string out, chi_id, in_path, kind = "six-torsion", t0_str = "0";
  bool resume = false, verbose = false;
  std::size_t samples = 10;
  std::vector<std::string> lambdas;

  auto curve_opts = [&](CLI::App* s) {
    s->add_option("--curve", curve, "curve config file or builtin label (37b, 37a, 11a1)");
    s->add_option("--ell", ell, "odd prime order of the characters");
    s->add_option("--precision", precision, "working precision in decimal digits");
  };

  auto* tv = app.add_subcommand("twist-value", "L(E,1,chi) and its algebraic part for one orbit");
  curve_opts(tv);
  tv->add_option("--chi", chi_id, "character id, e.g. \"(7; 7:1)\"")->required();

  auto* cs = app.add_subcommand("census", "vanishing census over all orbits with f <= X");
  curve_opts(cs);
  cs->add_option("--max-conductor", X);
  cs->add_option("--threads", threads);
  cs->add_option("--out", out, "CSV path; the log goes to <out>.log");
  cs->add_flag("--resume", resume);

  auto* cg = app.add_subcommand("congruence", "congruence sweep over pairs with f chi * f psi <= X");
  curve_opts(cg);
  cg->add_option("--max-conductor", X);
  cg->add_flag("-v,--verbose", verbose);

  auto* nv = app.add_subcommand("nonvanishing-set", "primes p = 1 mod ell where the twists cannot vanish");
  curve_opts(nv);
  nv->add_option("--max-conductor", X);

  auto* kf = app.add_subcommand("kummer-fiber", "rational points on a fiber of the discriminant surface");
  curve_opts(kf);
  kf->add_option("--t0", t0_str);
  kf->description("rational points on a fiber of the discriminant surface (--curve 37b-shifted for y^2 + 4xy + y = x^3)");
  kf->add_option("--height-bound", H);

  auto* eb = app.add_subcommand("e37b", "cyclic cubic fields from the 37B parametrization");
  eb->add_option("--max-conductor", X);
  eb->add_option("--height-bound", H);
  eb->add_option("--threads", threads);
  eb->add_option("--samples", samples, "fields whose twist is checked to vanish");
  eb->add_option("--precision", precision);
  eb->add_option("--out", out, "CSV of all pairs");

  auto* fm = app.add_subcommand("family", "torsion families and their fiber points");
  fm->add_option("--kind", kind, "six-torsion or four-two");
  fm->add_option("--lambda", lambdas, "parameter values")->required();
  fm->add_option("--height-bound", H);

  auto* rp = app.add_subcommand("report", "summary of a census CSV");
  rp->add_option("--in", in_path)->required();
  rp->add_option("--max-conductor", X);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (tv->parsed()) {
      auto cfg = load_curve(curve);
      auto E = cfg.curve();
      int digits = precision ? precision : cfg.precision_digits;
      auto chi = dirichlet::Character::parse(ell, chi_id);
      auto norm = lvalue::calibrate_normalization(E, ell, 10, digits);
      auto rec = lvalue::analyze_orbit(E, chi.orbit_representative(), norm, digits);
      std::cout << cfg.label << "  " << rec.chi.id() << "\n"
                << "L = " << rec.L.value.re.str(25) << " + " << rec.L.value.im.str(25) << " i  (err " << rec.L.err
                << ")\n"
                << norm.str() << "\n";
      if (rec.recognized) std::cout << "L_alg = " << rec.L_alg.str() << "\nS = " << rec.sums.str() << "\n";
      std::cout << "decision: " << lvalue::to_string(rec.decision) << "\n";
      if (!rec.note.empty()) std::cout << "note: " << rec.note << "\n";
    } else if (cs->parsed()) {
      census::CensusOptions o;
      o.ell = ell;
      o.X = X;
      o.workers = threads;
      if (precision) o.digits = precision;
      o.out_path = out;
      o.resume = resume;
      auto cfg = load_curve(curve);
      auto r = census::run_census(cfg, o);
      std::cout << cfg.label << ", ell = " << ell << ", X = " << X << "\n" << r.norm.str() << "\n" << r.summary.str();
      if (out.empty())
        for (auto& row : r.rows) std::cout << row.csv() << "\n";
    } else if (cg->parsed()) {
      auto cfg = load_curve(curve);
      if (precision) cfg.precision_digits = precision;
      auto r = census::run_congruence_sweep(cfg, ell, X);
      std::cout << r.str(verbose);
      if (r.passed != r.pairs) return 2;
    } else if (nv->parsed()) {
      auto cfg = load_curve(curve);
      if (precision) cfg.precision_digits = precision;
      auto r = census::run_nonvanishing(cfg, ell, X);
      std::cout << r.str();
      if (!r.all_nonzero) return 2;
    } else if (kf->parsed()) {
      auto S = kummer::delta_poly(curve == "37b-shifted" ? kummer::e37b_shifted_model() : load_curve(curve).curve().model());
      mpq_class t0 = parse_q(t0_str);
      auto r = kummer::fiber_search(S, t0, H);
      std::cout << "Delta(u, " << t0 << ") = " << S.fiber(t0).str("u") << (r.good_fiber ? "" : "  (degenerate fiber)")
                << "\n";
      for (auto& p : r.points) {
        if (p.delta < 0) continue;
        std::cout << "u = " << p.u << "  delta = " << p.delta << "  " << kummer::to_string(p.cls) << "  "
                  << p.cubic.str();
        if (p.cls == kummer::FiberClass::CyclicCubic) {
          auto K = cubicfield::from_cubic(cubicfield::integral_monic_model(p.cubic));
          std::cout << "  conductor " << K.conductor;
        }
        std::cout << "\n";
      }
    } else if (eb->parsed()) {
      auto r = census::run_e37b(X, H, decades(X), threads, samples, precision ? precision : 50);
      std::cout << r.str();
      if (!out.empty()) {
        std::ofstream f(out);
        f << r.census.csv();
      }
    } else if (fm->parsed()) {
      std::vector<mpq_class> ls;
      for (auto& s : lambdas) ls.push_back(parse_q(s));
      auto r = census::run_family(kummer::parse_family_kind(kind), ls, H == 30 ? 6 : H);
      std::cout << r.str();
      for (auto& row : r.rows)
        if (!row.excluded && !row.pass) return 2;
    } else if (rp->parsed()) {
      std::cout << census::report_csv(in_path, rp->count("--max-conductor") ? X : 0);
    }
  } catch (const TheoryAlarm& e) {
    std::cerr << "theory alarm: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
