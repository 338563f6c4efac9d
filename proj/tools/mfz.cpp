// mfz: multifractal machinery for overlapping base-d self-similar measures.
// JSON for scalar reports, CSV for curves; every bracketed quantity is
// emitted with its bound direction or interval, never as a bare point.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mfz/atoms.hpp"
#include "mfz/config.hpp"
#include "mfz/dims.hpp"
#include "mfz/error.hpp"
#include "mfz/spectra.hpp"
#include "mfz/system.hpp"
#include "mfz/transfer.hpp"
#include "mfz/verify.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  std::string config;
  std::string out;
  int threads = 0;
  mfz::Budget budget;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_output(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) mfz::fail(mfz::Errc::bad_config, "cannot open output file " + g.out);
  f << text;
}

void emit_json(const GlobalOpts& g, const json& j) { write_output(g, j.dump(2) + "\n"); }

json bracket_json(const mfz::Bracket& b) {
  return json{{"lower", b.lower}, {"upper", b.upper}, {"meta", b.meta}};
}

mfz::DigitSystem load(const GlobalOpts& g) {
  if (g.config.empty()) mfz::fail(mfz::Errc::bad_config, "--config is required");
  return mfz::load_system_file(g.config, g.budget);
}

int require_barrier_flag(int b) {
  if (b < 0) mfz::fail(mfz::Errc::bad_config, "barrier digit required (--b)");
  return b;
}

std::string curve_csv(const mfz::SpectrumCurve& c, bool with_trusted) {
  std::ostringstream os;
  os << (with_trusted ? "x,value,direction,trusted\n" : "x,value,direction\n");
  for (const mfz::CurvePoint& p : c.points) {
    os << fmt17(p.x) << ',' << fmt17(p.value) << ',' << mfz::to_string(p.dir);
    if (with_trusted) os << ',' << (p.trusted ? 1 : 0);
    os << '\n';
  }
  return os.str();
}

mfz::Word parse_word(const std::string& text) {
  mfz::Word w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) w.push_back(std::stoi(tok));
  if (w.empty()) mfz::fail(mfz::Errc::bad_config, "empty word (--word expects e.g. \"1,0,2\")");
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multifractal machinery for overlapping base-d self-similar measures"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker cap (or env MFZ_THREADS)");
  app.add_option("--max-atoms", g.budget.max_atoms, "atom budget per level");
  app.add_option("--max-words", g.budget.max_words, "word-enumeration budget");

  auto add_common = [&](CLI::App* cmd, bool needs_config = true) {
    cmd->fallthrough();  // let --threads / --max-* appear after the subcommand
    auto* opt = cmd->add_option("--config", g.config, "system spec JSON file");
    if (needs_config) opt->required();
    cmd->add_option("--out", g.out, "output path (default stdout)");
  };

  int k = 0, b = -1, max_level = 4, cert_len = 4;
  int k_entropy = 0, k_lyap = 0;
  bool restricted = false, prune = false;
  std::string mode = "exact", suite = "fast", word_text;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double q_min = -20.0, q_max = 10.0, q_step = 0.05;

  auto* c_describe = app.add_subcommand("describe", "derived constants of a system");
  add_common(c_describe);

  std::string dump_format = "csv";
  auto* c_atoms = app.add_subcommand("atoms", "level-k atom masses (CSV j,mass_log)");
  add_common(c_atoms);
  c_atoms->add_option("--k", k, "level")->required();
  c_atoms->add_option("--dump", dump_format, "dump format (csv)")
      ->check(CLI::IsMember({"csv"}));

  auto* c_barrier = app.add_subcommand("barrier", "barrier-digit search");
  add_common(c_barrier);
  c_barrier->add_option("--max-level", max_level, "search depth (default 4)");

  auto* c_iterate = app.add_subcommand("iterate", "emit the k-iterated system spec");
  add_common(c_iterate);
  c_iterate->add_option("--k", k, "iteration depth")->required();

  auto* c_bounds = app.add_subcommand("bounds", "radius bracket at word length k");
  add_common(c_bounds);
  c_bounds->add_option("--k", k, "word length")->required();
  c_bounds->add_flag("--restricted", restricted, "interior-start minima instead of maxima");
  c_bounds->add_flag("--prune", prune, "conservative norm-envelope pruning (max pass)");

  auto* c_dims = app.add_subcommand("dims", "dimension report");
  add_common(c_dims);
  c_dims->add_option("--k", k, "word length for the brackets")->required();
  c_dims->add_option("--k-entropy", k_entropy, "entropy level (default by budget)");
  c_dims->add_option("--k-lyap", k_lyap, "lyapunov word length (default by budget)");

  auto* c_gamma = app.add_subcommand("gamma", "almost-sure dimension bracket");
  add_common(c_gamma);
  c_gamma->add_option("--k", k_lyap, "lyapunov word length")->required();
  c_gamma->add_option("--k-entropy", k_entropy, "entropy level (default = 12 capped by budget)");
  c_gamma->add_option("--mode", mode, "exact|mc")->check(CLI::IsMember({"exact", "mc"}));
  c_gamma->add_option("--samples", samples, "Monte-Carlo sample count");
  c_gamma->add_option("--seed", seed, "Monte-Carlo seed")->each([&](const std::string&) {
    seed_set = true;
  });

  auto add_qgrid = [&](CLI::App* cmd) {
    cmd->add_option("--q-min", q_min, "grid start (default -20)");
    cmd->add_option("--q-max", q_max, "grid end (default 10)");
    cmd->add_option("--q-step", q_step, "grid step (default 0.05)");
  };

  auto* c_tau = app.add_subcommand("tau", "finite-k L^q spectrum curve (CSV)");
  add_common(c_tau);
  c_tau->add_option("--k", k, "level")->required();
  add_qgrid(c_tau);

  auto* c_tau_hat = app.add_subcommand("tau-hat", "finite-k restricted spectrum curve (CSV)");
  add_common(c_tau_hat);
  c_tau_hat->add_option("--k", k, "level")->required();
  c_tau_hat->add_option("--b", b, "barrier digit");
  add_qgrid(c_tau_hat);

  auto* c_fh = app.add_subcommand("fh", "multifractal spectrum via Legendre conjugate (CSV)");
  add_common(c_fh);
  c_fh->add_option("--k", k, "level")->required();
  c_fh->add_option("--b", b, "barrier digit");
  c_fh->add_option("--cert-len", cert_len, "word length for the trust interval (default 4)");
  add_qgrid(c_fh);

  auto* c_dim_range = app.add_subcommand("dim-range", "inner interval of attained dimensions");
  add_common(c_dim_range);
  c_dim_range->add_option("--k", k, "level")->required();
  c_dim_range->add_option("--b", b, "barrier digit");

  auto* c_periodic = app.add_subcommand("periodic", "local dimension at a periodic point");
  add_common(c_periodic);
  c_periodic->add_option("--word", word_text, "period digits, e.g. \"1,0,2\"")->required();

  auto* c_verify = app.add_subcommand("verify", "run the reproduction suite");
  add_common(c_verify, /*needs_config=*/false);
  c_verify->add_option("--suite", suite, "paper|fast|full")
      ->check(CLI::IsMember({"paper", "fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (g.threads <= 0) {
      if (const char* env = std::getenv("MFZ_THREADS")) g.threads = std::atoi(env);
    }
#ifdef _OPENMP
    if (g.threads > 0) omp_set_num_threads(g.threads);
#endif

    if (c_describe->parsed()) {
      const mfz::DigitSystem sys = load(g);
      json j{{"d", sys.d()},
             {"m", sys.m()},
             {"p", sys.p()},
             {"delta", sys.delta()},
             {"xi", sys.xi_value()},
             {"xi_exact", std::to_string(sys.xi().num) + "/" + std::to_string(sys.xi().den)},
             {"theta", sys.theta()},
             {"a", sys.a()},
             {"regular", sys.regular()},
             {"alpha_bar", mfz::alpha_bar(sys)},
             {"dim_at_xi", mfz::dim_at_xi(sys)},
             {"formalism_holds", mfz::formalism_holds(sys)}};
      emit_json(g, j);
    } else if (c_atoms->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::AtomLevel lv = mfz::atom_masses(sys, k, g.budget);
      std::ostringstream os;
      os << "j,mass_log\n";
      for (size_t j = 0; j < lv.log_mass.size(); ++j)
        os << j << ',' << fmt17(lv.log_mass[j]) << '\n';
      write_output(g, os.str());
    } else if (c_barrier->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::BarrierSearch bs = mfz::find_barrier(sys, max_level);
      emit_json(g, json{{"level", bs.level}, {"atoms", bs.atoms}});
    } else if (c_iterate->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::DigitSystem it = mfz::iterate(sys, k, g.budget);
      emit_json(g, json{{"d", it.d()}, {"m", it.m()}, {"p", it.p()}});
    } else if (c_bounds->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::Bracket br = restricted
                                  ? mfz::restricted_min_bounds(sys, k, g.budget)
                                  : mfz::jsr_bounds(sys, k, prune, g.budget);
      emit_json(g, json{{"lower", br.lower},
                        {"upper", br.upper},
                        {"k", k},
                        {"norm", "op1"},
                        {"restricted", restricted},
                        {"meta", br.meta}});
    } else if (c_dims->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::DimensionReport r = mfz::dimension_report(sys, k, k_entropy, k_lyap, g.budget);
      emit_json(g, json{{"alpha_bar", r.alpha_bar},
                        {"dim_at_xi", r.dim_at_xi},
                        {"alpha_lower", bracket_json(r.alpha_lower)},
                        {"alpha_star", bracket_json(r.alpha_star)},
                        {"gamma", bracket_json(r.gamma)},
                        {"formalism_holds", r.formalism_holds},
                        {"isolated_top", r.isolated_top}});
    } else if (c_gamma->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::LyapMode lm =
          mode == "mc" ? mfz::LyapMode::montecarlo : mfz::LyapMode::exact;
      if (lm == mfz::LyapMode::montecarlo && !seed_set)
        mfz::fail(mfz::Errc::bad_config, "--seed is required in mc mode");
      if (lm == mfz::LyapMode::montecarlo && samples < 1)
        mfz::fail(mfz::Errc::bad_sample_count, "--samples must be >= 1 in mc mode");
      if (k_entropy <= 0) {
        k_entropy = 1;
        mfz::Budget probe;
        probe.max_atoms = std::min<std::int64_t>(g.budget.max_atoms, 4'000'000);
        while (k_entropy < 12) {
          try {
            sys.atom_count(k_entropy + 1, probe);
          } catch (const mfz::Error&) {
            break;
          }
          ++k_entropy;
        }
      }
      const mfz::Bracket br =
          mfz::gamma_bracket(sys, k_entropy, k_lyap, lm, samples, seed, g.budget);
      const mfz::LyapunovResult lr = mfz::lyapunov_sum(sys, k_lyap, lm, samples, seed, g.budget);
      emit_json(g, json{{"lower", br.lower},
                        {"upper", br.upper},
                        {"k_entropy", k_entropy},
                        {"k_lyap", k_lyap},
                        {"mode", mode},
                        {"samples", lr.samples},
                        {"seed", seed},
                        {"std_error", lr.std_error},
                        {"meta", br.meta}});
    } else if (c_tau->parsed()) {
      const mfz::DigitSystem sys = load(g);
      write_output(g, curve_csv(mfz::tau_curve(sys, k, q_min, q_max, q_step, g.budget), false));
    } else if (c_tau_hat->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::SpectrumCurve c =
          mfz::tau_hat_curve(sys, require_barrier_flag(b), k, q_min, q_max, q_step, g.budget);
      write_output(g, curve_csv(c, false));
    } else if (c_fh->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::SpectrumCurve c = mfz::multifractal_spectrum(
          sys, require_barrier_flag(b), k, q_min, q_max, q_step, cert_len, g.budget);
      write_output(g, curve_csv(c, true));
    } else if (c_dim_range->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::DimRange r =
          mfz::dim_range_inner(sys, require_barrier_flag(b), k, g.budget);
      emit_json(g, json{{"lo", r.lo}, {"hi", r.hi}, {"beta_k", r.beta}});
    } else if (c_periodic->parsed()) {
      const mfz::DigitSystem sys = load(g);
      const mfz::Word w = parse_word(word_text);
      emit_json(g, json{{"word", w}, {"dim", mfz::periodic_dim(sys, w)}});
    } else if (c_verify->parsed()) {
      const auto results = mfz::run_acceptance(suite);
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }
  } catch (const mfz::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return mfz::is_computational(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
