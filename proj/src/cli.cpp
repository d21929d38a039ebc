#include "tmne/cli.hpp"

#include "tmne/bezout.hpp"
#include "tmne/deformation.hpp"
#include "tmne/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace tmne {

namespace {

struct RunConfig {
  std::string shape;
  std::string input;
  std::uint64_t seed = 1;
  int trials = 40;
  std::string out;
  int decimals = -1;
  std::string elim_order;
};

struct Refusal : std::runtime_error {
  Json payload;
  Refusal(const std::string& what, Json p) : std::runtime_error(what), payload(std::move(p)) {}
};

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json delta_cmd(const RunConfig& c) {
  GameShape s = GameShape::parse(c.shape);
  Integer d = delta(s.dims());
  Json j{{"shape", s.strategy_counts}, {"delta", integer_json(d)}, {"feasible", feasible(s.dims())}};
  if (d == 0) throw Refusal("infeasible shape", j);
  return j;
}

Json bounds_cmd(const RunConfig& c) {
  GameShape s = GameShape::parse(c.shape);
  DegreeLedger L = degree_ledger(s.dims());
  Json di = Json::array();
  for (const auto& x : L.delta_i) di.push_back(integer_json(x));
  Json j{{"shape", s.strategy_counts}, {"dims", L.dims},         {"delta", integer_json(L.delta)},
         {"delta_i", di},              {"D", integer_json(L.D)}, {"N", integer_json(L.N)},
         {"feasible", L.feasible}};
  if (!L.feasible) throw Refusal("infeasible shape", j);
  const Integer n = s.n();
  j["D_le_n2_delta"] = L.D <= n * n * L.delta;
  return j;
}

SolverOptions solver_options(const RunConfig& c, const Game& g) {
  SolverOptions o;
  if (!c.elim_order.empty()) o.elim.group_order = parse_group_order(c.elim_order, g.shape.players());
  return o;
}

Game load(const RunConfig& c) {
  Game g = load_game_file(c.input);
  if (delta(g.shape.dims()) == 0)
    throw Refusal("infeasible shape", Json{{"shape", g.shape.strategy_counts}, {"delta", 0}, {"feasible", false}});
  return g;
}

GeometricResolution resolve(const RunConfig& c, const Game& g) {
  try {
    return geometric_resolution(g, c.seed, solver_options(c, g));
  } catch (const PositiveDimensional& e) {
    throw Refusal(std::string(e.what()) + "; use the isolated command",
                  Json{{"shape", g.shape.strategy_counts}, {"error", "positive-dimensional"}});
  }
}

Json solve_cmd(const RunConfig& c, bool with_certificate) {
  Game g = load(c);
  GeometricResolution R = resolve(c, g);
  TMNEReport rep = extract_tmne(R, g);
  std::optional<MaxCertificate> cert;
  if (with_certificate) cert = certify_from_resolution(R, g);
  return solve_report(g, R, rep, cert, c.seed, c.decimals);
}

Json count_cmd(const RunConfig& c) {
  Game g = load(c);
  GeometricResolution R = resolve(c, g);
  TMNEReport rep = extract_tmne(R, g);
  return Json{{"count", rep.count},
              {"shape", g.shape.strategy_counts},
              {"delta", integer_json(delta(g.shape.dims()))},
              {"seed", c.seed}};
}

Json isolated_cmd(const RunConfig& c) {
  Game g = load(c);
  IsolatedResult r = isolated_quasi_equilibria(g, c.seed, c.trials);
  Json j = solve_report(g, r.trace.pruned, r.report, std::nullopt, c.seed, c.decimals);
  j["upper_bound"] = r.report.count;
  j["deformation"] = deformation_json(r.trace);
  return j;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::ios_base::failure("cannot write " + c.out);
  f << text << '\n';
  if (!f) throw std::ios_base::failure("cannot write " + c.out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Totally mixed Nash equilibria of generic and degenerate games", "tmne"};
  app.require_subcommand(1);
  RunConfig c;
  auto common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "random seed")->check(CLI::PositiveNumber);
    s->add_option("--trials", c.trials, "zero-dimensionality trials")->check(CLI::PositiveNumber);
    s->add_option("--out", c.out, "output path (default stdout)");
    s->add_option("--decimals", c.decimals, "render decimal approximations")->check(CLI::NonNegativeNumber);
    s->add_option("--elim-order", c.elim_order, "group ranking for elimination, e.g. 2,1,3");
  };
  auto* sd = app.add_subcommand("delta", "generic number of totally mixed equilibria for a shape");
  auto* sb = app.add_subcommand("bounds", "degree ledger for a shape");
  auto* sg = app.add_subcommand("gen-random", "seeded random game with integer payoffs in [-9, 9]");
  for (auto* s : {sd, sb, sg}) s->add_option("shape", c.shape, "strategy counts, e.g. 2,2,2")->required();
  auto* ss = app.add_subcommand("solve", "geometric resolution and equilibria");
  auto* sc = app.add_subcommand("count", "number of totally mixed equilibria");
  auto* sf = app.add_subcommand("certify", "maximality certificate");
  auto* si = app.add_subcommand("isolated", "upper bound for isolated equilibria of a degenerate game");
  for (auto* s : {ss, sc, sf, si}) s->add_option("game", c.input, "game file")->required();
  for (auto* s : {sd, sb, sg, ss, sc, sf, si}) common(s);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    Json j;
    if (sd->parsed()) j = delta_cmd(c);
    else if (sb->parsed()) j = bounds_cmd(c);
    else if (ss->parsed()) j = solve_cmd(c, false);
    else if (sc->parsed()) j = count_cmd(c);
    else if (sf->parsed()) j = solve_cmd(c, true);
    else if (si->parsed()) j = isolated_cmd(c);
    else if (sg->parsed()) {
      emit(c, save_game(random_game(GameShape::parse(c.shape), c.seed)), out);
      return 0;
    }
    emit(c, j.dump(), out);
    return 0;
  } catch (const Refusal& r) {
    try {
      emit(c, r.payload.dump(), out);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    err << "refused: " << r.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tmne
