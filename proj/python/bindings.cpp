#include "tmne/bezout.hpp"
#include "tmne/deformation.hpp"
#include "tmne/report.hpp"
#include "tmne/realroots.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tmne;

namespace {

// Results cross the boundary as JSON text; the Python side parses them.
std::string shape_delta(const std::string& shape) {
  GameShape s = GameShape::parse(shape);
  return Json{{"shape", s.strategy_counts}, {"delta", delta(s.dims()).get_str()}, {"feasible", feasible(s.dims())}}.dump();
}

std::string shape_bounds(const std::string& shape) {
  GameShape s = GameShape::parse(shape);
  DegreeLedger L = degree_ledger(s.dims());
  Json di = Json::array();
  for (const auto& x : L.delta_i) di.push_back(x.get_str());
  return Json{{"dims", L.dims}, {"delta", L.delta.get_str()}, {"delta_i", di}, {"D", L.D.get_str()},
              {"N", L.N.get_str()}, {"feasible", L.feasible}}
      .dump();
}

std::string solve(const std::string& game, std::uint64_t seed, bool certify, int decimals) {
  Game g = load_game(game);
  GeometricResolution R = geometric_resolution(g, seed);
  TMNEReport rep = extract_tmne(R, g);
  std::optional<MaxCertificate> cert;
  if (certify) cert = certify_from_resolution(R, g);
  return solve_report(g, R, rep, cert, seed, decimals).dump();
}

std::string isolated(const std::string& game, std::uint64_t seed, int trials) {
  Game g = load_game(game);
  IsolatedResult r = isolated_quasi_equilibria(g, seed, trials);
  Json j = solve_report(g, r.trace.pruned, r.report, std::nullopt, seed, -1);
  j["upper_bound"] = r.report.count;
  j["deformation"] = deformation_json(r.trace);
  return j.dump();
}

UniPoly poly_from(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return UniPoly(std::move(c));
}

}  // namespace

PYBIND11_MODULE(_tmne, m) {
  m.doc() = "Totally mixed Nash equilibria: exact solver core";
  py::register_exception<PositiveDimensional>(m, "PositiveDimensional", PyExc_ValueError);

  m.def("delta", &shape_delta, py::arg("shape"));
  m.def("bounds", &shape_bounds, py::arg("shape"));
  m.def("random_game", [](const std::string& shape, std::uint64_t seed) { return save_game(random_game(GameShape::parse(shape), seed)); },
        py::arg("shape"), py::arg("seed"));
  m.def("normalize_game", [](const std::string& game) { return save_game(load_game(game)); }, py::arg("game"));
  m.def("solve", &solve, py::arg("game"), py::arg("seed") = 1, py::arg("certify") = false, py::arg("decimals") = -1);
  m.def("count", [](const std::string& game, std::uint64_t seed) { return count_tmne(load_game(game), seed); },
        py::arg("game"), py::arg("seed") = 1);
  m.def("zero_dim_test",
        [](const std::string& game, int trials, std::uint64_t seed) {
          return std::string(to_string(zero_dim_test(indifference_system(load_game(game)), trials, seed)));
        },
        py::arg("game"), py::arg("trials") = 40, py::arg("seed") = 1);
  m.def("isolated", &isolated, py::arg("game"), py::arg("seed") = 1, py::arg("trials") = 40);
  m.def("hermite_signature",
        [](const std::vector<std::string>& p, const std::vector<std::string>& q) { return hermite_signature(poly_from(p), poly_from(q)); },
        py::arg("p"), py::arg("q"), "coefficients as rational strings, lowest degree first");
}
