#include "tmne/report.hpp"

#include "tmne/bezout.hpp"

namespace tmne {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

std::string key(const ChartVar& v) { return std::to_string(v.first + 1) + "," + std::to_string(v.second); }

}  // namespace

Json poly_json(const UniPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

Json resolution_json(const GeometricResolution& R) {
  Json W = Json::object();
  for (const auto& [v, w] : R.W) W[key(v)] = poly_json(w);
  Json l = Json::object();
  for (const auto& [v, c] : R.separating_form) l[key(v)] = to_string(c);
  return Json{{"P", poly_json(R.P)}, {"P_prime", poly_json(R.P_prime)}, {"W", W}, {"separating_form", l}};
}

Json equilibria_json(const TMNEReport& rep, int decimals) {
  Json out = Json::array();
  for (const auto& e : rep.equilibria) {
    Json prof = Json::array();
    for (const auto& grp : e.profile) {
      Json g = Json::array();
      for (const auto& c : grp) {
        if (c.exact) {
          if (decimals >= 0)
            g.push_back(Json{{"value", to_string(c.value)}, {"decimal", to_decimal(c.value, decimals)}});
          else
            g.push_back(to_string(c.value));
        } else {
          Json iv{{"interval", {to_string(c.lo), to_string(c.hi)}}};
          if (decimals >= 0) iv["decimal"] = to_decimal((c.lo + c.hi) / 2, decimals);
          g.push_back(iv);
        }
      }
      prof.push_back(g);
    }
    out.push_back(prof);
  }
  return out;
}

Json evidence_json(const TMNEReport& rep) {
  Json out = Json::array();
  for (const auto& e : rep.equilibria) {
    Json root = e.rational ? Json(to_string(e.t)) : Json{to_string(e.root.lo), to_string(e.root.hi)};
    out.push_back(Json{{"root", root}, {"signs", e.signs}});
  }
  return out;
}

Json certificate_json(const MaxCertificate& c) {
  Json signs = Json::object();
  Json coeffs = Json::object();
  for (const auto& [v, s] : c.signs) signs[key(v)] = s;
  for (const auto& [v, s] : c.charpoly_coeffs) {
    Json a = Json::array();
    for (const auto& x : s) a.push_back(to_string(x));
    coeffs[key(v)] = a;
  }
  return Json{{"S0", to_string(c.S0_value)}, {"signs", signs},       {"coefficients", coeffs},
              {"verdict", c.verdict},        {"reason", c.reason},    {"delta", c.delta}};
}

Json deformation_json(const DeformationTrace& t) {
  Json passes = Json::array();
  for (const auto& p : t.passes)
    passes.push_back(Json{{"epsilon", p.epsilon},
                          {"candidate_degree", p.candidate_P.degree()},
                          {"pruned_degree", std::max(p.pruned.P.degree(), 0)},
                          {"direction_attempts", p.b_attempts}});
  return Json{{"verdict", to_string(t.verdict)},
              {"epsilon", t.epsilon},
              {"candidate_P", poly_json(t.candidate_P)},
              {"directions", passes}};
}

Json solve_report(const Game& game, const GeometricResolution& R, const TMNEReport& rep,
                  const std::optional<MaxCertificate>& cert, std::uint64_t seed, int decimals) {
  Json out;
  out["shape"] = game.shape.strategy_counts;
  out["delta"] = integer_json(delta(game.shape.dims()));
  Json res = resolution_json(R);
  out["P"] = res["P"];
  out["W"] = res["W"];
  out["separating_form"] = res["separating_form"];
  out["count"] = rep.count;
  out["equilibria"] = equilibria_json(rep, decimals);
  out["evidence"] = evidence_json(rep);
  if (R.P.degree() <= 0) out["note"] = "no affine quasi-equilibria";
  if (cert) out["certificate"] = certificate_json(*cert);
  out["seed"] = seed;
  return out;
}

}  // namespace tmne
