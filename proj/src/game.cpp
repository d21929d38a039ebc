#include "tmne/game.hpp"

#include "json.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tmne {

using json = nlohmann::json;

GameShape::GameShape(std::vector<int> counts) : strategy_counts(std::move(counts)) {
  if (strategy_counts.size() < 2) throw std::invalid_argument("shape: need at least 2 players");
  for (int c : strategy_counts)
    if (c < 2) throw std::invalid_argument("shape: every strategy count must be >= 2");
}

std::vector<int> GameShape::dims() const {
  std::vector<int> d;
  for (int c : strategy_counts) d.push_back(c - 1);
  return d;
}

int GameShape::n() const {
  int s = 0;
  for (int c : strategy_counts) s += c - 1;
  return s;
}

std::size_t GameShape::tensor_size() const {
  std::size_t s = 1;
  for (int c : strategy_counts) s *= static_cast<std::size_t>(c);
  return s;
}

GameShape GameShape::parse(std::string_view text) {
  std::vector<int> counts;
  std::string tok;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("shape: empty entry in '" + std::string(text) + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("shape: not an integer: '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("shape: not an integer: '" + tok + "'");
    counts.push_back(v);
  }
  return GameShape(counts);
}

GameShape GameShape::from_dims(const std::vector<int>& dims) {
  std::vector<int> c;
  for (int d : dims) c.push_back(d + 1);
  return GameShape(c);
}

std::string GameShape::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < strategy_counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(strategy_counts[i]);
  }
  return s;
}

std::size_t Game::offset(const std::vector<int>& j) const {
  if (static_cast<int>(j.size()) != shape.players()) throw std::invalid_argument("dimension mismatch");
  std::size_t off = 0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (j[k] < 0 || j[k] >= shape.strategy_counts[k]) throw std::out_of_range("strategy index out of range");
    off = off * static_cast<std::size_t>(shape.strategy_counts[k]) + static_cast<std::size_t>(j[k]);
  }
  return off;
}

const Rational& Game::payoff(int i, const std::vector<int>& j) const {
  return payoffs.at(static_cast<std::size_t>(i))[offset(j)];
}

Game load_game(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("parse error: top level must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "players" && it.key() != "strategies" && it.key() != "payoffs")
      throw std::invalid_argument("parse error: unknown key '" + it.key() + "'");
  if (!doc.contains("players") || !doc["players"].is_number_integer())
    throw std::invalid_argument("parse error: 'players' must be an integer");
  if (!doc.contains("strategies") || !doc["strategies"].is_array())
    throw std::invalid_argument("parse error: 'strategies' must be an array");
  if (!doc.contains("payoffs") || !doc["payoffs"].is_array())
    throw std::invalid_argument("parse error: 'payoffs' must be an array");
  int r = doc["players"].get<int>();
  std::vector<int> counts;
  for (const auto& c : doc["strategies"]) {
    if (!c.is_number_integer()) throw std::invalid_argument("parse error: strategy counts must be integers");
    counts.push_back(c.get<int>());
  }
  if (static_cast<int>(counts.size()) != r)
    throw std::invalid_argument("shape mismatch: 'players' = " + std::to_string(r) + " but " +
                                std::to_string(counts.size()) + " strategy counts");
  Game g;
  g.shape = GameShape(counts);
  const auto& pay = doc["payoffs"];
  if (static_cast<int>(pay.size()) > r) throw std::invalid_argument("duplicate player block: more payoff tensors than players");
  if (static_cast<int>(pay.size()) != r)
    throw std::invalid_argument("shape mismatch: expected " + std::to_string(r) + " payoff tensors");
  std::size_t N = g.shape.tensor_size();
  for (int i = 0; i < r; ++i) {
    const auto& t = pay[static_cast<std::size_t>(i)];
    if (!t.is_array()) throw std::invalid_argument("parse error: payoffs[" + std::to_string(i) + "] must be an array");
    if (t.size() != N)
      throw std::invalid_argument("tensor size: payoffs[" + std::to_string(i) + "] has " + std::to_string(t.size()) +
                                  " entries, expected " + std::to_string(N));
    std::vector<Rational> v;
    v.reserve(N);
    for (std::size_t k = 0; k < N; ++k) {
      const auto& e = t[k];
      std::string s;
      if (e.is_string()) s = e.get<std::string>();
      else if (e.is_number_integer()) s = std::to_string(e.get<long long>());
      else throw std::invalid_argument("invalid rational at payoffs[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      try {
        v.push_back(parse_rational(s));
      } catch (const std::invalid_argument& ex) {
        throw std::invalid_argument(std::string(ex.what()) + " at payoffs[" + std::to_string(i) + "][" +
                                    std::to_string(k) + "]");
      }
    }
    g.payoffs.push_back(std::move(v));
  }
  return g;
}

std::string save_game(const Game& g) {
  json doc;
  doc["players"] = g.shape.players();
  doc["strategies"] = g.shape.strategy_counts;
  json pay = json::array();
  for (const auto& t : g.payoffs) {
    json a = json::array();
    for (const auto& q : t) a.push_back(to_string(q));
    pay.push_back(a);
  }
  doc["payoffs"] = pay;
  return doc.dump() + "\n";
}

Game load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return load_game(ss.str());
}

void validate_profile(const Game& g, const MixedProfile& p) {
  if (static_cast<int>(p.size()) != g.shape.players()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < g.shape.players(); ++i)
    if (static_cast<int>(p[static_cast<std::size_t>(i)].size()) != g.shape.strategy_counts[static_cast<std::size_t>(i)])
      throw std::invalid_argument("dimension mismatch");
}

Rational expected_payoff(const Game& g, int i, const MixedProfile& p) {
  validate_profile(g, p);
  int r = g.shape.players();
  std::vector<int> j(static_cast<std::size_t>(r), 0);
  Rational acc = 0;
  const auto& t = g.payoffs.at(static_cast<std::size_t>(i));
  for (std::size_t pos = 0; pos < t.size(); ++pos) {
    if (sgn(t[pos]) != 0) {
      Rational w = t[pos];
      for (int k = 0; k < r && sgn(w) != 0; ++k) w *= p[static_cast<std::size_t>(k)][static_cast<std::size_t>(j[static_cast<std::size_t>(k)])];
      acc += w;
    }
    for (int k = r - 1; k >= 0; --k) {
      auto ks = static_cast<std::size_t>(k);
      if (++j[ks] < g.shape.strategy_counts[ks]) break;
      j[ks] = 0;
    }
  }
  return acc;
}

DifferenceCoefficients difference_coefficients(const Game& g) {
  int r = g.shape.players();
  DifferenceCoefficients out;
  out.a.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    Multidegree d(static_cast<std::size_t>(r), 1);
    d[static_cast<std::size_t>(i)] = 0;
    for (int k = 1; k <= g.shape.n_i(i); ++k) {
      MultilinearPoly F(g.shape.strategy_counts, d);
      std::vector<int> full(static_cast<std::size_t>(r));
      F.for_each([&](const std::vector<int>& idx, const Rational&) {
        for (int t = 0; t < r; ++t) full[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t)];
        full[static_cast<std::size_t>(i)] = k;
        Rational hi = g.payoff(i, full);
        full[static_cast<std::size_t>(i)] = 0;
        F.at(idx) = hi - g.payoff(i, full);
      });
      out.a[static_cast<std::size_t>(i)].push_back(std::move(F));
    }
  }
  return out;
}

MultilinearSystem indifference_system(const Game& g) {
  MultilinearSystem S;
  S.sizes = g.shape.strategy_counts;
  auto dc = difference_coefficients(g);
  for (int i = 0; i < g.shape.players(); ++i)
    for (int k = 1; k <= g.shape.n_i(i); ++k) {
      S.polys.push_back(dc.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)]);
      S.tags.emplace_back(i, k);
    }
  return S;
}

bool is_tmne(const Game& g, const MixedProfile& p) {
  validate_profile(g, p);
  for (const auto& v : p) {
    Rational s = 0;
    for (const auto& x : v) {
      if (sgn(x) <= 0) return false;
      s += x;
    }
    if (s != 1) return false;
  }
  for (int i = 0; i < g.shape.players(); ++i) {
    MixedProfile q = p;
    auto is = static_cast<std::size_t>(i);
    Rational base;
    for (int j = 0; j < g.shape.strategy_counts[is]; ++j) {
      std::fill(q[is].begin(), q[is].end(), Rational(0));
      q[is][static_cast<std::size_t>(j)] = 1;
      Rational v = expected_payoff(g, i, q);
      if (j == 0) base = v;
      else if (v != base) return false;
    }
  }
  return true;
}

Game random_game(const GameShape& shape, std::uint64_t seed, int lo, int hi) {
  // Plain modular reduction of a fixed engine keeps the stream identical
  // across standard library implementations.
  std::mt19937_64 rng(seed);
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  Game g;
  g.shape = shape;
  for (int i = 0; i < shape.players(); ++i) {
    std::vector<Rational> t(shape.tensor_size());
    for (auto& x : t) x = Rational(static_cast<long>(rng() % span) + lo);
    g.payoffs.push_back(std::move(t));
  }
  return g;
}

}  // namespace tmne
