#include "tmne/circuit.hpp"

#include <random>
#include <stdexcept>

namespace tmne {

int ArithmeticCircuit::push(Node n) {
  nodes_.push_back(std::move(n));
  return static_cast<int>(nodes_.size()) - 1;
}

void ArithmeticCircuit::check(int id) const {
  if (id < 0 || id >= static_cast<int>(nodes_.size())) throw std::out_of_range("circuit: unknown node");
}

int ArithmeticCircuit::input() {
  Node n{Kind::Input};
  n.input = num_inputs_++;
  return push(std::move(n));
}

int ArithmeticCircuit::constant(const Rational& c) {
  Node n{Kind::Constant};
  n.value = c;
  return push(std::move(n));
}

int ArithmeticCircuit::add(int a, int b) {
  check(a);
  check(b);
  return push({Kind::Add, a, b});
}

int ArithmeticCircuit::sub(int a, int b) {
  check(a);
  check(b);
  return push({Kind::Sub, a, b});
}

int ArithmeticCircuit::mul(int a, int b) {
  check(a);
  check(b);
  return push({Kind::Mul, a, b});
}

int ArithmeticCircuit::scale(const Rational& c, int a) {
  check(a);
  Node n{Kind::Scale, a};
  n.value = c;
  return push(std::move(n));
}

void ArithmeticCircuit::mark_output(int node) {
  check(node);
  outputs_.push_back(node);
}

std::vector<Rational> ArithmeticCircuit::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != num_inputs_) throw std::invalid_argument("circuit: wrong number of inputs");
  std::vector<Rational> v(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.kind) {
      case Kind::Input: v[i] = point[static_cast<std::size_t>(n.input)]; break;
      case Kind::Constant: v[i] = n.value; break;
      case Kind::Add: v[i] = v[static_cast<std::size_t>(n.a)] + v[static_cast<std::size_t>(n.b)]; break;
      case Kind::Sub: v[i] = v[static_cast<std::size_t>(n.a)] - v[static_cast<std::size_t>(n.b)]; break;
      case Kind::Mul: v[i] = v[static_cast<std::size_t>(n.a)] * v[static_cast<std::size_t>(n.b)]; break;
      case Kind::Scale: v[i] = n.value * v[static_cast<std::size_t>(n.a)]; break;
    }
  }
  std::vector<Rational> out;
  out.reserve(outputs_.size());
  for (int o : outputs_) out.push_back(v[static_cast<std::size_t>(o)]);
  return out;
}

bool circuit_zero_test(const ArithmeticCircuit& C, int degree_bound, int trials, std::uint64_t seed) {
  if (degree_bound < 0) throw std::invalid_argument("circuit_zero_test: invalid degree bound");
  if (trials < 1) throw std::invalid_argument("circuit_zero_test: trials must be >= 1");
  if (degree_bound == 0) {
    // constant polynomial: one evaluation decides
    trials = 1;
  }
  std::mt19937_64 rng(seed);
  std::uint64_t side = 2ull * static_cast<std::uint64_t>(std::max(degree_bound, 1)) * static_cast<std::uint64_t>(trials);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> pt(static_cast<std::size_t>(C.num_inputs()));
    for (auto& x : pt) x = Rational(static_cast<unsigned long>(rng() % side));
    for (const auto& y : C.evaluate(pt))
      if (sgn(y) != 0) return false;
  }
  return true;
}

}  // namespace tmne
