#pragma once

#include "tmne/rational.hpp"

#include <cstdint>
#include <vector>

namespace tmne {

// Branch-free arithmetic circuit over Q. Nodes may only reference earlier
// nodes, so the node list is a topological order.
class ArithmeticCircuit {
 public:
  enum class Kind { Input, Constant, Add, Sub, Mul, Scale };
  struct Node {
    Kind kind;
    int a = -1, b = -1;  // operand node ids
    int input = -1;      // input slot for Kind::Input
    Rational value = 0;  // constant or scale factor
  };

  int input();
  int constant(const Rational& c);
  int add(int a, int b);
  int sub(int a, int b);
  int mul(int a, int b);
  int scale(const Rational& c, int a);
  void mark_output(int node);

  int num_inputs() const { return num_inputs_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<int>& outputs() const { return outputs_; }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::vector<Rational> evaluate(const std::vector<Rational>& point) const;

 private:
  int push(Node n);
  void check(int id) const;
  std::vector<Node> nodes_;
  std::vector<int> outputs_;
  int num_inputs_ = 0;
};

// Zippel-Schwartz test: true means every output vanished at `trials` points
// drawn from {0, ..., 2*degree_bound*trials - 1}^inputs (deterministic in seed).
bool circuit_zero_test(const ArithmeticCircuit& C, int degree_bound, int trials, std::uint64_t seed);

}  // namespace tmne
