#pragma once

// Mod-linear expressions: integer-valued functions of the 2n box bounds
// (a_1, b_1, ..., a_n, b_n) built from projections with floor and ceiling
// division by nonzero integer constants.

#include <memory>
#include <string>
#include <vector>

#include "zfarkas/exactnum.hpp"

namespace zfarkas {

class ModLinExpr {
 public:
  enum class Kind { InputA, InputB, Neg, FloorDiv, CeilDiv, Diff };

  static ModLinExpr input_a(Index i);
  static ModLinExpr input_b(Index i);
  static ModLinExpr neg(ModLinExpr e);
  /// Throws DivisionByZero for m = 0.
  static ModLinExpr floor_div(ModLinExpr e, Int m);
  static ModLinExpr ceil_div(ModLinExpr e, Int m);
  static ModLinExpr diff(ModLinExpr lhs, ModLinExpr rhs);

  Kind kind() const;
  /// Input coordinate (0-based); InputA / InputB only.
  Index input_index() const;
  /// FloorDiv / CeilDiv only.
  const Int& divisor() const;
  /// Operand of Neg / FloorDiv / CeilDiv, left operand of Diff.
  const ModLinExpr& arg() const;
  const ModLinExpr& lhs() const { return arg(); }
  const ModLinExpr& rhs() const;

  /// Maximum nesting depth of division nodes on any root-to-leaf path.
  Index order() const;
  /// One past the largest input coordinate referenced; 0 if none.
  Index input_extent() const;

  /// Exact evaluation at the bounds (a, b).
  Int evaluate(const IntVector& a, const IntVector& b) const;

  /// Replaces every InputA(k) by lower[k] and InputB(k) by upper[k].
  ModLinExpr substitute(const std::vector<ModLinExpr>& lower,
                        const std::vector<ModLinExpr>& upper) const;

  /// Human-readable form with 1-based inputs, e.g. "floor(b1/2) - ceil(a1/2)".
  std::string to_string() const;

 private:
  struct Node;
  explicit ModLinExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

}  // namespace zfarkas
