#include "zfarkas/modlin.hpp"

#include <algorithm>
#include <optional>

namespace zfarkas {

struct ModLinExpr::Node {
  Kind kind;
  Index index = 0;
  Int m;
  std::optional<ModLinExpr> first;
  std::optional<ModLinExpr> second;
  Index order = 0;
  Index extent = 0;
};

ModLinExpr ModLinExpr::input_a(Index i) {
  return ModLinExpr(std::make_shared<const Node>(Node{Kind::InputA, i, {}, {}, {}, 0, i + 1}));
}

ModLinExpr ModLinExpr::input_b(Index i) {
  return ModLinExpr(std::make_shared<const Node>(Node{Kind::InputB, i, {}, {}, {}, 0, i + 1}));
}

ModLinExpr ModLinExpr::neg(ModLinExpr e) {
  const Index order = e.order();
  const Index extent = e.input_extent();
  return ModLinExpr(
      std::make_shared<const Node>(Node{Kind::Neg, 0, {}, std::move(e), {}, order, extent}));
}

ModLinExpr ModLinExpr::floor_div(ModLinExpr e, Int m) {
  if (m.is_zero()) throw DivisionByZero();
  const Index order = e.order() + 1;
  const Index extent = e.input_extent();
  return ModLinExpr(std::make_shared<const Node>(
      Node{Kind::FloorDiv, 0, std::move(m), std::move(e), {}, order, extent}));
}

ModLinExpr ModLinExpr::ceil_div(ModLinExpr e, Int m) {
  if (m.is_zero()) throw DivisionByZero();
  const Index order = e.order() + 1;
  const Index extent = e.input_extent();
  return ModLinExpr(std::make_shared<const Node>(
      Node{Kind::CeilDiv, 0, std::move(m), std::move(e), {}, order, extent}));
}

ModLinExpr ModLinExpr::diff(ModLinExpr lhs, ModLinExpr rhs) {
  const Index order = std::max(lhs.order(), rhs.order());
  const Index extent = std::max(lhs.input_extent(), rhs.input_extent());
  return ModLinExpr(std::make_shared<const Node>(
      Node{Kind::Diff, 0, {}, std::move(lhs), std::move(rhs), order, extent}));
}

ModLinExpr::Kind ModLinExpr::kind() const { return node_->kind; }

Index ModLinExpr::input_index() const {
  if (node_->kind != Kind::InputA && node_->kind != Kind::InputB) {
    throw InvalidArgument("input_index on a non-leaf expression");
  }
  return node_->index;
}

const Int& ModLinExpr::divisor() const {
  if (node_->kind != Kind::FloorDiv && node_->kind != Kind::CeilDiv) {
    throw InvalidArgument("divisor on a non-division expression");
  }
  return node_->m;
}

const ModLinExpr& ModLinExpr::arg() const {
  if (!node_->first) throw InvalidArgument("arg on a leaf expression");
  return *node_->first;
}

const ModLinExpr& ModLinExpr::rhs() const {
  if (!node_->second) throw InvalidArgument("rhs on a non-difference expression");
  return *node_->second;
}

Index ModLinExpr::order() const { return node_->order; }

Index ModLinExpr::input_extent() const { return node_->extent; }

Int ModLinExpr::evaluate(const IntVector& a, const IntVector& b) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::InputA:
      if (n.index >= a.size()) throw DimensionMismatch("expression input a" + std::to_string(n.index + 1) + " out of range");
      return a(n.index);
    case Kind::InputB:
      if (n.index >= b.size()) throw DimensionMismatch("expression input b" + std::to_string(n.index + 1) + " out of range");
      return b(n.index);
    case Kind::Neg:
      return -n.first->evaluate(a, b);
    case Kind::FloorDiv:
      return zfarkas::floor_div(n.first->evaluate(a, b), n.m);
    case Kind::CeilDiv:
      return zfarkas::ceil_div(n.first->evaluate(a, b), n.m);
    case Kind::Diff:
      return n.first->evaluate(a, b) - n.second->evaluate(a, b);
  }
  throw InternalInconsistency("unknown expression kind");
}

ModLinExpr ModLinExpr::substitute(const std::vector<ModLinExpr>& lower,
                                  const std::vector<ModLinExpr>& upper) const {
  const Node& n = *node_;
  auto pick = [&](const std::vector<ModLinExpr>& table) -> const ModLinExpr& {
    if (static_cast<std::size_t>(n.index) >= table.size()) {
      throw DimensionMismatch("substitution table too short for input " + std::to_string(n.index + 1));
    }
    return table[static_cast<std::size_t>(n.index)];
  };
  switch (n.kind) {
    case Kind::InputA:
      return pick(lower);
    case Kind::InputB:
      return pick(upper);
    case Kind::Neg:
      return neg(n.first->substitute(lower, upper));
    case Kind::FloorDiv:
      return floor_div(n.first->substitute(lower, upper), n.m);
    case Kind::CeilDiv:
      return ceil_div(n.first->substitute(lower, upper), n.m);
    case Kind::Diff:
      return diff(n.first->substitute(lower, upper), n.second->substitute(lower, upper));
  }
  throw InternalInconsistency("unknown expression kind");
}

std::string ModLinExpr::to_string() const {
  const Node& n = *node_;
  auto wrapped = [](const ModLinExpr& e) {
    return e.kind() == Kind::Diff ? "(" + e.to_string() + ")" : e.to_string();
  };
  switch (n.kind) {
    case Kind::InputA:
      return "a" + std::to_string(n.index + 1);
    case Kind::InputB:
      return "b" + std::to_string(n.index + 1);
    case Kind::Neg:
      return "-" + wrapped(*n.first);
    case Kind::FloorDiv:
      return "floor(" + wrapped(*n.first) + "/" + n.m.to_string() + ")";
    case Kind::CeilDiv:
      return "ceil(" + wrapped(*n.first) + "/" + n.m.to_string() + ")";
    case Kind::Diff:
      return n.first->to_string() + " - " + wrapped(*n.second);
  }
  throw InternalInconsistency("unknown expression kind");
}

}  // namespace zfarkas
