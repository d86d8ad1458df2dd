#include "zfarkas/json_io.hpp"

namespace zfarkas::json_io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw SchemaError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

const Json& array_of(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

Index index_from_json(const Json& j, Index dim) {
  if (!j.is_number_integer()) throw SchemaError("index must be an integer");
  const auto i = j.get<long long>();
  if (i < 1 || i > dim) throw SchemaError("index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  return static_cast<Index>(i - 1);
}

}  // namespace

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int::parse(j.get<std::string>());
  throw SchemaError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw SchemaError("expected a rational, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  array_of(j, "integer vector");
  IntVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = int_from_json(j[i]);
  return v;
}

RatVector rat_vector_from_json(const Json& j) {
  array_of(j, "rational vector");
  RatVector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rat_from_json(j[i]);
  return v;
}

Json to_json(const Int& x) { return x.to_string(); }
Json to_json(const Rat& x) { return x.to_string(); }

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

Json to_json(const PrimeSet& p) {
  Json out = Json::array();
  for (const auto& q : p) out.push_back(to_json(q));
  return out;
}

Lattice lattice_from_json(const Json& j) {
  const Json& dim = field(j, "ambient_dim");
  if (!dim.is_number_integer() || dim.get<long long>() < 0) {
    throw SchemaError("ambient_dim must be a nonnegative integer");
  }
  const auto n = static_cast<Index>(dim.get<long long>());
  const Json& gens = array_of(field(j, "generators"), "generators");
  IntMatrix m(static_cast<Index>(gens.size()), n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    IntVector g = int_vector_from_json(gens[k]);
    if (g.size() != n) {
      throw SchemaError("generator " + std::to_string(k + 1) + " has " + std::to_string(g.size()) +
                        " entries, expected " + std::to_string(n));
    }
    m.row(static_cast<Index>(k)) = g.transpose();
  }
  return Lattice::from_generators(n, m);
}

Json to_json(const Lattice& l) {
  Json gens = Json::array();
  for (Index k = 0; k < l.rank(); ++k) gens.push_back(to_json(l.basis_vector(k)));
  return Json{{"ambient_dim", l.ambient_dim()}, {"generators", gens}};
}

Box box_from_json(const Json& j) {
  try {
    return Box(int_vector_from_json(field(j, "lower")), int_vector_from_json(field(j, "upper")));
  } catch (const DimensionMismatch& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const EClassCertificate& cert) {
  Json pairs = Json::array();
  for (const auto& [i, j] : cert.index_map.pair_coords) pairs.push_back(Json::array({i + 1, j + 1}));
  Json zeros = Json::array();
  for (Index i : cert.index_map.zero_coords) zeros.push_back(i + 1);
  Json basis = Json::array();
  for (Index k = 0; k < cert.lattice.rank(); ++k) basis.push_back(to_json(cert.lattice.basis_vector(k)));
  return Json{{"ambient_dim", cert.lattice.ambient_dim()},
              {"basis", basis},
              {"v", to_json(cert.divisor.v)},
              {"pair_coords", pairs},
              {"zero_coords", zeros},
              {"child", cert.child ? to_json(*cert.child) : Json(nullptr)}};
}

Json to_json(const ModLinExpr& e) {
  using K = ModLinExpr::Kind;
  switch (e.kind()) {
    case K::InputA:
      return Json{{"op", "a"}, {"i", e.input_index() + 1}};
    case K::InputB:
      return Json{{"op", "b"}, {"i", e.input_index() + 1}};
    case K::Neg:
      return Json{{"op", "neg"}, {"arg", to_json(e.arg())}};
    case K::FloorDiv:
      return Json{{"op", "floordiv"}, {"m", to_json(e.divisor())}, {"arg", to_json(e.arg())}};
    case K::CeilDiv:
      return Json{{"op", "ceildiv"}, {"m", to_json(e.divisor())}, {"arg", to_json(e.arg())}};
    case K::Diff:
      return Json{{"op", "diff"}, {"lhs", to_json(e.lhs())}, {"rhs", to_json(e.rhs())}};
  }
  throw InternalInconsistency("unknown expression kind");
}

ModLinExpr modlin_from_json(const Json& j) {
  const Json& op_field = field(j, "op");
  if (!op_field.is_string()) throw SchemaError("op must be a string");
  const auto op = op_field.get<std::string>();
  constexpr Index kAnyIndex = Index{1} << 40;
  if (op == "a") return ModLinExpr::input_a(index_from_json(field(j, "i"), kAnyIndex));
  if (op == "b") return ModLinExpr::input_b(index_from_json(field(j, "i"), kAnyIndex));
  if (op == "neg") return ModLinExpr::neg(modlin_from_json(field(j, "arg")));
  if (op == "floordiv") {
    return ModLinExpr::floor_div(modlin_from_json(field(j, "arg")), int_from_json(field(j, "m")));
  }
  if (op == "ceildiv") {
    return ModLinExpr::ceil_div(modlin_from_json(field(j, "arg")), int_from_json(field(j, "m")));
  }
  if (op == "diff") return ModLinExpr::diff(modlin_from_json(field(j, "lhs")), modlin_from_json(field(j, "rhs")));
  throw SchemaError("unknown expression op '" + op + "'");
}

Json to_json(const CertificateSet& set) {
  Json exprs = Json::array();
  for (const auto& e : set.exprs) exprs.push_back(to_json(e));
  return Json{{"n", set.n}, {"rank", set.rank}, {"exprs", exprs}};
}

CertificateSet certificate_set_from_json(const Json& j) {
  CertificateSet set;
  set.n = static_cast<Index>(field(j, "n").get<long long>());
  set.rank = static_cast<Index>(field(j, "rank").get<long long>());
  for (const auto& e : array_of(field(j, "exprs"), "exprs")) set.exprs.push_back(modlin_from_json(e));
  return set;
}

VectorFamily family_from_json(const Json& j) {
  const Json& vecs = array_of(field(j, "vectors"), "vectors");
  if (vecs.empty()) return VectorFamily(0, 0);
  std::vector<RatVector> cols;
  for (const auto& v : vecs) cols.push_back(rat_vector_from_json(v));
  const Index n = cols.front().size();
  VectorFamily out(n, static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k].size() != n) throw SchemaError("vectors must all have the same length");
    out.col(static_cast<Index>(k)) = cols[k];
  }
  return out;
}

Json to_json(const Circuit& c) {
  Json support = Json::array();
  for (Index i : c.support) support.push_back(i + 1);
  Json coeffs = Json::array();
  for (const auto& x : c.coeffs) coeffs.push_back(to_json(x));
  return Json{{"support", support}, {"coeffs", coeffs}};
}

QpBoxInstance qp_instance_from_json(const Json& j) {
  VectorFamily vectors = family_from_json(j);
  RatVector target = rat_vector_from_json(field(j, "target"));
  if (vectors.cols() == 0) vectors.resize(target.size(), 0);
  std::optional<PrimeSet> primes;
  if (j.contains("prime_set") && !j.at("prime_set").is_null()) {
    std::vector<Int> ps;
    for (const auto& p : array_of(j.at("prime_set"), "prime_set")) ps.push_back(int_from_json(p));
    primes = PrimeSet(std::move(ps));
  }
  try {
    return QpBoxInstance::make(std::move(vectors), std::move(target), rat_vector_from_json(field(j, "lower")),
                               rat_vector_from_json(field(j, "upper")), std::move(primes));
  } catch (const DimensionMismatch& e) {
    throw SchemaError(e.what());
  }
}

Json to_json(const RefinementTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json indices = Json::array();
    for (Index i : s.indices) indices.push_back(i + 1);
    Json step{{"case", to_string(s.kind)}, {"indices", indices}, {"ring", to_json(s.ring)}};
    if (s.kind == RefinementCase::Case2) {
      step["k"] = to_json(s.k);
      step["numerators"] = to_json(s.numerators);
      step["circuit"] = to_json(*s.circuit);
      step["pivot"] = s.pivot + 1;
      step["pivot_value"] = to_json(s.pivot_value);
      step["r"] = to_json(s.r);
      step["in_ring_before"] = s.in_ring_before;
      step["in_ring_after"] = s.in_ring_after;
    } else if (s.kind == RefinementCase::Case1) {
      step["fixed"] = s.fixed + 1;
      step["fixed_value"] = to_json(s.fixed_value);
      step["reduced_prime_set"] = to_json(s.reduced_primes);
      step["next_ring"] = to_json(s.next_ring);
      step["M"] = to_json(s.scale);
    }
    steps.push_back(std::move(step));
  }
  return Json{{"steps", steps}};
}

}  // namespace zfarkas::json_io
