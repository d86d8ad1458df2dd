#include "zfarkas/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

namespace zfarkas::cli {

using json_io::Json;

namespace {

Json read_input(const std::string& path) {
  try {
    if (path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw json_io::SchemaError("cannot open input file '" + path + "'");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw json_io::SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

EClassCertificate require_certificate(const Lattice& lattice) {
  if (lattice.is_zero()) throw NotInClass("the zero lattice is outside the class");
  auto cert = certify(lattice);
  if (!cert) throw NotInClass("lattice is not in the class; use --method oracle");
  return *std::move(cert);
}

Json witness_result(const std::optional<IntVector>& x) {
  Json out{{"feasible", x.has_value()}};
  if (x) out["witness"] = json_io::to_json(*x);
  return out;
}

Json run_certify(const Json& input, std::ostream* summary) {
  const Lattice lattice = json_io::lattice_from_json(input);
  if (lattice.is_zero()) throw NotInClass("the zero lattice is outside the class");
  const auto cert = certify(lattice);
  if (!cert) {
    if (summary) *summary << "not in class\n";
    return Json{{"in_class", false}};
  }
  if (summary) {
    *summary << "in class, chain length " << cert->chain_length() << "\n";
    for (const EClassCertificate* c = &*cert; c; c = c->child.get()) {
      *summary << "  v = (";
      for (Index i = 0; i < c->divisor.v.size(); ++i) *summary << (i ? ", " : "") << c->divisor.v(i).to_string();
      *summary << ")\n";
    }
  }
  return Json{{"in_class", true}, {"chain_length", cert->chain_length()}, {"certificate", json_io::to_json(*cert)}};
}

Json run_certs(const Json& input, std::ostream* summary) {
  const auto cert = require_certificate(json_io::lattice_from_json(input));
  const CertificateSet set = generate_certificates(cert);
  if (summary) {
    for (const auto& e : set.exprs) *summary << e.to_string() << " >= 0\n";
  }
  return json_io::to_json(set);
}

std::optional<IntVector> solve_with(Method method, const Lattice& lattice, const Box& box,
                                    std::uint64_t oracle_cap) {
  if (method == Method::Oracle) return brute_force_solve(lattice, box, oracle_cap);
  const auto cert = require_certificate(lattice);
  auto x = solve_box(cert, box);
  if (method == Method::Cert && feasible_by_certificates(generate_certificates(cert), box) != x.has_value()) {
    throw InternalInconsistency("certificate verdict disagrees with the recursive solver");
  }
  return x;
}

Json run_feasible(const Command& cmd, const Json& input, std::ostream* summary) {
  const Lattice lattice = json_io::lattice_from_json(input);
  const Box box = json_io::box_from_json(input);
  if (box.dim() != lattice.ambient_dim()) throw json_io::SchemaError("box and lattice dimensions differ");
  bool feasible = false;
  if (cmd.method == Method::Cert) {
    feasible = feasible_by_certificates(generate_certificates(require_certificate(lattice)), box);
  } else {
    feasible = solve_with(cmd.method, lattice, box, cmd.oracle_cap).has_value();
  }
  if (summary) *summary << (feasible ? "feasible" : "infeasible") << "\n";
  return Json{{"feasible", feasible}};
}

Json run_solve(const Command& cmd, const Json& input, std::ostream* summary) {
  const Lattice lattice = json_io::lattice_from_json(input);
  const Box box = json_io::box_from_json(input);
  if (box.dim() != lattice.ambient_dim()) throw json_io::SchemaError("box and lattice dimensions differ");
  const auto x = solve_with(cmd.method, lattice, box, cmd.oracle_cap);
  if (x && !(lattice.contains(*x) && box.contains(*x))) {
    throw InternalInconsistency("solver returned an invalid witness");
  }
  if (summary) *summary << (x ? "feasible" : "infeasible") << "\n";
  return witness_result(x);
}

Json run_circuits(const Json& input, std::ostream* summary) {
  const VectorFamily family = json_io::family_from_json(input);
  const auto cs = circuits(family);
  Json list = Json::array();
  for (const auto& c : cs) list.push_back(json_io::to_json(c));
  const PrimeSet primes = prime_set(cs);
  if (summary) *summary << cs.size() << " circuit(s)\n";
  return Json{{"circuits", list}, {"prime_set", json_io::to_json(primes)}};
}

Json run_qpsolve(const Json& input, std::ostream* summary) {
  const QpBoxInstance instance = json_io::qp_instance_from_json(input);
  const NearIntegersResult r = near_integers_solve(instance);
  Json out{{"solvable", r.solution.has_value()},
           {"reason", r.reason == QpFailure::None ? Json(nullptr) : Json(to_string(r.reason))},
           {"prime_set", json_io::to_json(r.primes)},
           {"trace", json_io::to_json(r.trace)}};
  if (r.solution) out["solution"] = json_io::to_json(*r.solution);
  if (r.rational_solution) out["rational_solution"] = json_io::to_json(*r.rational_solution);
  if (summary) *summary << (r.solution ? "solvable" : std::string("unsolvable: ") + to_string(r.reason)) << "\n";
  return out;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out << j.dump(2) << "\n";
}

std::string numbered(const char* prefix, int i) {
  std::ostringstream s;
  s << prefix << std::setw(4) << std::setfill('0') << i << ".json";
  return s.str();
}

}  // namespace

Method parse_method(const std::string& s) {
  if (s == "cert") return Method::Cert;
  if (s == "recursive") return Method::Recursive;
  if (s == "oracle") return Method::Oracle;
  throw InvalidArgument("unknown method '" + s + "' (expected cert, recursive or oracle)");
}

Json execute(const Command& cmd, const Json& input, std::ostream* summary) {
  if (cmd.name == "certify") return run_certify(input, summary);
  if (cmd.name == "certs") return run_certs(input, summary);
  if (cmd.name == "feasible") return run_feasible(cmd, input, summary);
  if (cmd.name == "solve") return run_solve(cmd, input, summary);
  if (cmd.name == "oracle") {
    Command c = cmd;
    c.method = Method::Oracle;
    return run_solve(c, input, summary);
  }
  if (cmd.name == "circuits") return run_circuits(input, summary);
  if (cmd.name == "qpsolve") return run_qpsolve(input, summary);
  throw InvalidArgument("unknown command '" + cmd.name + "'");
}

std::vector<std::string> generate_corpus(const std::string& dir, std::uint64_t seed, int count) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };

  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) {
    const long long n = uniform(1, 4);
    const long long gens = uniform(1, 3);
    Json generators = Json::array();
    for (long long k = 0; k < gens; ++k) {
      Json g = Json::array();
      for (long long c = 0; c < n; ++c) g.push_back(std::to_string(uniform(-6, 6)));
      generators.push_back(g);
    }
    Json lower = Json::array(), upper = Json::array();
    for (long long c = 0; c < n; ++c) {
      long long a = uniform(-8, 8), b = uniform(-8, 8);
      if (a > b) std::swap(a, b);
      lower.push_back(std::to_string(a));
      upper.push_back(std::to_string(b));
    }
    names.push_back(numbered("box_", i));
    write_json(fs::path(dir) / names.back(),
               Json{{"ambient_dim", n}, {"generators", generators}, {"lower", lower}, {"upper", upper}});
  }
  for (int i = 1; i <= count; ++i) {
    const long long n = uniform(1, 2);
    const long long m = uniform(1, 4);
    RatMatrix family(n, m);
    Json vectors = Json::array();
    for (long long k = 0; k < m; ++k) {
      Json v = Json::array();
      for (long long c = 0; c < n; ++c) {
        family(c, k) = Rat(uniform(-6, 6));
        v.push_back(family(c, k).to_string());
      }
      vectors.push_back(v);
    }
    // Target from an integral point of the box [-2, 2]^m, so the Q_P-span
    // condition always holds.
    RatVector x0(m);
    Json lower = Json::array(), upper = Json::array();
    for (long long k = 0; k < m; ++k) {
      x0(k) = Rat(uniform(-2, 2));
      lower.push_back("-2");
      upper.push_back("2");
    }
    const RatVector w = family * x0;
    names.push_back(numbered("qp_", i));
    write_json(fs::path(dir) / names.back(),
               Json{{"vectors", vectors}, {"target", json_io::to_json(w)}, {"lower", lower}, {"upper", upper}});
  }
  std::sort(names.begin(), names.end());
  return names;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.name == "gen-corpus") {
      if (cmd.output_path.empty()) throw InvalidArgument("gen-corpus needs an output directory");
      for (const auto& name : generate_corpus(cmd.output_path, cmd.seed, cmd.count)) out << name << "\n";
      return kOk;
    }
    const Json result = execute(cmd, read_input(cmd.input_path), cmd.summary ? &err : nullptr);
    const std::string text = result.dump(2) + "\n";
    if (cmd.output_path.empty()) {
      out << text;
    } else {
      std::ofstream f(cmd.output_path);
      if (!f) throw InvalidArgument("cannot write '" + cmd.output_path + "'");
      f << text;
    }
    return kOk;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceLimit;
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternalInconsistency;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInternalInconsistency;
  }
}

}  // namespace zfarkas::cli
