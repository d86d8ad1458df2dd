#include "zfarkas/qpsolve.hpp"

#include <map>

#include "zfarkas/lattice.hpp"
#include "zfarkas/normal_form.hpp"

namespace zfarkas {

namespace {

// c . x <= d, or c . x = d for equalities.
struct Constraint {
  RatVector c;
  Rat d;
};

bool all_zero(const RatVector& c) {
  for (Index i = 0; i < c.size(); ++i) {
    if (!c(i).is_zero()) return false;
  }
  return true;
}

// Scales so the first nonzero coefficient has absolute value one and keeps
// the tightest right-hand side per direction. Returns false when a trivial
// constraint 0 <= d fails.
bool normalize_inequalities(std::vector<Constraint>& rows) {
  std::map<std::vector<Rat>, Rat> tightest;
  for (auto& row : rows) {
    if (all_zero(row.c)) {
      if (row.d.sign() < 0) return false;
      continue;
    }
    Index lead = 0;
    while (row.c(lead).is_zero()) ++lead;
    const Rat s = abs(row.c(lead));
    std::vector<Rat> key(static_cast<std::size_t>(row.c.size()));
    for (Index i = 0; i < row.c.size(); ++i) key[static_cast<std::size_t>(i)] = row.c(i) / s;
    const Rat d = row.d / s;
    auto [it, inserted] = tightest.emplace(std::move(key), d);
    if (!inserted && d < it->second) it->second = d;
  }
  rows.clear();
  for (auto& [key, d] : tightest) {
    RatVector c(static_cast<Index>(key.size()));
    for (std::size_t i = 0; i < key.size(); ++i) c(static_cast<Index>(i)) = key[i];
    rows.push_back({std::move(c), d});
  }
  return true;
}

Rat dot_except(const RatVector& c, const RatVector& x, Index skip) {
  Rat s(0);
  for (Index j = 0; j < c.size(); ++j) {
    if (j != skip && !c(j).is_zero()) s += c(j) * x(j);
  }
  return s;
}

void check_shapes(const VectorFamily& vectors, const RatVector& target, const RatVector* lower,
                  const RatVector* upper) {
  if (target.size() != vectors.rows()) {
    throw DimensionMismatch("target has " + std::to_string(target.size()) +
                            " coordinates, vectors have " + std::to_string(vectors.rows()));
  }
  if ((lower && lower->size() != vectors.cols()) || (upper && upper->size() != vectors.cols())) {
    throw DimensionMismatch("bounds must have one entry per vector");
  }
}

}  // namespace

std::optional<RatVector> rational_box_solve(const VectorFamily& vectors, const RatVector& target,
                                            const RatVector& lower, const RatVector& upper) {
  check_shapes(vectors, target, &lower, &upper);
  const Index m = vectors.cols();
  for (Index i = 0; i < m; ++i) {
    if (lower(i) > upper(i)) throw InvalidArgument("lower bound exceeds upper bound");
  }

  std::vector<Constraint> eqs;
  for (Index r = 0; r < vectors.rows(); ++r) eqs.push_back({vectors.row(r).transpose(), target(r)});
  std::vector<Constraint> ineqs;
  for (Index i = 0; i < m; ++i) {
    RatVector e = RatVector::Zero(m);
    e(i) = Rat(1);
    ineqs.push_back({e, upper(i)});
    ineqs.push_back({-e, -lower(i)});
  }

  // Per variable: either a defining equality or the bounds active when it was eliminated.
  std::vector<std::optional<Constraint>> definitions(static_cast<std::size_t>(m));
  std::vector<std::vector<Constraint>> bounds(static_cast<std::size_t>(m));

  auto drop_trivial_eqs = [&]() {
    std::vector<Constraint> kept;
    for (auto& e : eqs) {
      if (all_zero(e.c)) {
        if (!e.d.is_zero()) return false;
        continue;
      }
      kept.push_back(std::move(e));
    }
    eqs = std::move(kept);
    return true;
  };

  if (!drop_trivial_eqs()) return std::nullopt;
  for (Index k = 0; k < m; ++k) {
    auto pivot = std::find_if(eqs.begin(), eqs.end(), [&](const Constraint& e) { return !e.c(k).is_zero(); });
    if (pivot != eqs.end()) {
      Constraint def = std::move(*pivot);
      eqs.erase(pivot);
      auto eliminate = [&](Constraint& row) {
        if (row.c(k).is_zero()) return;
        const Rat f = row.c(k) / def.c(k);
        row.c -= f * def.c;
        row.d -= f * def.d;
      };
      for (auto& e : eqs) eliminate(e);
      for (auto& e : ineqs) eliminate(e);
      definitions[static_cast<std::size_t>(k)] = std::move(def);
      if (!drop_trivial_eqs()) return std::nullopt;
      if (!normalize_inequalities(ineqs)) return std::nullopt;
      continue;
    }
    std::vector<Constraint> lowers;
    std::vector<Constraint> uppers;
    std::vector<Constraint> next;
    for (auto& row : ineqs) {
      const int s = row.c(k).sign();
      (s > 0 ? uppers : s < 0 ? lowers : next).push_back(std::move(row));
    }
    for (const auto& lo : lowers) {
      for (const auto& up : uppers) {
        const Rat lambda = up.c(k);
        const Rat mu = -lo.c(k);
        next.push_back({RatVector(lambda * lo.c + mu * up.c), lambda * lo.d + mu * up.d});
        next.back().c(k) = Rat(0);
      }
    }
    auto& recorded = bounds[static_cast<std::size_t>(k)];
    recorded = std::move(lowers);
    recorded.insert(recorded.end(), std::make_move_iterator(uppers.begin()),
                    std::make_move_iterator(uppers.end()));
    ineqs = std::move(next);
    if (!normalize_inequalities(ineqs)) return std::nullopt;
  }
  if (!eqs.empty() || !ineqs.empty()) {
    throw InternalInconsistency("Fourier-Motzkin left constraints on eliminated variables");
  }

  RatVector x = RatVector::Zero(m);
  for (Index k = m - 1; k >= 0; --k) {
    const auto& def = definitions[static_cast<std::size_t>(k)];
    if (def) {
      x(k) = (def->d - dot_except(def->c, x, k)) / def->c(k);
      continue;
    }
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    for (const auto& row : bounds[static_cast<std::size_t>(k)]) {
      const Rat value = (row.d - dot_except(row.c, x, k)) / row.c(k);
      if (row.c(k).sign() < 0) {
        if (!lo || value > *lo) lo = value;
      } else if (!hi || value < *hi) {
        hi = value;
      }
    }
    if (lo && hi && *lo > *hi) throw InternalInconsistency("Fourier-Motzkin back-substitution failed");
    x(k) = lo ? *lo : hi ? *hi : Rat(0);
  }
  if (RatVector(vectors * x) != target) {
    throw InternalInconsistency("Fourier-Motzkin solution violates the equalities");
  }
  for (Index i = 0; i < m; ++i) {
    if (x(i) < lower(i) || x(i) > upper(i)) {
      throw InternalInconsistency("Fourier-Motzkin solution leaves the box");
    }
  }
  return x;
}

std::optional<RatVector> qp_solve_exact(const VectorFamily& vectors, const RatVector& target,
                                        const PrimeSet& primes) {
  check_shapes(vectors, target, nullptr, nullptr);
  const Index n = vectors.rows();
  const Index m = vectors.cols();
  // Row scaling by a common denominator leaves the solution set unchanged.
  Int den(1);
  for (Index r = 0; r < n; ++r) {
    den = lcm(den, target(r).den());
    for (Index c = 0; c < m; ++c) den = lcm(den, vectors(r, c).den());
  }
  IntMatrix a(n, m);
  IntVector g(n);
  for (Index r = 0; r < n; ++r) {
    g(r) = target(r).num() * exact_div(den, target(r).den());
    for (Index c = 0; c < m; ++c) a(r, c) = vectors(r, c).num() * exact_div(den, vectors(r, c).den());
  }
  const auto s = smith_decompose<Int>(a);
  const IntVector h = s.U_inv * g;
  RatVector z = RatVector::Zero(m);
  for (Index i = 0; i < n; ++i) {
    if (i < s.rank) {
      z(i) = Rat(h(i), s.D(i, i));
      if (!in_qp(z(i), primes)) return std::nullopt;
    } else if (!h(i).is_zero()) {
      return std::nullopt;
    }
  }
  return RatVector(s.W_inv.cast<Rat>() * z);
}

const char* to_string(RefinementCase c) {
  switch (c) {
    case RefinementCase::Base:
      return "Base";
    case RefinementCase::Independent:
      return "Independent";
    case RefinementCase::Case1:
      return "Case1";
    case RefinementCase::Case2:
      return "Case2";
    case RefinementCase::IntegralFallback:
      return "IntegralFallback";
  }
  return "?";
}

const char* to_string(QpFailure f) {
  switch (f) {
    case QpFailure::None:
      return "none";
    case QpFailure::NotInSpan:
      return "not-in-span";
    case QpFailure::NoRationalSolution:
      return "no-rational-solution";
  }
  return "?";
}

QpBoxInstance QpBoxInstance::make(VectorFamily vectors, RatVector target, RatVector lower,
                                  RatVector upper, std::optional<PrimeSet> primes) {
  check_shapes(vectors, target, &lower, &upper);
  for (Index i = 0; i < lower.size(); ++i) {
    if (lower(i) > upper(i)) {
      throw InvalidArgument("lower bound exceeds upper bound at coordinate " + std::to_string(i + 1));
    }
  }
  PrimeSet family_primes = prime_set(vectors);
  if (primes && !primes->includes(family_primes)) {
    throw InvalidArgument("supplied prime set must contain the prime set of the family");
  }
  PrimeSet ring = primes ? std::move(*primes) : std::move(family_primes);
  for (Index i = 0; i < lower.size(); ++i) {
    if (!in_qp(lower(i), ring) || !in_qp(upper(i), ring)) {
      throw BoundsNotInQp("bounds of coordinate " + std::to_string(i + 1) + " are not in Q_P");
    }
  }
  return QpBoxInstance{std::move(vectors), std::move(target), std::move(lower), std::move(upper),
                       std::move(ring)};
}

namespace {

RefinementStep start_step(RefinementCase kind, const std::vector<Index>& ids, const PrimeSet& ring) {
  RefinementStep step;
  step.kind = kind;
  step.indices = ids;
  step.ring = ring;
  return step;
}

class Refiner {
 public:
  Refiner(RefinementTrace& trace, const RefineOptions& options) : trace_(trace), options_(options) {}

  RatVector run(const VectorFamily& vectors, const std::vector<Index>& ids, const RatVector& target,
                const RatVector& lower, const RatVector& upper, RatVector x, const PrimeSet& ring) {
    const Index m = vectors.cols();
    if (m == 0) return x;
    if (ring.empty()) return integral_fallback(vectors, ids, target, lower, upper);

    if (m == 1) {
      RefinementStep step = start_step(RefinementCase::Base, ids, ring);
      trace_.steps.push_back(step);
      if (vectors.col(0).isZero()) return RatVector::Constant(1, lower(0));
      if (!in_qp(x(0), ring)) throw InternalInconsistency("single-vector coefficient outside Q_P");
      return x;
    }

    const auto family_circuits = circuits(vectors);
    if (family_circuits.empty()) {
      trace_.steps.push_back(start_step(RefinementCase::Independent, ids, ring));
      for (Index i = 0; i < m; ++i) {
        if (!in_qp(x(i), ring)) throw InternalInconsistency("independent family with coefficient outside Q_P");
      }
      return x;
    }

    if (count_in_ring(x, ring) == 0) x = case2(family_circuits.front(), ids, lower, upper, x, ring);
    return case1(vectors, ids, target, lower, upper, x, ring);
  }

 private:
  static Index count_in_ring(const RatVector& x, const PrimeSet& ring) {
    Index c = 0;
    for (Index i = 0; i < x.size(); ++i) c += in_qp(x(i), ring) ? 1 : 0;
    return c;
  }

  RatVector case2(const Circuit& circuit, const std::vector<Index>& ids, const RatVector& lower,
                  const RatVector& upper, RatVector x, const PrimeSet& ring) {
    RefinementStep step = start_step(RefinementCase::Case2, ids, ring);
    step.in_ring_before = count_in_ring(x, ring);
    Int k(1);
    for (Index i = 0; i < x.size(); ++i) k = lcm(k, p_part(x(i), ring).second);
    const RatVector numerators = x * Rat(k);

    // Shifts r keeping k a_i <= N_i + r c_i <= k b_i on the circuit support.
    std::optional<Rat> r_lo;
    std::optional<Rat> r_hi;
    for (std::size_t s = 0; s < circuit.support.size(); ++s) {
      const Index i = circuit.support[s];
      const Rat c(circuit.coeffs[s]);
      Rat from_lower = (Rat(k) * lower(i) - numerators(i)) / c;
      Rat from_upper = (Rat(k) * upper(i) - numerators(i)) / c;
      if (c.sign() < 0) std::swap(from_lower, from_upper);
      if (!r_lo || from_lower > *r_lo) r_lo = from_lower;
      if (!r_hi || from_upper < *r_hi) r_hi = from_upper;
    }
    const Index p = circuit.support.front();
    const Rat c1(circuit.coeffs.front());
    Rat j_lo = x(p) + c1 / Rat(k) * *r_lo;
    Rat j_hi = x(p) + c1 / Rat(k) * *r_hi;
    if (j_lo > j_hi) std::swap(j_lo, j_hi);

    const Int& prime = ring.smallest();
    std::optional<Rat> chosen;
    Int scale(1);
    for (int t = 0; t < kMaxDensifySteps && !chosen; ++t, scale *= prime) {
      const Rat scaled = x(p) * Rat(scale);
      for (const Rat& cand : {Rat(scaled.floor(), scale), Rat(scaled.ceil(), scale)}) {
        if (cand >= j_lo && cand <= j_hi) {
          chosen = cand;
          break;
        }
      }
    }
    if (!chosen) throw InternalInconsistency("no Q_P value found in the admissible interval");

    const Rat r = (Rat(k) * *chosen - numerators(p)) / c1;
    RatVector shifted = numerators;
    for (std::size_t s = 0; s < circuit.support.size(); ++s) {
      shifted(circuit.support[s]) += r * Rat(circuit.coeffs[s]);
    }
    x = shifted / Rat(k);
    if (x(p) != *chosen || !in_qp(r, ring)) {
      throw InternalInconsistency("Case 2 shift did not produce a Q_P coordinate");
    }

    step.k = k;
    step.numerators = numerators;
    step.circuit = Circuit{map_ids(circuit.support, ids), circuit.coeffs};
    step.pivot = ids[static_cast<std::size_t>(p)];
    step.pivot_value = *chosen;
    step.r = r;
    step.in_ring_after = count_in_ring(x, ring);
    trace_.steps.push_back(std::move(step));
    return x;
  }

  RatVector case1(const VectorFamily& vectors, const std::vector<Index>& ids, const RatVector& target,
                  const RatVector& lower, const RatVector& upper, const RatVector& x,
                  const PrimeSet& ring) {
    const Index m = vectors.cols();
    Index j = 0;
    while (!in_qp(x(j), ring)) ++j;

    std::vector<Index> rest;
    std::vector<Index> rest_ids;
    for (Index i = 0; i < m; ++i) {
      if (i == j) continue;
      rest.push_back(i);
      rest_ids.push_back(ids[static_cast<std::size_t>(i)]);
    }
    const VectorFamily sub = sub_family(vectors, rest);
    const RatVector residual = target - x(j) * vectors.col(j);

    RefinementStep step = start_step(RefinementCase::Case1, ids, ring);
    step.fixed = ids[static_cast<std::size_t>(j)];
    step.fixed_value = x(j);
    step.reduced_primes = prime_set(sub);
    // With P' empty the rest stays in the current ring: Q_P with a nonempty
    // superset of the family primes supports the same refinement.
    step.next_ring = step.reduced_primes.empty() ? ring : step.reduced_primes;

    auto coeffs = qp_solve_exact(sub, residual, ring);
    if (!coeffs) throw InternalInconsistency("residual target left the Q_P-span of the remaining vectors");

    const PrimeSet stripped = ring.minus(step.next_ring);
    Int scale(1);
    auto absorb = [&](const Rat& value) { scale = lcm(scale, p_part(value, stripped).first); };
    const auto rest_size = static_cast<Index>(rest.size());
    RatVector sub_lower(rest_size);
    RatVector sub_upper(rest_size);
    RatVector sub_x(rest_size);
    for (Index k = 0; k < rest_size; ++k) {
      const Index i = rest[static_cast<std::size_t>(k)];
      sub_lower(k) = lower(i);
      sub_upper(k) = upper(i);
      sub_x(k) = x(i);
      absorb((*coeffs)(k));
      absorb(lower(i));
      absorb(upper(i));
      absorb(x(i));
    }
    step.scale = scale;
    const PrimeSet next_ring = step.next_ring;
    trace_.steps.push_back(std::move(step));

    const Rat s(scale);
    const RatVector sub_y = run(sub, rest_ids, residual * s, sub_lower * s, sub_upper * s, sub_x * s, next_ring);

    RatVector y(m);
    y(j) = x(j);
    for (Index k = 0; k < rest_size; ++k) y(rest[static_cast<std::size_t>(k)]) = sub_y(k) / s;
    return y;
  }

  RatVector integral_fallback(const VectorFamily& vectors, const std::vector<Index>& ids,
                              const RatVector& target, const RatVector& lower, const RatVector& upper) {
    trace_.steps.push_back(start_step(RefinementCase::IntegralFallback, ids, PrimeSet{}));
    const Index m = vectors.cols();
    IntVector lo(m);
    IntVector hi(m);
    Int count(1);
    for (Index i = 0; i < m; ++i) {
      lo(i) = lower(i).ceil();
      hi(i) = upper(i).floor();
      if (lo(i) > hi(i)) throw InternalInconsistency("integral fallback: empty integer box");
      count *= hi(i) - lo(i) + Int(1);
    }
    if (count > Int(static_cast<long long>(options_.enumeration_cap))) {
      throw ResourceLimit("integral fallback box holds " + count.to_string() + " points, cap is " +
                          std::to_string(options_.enumeration_cap));
    }
    IntVector y = lo;
    for (;;) {
      const RatVector yr = y.cast<Rat>();
      if (RatVector(vectors * yr) == target) return yr;
      Index i = m - 1;
      while (i >= 0 && y(i) == hi(i)) {
        y(i) = lo(i);
        --i;
      }
      if (i < 0) break;
      y(i) += Int(1);
    }
    throw InternalInconsistency("integral fallback found no integer solution in the box");
  }

  static std::vector<Index> map_ids(const std::vector<Index>& local, const std::vector<Index>& ids) {
    std::vector<Index> out;
    for (Index i : local) out.push_back(ids[static_cast<std::size_t>(i)]);
    return out;
  }

  static constexpr int kMaxDensifySteps = 4096;

  RefinementTrace& trace_;
  RefineOptions options_;
};

}  // namespace

Refinement refine_to_qp(const QpBoxInstance& instance, const RatVector& x, const RefineOptions& options) {
  const Index m = instance.vectors.cols();
  if (x.size() != m) throw DimensionMismatch("solution must have one entry per vector");
  if (RatVector(instance.vectors * x) != instance.target) {
    throw PreconditionViolated("refine_to_qp: x does not solve sum x_i v_i = w");
  }
  for (Index i = 0; i < m; ++i) {
    if (x(i) < instance.lower(i) || x(i) > instance.upper(i)) {
      throw PreconditionViolated("refine_to_qp: x leaves the box at coordinate " + std::to_string(i + 1));
    }
    if (!in_qp(instance.lower(i), instance.primes) || !in_qp(instance.upper(i), instance.primes)) {
      throw PreconditionViolated("refine_to_qp: bounds are not in Q_P");
    }
  }
  if (!qp_solve_exact(instance.vectors, instance.target, instance.primes)) {
    throw NotInQpSpan("refine_to_qp: target is not in the Q_P-span of the vectors");
  }
  Refinement out;
  std::vector<Index> ids(static_cast<std::size_t>(m));
  for (Index i = 0; i < m; ++i) ids[static_cast<std::size_t>(i)] = i;
  Refiner refiner(out.trace, options);
  out.solution = refiner.run(instance.vectors, ids, instance.target, instance.lower, instance.upper, x,
                             instance.primes);

  if (RatVector(instance.vectors * out.solution) != instance.target) {
    throw InternalInconsistency("refined solution does not reproduce the target");
  }
  for (Index i = 0; i < m; ++i) {
    const Rat& y = out.solution(i);
    if (y < instance.lower(i) || y > instance.upper(i) || !in_qp(y, instance.primes)) {
      throw InternalInconsistency("refined solution violates the box or Q_P membership");
    }
  }
  return out;
}

NearIntegersResult near_integers_solve(const QpBoxInstance& instance, const RefineOptions& options) {
  NearIntegersResult out;
  out.primes = instance.primes;
  if (!qp_solve_exact(instance.vectors, instance.target, instance.primes)) {
    out.reason = QpFailure::NotInSpan;
    return out;
  }
  out.rational_solution = rational_box_solve(instance.vectors, instance.target, instance.lower, instance.upper);
  if (!out.rational_solution) {
    out.reason = QpFailure::NoRationalSolution;
    return out;
  }
  auto refined = refine_to_qp(instance, *out.rational_solution, options);
  out.solution = std::move(refined.solution);
  out.trace = std::move(refined.trace);
  return out;
}

}  // namespace zfarkas
