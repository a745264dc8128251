#include "symrec/sicsaf.hpp"

#include <string>

namespace symrec {

namespace {

std::uint64_t transversal_size(const Problem& problem, const StabilizerChain& aut,
                               std::uint64_t budget) {
  const unsigned m = problem.group_degree();
  if (aut.degree() != m) throw std::invalid_argument("automorphism chain has the wrong degree");
  const BigInt index = factorial(m) / aut.order();
  if (index > budget) {
    throw BudgetExceeded("transversal of size " + to_string(index) + " exceeds budget " +
                         std::to_string(budget));
  }
  return static_cast<std::uint64_t>(index);
}

}  // namespace

Value eval_bruteforce(const Problem& problem, InstanceIndex phi, std::uint64_t budget) {
  problem.check_instance(phi);
  if (problem.certificate_count() > budget) {
    throw BudgetExceeded(problem.name() + ": " + to_string(problem.certificate_count()) +
                         " certificates exceed budget " + std::to_string(budget));
  }
  const auto count = static_cast<std::uint64_t>(problem.certificate_count());
  const Semigroup s = problem.semigroup();
  Value acc = problem.h(phi, 0);
  for (CertificateIndex x = 1; x < count; ++x) {
    acc = s.combine(acc, problem.h(phi, x));
    if (s.id() == SemigroupId::BoolOr && acc) break;
  }
  return acc;
}

Value eval_orbit_full(const Problem& problem, InstanceIndex phi, std::size_t orbit) {
  problem.check_instance(phi);
  const Semigroup s = problem.semigroup();
  if (!s.idempotent()) {
    throw std::invalid_argument("eval_orbit_full: semigroup " + std::string(s.name()) +
                                " is not idempotent");
  }
  const unsigned m = problem.group_degree();
  if (m > kOrbitFullDegreeCap) {
    throw std::invalid_argument("eval_orbit_full: degree " + std::to_string(m) + " above cap");
  }
  const auto reps = problem.orbit_reps();
  const CertificateIndex y = reps.at(orbit);
  bool have = false;
  Value acc = 0;
  for_each_permutation(m, [&](const Permutation& g) {
    const Value v = problem.h(phi, problem.act_certificate(g, y));
    acc = have ? s.combine(acc, v) : v;
    have = true;
    return true;
  });
  return acc;
}

Value eval_compressed(const Problem& problem, InstanceIndex phi, const StabilizerChain& aut,
                      std::uint64_t budget) {
  problem.check_instance(phi);
  const Semigroup s = problem.semigroup();
  if (!s.idempotent()) {
    throw std::invalid_argument("eval_compressed: semigroup " + std::string(s.name()) +
                                " is not idempotent");
  }
  const std::uint64_t k = transversal_size(problem, aut, budget);
  const auto reps = list_coset_reps(aut, problem.group_degree(), k, CosetSide::Right);
  bool have = false;
  Value acc = 0;
  for (CertificateIndex y : problem.orbit_reps()) {
    for (const Permutation& u : reps) {
      const Value v = problem.h(phi, problem.act_certificate(u, y));
      acc = have ? s.combine(acc, v) : v;
      have = true;
    }
  }
  return acc;
}

Value eval_compressed_regular(const Problem& problem, InstanceIndex phi,
                              const StabilizerChain& aut, std::uint64_t budget) {
  problem.check_instance(phi);
  if (!problem.regular_orbits()) {
    throw std::invalid_argument("eval_compressed_regular: " + problem.name() +
                                " does not have regular certificate orbits");
  }
  const Semigroup s = problem.semigroup();
  const std::uint64_t k = transversal_size(problem, aut, budget);
  const BigInt order = aut.order();
  const auto reps = list_coset_reps(aut, problem.group_degree(), k, CosetSide::Right);
  bool have = false;
  Value acc = 0;
  for (CertificateIndex y : problem.orbit_reps()) {
    for (const Permutation& u : reps) {
      const Value v = semigroup_power(problem.h(phi, problem.act_certificate(u, y)), order, s);
      acc = have ? s.combine(acc, v) : v;
      have = true;
    }
  }
  return acc;
}

bool check_invariance(const Problem& problem, InstanceIndex phi, CertificateIndex x,
                      const Permutation& g) {
  problem.check_instance(phi);
  problem.check_certificate(x);
  problem.check_group_element(g);
  return problem.h(problem.act_instance(g, phi), problem.act_certificate(g, x)) ==
         problem.h(phi, x);
}

StabilizerChain automorphism_group(const Problem& problem, InstanceIndex phi,
                                   AutStrategy strategy) {
  return aut_group(problem.automorphism_oracle(phi), problem.group_degree(), strategy);
}

}  // namespace symrec
