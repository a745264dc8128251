#pragma once

#include "symrec/perm.hpp"
#include "symrec/problem.hpp"

#include <cstdint>
#include <stdexcept>

namespace symrec {

inline constexpr std::uint64_t kDefaultCertificateBudget = std::uint64_t{1} << 26;
inline constexpr unsigned kOrbitFullDegreeCap = 8;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// f(phi): combine h(phi, x) over every certificate.
Value eval_bruteforce(const Problem& problem, InstanceIndex phi,
                      std::uint64_t budget = kDefaultCertificateBudget);

// f_i(phi): combine h(phi, beta_g(y_i)) over all g in S_m (orbit 0-based).
Value eval_orbit_full(const Problem& problem, InstanceIndex phi, std::size_t orbit);

// Combines f_i over every orbit using the right transversal of Aut(phi).
// Throws BudgetExceeded when [S_m : Aut] > budget.
Value eval_compressed(const Problem& problem, InstanceIndex phi, const StabilizerChain& aut,
                      std::uint64_t budget = kDefaultCertificateBudget);

// Regular-orbit variant for any commutative semigroup: each transversal
// term is raised to the power |Aut(phi)|.
Value eval_compressed_regular(const Problem& problem, InstanceIndex phi,
                              const StabilizerChain& aut,
                              std::uint64_t budget = kDefaultCertificateBudget);

// h(alpha_g(phi), beta_g(x)) == h(phi, x).
bool check_invariance(const Problem& problem, InstanceIndex phi, CertificateIndex x,
                      const Permutation& g);

// Aut(phi) under the problem's instance action.
StabilizerChain automorphism_group(const Problem& problem, InstanceIndex phi,
                                   AutStrategy strategy = AutStrategy::Backtracking);

}  // namespace symrec
