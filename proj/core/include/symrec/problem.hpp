#pragma once

#include "symrec/bigint.hpp"
#include "symrec/perm.hpp"
#include "symrec/semigroup.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace symrec {

using InstanceIndex = std::uint64_t;
using CertificateIndex = std::uint64_t;

struct ProblemParams {
  unsigned n = 0;
  // Clique-family: unused (k is part of the instance). kcol: colors.
  // ksat: maximum clause width. kcsp/maxkcsp: arity. parity_kclique: clique size.
  unsigned k = 0;
  // kcsp/maxkcsp: variable count (defaults to n).
  unsigned q = 0;
  // ov: dimension.
  unsigned d = 0;
  // kcsp/maxkcsp alphabet size.
  unsigned alphabet = 2;
  // kcsp/maxkcsp clause table, alphabet^k entries; entry index is
  // sum_t x_{t+1} * alphabet^t. Empty selects not-all-equal.
  std::vector<std::uint8_t> clause;
};

struct ProblemShape {
  std::string name;
  ProblemParams params;
  unsigned alphabet_size = 2;
  unsigned instance_length = 0;
  unsigned group_degree = 1;
  Semigroup semigroup;
  InstanceIndex instance_count = 0;
  BigInt certificate_count = 0;
  std::uint64_t orbit_count = 0;
  Value value_max = 1;
  bool regular_orbits = false;
};

// One symmetric-group SICSAF: f(phi) is the semigroup aggregate of h(phi, x)
// over all certificates x, and S_m acts on instances (alpha) and
// certificates (beta) with h(alpha_g(phi), beta_g(x)) = h(phi, x).
class Problem {
 public:
  virtual ~Problem() = default;

  const std::string& name() const { return shape_.name; }
  // Name plus every parameter other than n, e.g. "kcol:k=3".
  std::string key() const;
  const ProblemParams& params() const { return shape_.params; }
  unsigned n() const { return shape_.params.n; }
  unsigned alphabet_size() const { return shape_.alphabet_size; }
  unsigned instance_length() const { return shape_.instance_length; }
  unsigned group_degree() const { return shape_.group_degree; }
  Semigroup semigroup() const { return shape_.semigroup; }
  InstanceIndex instance_count() const { return shape_.instance_count; }
  const BigInt& certificate_count() const { return shape_.certificate_count; }
  std::uint64_t orbit_count() const { return shape_.orbit_count; }
  Value value_max() const { return shape_.value_max; }
  // Every beta-orbit has exactly m! elements.
  bool regular_orbits() const { return shape_.regular_orbits; }

  virtual Value h(InstanceIndex phi, CertificateIndex x) const = 0;
  virtual InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const = 0;
  virtual CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const = 0;
  virtual std::vector<CertificateIndex> orbit_reps() const = 0;

  // Membership oracle for Aut(phi) = {g : alpha_g(phi) = phi}.
  virtual SubgroupOracle automorphism_oracle(InstanceIndex phi) const;

  void check_instance(InstanceIndex phi) const;
  void check_certificate(CertificateIndex x) const;
  void check_group_element(const Permutation& g) const;

 protected:
  explicit Problem(ProblemShape shape);

 private:
  ProblemShape shape_;
};

using ProblemPtr = std::shared_ptr<const Problem>;

// Known ids: clique, indset, vertexcover, kcol, hampath, hamcycle,
// dir_hampath_parity, dir_hampath_count, ksat, kcsp, maxkcsp, ov,
// parity_kclique.
ProblemPtr make_problem(std::string_view id, const ProblemParams& params);
const std::vector<std::string>& problem_ids();

// Clique, indset and vertexcover: index = (k-1) * 2^C(n,2) + edge bits.
InstanceIndex graph_family_index(unsigned n, unsigned k, std::uint64_t bits);
struct GraphFamilyInstance {
  unsigned k;
  std::uint64_t bits;
};
GraphFamilyInstance graph_family_decode(unsigned n, InstanceIndex phi);

// Lexicographic rank of a sequence that is a permutation of 0..n-1, and back.
std::uint64_t sequence_rank(std::span<const Point> seq);
std::vector<Point> sequence_unrank(unsigned n, std::uint64_t rank);

// ksat clause list: literal subsets of size 1..k ordered by size then
// lexicographically; literal 2i is x_{i+1}, literal 2i+1 is its negation.
std::vector<std::uint64_t> ksat_clauses(unsigned n, unsigned k);

// Helpers shared by the problem families.
namespace detail {
ProblemPtr make_graph_problem(std::string_view id, const ProblemParams& params);
ProblemPtr make_sat_problem(const ProblemParams& params);
ProblemPtr make_csp_problem(std::string_view id, const ProblemParams& params);
ProblemPtr make_ov_problem(const ProblemParams& params);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp, const char* what);
}  // namespace detail

}  // namespace symrec
