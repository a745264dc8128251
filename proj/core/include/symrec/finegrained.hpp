#pragma once

#include "symrec/graph.hpp"
#include "symrec/noise.hpp"
#include "symrec/problem.hpp"
#include "symrec/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace symrec {

struct OVInstance {
  unsigned n = 0;
  unsigned d = 0;
  std::vector<std::uint64_t> vectors;  // bit t is coordinate t

  // First line "n d", then n lines of d space-separated bits.
  static OVInstance parse(std::string_view text);
  static OVInstance from_index(unsigned n, unsigned d, InstanceIndex phi);
  InstanceIndex to_index() const;
};

// Some pair i < j with orthogonal vectors.
bool ov_bruteforce(const OVInstance& v);

// Direct answer when at most three distinct vectors occur.
std::optional<bool> ov_shortcut(const OVInstance& v);

// ceil(8 ln(max(n, 4)) / eps^2).
std::uint64_t default_samples(unsigned n, Rational epsilon);

// Majority over `samples` images under seeded uniform permutations.
// Throws MajorityUndefined on a tie.
bool ov_recover(const OVInstance& v, const Problem& ov_problem, const CorruptedTable& corrupted,
                std::uint64_t samples, std::uint64_t seed);

struct FineOutcome {
  bool value = false;
  bool shortcut = false;  // answered without queries
  std::uint64_t queries = 0;
};

FineOutcome ov_solve(const OVInstance& v, const Problem& ov_problem,
                     const CorruptedTable& corrupted, std::uint64_t samples, std::uint64_t seed);

enum class FamilyKind {
  Complete,
  CompleteMinusEdge,
  CliqueN1PlusIsolated,
  CliqueN1PlusPendant,
  CliqueN2PlusTwoIsolated,
  CliqueN2PlusEdge,
  Other
};

struct GraphFamily {
  FamilyKind kind = FamilyKind::Other;
  bool complement = false;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;
};

inline constexpr FamilyKind kSpecialFamilies[] = {
    FamilyKind::Complete,          FamilyKind::CompleteMinusEdge,
    FamilyKind::CliqueN1PlusIsolated, FamilyKind::CliqueN1PlusPendant,
    FamilyKind::CliqueN2PlusTwoIsolated, FamilyKind::CliqueN2PlusEdge};

std::string family_name(const GraphFamily& f);

// Recognizes the twelve highly symmetric graphs in O(n^2). Requires n >= 4.
GraphFamily classify_graph(const GraphInstance& h);

// The canonical member on vertices 1..n (special vertices take the highest labels).
GraphInstance family_member(const GraphFamily& f, unsigned n);

BigInt aut_order_closed_form(const GraphFamily& f, unsigned n);
BigInt count_k_cliques_special(const GraphFamily& f, unsigned n, unsigned k);

// Parity of the number of k-cliques; classifier hits make no queries.
FineOutcome parity_kclique_recover(const GraphInstance& h, unsigned k, const Problem& problem,
                                   const CorruptedTable& corrupted, std::uint64_t samples,
                                   std::uint64_t seed);

// Uniform permutation of degree m from a seeded generator.
Permutation random_permutation(unsigned m, std::uint64_t seed);
Permutation random_permutation(unsigned m, std::mt19937_64& rng);

}  // namespace symrec
