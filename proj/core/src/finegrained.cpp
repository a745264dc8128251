#include "symrec/finegrained.hpp"

#include "symrec/recover.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace symrec {

OVInstance OVInstance::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  OVInstance v;
  if (!(in >> v.n >> v.d) || v.n == 0 || v.d == 0) {
    throw std::invalid_argument("ov text: expected \"n d\" on the first line");
  }
  if (v.d > 64) throw std::invalid_argument("ov text: d above 64");
  v.vectors.assign(v.n, 0);
  for (unsigned i = 0; i < v.n; ++i) {
    for (unsigned t = 0; t < v.d; ++t) {
      int b = 0;
      if (!(in >> b) || (b != 0 && b != 1)) {
        throw std::invalid_argument("ov text: vector " + std::to_string(i + 1) +
                                    " needs " + std::to_string(v.d) + " bits");
      }
      if (b) v.vectors[i] |= std::uint64_t{1} << t;
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("ov text: trailing data");
  return v;
}

OVInstance OVInstance::from_index(unsigned n, unsigned d, InstanceIndex phi) {
  OVInstance v;
  v.n = n;
  v.d = d;
  for (unsigned i = 0; i < n; ++i) v.vectors.push_back((phi >> (i * d)) & ((std::uint64_t{1} << d) - 1));
  return v;
}

InstanceIndex OVInstance::to_index() const {
  if (n * d > 63) throw std::length_error("ov instance exceeds 64-bit indexing");
  InstanceIndex phi = 0;
  for (unsigned i = 0; i < n; ++i) phi |= vectors[i] << (i * d);
  return phi;
}

bool ov_bruteforce(const OVInstance& v) {
  for (unsigned i = 0; i < v.n; ++i) {
    for (unsigned j = i + 1; j < v.n; ++j) {
      if ((v.vectors[i] & v.vectors[j]) == 0) return true;
    }
  }
  return false;
}

std::optional<bool> ov_shortcut(const OVInstance& v) {
  std::vector<std::pair<std::uint64_t, unsigned>> distinct;
  for (std::uint64_t x : v.vectors) {
    auto it = std::find_if(distinct.begin(), distinct.end(),
                           [x](const auto& p) { return p.first == x; });
    if (it != distinct.end()) {
      ++it->second;
    } else {
      if (distinct.size() == 3) return std::nullopt;
      distinct.push_back({x, 1});
    }
  }
  for (std::size_t a = 0; a < distinct.size(); ++a) {
    if (distinct[a].second >= 2 && distinct[a].first == 0) return true;
    for (std::size_t b = a + 1; b < distinct.size(); ++b) {
      if ((distinct[a].first & distinct[b].first) == 0) return true;
    }
  }
  return false;
}

std::uint64_t default_samples(unsigned n, Rational epsilon) {
  if (epsilon.num == 0) throw std::invalid_argument("epsilon must be positive");
  const long double e = epsilon.to_long_double();
  const long double raw = 8.0L * std::log(static_cast<long double>(std::max(n, 4u))) / (e * e);
  return static_cast<std::uint64_t>(std::ceil(raw));
}

Permutation random_permutation(unsigned m, std::mt19937_64& rng) {
  std::array<Point, kMaxDegree> img;
  for (unsigned i = 0; i < m; ++i) img[i] = static_cast<Point>(i);
  for (unsigned i = m; i > 1; --i) std::swap(img[i - 1], img[uniform_below(rng, i)]);
  return Permutation::from_images(std::span<const Point>(img.data(), m));
}

Permutation random_permutation(unsigned m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_permutation(m, rng);
}

namespace {

Value sampled_majority(const Problem& problem, InstanceIndex phi, const CorruptedTable& corrupted,
                       std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw std::invalid_argument("samples must be at least 1");
  std::vector<Value> answers;
  answers.reserve(samples);
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Permutation g = random_permutation(problem.group_degree(), rng);
    answers.push_back(corrupted.query(problem.act_instance(g, phi)));
  }
  return majority(answers);
}

}  // namespace

bool ov_recover(const OVInstance& v, const Problem& ov_problem, const CorruptedTable& corrupted,
                std::uint64_t samples, std::uint64_t seed) {
  if (ov_problem.name() != "ov" || ov_problem.n() != v.n || ov_problem.params().d != v.d) {
    throw std::invalid_argument("ov_recover: problem does not match the instance shape");
  }
  return sampled_majority(ov_problem, v.to_index(), corrupted, samples, seed) != 0;
}

FineOutcome ov_solve(const OVInstance& v, const Problem& ov_problem,
                     const CorruptedTable& corrupted, std::uint64_t samples, std::uint64_t seed) {
  FineOutcome out;
  if (const auto direct = ov_shortcut(v)) {
    out.value = *direct;
    out.shortcut = true;
    return out;
  }
  out.value = ov_recover(v, ov_problem, corrupted, samples, seed);
  out.queries = samples;
  return out;
}

std::string family_name(const GraphFamily& f) {
  std::string base;
  switch (f.kind) {
    case FamilyKind::Complete:
      base = "complete";
      break;
    case FamilyKind::CompleteMinusEdge:
      base = "complete_minus_edge";
      break;
    case FamilyKind::CliqueN1PlusIsolated:
      base = "clique_n1_plus_isolated";
      break;
    case FamilyKind::CliqueN1PlusPendant:
      base = "clique_n1_plus_pendant";
      break;
    case FamilyKind::CliqueN2PlusTwoIsolated:
      base = "clique_n2_plus_two_isolated";
      break;
    case FamilyKind::CliqueN2PlusEdge:
      base = "clique_n2_plus_edge";
      break;
    case FamilyKind::Other:
      return "other";
  }
  return f.complement ? "complement_of_" + base : base;
}

namespace {

FamilyKind match_family(const GraphInstance& h) {
  const unsigned n = h.n();
  std::vector<unsigned> deg(n);
  for (unsigned v = 0; v < n; ++v) deg[v] = h.degree(v);
  auto count_deg = [&](unsigned d) {
    return static_cast<unsigned>(std::count(deg.begin(), deg.end(), d));
  };
  const std::size_t all = std::size_t{n} * (n - 1) / 2;
  const std::size_t edges = h.edge_count();
  if (edges == all) return FamilyKind::Complete;
  if (edges + 1 == all) return FamilyKind::CompleteMinusEdge;
  if (count_deg(n - 2) == n - 1 && count_deg(0) == 1) return FamilyKind::CliqueN1PlusIsolated;
  if (count_deg(n - 1) == 1 && count_deg(n - 2) == n - 2 && count_deg(1) == 1) {
    return FamilyKind::CliqueN1PlusPendant;
  }
  if (count_deg(n - 3) == n - 2 && count_deg(0) == 2) return FamilyKind::CliqueN2PlusTwoIsolated;
  if (n == 4) {
    if (count_deg(1) == 4) return FamilyKind::CliqueN2PlusEdge;
  } else if (count_deg(n - 3) == n - 2 && count_deg(1) == 2) {
    unsigned a = n;
    unsigned b = n;
    for (unsigned v = 0; v < n; ++v) {
      if (deg[v] == 1) (a == n ? a : b) = v;
    }
    if (h.has_edge(a, b)) return FamilyKind::CliqueN2PlusEdge;
  }
  return FamilyKind::Other;
}

}  // namespace

GraphFamily classify_graph(const GraphInstance& h) {
  if (h.directed()) throw std::invalid_argument("classify_graph: undirected graphs only");
  if (h.n() < 4) throw std::invalid_argument("classify_graph: needs n >= 4");
  const GraphInstance c = h.complement();
  const bool dense_first = 2 * h.edge_count() >= std::size_t{h.n()} * (h.n() - 1) / 2;
  const GraphInstance& first = dense_first ? h : c;
  const GraphInstance& second = dense_first ? c : h;
  if (const FamilyKind k = match_family(first); k != FamilyKind::Other) return {k, !dense_first};
  if (const FamilyKind k = match_family(second); k != FamilyKind::Other) return {k, dense_first};
  return {};
}

GraphInstance family_member(const GraphFamily& f, unsigned n) {
  if (n < 4) throw std::invalid_argument("family_member: needs n >= 4");
  GraphInstance g(n, false);
  auto clique = [&](unsigned size) {
    for (unsigned i = 0; i < size; ++i) {
      for (unsigned j = i + 1; j < size; ++j) g.set_edge(i, j);
    }
  };
  switch (f.kind) {
    case FamilyKind::Complete:
      clique(n);
      break;
    case FamilyKind::CompleteMinusEdge:
      clique(n);
      g.set_edge(n - 2, n - 1, false);
      break;
    case FamilyKind::CliqueN1PlusIsolated:
      clique(n - 1);
      break;
    case FamilyKind::CliqueN1PlusPendant:
      clique(n - 1);
      g.set_edge(n - 2, n - 1);
      break;
    case FamilyKind::CliqueN2PlusTwoIsolated:
      clique(n - 2);
      break;
    case FamilyKind::CliqueN2PlusEdge:
      clique(n - 2);
      g.set_edge(n - 2, n - 1);
      break;
    case FamilyKind::Other:
      throw std::invalid_argument("family_member: no canonical member of Other");
  }
  return f.complement ? g.complement() : g;
}

BigInt aut_order_closed_form(const GraphFamily& f, unsigned n) {
  if (n < 4) throw std::invalid_argument("aut_order_closed_form: needs n >= 4");
  switch (f.kind) {
    case FamilyKind::Complete:
      return factorial(n);
    case FamilyKind::CompleteMinusEdge:
    case FamilyKind::CliqueN2PlusTwoIsolated:
    case FamilyKind::CliqueN2PlusEdge:
      return 2 * factorial(n - 2);
    case FamilyKind::CliqueN1PlusIsolated:
      return factorial(n - 1);
    case FamilyKind::CliqueN1PlusPendant:
      return factorial(n - 2);
    case FamilyKind::Other:
      break;
  }
  throw std::invalid_argument("aut_order_closed_form: no closed form for Other");
}

BigInt count_k_cliques_special(const GraphFamily& f, unsigned n, unsigned k) {
  if (k < 3) throw std::invalid_argument("count_k_cliques_special: needs k >= 3");
  if (n < 4) throw std::invalid_argument("count_k_cliques_special: needs n >= 4");
  if (f.complement) {
    switch (f.kind) {
      case FamilyKind::CliqueN2PlusTwoIsolated:
        return k == 3 ? BigInt(n - 2) : BigInt(0);
      case FamilyKind::Other:
        break;
      default:
        return 0;
    }
  } else {
    switch (f.kind) {
      case FamilyKind::Complete:
        return binomial(n, k);
      case FamilyKind::CompleteMinusEdge:
        return binomial(n, k) - binomial(n - 2, k - 2);
      case FamilyKind::CliqueN1PlusIsolated:
      case FamilyKind::CliqueN1PlusPendant:
        return binomial(n - 1, k);
      case FamilyKind::CliqueN2PlusTwoIsolated:
      case FamilyKind::CliqueN2PlusEdge:
        return binomial(n - 2, k);
      case FamilyKind::Other:
        break;
    }
  }
  throw std::invalid_argument("count_k_cliques_special: no closed form for Other");
}

FineOutcome parity_kclique_recover(const GraphInstance& h, unsigned k, const Problem& problem,
                                   const CorruptedTable& corrupted, std::uint64_t samples,
                                   std::uint64_t seed) {
  if (problem.name() != "parity_kclique" || problem.n() != h.n() || problem.params().k != k) {
    throw std::invalid_argument("parity_kclique_recover: problem does not match the instance");
  }
  if (k < 3) throw std::invalid_argument("parity_kclique_recover: needs k >= 3");
  FineOutcome out;
  const GraphFamily f = classify_graph(h);
  if (f.kind != FamilyKind::Other) {
    out.value = bit_test(count_k_cliques_special(f, h.n(), k), 0);
    out.shortcut = true;
    return out;
  }
  out.value = sampled_majority(problem, h.to_bits(), corrupted, samples, seed) != 0;
  out.queries = samples;
  return out;
}

}  // namespace symrec
