#include "symrec/problem.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace symrec {

Problem::Problem(ProblemShape shape) : shape_(std::move(shape)) {}

std::string Problem::key() const {
  const ProblemParams& p = shape_.params;
  std::string out = shape_.name;
  std::vector<std::string> parts;
  const std::string& id = shape_.name;
  if (id == "kcol" || id == "ksat" || id == "parity_kclique") {
    parts.push_back("k=" + std::to_string(p.k));
  }
  if (id == "kcsp" || id == "maxkcsp") {
    parts.push_back("k=" + std::to_string(p.k));
    parts.push_back("alphabet=" + std::to_string(p.alphabet));
    std::string table;
    for (auto c : p.clause) table.push_back(static_cast<char>('0' + c));
    parts.push_back("clause=" + table);
  }
  if (id == "ov") parts.push_back("d=" + std::to_string(p.d));
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? ":" : ",") + parts[i];
  return out;
}

SubgroupOracle Problem::automorphism_oracle(InstanceIndex phi) const {
  check_instance(phi);
  SubgroupOracle oracle;
  oracle.accepts = [this, phi](const Permutation& g) { return act_instance(g, phi) == phi; };
  return oracle;
}

void Problem::check_instance(InstanceIndex phi) const {
  if (phi >= shape_.instance_count) {
    throw std::out_of_range(shape_.name + ": instance index " + std::to_string(phi) +
                            " out of range");
  }
}

void Problem::check_certificate(CertificateIndex x) const {
  if (BigInt(x) >= shape_.certificate_count) {
    throw std::out_of_range(shape_.name + ": certificate index " + std::to_string(x) +
                            " out of range");
  }
}

void Problem::check_group_element(const Permutation& g) const {
  if (g.degree() != shape_.group_degree) {
    throw std::invalid_argument(shape_.name + ": permutation degree " +
                                std::to_string(g.degree()) + " but group degree is " +
                                std::to_string(shape_.group_degree));
  }
}

const std::vector<std::string>& problem_ids() {
  static const std::vector<std::string> ids = {
      "clique", "indset", "vertexcover",       "kcol",              "hampath",
      "hamcycle", "dir_hampath_parity", "dir_hampath_count", "ksat", "kcsp",
      "maxkcsp", "ov",   "parity_kclique"};
  return ids;
}

ProblemPtr make_problem(std::string_view id, const ProblemParams& params) {
  if (id == "clique" || id == "indset" || id == "vertexcover" || id == "kcol" ||
      id == "hampath" || id == "hamcycle" || id == "dir_hampath_parity" ||
      id == "dir_hampath_count" || id == "parity_kclique") {
    return detail::make_graph_problem(id, params);
  }
  if (id == "ksat") return detail::make_sat_problem(params);
  if (id == "kcsp" || id == "maxkcsp") return detail::make_csp_problem(id, params);
  if (id == "ov") return detail::make_ov_problem(params);
  throw std::invalid_argument("unknown problem id '" + std::string(id) + "'");
}

InstanceIndex graph_family_index(unsigned n, unsigned k, std::uint64_t bits) {
  const unsigned pairs = n * (n - 1) / 2;
  if (k < 1 || k > n) throw std::out_of_range("graph family: k outside [1, n]");
  if (pairs < 64 && (bits >> pairs) != 0) throw std::out_of_range("graph family: edge bits");
  return (InstanceIndex{k} - 1) * (InstanceIndex{1} << pairs) + bits;
}

GraphFamilyInstance graph_family_decode(unsigned n, InstanceIndex phi) {
  const unsigned pairs = n * (n - 1) / 2;
  const std::uint64_t mask = (std::uint64_t{1} << pairs) - 1;
  if ((phi >> pairs) >= n) {
    throw std::out_of_range("graph family index " + std::to_string(phi) + " out of range");
  }
  return {static_cast<unsigned>((phi >> pairs) + 1), phi & mask};
}

std::uint64_t sequence_rank(std::span<const Point> seq) {
  const std::size_t n = seq.size();
  std::uint64_t rank = 0;
  std::uint64_t used = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned smaller =
        static_cast<unsigned>(std::popcount(~used & ((std::uint64_t{1} << seq[i]) - 1)));
    rank = rank * (n - i) + smaller;
    used |= std::uint64_t{1} << seq[i];
  }
  return rank;
}

std::vector<Point> sequence_unrank(unsigned n, std::uint64_t rank) {
  std::vector<std::uint64_t> fact(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
  std::vector<Point> out(n);
  std::uint64_t free = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (unsigned i = 0; i < n; ++i) {
    const std::uint64_t f = fact[n - 1 - i];
    unsigned idx = static_cast<unsigned>(rank / f);
    rank %= f;
    std::uint64_t c = free;
    while (idx--) c &= c - 1;
    const unsigned v = static_cast<unsigned>(std::countr_zero(c));
    out[i] = static_cast<Point>(v);
    free &= ~(std::uint64_t{1} << v);
  }
  return out;
}

namespace detail {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp, const char* what) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > ~std::uint64_t{0} / base) {
      throw std::invalid_argument(std::string(what) + ": space exceeds 64-bit indexing");
    }
    r *= base;
  }
  return r;
}

}  // namespace detail

}  // namespace symrec
