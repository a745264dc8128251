#include "symrec/problem.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace symrec {

std::vector<std::uint64_t> ksat_clauses(unsigned n, unsigned k) {
  const unsigned lits = 2 * n;
  std::vector<std::uint64_t> out;
  std::vector<unsigned> pick;
  for (unsigned size = 1; size <= k && size <= lits; ++size) {
    pick.resize(size);
    for (unsigned i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint64_t c = 0;
      for (unsigned l : pick) c |= std::uint64_t{1} << l;
      out.push_back(c);
      int pos = static_cast<int>(size) - 1;
      while (pos >= 0 && pick[pos] == lits - size + static_cast<unsigned>(pos)) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (unsigned i = static_cast<unsigned>(pos) + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return out;
}

namespace {

class SatProblem final : public Problem {
 public:
  SatProblem(ProblemShape shape, std::vector<std::uint64_t> clauses)
      : Problem(std::move(shape)), clauses_(std::move(clauses)) {
    for (unsigned i = 0; i < clauses_.size(); ++i) lookup_.emplace(clauses_[i], i);
  }

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    std::uint64_t truth = 0;
    for (unsigned i = 0; i < n(); ++i) {
      truth |= std::uint64_t{1} << (2 * i + (((x >> i) & 1u) ? 0 : 1));
    }
    for (std::uint64_t s = phi; s; s &= s - 1) {
      if (!(clauses_[std::countr_zero(s)] & truth)) return 0;
    }
    return 1;
  }

  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    InstanceIndex out = 0;
    for (std::uint64_t s = phi; s; s &= s - 1) {
      std::uint64_t moved = 0;
      for (std::uint64_t c = clauses_[std::countr_zero(s)]; c; c &= c - 1) {
        const unsigned lit = static_cast<unsigned>(std::countr_zero(c));
        moved |= std::uint64_t{1} << (2 * g(lit / 2) + (lit & 1u));
      }
      out |= std::uint64_t{1} << lookup_.at(moved);
    }
    return out;
  }

  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    CertificateIndex out = 0;
    for (; x; x &= x - 1) out |= std::uint64_t{1} << g(static_cast<unsigned>(std::countr_zero(x)));
    return out;
  }

  // 0^k 1^(n-k) for k = 0..n.
  std::vector<CertificateIndex> orbit_reps() const override {
    std::vector<CertificateIndex> out;
    const std::uint64_t all = (std::uint64_t{1} << n()) - 1;
    for (unsigned k = 0; k <= n(); ++k) out.push_back(all & ~((std::uint64_t{1} << k) - 1));
    return out;
  }

 private:
  std::vector<std::uint64_t> clauses_;
  std::unordered_map<std::uint64_t, unsigned> lookup_;
};

}  // namespace

namespace detail {

ProblemPtr make_sat_problem(const ProblemParams& params) {
  const unsigned n = params.n;
  if (n < 1 || n > 16) throw std::invalid_argument("ksat: n must be in [1, 16]");
  if (params.k < 1) throw std::invalid_argument("ksat: k must be at least 1");
  auto clauses = ksat_clauses(n, params.k);
  if (clauses.size() > 63) {
    throw std::invalid_argument("ksat: " + std::to_string(clauses.size()) +
                                " clauses exceed 64-bit instance indexing");
  }
  ProblemShape s;
  s.name = "ksat";
  s.params = params;
  s.alphabet_size = 2;
  s.instance_length = static_cast<unsigned>(clauses.size());
  s.group_degree = n;
  s.semigroup = Semigroup(SemigroupId::BoolOr);
  s.instance_count = InstanceIndex{1} << clauses.size();
  s.certificate_count = BigInt(1) << n;
  s.orbit_count = n + 1;
  return std::make_shared<SatProblem>(std::move(s), std::move(clauses));
}

}  // namespace detail

}  // namespace symrec
