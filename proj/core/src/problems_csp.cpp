#include "symrec/problem.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace symrec {

namespace {

// Selection bits over tuples in [q]^k (first coordinate most significant);
// proofs y in alphabet^q with y_1 least significant.
class CspProblem final : public Problem {
 public:
  CspProblem(ProblemShape shape, bool maximize) : Problem(std::move(shape)), maximize_(maximize) {
    const unsigned q = n();
    const unsigned k = params().k;
    const std::uint64_t tuples = instance_length();
    tuple_vars_.resize(tuples * k);
    for (std::uint64_t t = 0; t < tuples; ++t) {
      std::uint64_t rest = t;
      for (unsigned s = k; s-- > 0;) {
        tuple_vars_[t * k + s] = static_cast<Point>(rest % q);
        rest /= q;
      }
    }
  }

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    const auto y = decode(x);
    const unsigned k = params().k;
    const unsigned a = params().alphabet;
    Value satisfied = 0;
    for (std::uint64_t s = phi; s; s &= s - 1) {
      const std::uint64_t t = static_cast<std::uint64_t>(std::countr_zero(s));
      std::uint64_t entry = 0;
      for (unsigned p = k; p-- > 0;) entry = entry * a + y[tuple_vars_[t * k + p]];
      if (params().clause[entry]) {
        ++satisfied;
      } else if (!maximize_) {
        return 0;
      }
    }
    return maximize_ ? satisfied : 1;
  }

  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    const unsigned k = params().k;
    InstanceIndex out = 0;
    for (std::uint64_t s = phi; s; s &= s - 1) {
      const std::uint64_t t = static_cast<std::uint64_t>(std::countr_zero(s));
      std::uint64_t moved = 0;
      for (unsigned p = 0; p < k; ++p) moved = moved * n() + g(tuple_vars_[t * k + p]);
      out |= std::uint64_t{1} << moved;
    }
    return out;
  }

  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    const auto y = decode(x);
    std::array<unsigned, 64> out{};
    for (unsigned j = 0; j < n(); ++j) out[g(j)] = y[j];
    return encode(out);
  }

  std::vector<CertificateIndex> orbit_reps() const override {
    std::vector<CertificateIndex> out;
    std::array<unsigned, 64> y{};
    auto rec = [&](auto&& self, unsigned pos, unsigned lo) -> void {
      if (pos == n()) {
        out.push_back(encode(y));
        return;
      }
      for (unsigned v = lo; v < params().alphabet; ++v) {
        y[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, 0);
    return out;
  }

 private:
  std::array<unsigned, 64> decode(CertificateIndex x) const {
    std::array<unsigned, 64> y{};
    for (unsigned j = 0; j < n(); ++j) {
      y[j] = static_cast<unsigned>(x % params().alphabet);
      x /= params().alphabet;
    }
    return y;
  }
  CertificateIndex encode(const std::array<unsigned, 64>& y) const {
    CertificateIndex x = 0;
    for (unsigned j = n(); j-- > 0;) x = x * params().alphabet + y[j];
    return x;
  }

  bool maximize_;
  std::vector<Point> tuple_vars_;
};

}  // namespace

namespace detail {

ProblemPtr make_csp_problem(std::string_view id, const ProblemParams& params) {
  ProblemParams p = params;
  if (p.q == 0) p.q = p.n;
  if (p.n == 0) p.n = p.q;
  if (p.n != p.q) throw std::invalid_argument(std::string(id) + ": n and q disagree");
  if (p.q < 1 || p.q > 16) throw std::invalid_argument(std::string(id) + ": q must be in [1, 16]");
  if (p.k < 1) throw std::invalid_argument(std::string(id) + ": k must be at least 1");
  if (p.alphabet < 2) throw std::invalid_argument(std::string(id) + ": alphabet must be >= 2");
  const std::uint64_t entries = checked_pow(p.alphabet, p.k, "kcsp clause table");
  if (p.clause.empty()) {
    p.clause.assign(entries, 0);
    for (std::uint64_t e = 0; e < entries; ++e) {
      std::uint64_t rest = e;
      const std::uint64_t first = rest % p.alphabet;
      bool all_equal = true;
      for (unsigned s = 0; s < p.k; ++s, rest /= p.alphabet) all_equal &= rest % p.alphabet == first;
      p.clause[e] = all_equal ? 0 : 1;
    }
  }
  if (p.clause.size() != entries) {
    throw std::invalid_argument(std::string(id) + ": clause table needs " +
                                std::to_string(entries) + " entries, got " +
                                std::to_string(p.clause.size()));
  }
  for (auto& c : p.clause) {
    if (c > 1) throw std::invalid_argument(std::string(id) + ": clause table entries must be 0/1");
  }
  const std::uint64_t tuples = checked_pow(p.q, p.k, "kcsp tuples");
  if (tuples > 63) {
    throw std::invalid_argument(std::string(id) + ": " + std::to_string(tuples) +
                                " tuples exceed 64-bit instance indexing");
  }
  const bool maximize = id == "maxkcsp";
  ProblemShape s;
  s.name = std::string(id);
  s.params = p;
  s.alphabet_size = 2;
  s.instance_length = static_cast<unsigned>(tuples);
  s.group_degree = p.q;
  s.semigroup = Semigroup(maximize ? SemigroupId::IntMax : SemigroupId::BoolOr);
  s.instance_count = InstanceIndex{1} << tuples;
  s.certificate_count = checked_pow(p.alphabet, p.q, "kcsp proofs");
  s.orbit_count = static_cast<std::uint64_t>(binomial(p.q + p.alphabet - 1, p.alphabet - 1));
  s.value_max = maximize ? tuples : 1;
  return std::make_shared<CspProblem>(std::move(s), maximize);
}

}  // namespace detail

}  // namespace symrec
