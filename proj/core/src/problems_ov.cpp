#include "symrec/graph.hpp"
#include "symrec/problem.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace symrec {

namespace {

// Bit i*d + t is coordinate t of vector i; certificates are pairs i < j.
class OvProblem final : public Problem {
 public:
  explicit OvProblem(ProblemShape shape) : Problem(std::move(shape)) {
    for (unsigned i = 0; i < n(); ++i) {
      for (unsigned j = i + 1; j < n(); ++j) pairs_.push_back({static_cast<Point>(i),
                                                               static_cast<Point>(j)});
    }
  }

  std::uint64_t vec(InstanceIndex phi, unsigned i) const {
    const unsigned d = params().d;
    return (phi >> (i * d)) & ((std::uint64_t{1} << d) - 1);
  }

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    const auto& [i, j] = pairs_[x];
    return (vec(phi, i) & vec(phi, j)) == 0;
  }

  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    InstanceIndex out = 0;
    for (unsigned i = 0; i < n(); ++i) out |= vec(phi, i) << (g(i) * params().d);
    return out;
  }

  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    const auto& [i, j] = pairs_[x];
    return pair_bit(n(), g(i), g(j));
  }

  std::vector<CertificateIndex> orbit_reps() const override { return {0}; }

  SubgroupOracle automorphism_oracle(InstanceIndex phi) const override {
    SubgroupOracle oracle = Problem::automorphism_oracle(phi);
    oracle.prefix_ok = [this, phi](std::span<const Point> img) {
      const unsigned last = static_cast<unsigned>(img.size()) - 1;
      return vec(phi, last) == vec(phi, img[last]);
    };
    return oracle;
  }

 private:
  std::vector<std::array<Point, 2>> pairs_;
};

}  // namespace

namespace detail {

ProblemPtr make_ov_problem(const ProblemParams& params) {
  const unsigned n = params.n;
  const unsigned d = params.d;
  if (n < 2) throw std::invalid_argument("ov: n must be at least 2");
  if (d < 1) throw std::invalid_argument("ov: d must be at least 1");
  if (n * d > 63) throw std::invalid_argument("ov: n*d exceeds 64-bit instance indexing");
  ProblemShape s;
  s.name = "ov";
  s.params = params;
  s.params.k = 0;
  s.alphabet_size = 2;
  s.instance_length = n * d;
  s.group_degree = n;
  s.semigroup = Semigroup(SemigroupId::BoolOr);
  s.instance_count = InstanceIndex{1} << (n * d);
  s.certificate_count = BigInt(n) * (n - 1) / 2;
  s.orbit_count = 1;
  return std::make_shared<OvProblem>(std::move(s));
}

}  // namespace detail

}  // namespace symrec
