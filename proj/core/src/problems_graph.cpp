#include "symrec/graph.hpp"
#include "symrec/problem.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace symrec {

namespace {

using Rows = std::array<std::uint64_t, 64>;

class GraphLayout {
 public:
  GraphLayout(unsigned n, bool directed) : n_(n), directed_(directed) {
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = directed ? 0 : i + 1; j < n; ++j) {
        if (i != j) pairs_.push_back({static_cast<Point>(i), static_cast<Point>(j)});
      }
    }
  }

  unsigned n() const { return n_; }
  unsigned bits() const { return static_cast<unsigned>(pairs_.size()); }

  Rows rows(std::uint64_t edges) const {
    Rows r{};
    for (std::uint64_t e = edges; e; e &= e - 1) {
      const auto& [i, j] = pairs_[std::countr_zero(e)];
      r[i] |= std::uint64_t{1} << j;
      if (!directed_) r[j] |= std::uint64_t{1} << i;
    }
    return r;
  }

  std::uint64_t relabel(const Permutation& g, std::uint64_t edges) const {
    std::uint64_t out = 0;
    for (std::uint64_t e = edges; e; e &= e - 1) {
      const auto& [i, j] = pairs_[std::countr_zero(e)];
      const unsigned a = g(i);
      const unsigned b = g(j);
      out |= std::uint64_t{1} << (directed_ ? arc_bit(n_, a, b) : pair_bit(n_, a, b));
    }
    return out;
  }

  // Partial map img[0..len) preserves adjacency among its domain.
  bool prefix_ok(const Rows& r, std::span<const Point> img) const {
    const unsigned last = static_cast<unsigned>(img.size()) - 1;
    const unsigned a = img[last];
    for (unsigned i = 0; i < last; ++i) {
      const unsigned b = img[i];
      if (((r[last] >> i) & 1u) != ((r[a] >> b) & 1u)) return false;
      if (directed_ && ((r[i] >> last) & 1u) != ((r[b] >> a) & 1u)) return false;
    }
    return true;
  }

 private:
  unsigned n_;
  bool directed_;
  std::vector<std::array<Point, 2>> pairs_;
};

std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::uint64_t subset_image(const Permutation& g, std::uint64_t s) {
  std::uint64_t out = 0;
  for (; s; s &= s - 1) out |= std::uint64_t{1} << g(static_cast<unsigned>(std::countr_zero(s)));
  return out;
}

bool is_clique(const Rows& r, std::uint64_t s) {
  for (std::uint64_t t = s; t; t &= t - 1) {
    const unsigned v = static_cast<unsigned>(std::countr_zero(t));
    if ((s & ~r[v]) != (std::uint64_t{1} << v)) return false;
  }
  return true;
}

bool is_independent(const Rows& r, std::uint64_t s) {
  for (std::uint64_t t = s; t; t &= t - 1) {
    if (s & r[std::countr_zero(t)]) return false;
  }
  return true;
}

bool is_cover(const Rows& r, unsigned n, std::uint64_t s) {
  for (unsigned v = 0; v < n; ++v) {
    if (!((s >> v) & 1u) && (r[v] & ~s)) return false;
  }
  return true;
}

class GraphProblem : public Problem {
 protected:
  GraphProblem(ProblemShape shape, bool directed)
      : Problem(std::move(shape)), layout_(n(), directed) {}

  std::uint64_t edge_bits(InstanceIndex phi) const { return phi & low_mask(layout_.bits()); }

  SubgroupOracle graph_oracle(InstanceIndex phi) const {
    SubgroupOracle oracle = Problem::automorphism_oracle(phi);
    const Rows r = layout_.rows(edge_bits(phi));
    oracle.prefix_ok = [this, r](std::span<const Point> img) { return layout_.prefix_ok(r, img); };
    return oracle;
  }

  GraphLayout layout_;
};

void require_n(unsigned n, unsigned lo, unsigned hi, std::string_view id) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(id) + ": n must be in [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "], got " + std::to_string(n));
  }
}

// clique, indset, vertexcover over [n] x {0,1}^C(n,2).
class SubsetFamilyProblem final : public GraphProblem {
 public:
  enum class Kind { Clique, IndSet, VertexCover };

  SubsetFamilyProblem(Kind kind, ProblemShape shape) : GraphProblem(std::move(shape), false),
                                                        kind_(kind) {}

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    const auto [k, bits] = graph_family_decode(n(), phi);
    if (static_cast<unsigned>(std::popcount(x)) != k) return 0;
    const Rows r = layout_.rows(bits);
    switch (kind_) {
      case Kind::Clique:
        return is_clique(r, x);
      case Kind::IndSet:
        return is_independent(r, x);
      case Kind::VertexCover:
        return is_cover(r, n(), x);
    }
    return 0;
  }

  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    const auto [k, bits] = graph_family_decode(n(), phi);
    return graph_family_index(n(), k, layout_.relabel(g, bits));
  }

  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    return subset_image(g, x);
  }

  std::vector<CertificateIndex> orbit_reps() const override {
    std::vector<CertificateIndex> out;
    for (unsigned k = 0; k <= n(); ++k) out.push_back(low_mask(k));
    return out;
  }

  SubgroupOracle automorphism_oracle(InstanceIndex phi) const override { return graph_oracle(phi); }

 private:
  Kind kind_;
};

class ParityCliqueProblem final : public GraphProblem {
 public:
  explicit ParityCliqueProblem(ProblemShape shape) : GraphProblem(std::move(shape), false) {}

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    if (static_cast<unsigned>(std::popcount(x)) != params().k) return 0;
    return is_clique(layout_.rows(phi), x);
  }
  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    return layout_.relabel(g, phi);
  }
  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    return subset_image(g, x);
  }
  std::vector<CertificateIndex> orbit_reps() const override {
    std::vector<CertificateIndex> out;
    for (unsigned k = 0; k <= n(); ++k) out.push_back(low_mask(k));
    return out;
  }
  SubgroupOracle automorphism_oracle(InstanceIndex phi) const override { return graph_oracle(phi); }
};

// Colorings c in [k]^n, index sum_i c_i k^i.
class ColoringProblem final : public GraphProblem {
 public:
  explicit ColoringProblem(ProblemShape shape) : GraphProblem(std::move(shape), false) {}

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    const auto c = decode(x);
    const Rows r = layout_.rows(phi);
    for (unsigned i = 0; i < n(); ++i) {
      for (std::uint64_t t = r[i] >> (i + 1); t; t &= t - 1) {
        const unsigned j = i + 1 + static_cast<unsigned>(std::countr_zero(t));
        if (c[i] == c[j]) return 0;
      }
    }
    return 1;
  }
  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    return layout_.relabel(g, phi);
  }
  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    const auto c = decode(x);
    std::array<unsigned, 64> out{};
    for (unsigned i = 0; i < n(); ++i) out[g(i)] = c[i];
    return encode(out);
  }
  std::vector<CertificateIndex> orbit_reps() const override {
    std::vector<CertificateIndex> out;
    std::array<unsigned, 64> c{};
    auto rec = [&](auto&& self, unsigned pos, unsigned lo) -> void {
      if (pos == n()) {
        out.push_back(encode(c));
        return;
      }
      for (unsigned v = lo; v < params().k; ++v) {
        c[pos] = v;
        self(self, pos + 1, v);
      }
    };
    rec(rec, 0, 0);
    return out;
  }
  SubgroupOracle automorphism_oracle(InstanceIndex phi) const override { return graph_oracle(phi); }

 private:
  std::array<unsigned, 64> decode(CertificateIndex x) const {
    std::array<unsigned, 64> c{};
    for (unsigned i = 0; i < n(); ++i) {
      c[i] = static_cast<unsigned>(x % params().k);
      x /= params().k;
    }
    return c;
  }
  CertificateIndex encode(const std::array<unsigned, 64>& c) const {
    CertificateIndex x = 0;
    for (unsigned i = n(); i-- > 0;) x = x * params().k + c[i];
    return x;
  }
};

// Vertex sequences, certificate index = lexicographic rank.
class SequenceProblem final : public GraphProblem {
 public:
  enum class Kind { Path, Cycle, DirectedPath };

  SequenceProblem(Kind kind, ProblemShape shape)
      : GraphProblem(std::move(shape), kind == Kind::DirectedPath), kind_(kind) {}

  Value h(InstanceIndex phi, CertificateIndex x) const override {
    const Rows r = layout_.rows(phi);
    const auto seq = sequence_unrank(n(), x);
    for (unsigned i = 0; i + 1 < n(); ++i) {
      if (!((r[seq[i]] >> seq[i + 1]) & 1u)) return 0;
    }
    if (kind_ == Kind::Cycle) {
      if (n() < 3) return 0;
      if (!((r[seq[n() - 1]] >> seq[0]) & 1u)) return 0;
    }
    return 1;
  }
  InstanceIndex act_instance(const Permutation& g, InstanceIndex phi) const override {
    return layout_.relabel(g, phi);
  }
  CertificateIndex act_certificate(const Permutation& g, CertificateIndex x) const override {
    auto seq = sequence_unrank(n(), x);
    for (auto& v : seq) v = static_cast<Point>(g(v));
    return sequence_rank(seq);
  }
  std::vector<CertificateIndex> orbit_reps() const override { return {0}; }
  SubgroupOracle automorphism_oracle(InstanceIndex phi) const override { return graph_oracle(phi); }

 private:
  Kind kind_;
};

}  // namespace

namespace detail {

ProblemPtr make_graph_problem(std::string_view id, const ProblemParams& params) {
  ProblemShape s;
  s.name = std::string(id);
  s.params = params;
  const unsigned n = params.n;
  s.group_degree = n;
  s.alphabet_size = 2;
  s.semigroup = Semigroup(SemigroupId::BoolOr);

  if (id == "clique" || id == "indset" || id == "vertexcover") {
    require_n(n, 1, 11, id);
    s.params.k = 0;
    const unsigned pairs = n * (n - 1) / 2;
    s.instance_length = pairs;
    s.instance_count = InstanceIndex{n} << pairs;
    s.certificate_count = BigInt(1) << n;
    s.orbit_count = n + 1;
    const auto kind = id == "clique"   ? SubsetFamilyProblem::Kind::Clique
                      : id == "indset" ? SubsetFamilyProblem::Kind::IndSet
                                       : SubsetFamilyProblem::Kind::VertexCover;
    return std::make_shared<SubsetFamilyProblem>(kind, std::move(s));
  }
  if (id == "parity_kclique") {
    require_n(n, 1, 11, id);
    if (params.k < 1 || params.k > n) throw std::invalid_argument("parity_kclique: k in [1, n]");
    const unsigned pairs = n * (n - 1) / 2;
    s.instance_length = pairs;
    s.instance_count = InstanceIndex{1} << pairs;
    s.certificate_count = BigInt(1) << n;
    s.orbit_count = n + 1;
    s.semigroup = Semigroup(SemigroupId::BoolXor);
    return std::make_shared<ParityCliqueProblem>(std::move(s));
  }
  if (id == "kcol") {
    require_n(n, 1, 11, id);
    if (params.k < 1) throw std::invalid_argument("kcol: k must be at least 1");
    const unsigned pairs = n * (n - 1) / 2;
    s.instance_length = pairs;
    s.instance_count = InstanceIndex{1} << pairs;
    s.certificate_count = checked_pow(params.k, n, "kcol");
    s.orbit_count = static_cast<std::uint64_t>(binomial(n + params.k - 1, params.k - 1));
    return std::make_shared<ColoringProblem>(std::move(s));
  }
  s.params.k = 0;
  if (id == "hampath" || id == "hamcycle") {
    require_n(n, 1, 11, id);
    const unsigned pairs = n * (n - 1) / 2;
    s.instance_length = pairs;
    s.instance_count = InstanceIndex{1} << pairs;
    s.certificate_count = factorial(n);
    s.orbit_count = 1;
    s.regular_orbits = true;
    return std::make_shared<SequenceProblem>(
        id == "hampath" ? SequenceProblem::Kind::Path : SequenceProblem::Kind::Cycle, std::move(s));
  }
  if (id == "dir_hampath_parity" || id == "dir_hampath_count") {
    require_n(n, 1, 8, id);
    const unsigned arcs = n * (n - 1);
    s.instance_length = arcs;
    s.instance_count = InstanceIndex{1} << arcs;
    s.certificate_count = factorial(n);
    s.orbit_count = 1;
    s.regular_orbits = true;
    if (id == "dir_hampath_count") {
      s.semigroup = Semigroup(SemigroupId::IntAdd);
      s.value_max = static_cast<Value>(factorial(n));
    } else {
      s.semigroup = Semigroup(SemigroupId::BoolXor);
    }
    return std::make_shared<SequenceProblem>(SequenceProblem::Kind::DirectedPath, std::move(s));
  }
  throw std::invalid_argument("unknown graph problem '" + std::string(id) + "'");
}

}  // namespace detail

}  // namespace symrec
