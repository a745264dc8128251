#include "symrec/perm.hpp"

#include <bit>
#include <map>
#include <memory>
#include <numeric>

namespace symrec {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(unsigned x) { return Mask{1} << x; }

StabilizerChain natural(const StabilizerChain& h) {
  if (h.has_natural_base()) return h;
  std::vector<Point> order(h.degree());
  std::iota(order.begin(), order.end(), Point{0});
  return h.rebased(std::move(order));
}

void check_request(const StabilizerChain& h, unsigned m, std::uint64_t k) {
  if (h.degree() != m) {
    throw std::invalid_argument("coset listing: chain degree " + std::to_string(h.degree()) +
                                " differs from m = " + std::to_string(m));
  }
  const BigInt index = factorial(m) / h.order();
  if (BigInt(k) > index) {
    throw std::invalid_argument("coset listing: k = " + std::to_string(k) +
                                " exceeds the index " + to_string(index));
  }
}

// Left cosets gH. g is the least element of gH iff g(i) < g(y) for every
// level i and every y != i in the basic orbit of i. The relation "y lies in
// the basic orbit of i" is a partial order, so the search only needs a Hall
// check on the lower bounds inherited from assigned positions.
class LeftSearch {
 public:
  LeftSearch(const StabilizerChain& h, unsigned m, std::uint64_t k)
      : m_(m), k_(k), ancestors_(m, 0), img_(m) {
    for (unsigned i = 0; i < m; ++i) {
      for (Point y : h.orbit(i)) {
        if (y != i) ancestors_[y] |= bit(i);
      }
    }
  }

  std::vector<Permutation> run() {
    if (k_ > 0) dfs(0, 0);
    return std::move(out_);
  }

 private:
  bool feasible(unsigned assigned, Mask used) const {
    std::array<int, kMaxDegree> need{};
    unsigned count = 0;
    for (unsigned y = assigned; y < m_; ++y) {
      int t = -1;
      for (Mask a = ancestors_[y]; a; a &= a - 1) {
        const unsigned i = static_cast<unsigned>(std::countr_zero(a));
        if (i < assigned) t = std::max(t, static_cast<int>(img_[i]));
      }
      need[count++] = t;
    }
    std::sort(need.begin(), need.begin() + count, std::greater<>());
    // The j-th most demanding position needs j+1 free values above its bound.
    for (unsigned j = 0; j < count; ++j) {
      const int t = need[j];
      unsigned above = 0;
      for (unsigned v = static_cast<unsigned>(t + 1); v < m_; ++v) {
        if (!(used & bit(v))) ++above;
      }
      if (above < j + 1) return false;
    }
    return true;
  }

  void dfs(unsigned pos, Mask used) {
    if (pos == m_) {
      out_.push_back(Permutation::from_images(std::span<const Point>(img_)));
      return;
    }
    int lower = -1;
    for (Mask a = ancestors_[pos]; a; a &= a - 1) {
      lower = std::max(lower, static_cast<int>(img_[std::countr_zero(a)]));
    }
    for (unsigned v = static_cast<unsigned>(lower + 1); v < m_ && out_.size() < k_; ++v) {
      if (used & bit(v)) continue;
      img_[pos] = static_cast<Point>(v);
      if (feasible(pos + 1, used | bit(v))) dfs(pos + 1, used | bit(v));
    }
  }

  unsigned m_;
  std::uint64_t k_;
  std::vector<Mask> ancestors_;
  std::vector<Point> img_;
  std::vector<Permutation> out_;
};

// Right cosets Hg. g is the least element of Hg iff each g(i) is the least
// point of its orbit under the pointwise stabilizer of g(0), ..., g(i-1).
class RightSearch {
 public:
  RightSearch(const StabilizerChain& h, unsigned m, std::uint64_t k) : m_(m), k_(k), img_(m) {
    memo_.emplace(Mask{0}, make_node(h));
  }

  std::vector<Permutation> run() {
    if (k_ > 0) dfs(0, 0);
    return std::move(out_);
  }

 private:
  struct Node {
    std::shared_ptr<const StabilizerChain> chain;  // null when trivial
    Mask orbit_minima = 0;
  };

  Node make_node(const StabilizerChain& chain) const {
    Node node;
    if (chain.is_trivial()) {
      node.orbit_minima = m_ == kMaxDegree ? ~Mask{0} : bit(m_) - 1;
      return node;
    }
    node.chain = std::make_shared<const StabilizerChain>(chain);
    std::vector<unsigned> parent(m_);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](unsigned x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Permutation& g : chain.strong_generators()) {
      for (unsigned x = 0; x < m_; ++x) {
        const unsigned a = find(x);
        const unsigned b = find(g(x));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (unsigned x = 0; x < m_; ++x) {
      if (find(x) == x) node.orbit_minima |= bit(x);
    }
    return node;
  }

  const Node& node_for(Mask fixed, Mask parent_fixed, unsigned point) {
    auto it = memo_.find(fixed);
    if (it != memo_.end()) return it->second;
    const Node& parent = memo_.at(parent_fixed);
    Node node = parent.chain ? make_node(parent.chain->point_stabilizer(point)) : parent;
    return memo_.emplace(fixed, std::move(node)).first->second;
  }

  void dfs(unsigned pos, Mask used) {
    if (pos == m_) {
      out_.push_back(Permutation::from_images(std::span<const Point>(img_)));
      return;
    }
    const Mask minima = memo_.at(used).orbit_minima;
    for (unsigned v = 0; v < m_ && out_.size() < k_; ++v) {
      if ((used & bit(v)) || !(minima & bit(v))) continue;
      img_[pos] = static_cast<Point>(v);
      node_for(used | bit(v), used, v);
      dfs(pos + 1, used | bit(v));
    }
  }

  unsigned m_;
  std::uint64_t k_;
  std::vector<Point> img_;
  std::map<Mask, Node> memo_;
  std::vector<Permutation> out_;
};

}  // namespace

bool same_coset(const StabilizerChain& h, const Permutation& a, const Permutation& b,
                CosetSide side) {
  if (side == CosetSide::Right) return h.contains(compose(a, b.inverse()));
  return h.contains(compose(b.inverse(), a));
}

std::vector<Permutation> list_coset_reps(const StabilizerChain& h, unsigned m, std::uint64_t k,
                                         CosetSide side) {
  check_request(h, m, k);
  const StabilizerChain nat = natural(h);
  if (side == CosetSide::Left) return LeftSearch(nat, m, k).run();
  return RightSearch(nat, m, k).run();
}

std::vector<Permutation> list_coset_reps_reference(const StabilizerChain& h, unsigned m,
                                                   std::uint64_t k, CosetSide side) {
  check_request(h, m, k);
  std::vector<Permutation> kept;
  if (k == 0) return kept;
  for_each_permutation(m, [&](const Permutation& g) {
    for (const Permutation& r : kept) {
      if (same_coset(h, g, r, side)) return true;
    }
    kept.push_back(g);
    return kept.size() < k;
  });
  return kept;
}

}  // namespace symrec
