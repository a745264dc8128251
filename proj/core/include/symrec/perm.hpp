#pragma once

// Permutations of {0, ..., m-1} and base-and-strong-generating-set chains.
//
// Points are 0-based in the API. The text form ("2,3,1") is 1-based image
// notation. Composition follows (p * q)(x) = p(q(x)), so a left action
// satisfies act(p, act(q, x)) == act(compose(p, q), x).

#include "symrec/bigint.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symrec {

using Point = std::uint8_t;
inline constexpr unsigned kMaxDegree = 64;

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(unsigned m);
  // Throws std::invalid_argument unless `images` is a bijection on [0, size).
  static Permutation from_images(std::span<const unsigned> images);
  static Permutation from_images(std::span<const Point> images);
  static Permutation from_one_based(std::initializer_list<unsigned> images);
  // One-line image notation, comma separated, 1-based.
  static Permutation parse(std::string_view text);

  unsigned degree() const { return degree_; }
  std::span<const Point> images() const { return {images_.data(), degree_}; }

  // Unchecked image of a 0-based point.
  unsigned operator()(unsigned x) const { return images_[x]; }
  // Checked image; throws std::out_of_range.
  unsigned apply(unsigned x) const;

  bool is_identity() const;
  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.degree_ == b.degree_ && std::equal(a.images_.begin(), a.images_.begin() + a.degree_,
                                                b.images_.begin());
  }
  // Lexicographic order of the image sequence (degrees compared first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);
  friend Permutation compose(const Permutation& p, const Permutation& q);

 private:
  std::array<Point, kMaxDegree> images_{};
  unsigned degree_ = 0;
};

// (p * q)(x) = p(q(x)); throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

enum class CosetSide { Left, Right };

struct SiftResult {
  Permutation residue;
  bool is_member = false;
};

// Stabilizer chain over a full base ordering of all m points. Levels whose
// basic orbit is a single point are kept, which lets canonical coset
// representatives be read off level by level. Deterministic Schreier-Sims:
// the chain depends only on the generator sequence and the base ordering.
class StabilizerChain {
 public:
  StabilizerChain() = default;
  explicit StabilizerChain(unsigned degree);
  StabilizerChain(unsigned degree, std::vector<Point> base_order);

  unsigned degree() const { return degree_; }
  // Base points whose basic orbit is non-trivial, in chain order.
  std::vector<unsigned> base() const;
  const std::vector<Point>& base_order() const { return base_order_; }
  bool has_natural_base() const;

  // Adds g to the group. Returns false if g was already a member.
  bool insert(const Permutation& g);

  SiftResult sift(const Permutation& p) const;
  bool contains(const Permutation& p) const { return sift(p).is_member; }
  BigInt order() const;
  bool is_trivial() const;

  std::vector<Permutation> strong_generators() const;

  std::size_t level_count() const { return levels_.size(); }
  unsigned base_point(std::size_t level) const { return levels_[level].base; }
  const std::vector<Point>& orbit(std::size_t level) const { return levels_[level].orbit; }
  bool in_orbit(std::size_t level, unsigned point) const {
    return levels_[level].slot[point] >= 0;
  }
  // Coset representative mapping base_point(level) to `point`.
  const Permutation& transversal(std::size_t level, unsigned point) const;
  const std::vector<Permutation>& level_generators(std::size_t level) const {
    return levels_[level].gens;
  }

  // Same group, chain rebuilt over another base ordering.
  StabilizerChain rebased(std::vector<Point> base_order) const;
  // Chain (natural base) of the subgroup fixing `point`.
  StabilizerChain point_stabilizer(unsigned point) const;

  // All elements; throws std::length_error above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1u << 22) const;

  // Lexicographically least element of the left coset g*H (natural base only).
  Permutation min_left_coset_element(const Permutation& g) const;

 private:
  struct Level {
    unsigned base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<int> slot;  // index into trans/trans_inv, -1 when not in orbit
    std::vector<Permutation> trans;
    std::vector<Permutation> trans_inv;
  };

  void insert_at(std::size_t level, const Permutation& g);
  void extend(std::size_t level, const Permutation& t);
  SiftResult sift_from(std::size_t level, Permutation p) const;
  void check_degree(const Permutation& p) const;

  unsigned degree_ = 0;
  std::vector<Point> base_order_;
  std::vector<Level> levels_;
};

StabilizerChain schreier_sims(std::span<const Permutation> generators, unsigned m);
SiftResult sift(const StabilizerChain& chain, const Permutation& p);
BigInt group_order(const StabilizerChain& chain);

// Membership oracle for a subgroup of S_m. `prefix_ok` is optional: it
// receives images of points 0..len-1 and may reject when no member extends
// that prefix. Callers can assume shorter prefixes already passed.
struct SubgroupOracle {
  std::function<bool(const Permutation&)> accepts;
  std::function<bool(std::span<const Point>)> prefix_ok;
};

enum class AutStrategy { Exhaustive, Backtracking };

inline constexpr unsigned kDefaultExhaustiveCap = 10;

// Stabilizer chain (natural base) of the oracle-accepted subgroup.
// Exhaustive scans all of S_m and is refused above `exhaustive_cap`.
StabilizerChain aut_group(const SubgroupOracle& oracle, unsigned m, AutStrategy strategy,
                          unsigned exhaustive_cap = kDefaultExhaustiveCap);

// k representatives of pairwise distinct cosets of H in S_m, in the
// normative order: each is the lexicographically least element of its coset
// and the list is sorted. Throws std::invalid_argument when k exceeds the
// index.
std::vector<Permutation> list_coset_reps(const StabilizerChain& h, unsigned m, std::uint64_t k,
                                         CosetSide side);

// Straight scan of S_m in lexicographic order, keeping an element unless it
// shares a coset with one already kept (decided by sifting). Intended for
// cross-checking; cost grows with m!.
std::vector<Permutation> list_coset_reps_reference(const StabilizerChain& h, unsigned m,
                                                   std::uint64_t k, CosetSide side);

// True when a and b lie in the same coset of H on the given side.
bool same_coset(const StabilizerChain& h, const Permutation& a, const Permutation& b,
                CosetSide side);

// Calls visit(p) for every p in S_m in lexicographic order; stops early when
// visit returns false.
void for_each_permutation(unsigned m, const std::function<bool(const Permutation&)>& visit);

inline constexpr unsigned kOrbitDegreeCap = 8;

// Full orbit of `seed` under S_m by enumerating every element.
template <class T, class Action>
std::set<T> orbit_of(Action&& action, const T& seed, unsigned m, unsigned cap = kOrbitDegreeCap) {
  if (m > cap) throw std::invalid_argument("orbit_of: degree " + std::to_string(m) + " above cap");
  std::set<T> out;
  for_each_permutation(m, [&](const Permutation& g) {
    out.insert(action(g, seed));
    return true;
  });
  return out;
}

}  // namespace symrec
