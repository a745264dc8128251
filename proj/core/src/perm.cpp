#include "symrec/perm.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

namespace symrec {

namespace {

void require_degree(unsigned m) {
  if (m == 0 || m > kMaxDegree) {
    throw std::invalid_argument("permutation degree must be in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(m));
  }
}

template <class T>
Permutation build_from(std::span<const T> images) {
  require_degree(static_cast<unsigned>(images.size()));
  std::vector<Point> pts;
  pts.reserve(images.size());
  for (const T v : images) {
    if (static_cast<unsigned>(v) >= images.size()) {
      throw std::invalid_argument("images do not form a bijection");
    }
    pts.push_back(static_cast<Point>(v));
  }
  return Permutation::from_images(std::span<const Point>(pts));
}

}  // namespace

Permutation Permutation::identity(unsigned m) {
  require_degree(m);
  Permutation p;
  p.degree_ = m;
  std::iota(p.images_.begin(), p.images_.begin() + m, Point{0});
  return p;
}

Permutation Permutation::from_images(std::span<const Point> images) {
  require_degree(static_cast<unsigned>(images.size()));
  Permutation p;
  p.degree_ = static_cast<unsigned>(images.size());
  std::uint64_t seen = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    const unsigned x = images[i];
    if (x >= images.size() || ((seen >> x) & 1u)) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen |= std::uint64_t{1} << x;
    p.images_[i] = images[i];
  }
  return p;
}

Permutation Permutation::from_images(std::span<const unsigned> images) {
  return build_from(images);
}

Permutation Permutation::from_one_based(std::initializer_list<unsigned> images) {
  std::vector<unsigned> zero;
  zero.reserve(images.size());
  for (unsigned v : images) {
    if (v == 0) throw std::invalid_argument("one-based image 0");
    zero.push_back(v - 1);
  }
  return build_from(std::span<const unsigned>(zero));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<unsigned> zero;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t' || tok.back() == '\n' ||
                            tok.back() == '\r')) {
      tok.remove_suffix(1);
    }
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v == 0) {
      throw std::invalid_argument("malformed permutation text: '" + std::string(text) + "'");
    }
    zero.push_back(v - 1);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return build_from(std::span<const unsigned>(zero));
}

unsigned Permutation::apply(unsigned x) const {
  if (x >= degree_) {
    throw std::out_of_range("point " + std::to_string(x) + " outside degree " +
                            std::to_string(degree_));
  }
  return images_[x];
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree_; ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.degree_ = degree_;
  for (unsigned i = 0; i < degree_; ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::string Permutation::to_string() const {
  std::string out;
  for (unsigned i = 0; i < degree_; ++i) {
    if (i) out.push_back(',');
    out += std::to_string(images_[i] + 1u);
  }
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  for (unsigned i = 0; i < a.degree_; ++i) {
    if (a.images_[i] != b.images_[i]) return a.images_[i] <=> b.images_[i];
  }
  return std::strong_ordering::equal;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
  Permutation r;
  r.degree_ = p.degree_;
  for (unsigned i = 0; i < r.degree_; ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(unsigned degree) : StabilizerChain(degree, {}) {}

StabilizerChain::StabilizerChain(unsigned degree, std::vector<Point> base_order)
    : degree_(degree), base_order_(std::move(base_order)) {
  require_degree(degree);
  if (base_order_.empty()) {
    base_order_.resize(degree);
    std::iota(base_order_.begin(), base_order_.end(), Point{0});
  }
  if (base_order_.size() != degree) {
    throw std::invalid_argument("base ordering must list every point once");
  }
  std::uint64_t seen = 0;
  for (Point b : base_order_) {
    if (b >= degree || ((seen >> b) & 1u)) {
      throw std::invalid_argument("base ordering must list every point once");
    }
    seen |= std::uint64_t{1} << b;
  }
  const Permutation id = Permutation::identity(degree);
  levels_.resize(degree);
  for (unsigned i = 0; i < degree; ++i) {
    Level& lv = levels_[i];
    lv.base = base_order_[i];
    lv.slot.assign(degree, -1);
    lv.slot[lv.base] = 0;
    lv.orbit.push_back(static_cast<Point>(lv.base));
    lv.trans.push_back(id);
    lv.trans_inv.push_back(id);
  }
}

bool StabilizerChain::has_natural_base() const {
  for (unsigned i = 0; i < degree_; ++i) {
    if (base_order_[i] != i) return false;
  }
  return true;
}

std::vector<unsigned> StabilizerChain::base() const {
  std::vector<unsigned> out;
  for (const Level& lv : levels_) {
    if (lv.orbit.size() > 1) out.push_back(lv.base);
  }
  return out;
}

void StabilizerChain::check_degree(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw std::invalid_argument("degree mismatch: chain " + std::to_string(degree_) +
                                ", permutation " + std::to_string(p.degree()));
  }
}

bool StabilizerChain::insert(const Permutation& g) {
  check_degree(g);
  if (contains(g)) return false;
  insert_at(0, g);
  return true;
}

void StabilizerChain::insert_at(std::size_t level, const Permutation& g) {
  if (level >= levels_.size()) return;
  if (sift_from(level, g).is_member) return;
  Level& lv = levels_[level];
  lv.gens.push_back(g);
  const std::vector<Point> snapshot = lv.orbit;
  for (Point x : snapshot) {
    extend(level, compose(g, levels_[level].trans[levels_[level].slot[x]]));
  }
}

void StabilizerChain::extend(std::size_t level, const Permutation& t) {
  Level& lv = levels_[level];
  const unsigned y = t(lv.base);
  if (lv.slot[y] >= 0) {
    insert_at(level + 1, compose(lv.trans_inv[lv.slot[y]], t));
    return;
  }
  lv.slot[y] = static_cast<int>(lv.trans.size());
  lv.orbit.push_back(static_cast<Point>(y));
  lv.trans.push_back(t);
  lv.trans_inv.push_back(t.inverse());
  for (std::size_t s = 0; s < levels_[level].gens.size(); ++s) {
    extend(level, compose(levels_[level].gens[s], t));
  }
}

SiftResult StabilizerChain::sift_from(std::size_t level, Permutation p) const {
  for (std::size_t i = level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    const unsigned y = p(lv.base);
    const int s = lv.slot[y];
    if (s < 0) return {p, false};
    if (s != 0) p = compose(lv.trans_inv[s], p);
  }
  const bool member = p.is_identity();
  return {std::move(p), member};
}

SiftResult StabilizerChain::sift(const Permutation& p) const {
  check_degree(p);
  return sift_from(0, p);
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const Level& lv : levels_) r *= static_cast<unsigned>(lv.orbit.size());
  return r;
}

bool StabilizerChain::is_trivial() const {
  for (const Level& lv : levels_) {
    if (lv.orbit.size() > 1) return false;
  }
  return true;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const Level& lv : levels_) {
    for (const Permutation& g : lv.gens) {
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
  }
  return out;
}

const Permutation& StabilizerChain::transversal(std::size_t level, unsigned point) const {
  const Level& lv = levels_.at(level);
  if (point >= degree_ || lv.slot[point] < 0) {
    throw std::out_of_range("point not in basic orbit");
  }
  return lv.trans[lv.slot[point]];
}

StabilizerChain StabilizerChain::rebased(std::vector<Point> base_order) const {
  StabilizerChain out(degree_, std::move(base_order));
  for (const Permutation& g : strong_generators()) out.insert(g);
  return out;
}

StabilizerChain StabilizerChain::point_stabilizer(unsigned point) const {
  if (point >= degree_) throw std::out_of_range("point outside degree");
  std::vector<Point> order;
  order.reserve(degree_);
  order.push_back(static_cast<Point>(point));
  for (unsigned i = 0; i < degree_; ++i) {
    if (i != point) order.push_back(static_cast<Point>(i));
  }
  const StabilizerChain moved = rebased(std::move(order));
  StabilizerChain out(degree_);
  // Generators of level 1 and below generate the stabilizer of the first base point.
  for (std::size_t lv = 1; lv < moved.levels_.size(); ++lv) {
    for (const Permutation& g : moved.levels_[lv].gens) out.insert(g);
  }
  return out;
}

std::vector<Permutation> StabilizerChain::elements(std::uint64_t limit) const {
  if (order() > limit) throw std::length_error("group too large to enumerate");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = u_0 * u_1 * ... * u_{m-1}; build from the deepest level up.
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level& lv = levels_[i];
    if (lv.orbit.size() == 1) continue;
    std::vector<Permutation> next;
    next.reserve(out.size() * lv.orbit.size());
    for (const Permutation& u : lv.trans) {
      for (const Permutation& rest : out) next.push_back(compose(u, rest));
    }
    out = std::move(next);
  }
  return out;
}

Permutation StabilizerChain::min_left_coset_element(const Permutation& g) const {
  check_degree(g);
  if (!has_natural_base()) {
    throw std::logic_error("min_left_coset_element needs the natural base ordering");
  }
  Permutation c = g;
  for (const Level& lv : levels_) {
    if (lv.orbit.size() == 1) continue;
    unsigned best = lv.base;
    for (Point y : lv.orbit) {
      if (c(y) < c(best)) best = y;
    }
    if (best != lv.base) c = compose(c, lv.trans[lv.slot[best]]);
  }
  return c;
}

StabilizerChain schreier_sims(std::span<const Permutation> generators, unsigned m) {
  StabilizerChain chain(m);
  for (const Permutation& g : generators) chain.insert(g);
  return chain;
}

SiftResult sift(const StabilizerChain& chain, const Permutation& p) { return chain.sift(p); }

BigInt group_order(const StabilizerChain& chain) { return chain.order(); }

void for_each_permutation(unsigned m, const std::function<bool(const Permutation&)>& visit) {
  require_degree(m);
  std::vector<Point> img(m);
  std::iota(img.begin(), img.end(), Point{0});
  do {
    if (!visit(Permutation::from_images(std::span<const Point>(img)))) return;
  } while (std::next_permutation(img.begin(), img.end()));
}

// ---------------------------------------------------------------------------
// Subgroup search

namespace {

class BacktrackSearch {
 public:
  BacktrackSearch(const SubgroupOracle& oracle, unsigned m, StabilizerChain& chain)
      : oracle_(oracle), m_(m), chain_(chain), img_(m), used_(m, false) {}

  void run() { identity_node(0); }

 private:
  bool prefix_ok(unsigned len) const {
    return !oracle_.prefix_ok || oracle_.prefix_ok(std::span<const Point>(img_.data(), len));
  }

  // Points 0..level-1 are fixed. Children other than the identity branch
  // each stand for one coset of the deeper stabilizer.
  void identity_node(unsigned level) {
    if (level == m_) return;
    img_[level] = static_cast<Point>(level);
    used_[level] = true;
    if (prefix_ok(level + 1)) identity_node(level + 1);
    used_[level] = false;
    for (unsigned v = level + 1; v < m_; ++v) {
      if (chain_.in_orbit(level, v)) continue;
      img_[level] = static_cast<Point>(v);
      used_[v] = true;
      if (prefix_ok(level + 1) && find_any(level + 1)) {
        chain_.insert(Permutation::from_images(std::span<const Point>(img_)));
      }
      used_[v] = false;
    }
    img_[level] = static_cast<Point>(level);
  }

  // Looks for one accepted completion of the current prefix; leaves it in img_.
  bool find_any(unsigned level) {
    if (level == m_) {
      return oracle_.accepts(Permutation::from_images(std::span<const Point>(img_)));
    }
    for (unsigned v = 0; v < m_; ++v) {
      if (used_[v]) continue;
      img_[level] = static_cast<Point>(v);
      used_[v] = true;
      const bool hit = prefix_ok(level + 1) && find_any(level + 1);
      used_[v] = false;
      if (hit) return true;
    }
    return false;
  }

  const SubgroupOracle& oracle_;
  unsigned m_;
  StabilizerChain& chain_;
  std::vector<Point> img_;
  std::vector<bool> used_;
};

}  // namespace

StabilizerChain aut_group(const SubgroupOracle& oracle, unsigned m, AutStrategy strategy,
                          unsigned exhaustive_cap) {
  if (!oracle.accepts) throw std::invalid_argument("aut_group: oracle has no membership test");
  StabilizerChain chain(m);
  if (strategy == AutStrategy::Exhaustive) {
    if (m > exhaustive_cap) {
      throw std::invalid_argument("aut_group: exhaustive strategy refused for degree " +
                                  std::to_string(m) + " (cap " + std::to_string(exhaustive_cap) +
                                  ")");
    }
    for_each_permutation(m, [&](const Permutation& g) {
      if (oracle.accepts(g)) chain.insert(g);
      return true;
    });
    return chain;
  }
  BacktrackSearch search(oracle, m, chain);
  search.run();
  return chain;
}

}  // namespace symrec
