#include "symrec/graph.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace symrec {

namespace {

constexpr unsigned kMaxVertices = 64;

}  // namespace

unsigned pair_bit(unsigned n, unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  // pairs (a, b) with a < i come first: sum_{a<i} (n-1-a)
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

unsigned arc_bit(unsigned n, unsigned i, unsigned j) { return i * (n - 1) + (j < i ? j : j - 1); }

GraphInstance::GraphInstance(unsigned n, bool directed) : n_(n), directed_(directed), adj_(n, 0) {
  if (n > kMaxVertices) throw std::invalid_argument("graph: at most 64 vertices");
}

std::size_t GraphInstance::pair_count() const {
  const std::size_t p = std::size_t{n_} * (n_ == 0 ? 0 : n_ - 1);
  return directed_ ? p : p / 2;
}

void GraphInstance::set_edge(unsigned i, unsigned j, bool present) {
  if (i >= n_ || j >= n_ || i == j) {
    throw std::out_of_range("graph: bad edge (" + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + ")");
  }
  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  if (present) {
    adj_[i] |= bj;
    if (!directed_) adj_[j] |= bi;
  } else {
    adj_[i] &= ~bj;
    if (!directed_) adj_[j] &= ~bi;
  }
}

GraphInstance GraphInstance::from_bits(unsigned n, std::uint64_t bits, bool directed) {
  GraphInstance g(n, directed);
  const std::size_t pairs = g.pair_count();
  if (pairs > 64) throw std::invalid_argument("graph: edge bits exceed 64");
  if (pairs < 64 && (bits >> pairs) != 0) throw std::out_of_range("graph: edge bits out of range");
  unsigned b = 0;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      if ((bits >> b++) & 1u) g.set_edge(i, j);
    }
  }
  return g;
}

GraphInstance GraphInstance::complete(unsigned n) {
  GraphInstance g(n, false);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) g.set_edge(i, j);
  }
  return g;
}

GraphInstance GraphInstance::parse(std::string_view text, bool directed) {
  // '#' starts a comment that runs to the end of the line.
  std::string clean;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    clean.append(line.substr(0, line.find('#')));
    clean.push_back('\n');
    pos = end + 1;
  }
  std::istringstream in{clean};
  unsigned n = 0;
  if (!(in >> n) || n == 0) throw std::invalid_argument("graph text: missing vertex count");
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.size() == 1) {
    std::string digits = tokens[0];
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) digits = digits.substr(2);
    std::uint64_t bits = 0;
    std::size_t used = 0;
    try {
      bits = std::stoull(digits, &used, 16);
    } catch (const std::exception&) {
      used = 0;
    }
    if (digits.empty() || used != digits.size()) {
      throw std::invalid_argument("graph text: malformed hex edge vector '" + tokens[0] + "'");
    }
    return from_bits(n, bits, directed);
  }
  if (tokens.size() % 2 != 0) throw std::invalid_argument("graph text: dangling vertex");
  GraphInstance g(n, directed);
  for (std::size_t t = 0; t < tokens.size(); t += 2) {
    long a = 0;
    long b = 0;
    try {
      a = std::stol(tokens[t]);
      b = std::stol(tokens[t + 1]);
    } catch (const std::exception&) {
      throw std::invalid_argument("graph text: non-numeric token");
    }
    if (a < 1 || b < 1 || a > static_cast<long>(n) || b > static_cast<long>(n) || a == b) {
      throw std::invalid_argument("graph text: bad edge " + tokens[t] + " " + tokens[t + 1]);
    }
    g.set_edge(static_cast<unsigned>(a - 1), static_cast<unsigned>(b - 1));
  }
  return g;
}

unsigned GraphInstance::degree(unsigned v) const {
  return static_cast<unsigned>(std::popcount(adj_.at(v)));
}

std::size_t GraphInstance::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t r : adj_) total += static_cast<std::size_t>(std::popcount(r));
  return directed_ ? total : total / 2;
}

std::uint64_t GraphInstance::to_bits() const {
  if (pair_count() > 64) throw std::length_error("graph: edge bits exceed 64");
  std::uint64_t bits = 0;
  unsigned b = 0;
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = directed_ ? 0 : i + 1; j < n_; ++j) {
      if (i == j) continue;
      if (has_edge(i, j)) bits |= std::uint64_t{1} << b;
      ++b;
    }
  }
  return bits;
}

GraphInstance GraphInstance::complement() const {
  GraphInstance g(n_, directed_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = 0; j < n_; ++j) {
      if (i != j && !has_edge(i, j)) g.adj_[i] |= std::uint64_t{1} << j;
    }
  }
  return g;
}

GraphInstance GraphInstance::relabeled(const Permutation& g) const {
  if (g.degree() != n_) throw std::invalid_argument("graph relabel: degree mismatch");
  GraphInstance out(n_, directed_);
  for (unsigned i = 0; i < n_; ++i) {
    for (std::uint64_t r = adj_[i]; r; r &= r - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(r));
      out.adj_[g(i)] |= std::uint64_t{1} << g(j);
    }
  }
  return out;
}

std::string GraphInstance::to_text() const {
  std::string out = std::to_string(n_) + "\n";
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned j = directed_ ? 0 : i + 1; j < n_; ++j) {
      if (i != j && has_edge(i, j)) {
        out += std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
      }
    }
  }
  return out;
}

std::uint64_t count_k_cliques(const GraphInstance& g, unsigned k) {
  const unsigned n = g.n();
  if (k == 0) return 1;
  std::uint64_t count = 0;
  // extend cliques by vertices of increasing index
  auto rec = [&](auto&& self, std::uint64_t candidates, unsigned depth) -> void {
    if (depth == k) {
      ++count;
      return;
    }
    for (std::uint64_t c = candidates; c; c &= c - 1) {
      const unsigned v = static_cast<unsigned>(std::countr_zero(c));
      const std::uint64_t higher = v + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (v + 1)) - 1);
      self(self, candidates & g.row(v) & higher, depth + 1);
    }
  };
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  rec(rec, all, 0);
  return count;
}

}  // namespace symrec
