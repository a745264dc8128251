#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw adjacency matrices and image vectors and share no code with the
// library beyond the instance index layout.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Images = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;

inline Images compose(const Images& p, const Images& q) {
  Images r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

inline Images identity(int m) {
  Images id(m);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// Closure of a generator set under composition, by breadth-first search.
inline std::set<Images> closure(const std::vector<Images>& gens, int m) {
  std::set<Images> seen{identity(m)};
  std::vector<Images> frontier{identity(m)};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const Images& a : frontier) {
      for (const Images& g : gens) {
        Images b = compose(g, a);
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline Images random_images(int m, std::mt19937_64& rng) {
  Images p = identity(m);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Undirected graph from the edge bits: pairs (i, j), i < j, lexicographic.
inline Matrix undirected(int n, std::uint64_t bits) {
  Matrix a(n, std::vector<int>(n, 0));
  int b = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++b) {
      a[i][j] = a[j][i] = static_cast<int>((bits >> b) & 1u);
    }
  }
  return a;
}

// Directed graph from arc bits: ordered pairs (i, j), i != j, lexicographic.
inline Matrix directed(int n, std::uint64_t bits) {
  Matrix a(n, std::vector<int>(n, 0));
  int b = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      a[i][j] = static_cast<int>((bits >> b++) & 1u);
    }
  }
  return a;
}

inline Matrix complement(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Matrix c = a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c[i][j] = i == j ? 0 : 1 - a[i][j];
  }
  return c;
}

inline bool is_clique(const Matrix& a, unsigned subset) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((subset >> i & 1u) && (subset >> j & 1u) && !a[i][j]) return false;
    }
  }
  return true;
}

inline std::uint64_t count_cliques(const Matrix& a, int k) {
  const int n = static_cast<int>(a.size());
  std::uint64_t c = 0;
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) == k && is_clique(a, s)) ++c;
  }
  return c;
}

inline bool has_clique(const Matrix& a, int k) { return count_cliques(a, k) > 0; }
inline bool has_indset(const Matrix& a, int k) { return has_clique(complement(a), k); }

inline bool has_vertex_cover(const Matrix& a, int k) {
  const int n = static_cast<int>(a.size());
  for (unsigned s = 0; s < (1u << n); ++s) {
    if (std::popcount(s) != k) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        if (a[i][j] && !(s >> i & 1u) && !(s >> j & 1u)) ok = false;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool colorable(const Matrix& a, int colors) {
  const int n = static_cast<int>(a.size());
  std::vector<int> c(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) ok = !(a[i][j] && c[i] == c[j]);
    }
    if (ok) return true;
    int pos = 0;
    while (pos < n && ++c[pos] == colors) c[pos++] = 0;
    if (pos == n) return false;
  }
}

// Number of vertex orders forming a path (or closed cycle) in `a`, counting
// both directions and every rotation.
inline std::uint64_t count_orders(const Matrix& a, bool cycle) {
  const int n = static_cast<int>(a.size());
  Images order = identity(n);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = a[order[i]][order[i + 1]] != 0;
    if (ok && cycle) ok = n >= 3 && a[order[n - 1]][order[0]] != 0;
    if (ok) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

inline std::uint64_t automorphism_count(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  Images p = identity(n);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) ok = a[i][j] == a[p[i]][p[j]];
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Distinct relabelings of `a` under every vertex permutation.
inline std::size_t orbit_size(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::set<Matrix> seen;
  Images p = identity(n);
  do {
    Matrix b(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) b[p[i]][p[j]] = a[i][j];
    }
    seen.insert(std::move(b));
  } while (std::next_permutation(p.begin(), p.end()));
  return seen.size();
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Binary CSP: tuples over [q]^k with the first coordinate most significant;
// clause entry index is sum_t y_{t} * 2^t over tuple positions t.
inline bool csp_satisfiable(std::uint64_t selected, int q, int k,
                            const std::vector<std::uint8_t>& clause) {
  int tuples = 1;
  for (int i = 0; i < k; ++i) tuples *= q;
  for (unsigned y = 0; y < (1u << q); ++y) {
    bool ok = true;
    for (int t = 0; t < tuples && ok; ++t) {
      if (!(selected >> t & 1u)) continue;
      std::vector<int> vars(k);
      int rest = t;
      for (int s = k - 1; s >= 0; --s, rest /= q) vars[s] = rest % q;
      int entry = 0;
      for (int s = 0; s < k; ++s) entry |= static_cast<int>(y >> vars[s] & 1u) << s;
      ok = clause[entry] != 0;
    }
    if (ok) return true;
  }
  return false;
}

// Vector i occupies bits [i d, (i + 1) d) of the index.
inline bool ov_exists(int n, int d, std::uint64_t phi) {
  const std::uint64_t mask = (std::uint64_t{1} << d) - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::uint64_t a = phi >> (i * d) & mask;
      const std::uint64_t b = phi >> (j * d) & mask;
      bool orthogonal = true;
      for (int t = 0; t < d; ++t) orthogonal = orthogonal && !((a >> t & 1u) && (b >> t & 1u));
      if (orthogonal) return true;
    }
  }
  return false;
}

}  // namespace oracle
