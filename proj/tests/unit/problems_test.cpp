#include "oracles.hpp"

#include <symrec/problem.hpp>
#include <symrec/sicsaf.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symrec;

namespace {

struct Setting {
  const char* id;
  ProblemParams params;
};

ProblemParams with(unsigned n, unsigned k = 0, unsigned d = 0) {
  ProblemParams p;
  p.n = n;
  p.k = k;
  p.d = d;
  return p;
}

// Small settings of every problem family.
std::vector<Setting> small_settings(unsigned n) {
  std::vector<Setting> out = {
      {"clique", with(n)},
      {"indset", with(n)},
      {"vertexcover", with(n)},
      {"kcol", with(n, 3)},
      {"hampath", with(n)},
      {"hamcycle", with(n)},
      {"dir_hampath_parity", with(n)},
      {"dir_hampath_count", with(n)},
      {"ksat", with(n, 2)},
      {"kcsp", with(n, 2)},
      {"maxkcsp", with(n, 2)},
      {"ov", with(n, 0, 2)},
      {"parity_kclique", with(n, 3)},
  };
  return out;
}

Permutation random_perm(unsigned m, std::mt19937_64& rng) {
  const auto img = oracle::random_images(static_cast<int>(m), rng);
  std::vector<unsigned> u(img.begin(), img.end());
  return Permutation::from_images(std::span<const unsigned>(u));
}

std::uint64_t cert_count(const Problem& p) {
  return static_cast<std::uint64_t>(p.certificate_count());
}

}  // namespace

TEST(Problems, KnownIds) {
  for (const auto& id : problem_ids()) {
    EXPECT_NO_THROW(make_problem(id, id == std::string("ov") ? with(3, 0, 2) : with(3, 2)))
        << id;
  }
  EXPECT_THROW(make_problem("nope", with(3)), std::invalid_argument);
  EXPECT_THROW(make_problem("clique", with(0)), std::invalid_argument);
  EXPECT_THROW(make_problem("kcol", with(3, 0)), std::invalid_argument);
}

TEST(Problems, Shapes) {
  const ProblemPtr clique = make_problem("clique", with(4));
  EXPECT_EQ(clique->instance_count(), 256u);
  EXPECT_EQ(clique->group_degree(), 4u);
  EXPECT_EQ(clique->orbit_count(), 5u);
  EXPECT_EQ(make_problem("clique", with(3))->instance_count(), 24u);
  EXPECT_EQ(make_problem("kcol", with(4, 3))->orbit_count(), 15u);
  EXPECT_EQ(make_problem("hampath", with(4))->orbit_count(), 1u);
  EXPECT_EQ(make_problem("ksat", with(2, 2))->instance_count(), 1024u);
  EXPECT_EQ(make_problem("ov", with(6, 0, 3))->instance_count(), 262144u);
  EXPECT_EQ(make_problem("clique", with(6))->instance_count(), 196608u);
}

TEST(Problems, CliqueVerifier) {
  const ProblemPtr p = make_problem("clique", with(4));
  // k = 3, triangle on {1,2,3}: pair bits 0, 1 and 3.
  const InstanceIndex phi = graph_family_index(4, 3, 0b1011);
  EXPECT_EQ(p->h(phi, 0b0111), 1u);
  EXPECT_EQ(p->h(phi, 0b0011), 0u);
  EXPECT_EQ(p->h(phi, 0b1011), 0u);
}

TEST(Problems, CspVerifier) {
  ProblemParams params = with(3, 2);
  params.clause = {0, 1, 1, 0};  // inequality
  const ProblemPtr p = make_problem("kcsp", params);
  // Only tuple (1,2) selected: index 0 * 3 + 1.
  const InstanceIndex phi = InstanceIndex{1} << 1;
  EXPECT_EQ(p->h(phi, 0b100), 0u);  // y = (a, a, b)
  EXPECT_EQ(p->h(phi, 0b110), 1u);  // y = (a, b, b)
}

TEST(Problems, MaxCspMatchesIndependentMaximizer) {
  // Clause: x_i = 1 or x_j = 1.
  ProblemParams params = with(3, 2);
  params.clause = {0, 1, 1, 1};
  const ProblemPtr p = make_problem("maxkcsp", params);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 64; ++t) {
    const InstanceIndex phi = t == 0 ? 511 : rng() % 512;
    std::uint64_t best = 0;
    for (unsigned y = 0; y < 8; ++y) {
      std::uint64_t sat = 0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          if ((phi >> (a * 3 + b) & 1u) && ((y >> a & 1u) || (y >> b & 1u))) ++sat;
        }
      }
      best = std::max(best, sat);
    }
    EXPECT_EQ(eval_bruteforce(*p, phi), best);
  }
}

TEST(Problems, KsatMatchesIndependentSolver) {
  const ProblemPtr p = make_problem("ksat", with(2, 2));
  const auto clauses = ksat_clauses(2, 2);
  ASSERT_EQ(clauses.size(), 10u);
  for (InstanceIndex phi = 0; phi < p->instance_count(); ++phi) {
    bool any = false;
    for (unsigned y = 0; y < 4 && !any; ++y) {
      bool all = true;
      for (unsigned c = 0; c < clauses.size() && all; ++c) {
        if (!(phi >> c & 1u)) continue;
        bool sat = false;
        for (unsigned lit = 0; lit < 4; ++lit) {
          if (!(clauses[c] >> lit & 1u)) continue;
          const bool value = (y >> (lit / 2)) & 1u;
          sat = sat || ((lit % 2 == 0) ? value : !value);
        }
        all = sat;
      }
      any = all;
    }
    EXPECT_EQ(eval_bruteforce(*p, phi), any ? 1u : 0u) << phi;
  }
}

TEST(Problems, InstanceActionOnSingleEdge) {
  const ProblemPtr p = make_problem("hampath", with(3));
  EXPECT_EQ(p->act_instance(Permutation::from_one_based({2, 3, 1}), 0b001), 0b100u);
  EXPECT_EQ(p->act_instance(Permutation::identity(3), 0b011), 0b011u);
}

TEST(Problems, SubsetAction) {
  const ProblemPtr p = make_problem("clique", with(3));
  EXPECT_EQ(p->act_certificate(Permutation::from_one_based({2, 3, 1}), 0b101), 0b011u);
}

TEST(Problems, OrbitRepresentatives) {
  EXPECT_EQ(make_problem("clique", with(4))->orbit_reps(),
            (std::vector<CertificateIndex>{0, 1, 3, 7, 15}));
  EXPECT_EQ(make_problem("ksat", with(3, 2))->orbit_reps(),
            (std::vector<CertificateIndex>{0b111, 0b110, 0b100, 0}));
  // kcol n=3, k=2: nondecreasing colorings, index sum c_i 2^i.
  EXPECT_EQ(make_problem("kcol", with(3, 2))->orbit_reps(),
            (std::vector<CertificateIndex>{0, 4, 6, 7}));
}

TEST(Problems, GraphFamilyLayout) {
  EXPECT_EQ(graph_family_index(4, 1, 0), 0u);
  EXPECT_EQ(graph_family_index(4, 2, 0b000011), 67u);
  for (InstanceIndex phi = 0; phi < 256; ++phi) {
    const auto d = graph_family_decode(4, phi);
    EXPECT_EQ(graph_family_index(4, d.k, d.bits), phi);
  }
  EXPECT_THROW(graph_family_decode(4, 256), std::out_of_range);
}

TEST(Problems, SequenceRankRoundTrip) {
  for (unsigned n = 1; n <= 6; ++n) {
    std::vector<Point> seq(n);
    std::iota(seq.begin(), seq.end(), Point{0});
    std::uint64_t rank = 0;
    do {
      EXPECT_EQ(sequence_rank(seq), rank);
      EXPECT_EQ(sequence_unrank(n, rank), seq);
      ++rank;
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST(Problems, CrossProblemReductions) {
  const ProblemPtr clique = make_problem("clique", with(4));
  const ProblemPtr indset = make_problem("indset", with(4));
  const ProblemPtr vc = make_problem("vertexcover", with(4));
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const std::uint64_t comp = ~bits & 63u;
    for (unsigned k = 1; k <= 4; ++k) {
      EXPECT_EQ(eval_bruteforce(*indset, graph_family_index(4, k, bits)),
                eval_bruteforce(*clique, graph_family_index(4, k, comp)));
      if (k < 4) {
        EXPECT_EQ(eval_bruteforce(*vc, graph_family_index(4, k, bits)),
                  eval_bruteforce(*indset, graph_family_index(4, 4 - k, bits)));
      }
    }
  }
}

// Action axioms on random samples for every family.
TEST(ProblemProperties, ActionAxioms) {
  std::mt19937_64 rng(12);
  for (unsigned n : {3u, 4u, 5u}) {
    for (const auto& s : small_settings(n)) {
      const ProblemPtr p = make_problem(s.id, s.params);
      const unsigned m = p->group_degree();
      const std::uint64_t certs = cert_count(*p);
      for (int t = 0; t < 200; ++t) {
        const Permutation a = random_perm(m, rng), b = random_perm(m, rng);
        const InstanceIndex phi = rng() % p->instance_count();
        const CertificateIndex x = rng() % certs;
        EXPECT_EQ(p->act_instance(Permutation::identity(m), phi), phi) << s.id;
        EXPECT_EQ(p->act_certificate(Permutation::identity(m), x), x) << s.id;
        EXPECT_EQ(p->act_instance(compose(a, b), phi), p->act_instance(a, p->act_instance(b, phi)))
            << s.id;
        EXPECT_EQ(p->act_certificate(compose(a, b), x),
                  p->act_certificate(a, p->act_certificate(b, x)))
            << s.id;
      }
    }
  }
}

// h(alpha_g(phi), beta_g(x)) = h(phi, x): exhaustive at n = 3.
TEST(ProblemProperties, PairingInvarianceExhaustiveAtThree) {
  for (const auto& s : small_settings(3)) {
    const ProblemPtr p = make_problem(s.id, s.params);
    const std::uint64_t certs = cert_count(*p);
    const std::uint64_t instances = std::min<std::uint64_t>(p->instance_count(), 4096);
    for_each_permutation(p->group_degree(), [&](const Permutation& g) {
      for (InstanceIndex phi = 0; phi < instances; ++phi) {
        for (CertificateIndex x = 0; x < certs; ++x) {
          if (!check_invariance(*p, phi, x, g)) {
            ADD_FAILURE() << s.id << " phi=" << phi << " x=" << x << " g=" << g.to_string();
            return false;
          }
        }
      }
      return true;
    });
  }
}

TEST(ProblemProperties, PairingInvarianceRandomAtFourAndFive) {
  std::mt19937_64 rng(99);
  for (unsigned n : {4u, 5u}) {
    for (const auto& s : small_settings(n)) {
      const ProblemPtr p = make_problem(s.id, s.params);
      const std::uint64_t certs = cert_count(*p);
      for (int t = 0; t < 10000; ++t) {
        const Permutation g = random_perm(p->group_degree(), rng);
        const InstanceIndex phi = rng() % p->instance_count();
        const CertificateIndex x = rng() % certs;
        ASSERT_TRUE(check_invariance(*p, phi, x, g)) << s.id;
      }
    }
  }
}

// f(alpha_g(phi)) = f(phi).
TEST(ProblemProperties, ValueInvariance) {
  std::mt19937_64 rng(5);
  for (const auto& s : small_settings(4)) {
    const ProblemPtr p = make_problem(s.id, s.params);
    for (int t = 0; t < 100; ++t) {
      const Permutation g = random_perm(p->group_degree(), rng);
      const InstanceIndex phi = rng() % p->instance_count();
      EXPECT_EQ(eval_bruteforce(*p, p->act_instance(g, phi)), eval_bruteforce(*p, phi)) << s.id;
    }
  }
}

// The orbits of the representatives are disjoint and cover the certificates.
TEST(ProblemProperties, OrbitRepresentativesPartitionCertificates) {
  for (unsigned n : {3u, 4u}) {
    for (const auto& s : small_settings(n)) {
      const ProblemPtr p = make_problem(s.id, s.params);
      const auto reps = p->orbit_reps();
      EXPECT_EQ(reps.size(), p->orbit_count()) << s.id;
      std::set<CertificateIndex> covered;
      std::size_t total = 0;
      for (CertificateIndex y : reps) {
        const auto orbit = orbit_of(
            [&](const Permutation& g, CertificateIndex x) { return p->act_certificate(g, x); }, y,
            p->group_degree());
        total += orbit.size();
        covered.insert(orbit.begin(), orbit.end());
        if (p->regular_orbits()) EXPECT_EQ(orbit.size(), oracle::factorial(p->group_degree()));
      }
      EXPECT_EQ(total, covered.size()) << s.id << ": orbits overlap";
      EXPECT_EQ(covered.size(), cert_count(*p)) << s.id << ": orbits miss certificates";
    }
  }
}

TEST(ProblemProperties, RangeChecks) {
  const ProblemPtr p = make_problem("clique", with(4));
  EXPECT_THROW(p->check_instance(256), std::out_of_range);
  EXPECT_THROW(p->check_certificate(16), std::out_of_range);
  EXPECT_THROW(p->check_group_element(Permutation::identity(5)), std::invalid_argument);
}
