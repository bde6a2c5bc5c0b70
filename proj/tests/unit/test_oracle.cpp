#include <filesystem>
#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "sclgap/error.hpp"
#include "sclgap/oracle.hpp"
#include "sclgap/quasimorphism.hpp"
#include "test_support.hpp"

using namespace sclgap;
using namespace sclgap::oracle;
using sclgap::test::S;
using sclgap::test::W;
using sclgap::test::c2c3;
using sclgap::test::f2;

namespace {
  // Reduced words of length n: free letters have 2m choices, torsion
  // generator j has o_j - 1; consecutive letters must use different
  // generators, except a free letter may repeat itself.
  std::int64_t transfer_count(GroupSpec const& g, int n) {
    auto const           alpha = alphabet(g);
    std::vector<std::int64_t> cur(alpha.size(), 1);
    if (n == 0) {
      return 1;
    }
    for (int step = 1; step < n; ++step) {
      std::vector<std::int64_t> next(alpha.size(), 0);
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (std::size_t j = 0; j < alpha.size(); ++j) {
          bool ok = alpha[i].gen != alpha[j].gen || (g.is_free(alpha[i].gen) && alpha[i].exp == alpha[j].exp);
          if (ok) {
            next[j] += cur[i];
          }
        }
      }
      cur = next;
    }
    std::int64_t total = 0;
    for (auto v : cur) {
      total += v;
    }
    return total;
  }
}  // namespace

TEST(Enumerate, CountsMatchTransferMatrix) {
  for (GroupSpec const& g : {c2c3(), f2(), parse_group("F1 * C3 * C4")}) {
    auto const words = enumerate_words({g, 5, WordFilter::All});
    std::vector<std::int64_t> by_len(6, 0);
    for (auto const& w : words) {
      ++by_len[w.size()];
    }
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(by_len[n], transfer_count(g, n)) << to_string(g) << " n=" << n;
    }
  }
}

TEST(Enumerate, OrderIsLengthThenLexAndFiltersHold) {
  auto const& g     = parse_group("F1 * C3");
  auto const  words = enumerate_words({g, 4, WordFilter::NonSelfOverlapping});
  for (std::size_t i = 1; i < words.size(); ++i) {
    auto const& a = words[i - 1];
    auto const& b = words[i];
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }
  for (auto const& w : words) {
    EXPECT_EQ(reduce(g, w.letters), w);
    EXPECT_FALSE(is_self_overlapping(w));
  }
  for (auto const& w : enumerate_words({g, 4, WordFilter::CyclicallyReduced})) {
    EXPECT_EQ(cyclic_reduce(g, w).core.base, w);
  }
}

TEST(BruteDefect, SmallCases) {
  auto const& g = c2c3();
  auto const  r = brute_defect(g, W(g, "a b"), 4);
  EXPECT_LE(r.max_coboundary, 3);
  EXPECT_GT(r.pairs, 0);
  auto const& f = f2();
  EXPECT_LE(brute_defect(f, W(f, "x y"), 4).max_coboundary, 2);
  EXPECT_THROW(brute_defect(f, W(f, "x y x"), 5), DomainError);
}

TEST(BruteDefect, ParallelMatchesSerial) {
  auto const& g = parse_group("F1 * C3");
  auto const  a = brute_defect(g, W(g, "x1 y1"), 4, 1);
  auto const  b = brute_defect(g, W(g, "x1 y1"), 4, 4);
  EXPECT_EQ(a.max_coboundary, b.max_coboundary);
  EXPECT_EQ(a.pairs, b.pairs);
  EXPECT_EQ(a.worst_h1, b.worst_h1);
  EXPECT_EQ(a.worst_h2, b.worst_h2);
}

TEST(BruteDefect, CheckpointResumes) {
  auto const path = std::filesystem::temp_directory_path() / "sclgap_checkpoint_test.txt";
  std::filesystem::remove(path);
  auto const& g     = c2c3();
  auto const  fresh = brute_defect(g, W(g, "a b"), 5, 2, path.string());
  EXPECT_EQ(fresh.resumed_blocks, 0);
  auto const again = brute_defect(g, W(g, "a b"), 5, 2, path.string());
  EXPECT_GT(again.resumed_blocks, 0);
  EXPECT_EQ(again.max_coboundary, fresh.max_coboundary);
  EXPECT_EQ(again.pairs, fresh.pairs);
  EXPECT_EQ(again.worst_h1, fresh.worst_h1);

  // A checkpoint for other inputs is refused.
  EXPECT_THROW(brute_defect(g, W(g, "a b^2"), 5, 2, path.string()), DomainError);
  std::filesystem::remove(path);
}

TEST(HomogenizeByLimit, ConvergesToPhiBar) {
  std::mt19937_64 rng(3);
  auto const&     g     = c2c3();
  std::vector<Word> bases;
  for (auto const& w : enumerate_words({g, 4, WordFilter::All})) {
    if (counting_qm_obstruction(g, w).empty()) {
      bases.push_back(w);
    }
  }
  auto const      hs    = enumerate_words({g, 6, WordFilter::All});
  std::uniform_int_distribution<std::size_t> pb(0, bases.size() - 1), ph(0, hs.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    Word const& b = bases[pb(rng)];
    Word const& h = hs[ph(rng)];
    auto const seq = homogenize_by_limit(g, b, h, 40);
    Rational const v(CountingQM(g, b)(g, h));
    // phi(h^n) = n phi_bar(h) + O(|b|), so the error is at most ~ 2|b|/n.
    EXPECT_LE(abs(seq.back() - v), Rational(2 * static_cast<std::int64_t>(b.size()), 40));
  }
}

TEST(ConjugatorSearch, AgreesWithDecisionProcedure) {
  auto const& g  = c2c3();
  auto const  ws = enumerate_words({g, 3, WordFilter::All});
  for (auto const& a : ws) {
    for (auto const& b : ws) {
      auto const u = conjugator_search(g, a, b, 3);
      if (u) {
        EXPECT_EQ(conjugate(g, *u, a), b);
        EXPECT_TRUE(is_conjugate(g, a, b));
      } else {
        // Conjugate words of length <= 3 are related by a conjugator of length <= 3.
        EXPECT_FALSE(is_conjugate(g, a, b)) << S(g, a) << " ~ " << S(g, b);
      }
    }
  }
  EXPECT_TRUE(conjugates_in_ball(g, W(g, "a b"), 2).contains(W(g, "b a")));
}
