#include <catch2/catch_amalgamated.hpp>

#include <liedim/combinatorics.hpp>
#include <liedim/oracle.hpp>

#include <random>
#include <sstream>
#include <vector>

using liedim::BigCount;
using liedim::BudgetError;
using liedim::LieMonomial;
using liedim::lyndon_basis;
using liedim::lyndon_words;
using liedim::OracleBudget;
using liedim::rank_of;
using liedim::relation_generators;
using liedim::relation_piece;
using liedim::Subspace;
using liedim::SymplecticPairing;
using liedim::witt_dimension;
using liedim::WordVec;

namespace {

// Random bracket monomial of the requested degree: split the degree at a
// random point and recurse.  Used for the algebraic-identity spot checks.
LieMonomial random_monomial(std::mt19937& rng, int alphabet, int degree) {
  if (degree == 1) {
    std::uniform_int_distribution<int> leaf(1, alphabet);
    return LieMonomial::leaf(leaf(rng));
  }
  std::uniform_int_distribution<int> cut(1, degree - 1);
  const int left = cut(rng);
  return LieMonomial::bracket_of(random_monomial(rng, alphabet, left),
                                 random_monomial(rng, alphabet, degree - left));
}

}  // namespace

TEST_CASE("factorization words are generated in order and count correctly") {
  const auto words = lyndon_words(2, 4);
  REQUIRE(words.size() == 3);
  CHECK(words[0] == std::vector<int>{1, 1, 1, 2});
  CHECK(words[1] == std::vector<int>{1, 1, 2, 2});
  CHECK(words[2] == std::vector<int>{1, 2, 2, 2});
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n <= 6; ++n)
      CHECK(BigCount(lyndon_words(k, n).size()) == witt_dimension(k, n));
}

TEST_CASE("oracle basis rank equals the graded dimension") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n <= 8; ++n) {
      if (k == 4 && n == 8) continue;  // covered separately below (heavier)
      const auto basis = lyndon_basis(k, n);
      if (BigCount(rank_of(basis, k)) != witt_dimension(k, n)) {
        CAPTURE(k, n);
        FAIL("oracle rank disagrees with the closed form");
      }
    }
  SUCCEED();
}

TEST_CASE("oracle basis rank, largest in-budget case", "[heavy]") {
  const auto basis = lyndon_basis(4, 8);
  CHECK(BigCount(rank_of(basis, 4)) == witt_dimension(4, 8));  // 8160
}

TEST_CASE("expansion is alternating: [x,x] expands to zero") {
  std::mt19937 rng(20260819);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> deg(1, 4);
    const LieMonomial x = random_monomial(rng, 3, deg(rng));
    const std::vector<LieMonomial> single{LieMonomial::bracket_of(x, x)};
    if (rank_of(single, 3) != 0) {
      CAPTURE(trial, x.to_string());
      FAIL("[x,x] expanded to a nonzero vector");
    }
  }
  SUCCEED();
}

TEST_CASE("expansion satisfies the Jacobi identity on random monomials") {
  std::mt19937 rng(907);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> deg(1, 2);
    const LieMonomial x = random_monomial(rng, 3, deg(rng));
    const LieMonomial y = random_monomial(rng, 3, deg(rng));
    const LieMonomial z = random_monomial(rng, 3, deg(rng));
    using liedim::expand;
    WordVec v = expand(LieMonomial::bracket_of(x, LieMonomial::bracket_of(y, z)), 3);
    v -= expand(LieMonomial::bracket_of(LieMonomial::bracket_of(x, y), z), 3);
    v -= expand(LieMonomial::bracket_of(y, LieMonomial::bracket_of(x, z)), 3);
    if (!v.empty()) {
      CAPTURE(trial, x.to_string(), y.to_string(), z.to_string());
      FAIL("Jacobi defect is nonzero");
    }
  }
  SUCCEED();
}

TEST_CASE("derived level pieces have the expected ranks") {
  // Degree-n piece of the square of the derived square: empty below degree 4.
  CHECK(liedim::derived_piece(4, 3, 2).rank() == 0);
  CHECK(liedim::derived_piece(4, 3, 3).rank() == 0);
  CHECK(liedim::derived_piece(4, 3, 4).rank() == 15);
  CHECK(liedim::derived_piece(4, 3, 5).rank() == 120);
  CHECK(liedim::derived_piece(4, 3, 6).rank() == 530);
  // Level r lives in degrees >= 2^(r-1).
  CHECK(liedim::derived_piece(3, 4, 7).rank() == 0);
  CHECK(liedim::derived_piece(3, 4, 8).rank() == 3);
}

TEST_CASE("relation ideal piece lies inside the degree span") {
  for (int n : {3, 4, 5}) {
    Subspace span(4, n);
    for (const auto& m : lyndon_basis(4, n)) span.insert(liedim::expand(m, 4));
    for (const auto& v : relation_generators(2, n, SymplecticPairing::consecutive)) {
      if (!span.contains(v)) {
        CAPTURE(n);
        FAIL("relation generator escapes the degree span");
      }
    }
  }
  SUCCEED();
}

TEST_CASE("relation piece rank is independent of the symplectic pairing") {
  for (int n : {2, 3, 4, 5}) {
    const auto a = relation_piece(2, n, SymplecticPairing::consecutive);
    const auto b = relation_piece(2, n, SymplecticPairing::split);
    CHECK(a.rank() == b.rank());
  }
}

TEST_CASE("ranks and basis dumps are deterministic across runs") {
  const auto once = [] {
    Subspace s = relation_piece(2, 4, SymplecticPairing::consecutive);
    std::ostringstream os;
    liedim::write_basis_tsv(s, os);
    return std::make_pair(s.rank(), os.str());
  };
  const auto [rank1, dump1] = once();
  const auto [rank2, dump2] = once();
  CHECK(rank1 == rank2);
  CHECK(dump1 == dump2);
  CHECK(rank1 == 15);  // raw ideal piece, before passing to any quotient
}

TEST_CASE("rank computation is insertion-order independent") {
  const auto basis = lyndon_basis(3, 5);
  std::vector<LieMonomial> reversed(basis.rbegin(), basis.rend());
  CHECK(rank_of(basis, 3) == rank_of(reversed, 3));
}

TEST_CASE("budget guard refuses out-of-range computations with a clear error") {
  CHECK_THROWS_AS(liedim::derived_piece(7, 3, 4), BudgetError);
  CHECK_THROWS_AS(liedim::derived_piece(4, 3, 9), BudgetError);
  CHECK_THROWS_WITH(liedim::derived_piece(4, 3, 9),
                    Catch::Matchers::ContainsSubstring("budget"));
  OracleBudget raised;
  raised.max_degree = 9;
  CHECK_NOTHROW(liedim::check_budget(4, 9, raised));
}
