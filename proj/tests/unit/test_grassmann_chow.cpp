#include <doctest.h>

#include <random>
#include <stdexcept>

#include "ahyp/chow_io.hpp"
#include "ahyp/chow_ring.hpp"
#include "ahyp/schur_oracle.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace ahyp;

namespace {

ChowElement s(const RingContext& ctx, std::initializer_list<int> parts) {
  return make_class(ctx, Partition(parts));
}

ChowElement parse(const RingContext& ctx, const char* text) { return parse_chow_element(ctx, text); }

bool nonnegative(const ChowElement& x) {
  for (const auto& [lambda, c] : x.terms()) {
    if (c < 0) return false;
  }
  return true;
}

bool graded(const ChowElement& x, int degree) {
  for (const auto& [lambda, c] : x.terms()) {
    if (lambda.size() != degree) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("partition") {
  TEST_CASE("normalizes trailing zeros and rejects increasing parts") {
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition({0}).empty());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  }

  TEST_CASE("conjugate") {
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({2, 2}).conjugate() == Partition({2, 2}));
    CHECK(Partition{}.conjugate() == Partition{});
  }

  TEST_CASE("ring context domain") {
    CHECK_THROWS_AS(RingContext(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(RingContext(3, 3), std::invalid_argument);
    const RingContext g(2, 4);
    CHECK(g.dimension() == 4);
    CHECK(g.top() == Partition({2, 2}));
    CHECK(g.fits(Partition({2, 2})));
    CHECK_FALSE(g.fits(Partition({3})));
    CHECK_FALSE(g.fits(Partition({1, 1, 1})));
  }
}

TEST_SUITE("make_class") {
  TEST_CASE("box truncation") {
    const RingContext g(2, 4);
    CHECK(to_string(s(g, {1})) == "s[1]");
    CHECK(s(g, {3}).is_zero());
    CHECK(to_string(s(g, {2, 2})) == "s[2,2]");
  }
}

TEST_SUITE("pieri") {
  TEST_CASE("horizontal strips") {
    const RingContext g24(2, 4);
    CHECK(pieri(1, s(g24, {1})) == parse(g24, "s[2] + s[1,1]"));
    const RingContext g46(4, 6);
    CHECK(pieri(2, s(g46, {2, 1, 1, 1})).is_zero());
    const ChowElement x = parse(g46, "3*s[2,1] - s[1,1,1]");
    CHECK(pieri(0, x) == x);
    CHECK_THROWS_AS(pieri(-1, x), std::invalid_argument);
  }

  TEST_CASE("vertical strips") {
    const RingContext g24(2, 4);
    CHECK(pieri_vertical(2, s(g24, {1, 1})) == s(g24, {2, 2}));
    const RingContext g25(2, 5);
    CHECK(to_string(pieri_vertical(2, s(g25, {2}))) == golden::kG25S11S2);
    const ChowElement x = parse(g25, "s[2,1] + 7*s[3]");
    CHECK(pieri_vertical(0, x) == x);
  }

  TEST_CASE("general cross-check: both rules in one ring") {
    // sigma_1 is both a row and a column
    const RingContext g(3, 7);
    for (const auto& parts : testing::box_partitions(3, 4, 6)) {
      const ChowElement x = make_class(g, Partition(parts));
      CHECK(pieri(1, x) == pieri_vertical(1, x));
    }
  }
}

TEST_SUITE("multiply") {
  TEST_CASE("worked examples") {
    const RingContext g24(2, 4);
    const ChowElement s1 = s(g24, {1});
    CHECK(to_string(multiply(multiply(multiply(s1, s1), s1), s1)) == golden::kG24SigmaOneFourth);
    CHECK(multiply(s(g24, {2}), s(g24, {1, 1})).is_zero());
    const ChowElement x = parse(g24, "2*s[2,1] + s[1]");
    CHECK(multiply(ChowElement::one(g24), x) == x);
    CHECK(multiply(x, ChowElement::one(g24)) == x);
  }

  TEST_CASE("golden products") {
    const RingContext g36(3, 6);
    CHECK(to_string(multiply(s(g36, {2, 1}), s(g36, {2, 1}))) == golden::kG36S21S21);
    CHECK(to_string(multiply(s(g36, {2, 1}), s(g36, {3, 2, 1}))) == golden::kG36S21S321);
    const RingContext g25(2, 5);
    CHECK(to_string(multiply(s(g25, {1, 1}), s(g25, {2}))) == golden::kG25S11S2);
  }

  TEST_CASE("incompatible rings") {
    CHECK_THROWS_AS(multiply(s(RingContext(2, 4), {1}), s(RingContext(2, 5), {1})),
                    std::invalid_argument);
    ChowElement x = s(RingContext(2, 4), {1});
    CHECK_THROWS_AS(x += s(RingContext(3, 5), {1}), std::invalid_argument);
  }

  TEST_CASE("zero and negative coefficients") {
    const RingContext g(2, 5);
    CHECK(multiply(ChowElement(g), s(g, {1})).is_zero());
    CHECK(multiply(parse(g, "-s[1]"), s(g, {1})) == parse(g, "-s[2] - s[1,1]"));
  }

  TEST_CASE("sigma_1 powers count standard tableaux") {
    for (auto [k, n] : {std::pair{2, 6}, std::pair{3, 6}, std::pair{3, 7}}) {
      const RingContext g(k, n);
      ChowElement power = ChowElement::one(g);
      for (int m = 1; m <= g.dimension(); ++m) {
        power = multiply(power, s(g, {1}));
        for (const auto& [lambda, c] : power.terms()) {
          CHECK(c == testing::standard_tableaux({lambda.parts().begin(), lambda.parts().end()}));
        }
      }
      // the degree of the Plucker embedding
      CHECK(integrate(power) == testing::standard_tableaux(std::vector<int>(k, n - k)));
    }
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("schur polynomial basics") {
    // s_{1}(x0,x1) = x0 + x1
    const auto p = schur_polynomial(Partition({1}), 2);
    CHECK(p.size() == 2);
    CHECK(schur_polynomial(Partition({1, 1, 1}), 2).empty());
    CHECK(schur_expansion(p, 2).at(Partition({1})) == 1);
  }

  TEST_CASE("worked examples") {
    const RingContext g24(2, 4);
    const ChowElement s1 = s(g24, {1});
    CHECK(schur_oracle_multiply(s1, s1) == parse(g24, "s[2] + s[1,1]"));
    CHECK(to_string(schur_oracle_multiply(schur_oracle_multiply(s1, s1),
                                          schur_oracle_multiply(s1, s1))) ==
          golden::kG24SigmaOneFourth);
    const ChowElement x = parse(g24, "s[2,1] + 3*s[1]");
    CHECK(schur_oracle_multiply(ChowElement::one(g24), x) == x);
    CHECK_THROWS_AS(schur_oracle_multiply(s1, s(RingContext(2, 5), {1})), std::invalid_argument);
  }

  TEST_CASE("degree of G(2,5)") {
    const RingContext g25(2, 5);
    ChowElement power = ChowElement::one(g25);
    for (int i = 0; i < 6; ++i) power = schur_oracle_multiply(power, s(g25, {1}));
    CHECK(to_string(power) == golden::kG25SigmaOneSixth);
    CHECK(integrate(power) == 5);
  }

  TEST_CASE("pieri/giambelli agree with the oracle on small rings") {
    std::size_t pairs = 0;
    for (int k = 1; k <= 3; ++k) {
      for (int n = k + 1; n <= 7; ++n) {
        const RingContext g(k, n);
        const auto parts = testing::box_partitions(k, n - k, 8);
        for (const auto& a : parts) {
          for (const auto& b : parts) {
            const ChowElement x = make_class(g, Partition(a));
            const ChowElement y = make_class(g, Partition(b));
            const ChowElement fast = multiply(x, y);
            REQUIRE(fast == schur_oracle_multiply(x, y));
            CHECK(nonnegative(fast));
            ++pairs;
          }
        }
      }
    }
    CHECK(pairs > 1000);
  }
}

TEST_SUITE("integrate and duality") {
  TEST_CASE("worked examples") {
    const RingContext g24(2, 4);
    CHECK(integrate(parse(g24, "2*s[2,2]")) == 2);
    CHECK(integrate(s(g24, {1})) == 0);
    CHECK(integrate(ChowElement(g24)) == 0);
  }

  TEST_CASE("complement") {
    for (int big_n = 5; big_n <= 10; ++big_n) {
      for (int d = 1; d + 1 <= big_n - 2; ++d) {
        CHECK(complement(RingContext(2, big_n), Partition({d + 1})) ==
              Partition({big_n - 2, big_n - 2 - (d + 1)}));
      }
    }
    CHECK(complement(RingContext(2, 4), Partition({2, 2})).empty());
    const RingContext g36(3, 6);
    CHECK(complement(g36, Partition({2, 1})) == Partition({3, 2, 1}));
    CHECK(integrate(multiply(s(g36, {2, 1}), s(g36, {3, 2, 1}))) == 1);
    CHECK_THROWS_AS(complement(g36, Partition({4})), std::invalid_argument);
  }

  TEST_CASE("transpose dual") {
    for (int big_n = 6; big_n <= 10; ++big_n) {
      for (int d = 2; d + 3 <= big_n; ++d) {
        const RingContext g(2, big_n);
        const auto [ctx, lambda] = transpose_dual(g, Partition({big_n - 2, big_n - 3 - d}));
        CHECK(ctx == RingContext(big_n - 2, big_n));
        std::vector<int> expected(big_n - 3 - d, 2);
        expected.insert(expected.end(), d + 1, 1);
        CHECK(lambda == Partition(expected));
      }
    }
    const auto [ctx, lambda] = transpose_dual(RingContext(2, 5), Partition({3, 1}));
    CHECK(ctx == RingContext(3, 5));
    CHECK(lambda == Partition({2, 1, 1}));
    CHECK(transpose_dual(RingContext(2, 5), Partition{}).second.empty());
    CHECK_THROWS_AS(transpose_dual(RingContext(2, 5), Partition({4})), std::invalid_argument);
  }

  TEST_CASE("transpose dual is a ring isomorphism on classes") {
    const RingContext g(2, 6);
    const auto parts = testing::box_partitions(2, 4, 8);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        const ChowElement prod = multiply(make_class(g, Partition(a)), make_class(g, Partition(b)));
        const auto [dual, da] = transpose_dual(g, Partition(a));
        const Partition db = transpose_dual(g, Partition(b)).second;
        const ChowElement dual_prod = multiply(make_class(dual, da), make_class(dual, db));
        ChowElement mapped(dual);
        for (const auto& [lambda, c] : prod.terms()) mapped.add(lambda.conjugate(), c);
        CHECK(mapped == dual_prod);
      }
    }
  }

  TEST_CASE("pairing integrates to 1 or 0") {
    std::mt19937 rng(20241019);
    std::size_t cases = 0;
    for (int round = 0; round < 1200; ++round) {
      const int k = std::uniform_int_distribution<>(1, 4)(rng);
      const int n = std::uniform_int_distribution<>(k + 1, k + 5)(rng);
      const RingContext g(k, n);
      const auto parts = testing::box_partitions(k, n - k, g.dimension());
      const Partition a(parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)]);
      // pick b of complementary size
      std::vector<Partition> candidates;
      for (const auto& p : parts) {
        if (Partition(p).size() + a.size() == g.dimension()) candidates.emplace_back(p);
      }
      const Partition& b =
          candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
      const mpz_class value = integrate(multiply(make_class(g, a), make_class(g, b)));
      CHECK(value == (b == complement(g, a) ? 1 : 0));
      ++cases;
    }
    CHECK(cases >= 1000);
  }
}

TEST_SUITE("ring laws") {
  TEST_CASE("commutativity, associativity, grading, positivity on random triples") {
    std::mt19937 rng(7);
    int cases = 0;
    for (int round = 0; round < 1000; ++round) {
      const int k = std::uniform_int_distribution<>(1, 3)(rng);
      const int n = std::uniform_int_distribution<>(k + 1, k + 4)(rng);
      const RingContext g(k, n);
      const auto parts = testing::box_partitions(k, n - k, g.dimension());
      auto pick = [&] {
        return Partition(parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)]);
      };
      const Partition a = pick(), b = pick(), c = pick();
      const ChowElement x = make_class(g, a), y = make_class(g, b), z = make_class(g, c);
      const ChowElement xy = multiply(x, y);
      CHECK(xy == multiply(y, x));
      CHECK(multiply(xy, z) == multiply(x, multiply(y, z)));
      CHECK(graded(xy, a.size() + b.size()));
      CHECK(graded(multiply(xy, z), a.size() + b.size() + c.size()));
      CHECK(nonnegative(multiply(xy, z)));
      ++cases;
    }
    CHECK(cases >= 1000);
  }

  TEST_CASE("distributivity over mixed elements") {
    const RingContext g(3, 6);
    const ChowElement x = parse(g, "2*s[2,1] - s[3]");
    const ChowElement y = parse(g, "s[1] + 4*s[1,1]");
    const ChowElement z = parse(g, "s[2] - s[1,1]");
    CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));
  }
}

TEST_SUITE("dual class vanishing") {
  TEST_CASE("sigma_2 kills the dual-variety class") {
    for (int d = 2; d <= 10; ++d) {
      for (int big_n = d + 3; big_n <= 14; ++big_n) {
        const RingContext g(2, big_n);
        const auto [dual, lambda] = transpose_dual(g, complement(g, Partition({d + 1})));
        CHECK(pieri(2, make_class(dual, lambda)).is_zero());
        CHECK(dual_class_sigma2_product(d, big_n).is_zero());
      }
    }
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(dual_class_sigma2_product(1, 6), std::invalid_argument);
    CHECK_THROWS_AS(dual_class_sigma2_product(4, 6), std::invalid_argument);
  }

  TEST_CASE("sigma_1 does not kill it") {
    // the vanishing is special to sigma_2
    const RingContext g(4, 6);
    CHECK_FALSE(pieri(1, make_class(g, Partition({2, 1, 1, 1}))).is_zero());
  }
}
