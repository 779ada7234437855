// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "ratsat/instance.hpp"
#include "ratsat/primes.hpp"
#include "support/generators.hpp"

using namespace ratsat;

namespace {

Rational q(long n, long d) { return Rational::normalize(n, d); }

ErrorKind error_kind(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Parameter;
}

} // namespace

TEST(InstanceFormatTest, ParsesAllKinds) {
  const Instance a = parse_instance("problem: subset-sum-01\ncapacity: 1\n1/2\n1/3\n2/12\n");
  EXPECT_EQ(a.kind, ProblemKind::SubsetSum01);
  EXPECT_EQ(a.capacity, Rational(1));
  EXPECT_EQ(a.weights, (std::vector<Rational>{q(1, 2), q(1, 3), q(1, 6)}));

  const Instance p = parse_instance("# header comment\nproblem: partition\n\n1  # item\n1\n");
  EXPECT_EQ(p.kind, ProblemKind::Partition);
  EXPECT_FALSE(p.capacity);

  const Instance k = parse_instance(
      "problem: knapsack-01\ncapacity: 5/6\nthreshold: 13/12\n1/2 3/4\n1/3 1/3\n");
  EXPECT_EQ(k.threshold, q(13, 12));
  EXPECT_EQ(k.profits, (std::vector<Rational>{q(3, 4), q(1, 3)}));

  const Instance nothr = parse_instance("problem: knapsack-01\ncapacity: 1\n1 1\n");
  EXPECT_FALSE(nothr.threshold);
}

TEST(InstanceFormatTest, CanonicalOutput) {
  const std::string text =
      "problem: knapsack-unbounded\ncapacity: 3\nthreshold: 3\n1 1\n";
  EXPECT_EQ(to_text(parse_instance(text)), text);
  EXPECT_EQ(to_text(parse_instance("problem: subset-sum-unbounded\ncapacity: 4/2\n6/4\n")),
            "problem: subset-sum-unbounded\ncapacity: 2\n3/2\n");
}

TEST(InstanceFormatTest, Errors) {
  EXPECT_EQ(error_kind([] { parse_instance("capacity: 1\n1\n"); }), ErrorKind::Parse);
  EXPECT_EQ(error_kind([] { parse_instance("problem: bogus\n"); }), ErrorKind::Parse);
  EXPECT_EQ(error_kind([] { parse_instance("problem: subset-sum-01\n1\n"); }),
            ErrorKind::Parse);
  EXPECT_EQ(error_kind([] { parse_instance("problem: knapsack-01\ncapacity: 1\n1\n"); }),
            ErrorKind::Parse);
  EXPECT_EQ(error_kind([] { parse_instance("problem: partition\n1 2\n"); }),
            ErrorKind::Parse);
  EXPECT_EQ(error_kind([] { parse_instance("problem: partition\n-1\n"); }),
            ErrorKind::Shape);
  EXPECT_EQ(error_kind([] { parse_instance("problem: partition\n1/0\n"); }),
            ErrorKind::InvalidDenominator);
}

TEST(InstanceFormatTest, RoundTripProperty) {
  gen::Rng rng(2);
  for (auto kind : {ProblemKind::Partition, ProblemKind::SubsetSum01,
                    ProblemKind::UnboundedSubsetSum, ProblemKind::Knapsack01,
                    ProblemKind::UnboundedKnapsack})
    for (int i = 0; i < 50; ++i) {
      const Instance inst = gen::random_instance(rng, kind, 8, 12);
      EXPECT_EQ(parse_instance(to_text(inst)), inst);
    }
}

TEST(WitnessTest, Verify) {
  const Instance a = Instance::subset_sum(ProblemKind::SubsetSum01,
                                          {q(1, 2), q(1, 3), q(1, 6)}, Rational(1));
  EXPECT_TRUE(verify_witness(a, {1, 1, 1}));
  EXPECT_FALSE(verify_witness(a, {1, 1, 0}));
  EXPECT_EQ(error_kind([&] { verify_witness(a, {1, 2, 0}); }), ErrorKind::InvalidWitness);
  EXPECT_EQ(error_kind([&] { verify_witness(a, {1, 1}); }), ErrorKind::Shape);

  const Instance u = Instance::subset_sum(ProblemKind::UnboundedSubsetSum,
                                          {q(2, 3), q(1, 2)}, q(5, 3));
  EXPECT_TRUE(verify_witness(u, {1, 2}));

  const Instance p = Instance::partition({q(1, 2), q(1, 3), q(1, 6), Rational(1)});
  EXPECT_TRUE(verify_witness(p, {0, 0, 0, 1}));
  EXPECT_TRUE(verify_witness(p, {1, 1, 1, 0}));
  EXPECT_FALSE(verify_witness(p, {1, 0, 0, 1}));

  const Instance k = Instance::knapsack(ProblemKind::Knapsack01, {q(1, 2), q(1, 3)},
                                        {q(3, 4), q(1, 3)}, q(5, 6), q(13, 12));
  EXPECT_TRUE(verify_witness(k, {1, 1}));
  EXPECT_FALSE(verify_witness(k, {1, 0}));
}

TEST(WitnessTest, TextFormat) {
  EXPECT_EQ(parse_witness("1 0  2\n"), (Witness{1, 0, 2}));
  EXPECT_EQ(to_text(Witness{1, 0, 2}), "1 0 2");
  EXPECT_THROW(parse_witness("1 -1"), Error);
  EXPECT_THROW(parse_witness("a"), Error);
}

TEST(ScalingTest, Examples) {
  const Instance a = Instance::subset_sum(ProblemKind::SubsetSum01,
                                          {q(1, 2), q(1, 3), q(1, 6)}, Rational(1));
  const auto s = scale_to_integers(a);
  EXPECT_EQ(s.alpha, 6);
  EXPECT_EQ(s.weights, (std::vector<BigInt>{3, 2, 1}));
  EXPECT_EQ(*s.capacity, 6);

  const Instance r = Instance::subset_sum(
      ProblemKind::UnboundedSubsetSum,
      {q(441, 437), q(441, 437), q(433, 437), q(433, 437)}, Rational(2));
  const auto rs = scale_to_integers(r);
  EXPECT_EQ(rs.alpha, 437);
  EXPECT_EQ(rs.weights, (std::vector<BigInt>{441, 441, 433, 433}));
  EXPECT_EQ(*rs.capacity, 874);

  const Instance ints = Instance::subset_sum(ProblemKind::SubsetSum01,
                                             {Rational(2), Rational(5)}, Rational(7));
  const auto is = scale_to_integers(ints);
  EXPECT_EQ(is.alpha, 1);
  EXPECT_EQ(to_instance(is), ints);
}

TEST(SizeTest, Examples) {
  const Instance single = Instance::subset_sum(ProblemKind::SubsetSum01, {q(1, 2)}, Rational(0));
  const auto m = measure_sizes(single);
  EXPECT_EQ(m.alpha, 2);
  // 1/2 costs 1+2 unary digits, W = 0/1 costs 1+1.
  EXPECT_EQ(m.unary, 3 + 2);
  // Scaled weight 1 costs one digit, scaled W = 0 costs one.
  EXPECT_EQ(m.scaled_unary, 1 + 1);
  EXPECT_EQ(m.binary, 1u + 2u + 1u + 1u);
  EXPECT_EQ(m.scaled_binary, 1u + 1u);

  const Instance ints = Instance::subset_sum(ProblemKind::SubsetSum01,
                                             {Rational(5), Rational(8)}, Rational(13));
  const auto mi = measure_sizes(ints);
  EXPECT_EQ(mi.alpha, 1);
  // Integers carry a denominator of 1 before scaling only.
  EXPECT_EQ(mi.unary, mi.scaled_unary + 3);
  EXPECT_EQ(mi.binary, mi.scaled_binary + 3);
}

TEST(SizeTest, PrimeReciprocalFamilyBlowsUp) {
  const auto primes = first_n_primes(12);
  std::vector<BigInt> scaled;
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<Rational> w;
    BigInt product = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      w.push_back(q(1, static_cast<long>(primes.at(i))));
      product *= static_cast<unsigned long>(primes.at(i));
    }
    const auto m = measure_sizes(Instance::subset_sum(ProblemKind::SubsetSum01, w, Rational(1)));
    EXPECT_EQ(m.alpha, product);
    scaled.push_back(m.scaled_unary);
  }
  for (std::size_t k = 1; k < scaled.size(); ++k)
    EXPECT_GT(scaled[k], scaled[k - 1] * 2);
}
