#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwit/errors.hpp>
#include <hwit/multiquad.hpp>

#include <random>
#include <vector>

using namespace hwit;

namespace {

FieldElement random_element(const MQField& field, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  FieldElement x(field, Rat(0));
  for (unsigned subset = 0; subset < field->dim(); ++subset) {
    Rat c(num(gen));
    c /= den(gen);
    x = x + FieldElement::monomial(field, subset, c);
  }
  return x;
}

}  // namespace

TEST_CASE("field construction validates radicands") {
  CHECK(MultiQuadField::rationals()->dim() == 1);
  CHECK(MultiQuadField::create({Int(2)})->dim() == 2);
  CHECK(MultiQuadField::create({Int(3), Int(5)})->str() == "Q(sqrt(3),sqrt(5))");
  CHECK(MultiQuadField::create({Int(-1), Int(2), Int(3)})->dim() == 8);

  CHECK_THROWS_AS(MultiQuadField::create({Int(0)}), std::domain_error);
  CHECK_THROWS_AS(MultiQuadField::create({Int(1)}), std::domain_error);
  CHECK_THROWS_AS(MultiQuadField::create({Int(12)}), std::domain_error);  // not squarefree
  // dependent: 2 * 3 * 6 = 36 is a square
  CHECK_THROWS_AS(MultiQuadField::create({Int(2), Int(3), Int(6)}), std::domain_error);
  CHECK_THROWS_AS(MultiQuadField::create({Int(2), Int(2)}), std::domain_error);
  CHECK_THROWS_AS(
      MultiQuadField::create({Int(2), Int(3), Int(5), Int(7), Int(11), Int(13), Int(17)}),
      UnsupportedSplittingField);
}

TEST_CASE("arithmetic worked examples over Q(sqrt(2))") {
  MQField f = MultiQuadField::create({Int(2)});
  FieldElement s2 = FieldElement::sqrt_generator(f, 0);
  CHECK(s2 * s2 == FieldElement(f, Rat(2)));

  FieldElement one_plus = FieldElement(f, Rat(1)) + s2;
  FieldElement one_minus = FieldElement(f, Rat(1)) - s2;
  CHECK(one_plus * one_minus == FieldElement(f, Rat(-1)));
  CHECK(one_plus.inverse() == -one_minus);  // 1/(1+sqrt 2) = sqrt(2) - 1
  CHECK(one_plus * one_plus.inverse() == FieldElement(f, Rat(1)));

  CHECK((s2 / one_plus) * one_plus == s2);
  CHECK(FieldElement(f, Rat(7)).is_rational());
  CHECK(FieldElement(f, Rat(7)).as_rational() == Rat(7));
  CHECK_FALSE(s2.is_rational());
  CHECK_THROWS_AS(s2.as_rational(), std::domain_error);
  CHECK_THROWS_AS(FieldElement(f, Rat(0)).inverse(), std::domain_error);
}

TEST_CASE("mixed-field operations promote through prefix subfields") {
  MQField small = MultiQuadField::create({Int(3)});
  MQField big = MultiQuadField::create({Int(3), Int(5)});
  CHECK(small->prefix_of(*big));
  CHECK_FALSE(big->prefix_of(*small));

  FieldElement s3_small = FieldElement::sqrt_generator(small, 0);
  FieldElement s3_big = FieldElement::sqrt_generator(big, 0);
  CHECK(s3_small.embed(big) == s3_big);
  // direct mixed arithmetic aligns the smaller operand
  CHECK(s3_small * s3_big == FieldElement(big, Rat(3)));
  CHECK(FieldElement(Rat(2)) * s3_big == s3_big + s3_big);

  MQField other = MultiQuadField::create({Int(5)});
  FieldElement s5 = FieldElement::sqrt_generator(other, 0);
  CHECK_THROWS_AS(s3_small + s5, std::invalid_argument);
  CHECK_THROWS_AS(s3_small.embed(other), std::invalid_argument);
}

TEST_CASE("galois action worked examples") {
  MQField f = MultiQuadField::create({Int(2), Int(3)});
  FieldElement s2 = FieldElement::sqrt_generator(f, 0);
  FieldElement s3 = FieldElement::sqrt_generator(f, 1);
  FieldElement s6 = s2 * s3;

  CHECK(s2.galois({1}) == -s2);
  CHECK(s3.galois({1}) == s3);
  CHECK(s6.galois({1}) == -s6);
  CHECK(s6.galois({3}) == s6);
  CHECK((s2 + s3).galois({2}) == s2 - s3);
  CHECK(FieldElement(f, Rat(5)).galois({3}) == FieldElement(f, Rat(5)));
}

TEST_CASE("galois elements act as ring automorphisms") {
  std::mt19937_64 gen(11);
  for (const auto& rad : {std::vector<Int>{Int(2)}, std::vector<Int>{Int(3), Int(5)},
                          std::vector<Int>{Int(-1), Int(2), Int(3)}}) {
    MQField f = MultiQuadField::create(rad);
    for (int trial = 0; trial < 20; ++trial) {
      FieldElement x = random_element(f, gen);
      FieldElement y = random_element(f, gen);
      for (unsigned mask = 0; mask < f->dim(); ++mask) {
        GaloisElement g{mask};
        CHECK((x + y).galois(g) == x.galois(g) + y.galois(g));
        CHECK((x * y).galois(g) == x.galois(g) * y.galois(g));
        CHECK(x.galois(g).galois(g) == x);  // involution
      }
    }
  }
}

TEST_CASE("inverse is exact for random nonzero elements") {
  std::mt19937_64 gen(13);
  for (const auto& rad : {std::vector<Int>{Int(2)}, std::vector<Int>{Int(3), Int(5)},
                          std::vector<Int>{Int(-1), Int(2), Int(3)}}) {
    MQField f = MultiQuadField::create(rad);
    int done = 0;
    while (done < 100) {
      FieldElement x = random_element(f, gen);
      if (x.is_zero()) continue;
      ++done;
      CHECK(x * x.inverse() == FieldElement(f, Rat(1)));
    }
  }
}

TEST_CASE("elements fixed by the whole galois group are rational") {
  MQField f = MultiQuadField::create({Int(2), Int(-3)});
  std::mt19937_64 gen(17);
  for (int trial = 0; trial < 50; ++trial) {
    FieldElement x = random_element(f, gen);
    FieldElement trace(f, Rat(0));
    for (unsigned mask = 0; mask < f->dim(); ++mask) trace = trace + x.galois({mask});
    CHECK(trace.is_rational());
    CHECK(trace.as_rational() == x.coeff(0) * Rat(4));

    bool fixed = true;
    for (unsigned mask = 1; mask < f->dim(); ++mask)
      if (!(x.galois({mask}) == x)) fixed = false;
    CHECK(fixed == x.is_rational());
  }
}

TEST_CASE("adjoin reuses square classes already present") {
  MQField q3 = MultiQuadField::create({Int(3)});

  AdjoinResult same = adjoin(q3, Int(3));
  CHECK_FALSE(same.enlarged);
  CHECK(same.field->same(*q3));
  CHECK(same.sqrt_witness * same.sqrt_witness == FieldElement(q3, Rat(3)));

  // 12 = 4 * 3: witness is 2 sqrt(3), field unchanged
  AdjoinResult twelve = adjoin(q3, Int(12));
  CHECK_FALSE(twelve.enlarged);
  CHECK(twelve.sqrt_witness == FieldElement::sqrt_generator(q3, 0) * FieldElement(Rat(2)));
  CHECK(twelve.sqrt_witness * twelve.sqrt_witness == FieldElement(q3, Rat(12)));

  AdjoinResult enlarged = adjoin(q3, Int(2));
  CHECK(enlarged.enlarged);
  CHECK(enlarged.field->generator_count() == 2);
  CHECK(enlarged.sqrt_witness * enlarged.sqrt_witness == FieldElement(enlarged.field, Rat(2)));

  // composite square classes: over Q(sqrt 2, sqrt 3), sqrt(6) already exists
  MQField q23 = MultiQuadField::create({Int(2), Int(3)});
  AdjoinResult six = adjoin(q23, Int(6));
  CHECK_FALSE(six.enlarged);
  CHECK(six.sqrt_witness * six.sqrt_witness == FieldElement(q23, Rat(6)));

  AdjoinResult negative = adjoin(MultiQuadField::create({Int(-1)}), Int(-1));
  CHECK_FALSE(negative.enlarged);
  CHECK(negative.sqrt_witness * negative.sqrt_witness ==
        FieldElement(negative.field, Rat(-1)));

  AdjoinResult neg_four = adjoin(MultiQuadField::create({Int(-1)}), Int(-4));
  CHECK_FALSE(neg_four.enlarged);

  CHECK_THROWS_AS(adjoin(q3, Int(0)), std::domain_error);
  MQField six_gens =
      MultiQuadField::create({Int(3), Int(5), Int(7), Int(11), Int(13), Int(2)});
  CHECK_THROWS_AS(adjoin(six_gens, Int(17)), UnsupportedSplittingField);
  CHECK_FALSE(adjoin(six_gens, Int(15)).enlarged);  // 15 = 3 * 5 already present
}
