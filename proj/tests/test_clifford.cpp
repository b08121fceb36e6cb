#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hwit/clifford.hpp>
#include <hwit/errors.hpp>

#include <random>
#include <vector>

using namespace hwit;

namespace {

DiagonalForm diag(std::vector<long> entries) {
  std::vector<Rat> v;
  for (long e : entries) v.emplace_back(e);
  return DiagonalForm(v);
}

CliffordElement rational_scalar(const CliffAlg& alg, long v) {
  return CliffordElement::scalar(alg, FieldElement(v));
}

CliffordElement random_clifford(const CliffAlg& alg, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> coef(-3, 3);
  CliffordElement x(alg);
  for (unsigned subset = 0; subset < alg->dim(); ++subset)
    x.set_coeff(subset, FieldElement(alg->base(), Rat(coef(gen))));
  return x;
}

Mat<FieldElement> rational_matrix(std::vector<std::vector<long>> rows) {
  Mat<FieldElement> m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = FieldElement(rows[i][j]);
  return m;
}

// All signed permutation matrices of size n (isometries of t_n).
std::vector<Mat<FieldElement>> signed_permutations(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<Mat<FieldElement>> out;
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      Mat<FieldElement> m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        m(perm[i], i) = FieldElement((signs >> i) & 1 ? -1 : 1);
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("generator relations and reversal") {
  CliffAlg alg = CliffordAlgebra::create(diag({2, 6}), MultiQuadField::rationals());
  CliffordElement e1 = CliffordElement::basis(alg, 1);
  CliffordElement e2 = CliffordElement::basis(alg, 2);

  CHECK(e1 * e1 == rational_scalar(alg, 2));
  CHECK(e2 * e2 == rational_scalar(alg, 6));
  CHECK(e1 * e2 == -(e2 * e1));
  CHECK(e1 * e2 == CliffordElement::basis(alg, 3));
  CHECK((e1 * e2) * (e1 * e2) == rational_scalar(alg, -12));

  CHECK(e1.reversal() == e1);
  CHECK((e1 * e2).reversal() == e2 * e1);
  CHECK((e1 * e2).even_part() == e1 * e2);
  CHECK((e1 * e2).odd_part() == CliffordElement(alg));
  CHECK((e1 + e1 * e2).odd_part() == e1);

  CHECK(e1.is_vector());
  CHECK_FALSE((e1 * e2).is_vector());
  CHECK_THROWS_AS((e1 * e2).vector_coords(), std::domain_error);
  CHECK_THROWS_AS(e1.scalar_value(), std::domain_error);
  CHECK_THROWS_AS(CliffordAlgebra::create(standard_form(9), MultiQuadField::rationals()),
                  std::domain_error);
}

TEST_CASE("multiplication is associative and bilinear") {
  std::mt19937_64 gen(101);
  std::vector<CliffAlg> algebras = {
      CliffordAlgebra::create(standard_form(2), MultiQuadField::rationals()),
      CliffordAlgebra::create(diag({2, 6}), MultiQuadField::rationals()),
      CliffordAlgebra::create(standard_form(3), MultiQuadField::create({Int(2)})),
  };
  for (const CliffAlg& alg : algebras) {
    for (int trial = 0; trial < 200; ++trial) {
      CliffordElement x = random_clifford(alg, gen);
      CliffordElement y = random_clifford(alg, gen);
      CliffordElement z = random_clifford(alg, gen);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
}

TEST_CASE("spinor norm worked values") {
  CliffAlg alg = CliffordAlgebra::create(diag({2, 6}), MultiQuadField::rationals());
  CliffordElement e1 = CliffordElement::basis(alg, 1);
  CliffordElement e2 = CliffordElement::basis(alg, 2);
  CHECK(norm_N(e1) == FieldElement(2));
  CHECK(norm_N(e1 * e2) == FieldElement(12));

  // (e1 - e2)/sqrt(2) in C(t_2) over Q(sqrt 2) has norm q(v) = 1
  MQField q2 = MultiQuadField::create({Int(2)});
  CliffAlg t2 = CliffordAlgebra::create(standard_form(2), q2);
  FieldElement inv_s2 = FieldElement::sqrt_generator(q2, 0).inverse();
  CliffordElement v = CliffordElement::from_vector(t2, {inv_s2, -inv_s2});
  CHECK(norm_N(v) == FieldElement(q2, Rat(1)));
  CHECK(norm_N(v) == bilinear_value(standard_form(2), v.vector_coords(), v.vector_coords()));

  CliffordElement bad = rational_scalar(t2, 1) + CliffordElement::basis(t2, 1);
  CHECK_THROWS_AS(norm_N(bad), std::domain_error);
}

TEST_CASE("pin elements validate parity and norm") {
  CliffAlg alg = CliffordAlgebra::create(standard_form(2), MultiQuadField::rationals());
  CliffordElement e1 = CliffordElement::basis(alg, 1);
  CHECK_NOTHROW(PinElement(e1, true));
  CHECK_THROWS_AS(PinElement(e1, false), std::domain_error);  // parity mismatch
  CHECK_THROWS_AS(PinElement(e1 + rational_scalar(alg, 1), true), std::domain_error);
  // norm 2, not 1:
  CliffAlg alg26 = CliffordAlgebra::create(diag({2, 6}), MultiQuadField::rationals());
  CHECK_THROWS_AS(PinElement(CliffordElement::basis(alg26, 1), true), std::domain_error);

  PinElement p(e1, true);
  CHECK(p.inverse().element() == e1);
  CHECK(p.negated().element() == -e1);
  CHECK((p * p).element() == rational_scalar(alg, 1));
  CHECK_FALSE((p * p).odd());
}

TEST_CASE("twisted conjugation realizes reflections and fixes the form") {
  CliffAlg alg = CliffordAlgebra::create(standard_form(2), MultiQuadField::rationals());
  PinElement refl1(CliffordElement::basis(alg, 1), true);
  CHECK(r_q_matrix(refl1) == rational_matrix({{-1, 0}, {0, 1}}));

  PinElement even_unit(rational_scalar(alg, -1), false);
  CHECK(r_q_matrix(even_unit) == rational_matrix({{1, 0}, {0, 1}}));  // kernel {+-1}

  MQField q2 = MultiQuadField::create({Int(2)});
  CliffAlg t2 = CliffordAlgebra::create(standard_form(2), q2);
  FieldElement inv_s2 = FieldElement::sqrt_generator(q2, 0).inverse();
  PinElement swap_lift(CliffordElement::from_vector(t2, {inv_s2, -inv_s2}), true);
  CHECK(r_q_matrix(swap_lift) == rational_matrix({{0, 1}, {1, 0}}));

  // homomorphism + form preservation over random signed permutations
  std::mt19937_64 gen(5);
  auto perms = signed_permutations(2);
  Mat<FieldElement> gram(2, 2);
  gram(0, 0) = FieldElement(1);
  gram(1, 1) = FieldElement(1);
  for (const auto& m : perms) {
    LiftResult lift = lift_isometry(t2, m);
    CHECK(r_q_matrix(lift.pin) == m);
    Mat<FieldElement> preserved = m.transpose() * gram * m;
    CHECK(preserved == gram);
    for (const auto& m2 : perms) {
      LiftResult lift2 = lift_isometry(t2, m2);
      PinElement prod = lift.pin * lift2.pin;
      CHECK(r_q_matrix(prod) == m * m2);
    }
  }
}

TEST_CASE("reflection decomposition reproduces the isometry") {
  DiagonalForm t3 = standard_form(3);
  std::mt19937_64 gen(9);
  auto perms = signed_permutations(3);
  std::shuffle(perms.begin(), perms.end(), gen);
  perms.resize(12);
  for (const auto& m : perms) {
    auto vectors = reflection_decomposition(t3, m);
    CHECK(vectors.size() <= 6);
    Mat<FieldElement> prod = Mat<FieldElement>::identity(3);
    for (const auto& w : vectors) prod = prod * reflection_matrix(t3, w);
    CHECK(prod == m);
  }
  CHECK_THROWS_AS(reflection_decomposition(t3, rational_matrix({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
                  std::domain_error);
  CHECK_THROWS_AS(
      reflection_matrix(diag({1, -1}), {FieldElement(1), FieldElement(1)}),
      std::domain_error);  // isotropic
}

TEST_CASE("reflection lifts adjoin exactly the needed square roots") {
  CliffAlg t2 = CliffordAlgebra::create(standard_form(2), MultiQuadField::rationals());

  LiftResult plain = lift_reflection(t2, {FieldElement(1), FieldElement(0)});
  CHECK(plain.alg->base()->generator_count() == 0);
  CHECK(plain.pin.element() == CliffordElement::basis(plain.alg, 1));

  LiftResult diag_refl = lift_reflection(t2, {FieldElement(1), FieldElement(-1)});
  CHECK(diag_refl.alg->base()->radicands() == std::vector<Int>{Int(2)});
  CHECK(r_q_matrix(diag_refl.pin) == rational_matrix({{0, 1}, {1, 0}}));

  CliffAlg c3 = CliffordAlgebra::create(diag({3, 1}), MultiQuadField::rationals());
  LiftResult scaled = lift_reflection(c3, {FieldElement(1), FieldElement(0)});
  CHECK(scaled.alg->base()->radicands() == std::vector<Int>{Int(3)});
  CHECK(norm_N(scaled.pin.element()) == FieldElement(scaled.alg->base(), Rat(1)));

  CliffAlg hyp = CliffordAlgebra::create(diag({1, -1}), MultiQuadField::rationals());
  CHECK_THROWS_AS(lift_reflection(hyp, {FieldElement(1), FieldElement(1)}), std::domain_error);

  // q(e1 + (1+sqrt2) e2) = 4 + 2 sqrt2 is irrational: no multiquadratic
  // splitting field can contain its square root.
  MQField q2 = MultiQuadField::create({Int(2)});
  CliffAlg over_q2 = CliffordAlgebra::create(standard_form(2), q2);
  FieldElement s2 = FieldElement::sqrt_generator(q2, 0);
  CHECK_THROWS_AS(lift_reflection(over_q2, {FieldElement(q2, Rat(1)), FieldElement(q2, Rat(1)) + s2}),
                  UnsupportedSplittingField);
}

TEST_CASE("isometry lifts are sound and sign-deterministic") {
  CliffAlg t2 = CliffordAlgebra::create(standard_form(2), MultiQuadField::rationals());

  LiftResult id = lift_isometry(t2, rational_matrix({{1, 0}, {0, 1}}));
  CHECK(id.pin.element() == rational_scalar(id.alg, 1));
  CHECK_FALSE(id.pin.odd());

  LiftResult flip = lift_isometry(t2, rational_matrix({{-1, 0}, {0, -1}}));
  CHECK_FALSE(flip.pin.odd());
  CliffordElement e12 = CliffordElement::basis(flip.alg, 3);
  CHECK((flip.pin.element() == e12 || flip.pin.element() == -e12));

  LiftResult swap = lift_isometry(t2, rational_matrix({{0, 1}, {1, 0}}));
  CHECK(swap.alg->base()->radicands() == std::vector<Int>{Int(2)});
  CHECK(swap.pin.odd());
  CHECK(r_q_matrix(swap.pin) == rational_matrix({{0, 1}, {1, 0}}));
  // canonical sign: repeated lifts agree exactly
  LiftResult again = lift_isometry(t2, rational_matrix({{0, 1}, {1, 0}}));
  CHECK(swap.pin.element() == again.pin.element());

  CHECK_THROWS_AS(lift_isometry(t2, rational_matrix({{1, 1}, {0, 1}})), std::domain_error);

  // soundness across all signed permutations of t_3
  CliffAlg t3 = CliffordAlgebra::create(standard_form(3), MultiQuadField::create({Int(2)}));
  for (const auto& m : signed_permutations(3)) {
    LiftResult lift = lift_isometry(t3, m);
    CHECK(r_q_matrix(lift.pin) == m);
    CHECK(norm_N(lift.pin.element()) == FieldElement(lift.alg->base(), Rat(1)));
  }
}

TEST_CASE("graded extension restricts to the isometry and is functorial") {
  MQField q2 = MultiQuadField::create({Int(2)});
  CliffAlg t2 = CliffordAlgebra::create(standard_form(2), q2);
  std::mt19937_64 gen(23);

  auto perms = signed_permutations(2);
  for (const auto& m : perms) {
    LiftResult lift = lift_isometry(t2, m);
    bool improper = false;  // det via permutation parity and signs
    {
      FieldElement d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
      improper = (d == FieldElement(-1));
    }
    // on vectors, psi acts as m itself
    for (int trial = 0; trial < 5; ++trial) {
      std::uniform_int_distribution<int> coef(-3, 3);
      std::vector<FieldElement> coords = {FieldElement(coef(gen)), FieldElement(coef(gen))};
      CliffordElement vec = CliffordElement::from_vector(t2, coords);
      CliffordElement image = psi_apply(lift.pin, improper, vec);
      CHECK(image.is_vector());
      CHECK(image.vector_coords() == m.apply(coords));
    }
    // psi is an algebra homomorphism
    for (int trial = 0; trial < 5; ++trial) {
      CliffordElement x = random_clifford(t2, gen);
      CliffordElement y = random_clifford(t2, gen);
      CHECK(psi_apply(lift.pin, improper, x * y) ==
            psi_apply(lift.pin, improper, x) * psi_apply(lift.pin, improper, y));
      CHECK(psi_apply(lift.pin, improper, x + y) ==
            psi_apply(lift.pin, improper, x) + psi_apply(lift.pin, improper, y));
    }
  }

  // functoriality on composites
  auto det_of = [](const Mat<FieldElement>& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  };
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      const auto& a = perms[i];
      const auto& t = perms[j];
      LiftResult la = lift_isometry(t2, a);
      LiftResult lt = lift_isometry(t2, t);
      LiftResult lat = lift_isometry(t2, a * t);
      bool ia = det_of(a) == FieldElement(-1);
      bool it = det_of(t) == FieldElement(-1);
      CliffordElement x = random_clifford(t2, gen);
      CliffordElement via_product = psi_apply(la.pin, ia, psi_apply(lt.pin, it, x));
      CliffordElement direct = psi_apply(lat.pin, ia != it, x);
      CHECK(via_product == direct);
    }
}
