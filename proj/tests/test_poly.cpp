#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "modinv/poly.hpp"

using namespace modinv;

namespace {

Poly random_poly(const Field& f, std::mt19937& rng, int max_terms, int max_deg, int fixed_deg = -1) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coeff(0, f.order() - 1);
  std::vector<std::pair<Monomial, FieldElem>> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    const int d = fixed_deg >= 0 ? fixed_deg : std::uniform_int_distribution<int>(0, max_deg)(rng);
    const auto monos = monomials_of_degree(d);
    const auto& m = monos[std::uniform_int_distribution<std::size_t>(0, monos.size() - 1)(rng)];
    terms.emplace_back(m, f.from_code(coeff(rng)));
  }
  return Poly::from_terms(f, terms);
}

}  // namespace

TEST(Monomial, OrderIsGrevlex) {
  // Degree first, then the smaller exponent of the last variable wins.
  EXPECT_TRUE(Monomial::of(0, 0, 0, 1) < Monomial::of(2, 0, 0, 0));
  EXPECT_TRUE(Monomial::of(0, 1, 0, 0) < Monomial::of(1, 0, 0, 0));
  EXPECT_TRUE(Monomial::of(1, 0, 0, 1) < Monomial::of(0, 1, 1, 0));
  EXPECT_TRUE(Monomial::of(1, 0, 1, 1) < Monomial::of(0, 2, 1, 0));
  for (const auto& m : monomials_of_degree(5)) EXPECT_EQ(Monomial::from_key(m.key()), m);
}

TEST(Monomial, Enumeration) {
  EXPECT_EQ(monomials_of_degree(0).size(), 1u);
  EXPECT_EQ(monomials_of_degree(1).size(), 4u);
  EXPECT_EQ(monomials_of_degree(3).size(), 20u);
  const auto m1 = monomials_of_degree(1);
  EXPECT_EQ(m1.front(), Monomial::of(1, 0, 0, 0));
  EXPECT_EQ(m1.back(), Monomial::of(0, 0, 0, 1));
  EXPECT_EQ(monomials_of_bidegree(2, 3).size(), 12u);
  for (const auto& m : monomials_of_bidegree(2, 3)) {
    EXPECT_EQ(m.x_degree(), 2);
    EXPECT_EQ(m.y_degree(), 3);
  }
  EXPECT_THROW(monomials_of_degree(-1), std::invalid_argument);
}

TEST(PolyArith, Examples) {
  const Field f2 = field_of_order(2);
  const Poly x1 = Poly::x1(f2), x2 = Poly::x2(f2);
  EXPECT_EQ((x1 * x2).to_string(), "x1*x2");
  EXPECT_EQ((x1 + x2).pow(2), x1.pow(2) + x2.pow(2));
  EXPECT_EQ(p_pow(x1 + x2, 2).to_string(), "x1^2 + x2^2");
  EXPECT_TRUE((x1 - x1).is_zero());
  EXPECT_EQ(Poly(f2).to_string(), "0");
}

TEST(PolyArith, TextFormAndParsing) {
  const Field f3 = field_of_order(3);
  const Poly p = parse_poly(f3, "2*x2*y2^2 + x1^2*y1");
  EXPECT_EQ(p.to_string(), "x1^2*y1 + 2*x2*y2^2");
  EXPECT_EQ(parse_poly(f3, p.to_string()), p);
  EXPECT_EQ(parse_poly(f3, "x1 - x1"), Poly(f3));
  EXPECT_EQ(parse_poly(f3, "4*x1"), Poly::x1(f3));
  const Field f9 = field_of_order(9);
  const Poly q = parse_poly(f9, "(1+T)*x1 + T*y2");
  EXPECT_EQ(q.to_string(), "(1+T)*x1 + T*y2");
  EXPECT_EQ(parse_poly(f9, q.to_string()), q);
  EXPECT_THROW(parse_poly(f3, "x3"), std::invalid_argument);
  EXPECT_THROW(parse_poly(f3, "x1 x2"), std::invalid_argument);
  EXPECT_THROW(parse_poly(f3, ""), std::invalid_argument);
  EXPECT_THROW(parse_poly(f3, "T*x1"), std::invalid_argument);
}

TEST(PolyArith, TruncatedText) {
  const Field f2 = field_of_order(2);
  const Poly p = (Poly::x1(f2) + Poly::x2(f2) + Poly::y1(f2)).pow(3);
  EXPECT_EQ(p.to_string_truncated(100), p.to_string());
  EXPECT_NE(p.to_string_truncated(2).find("+ ..."), std::string::npos);
}

TEST(PolyArith, DegreeAndComponents) {
  const Field f3 = field_of_order(3);
  const Poly x1 = Poly::x1(f3), x2 = Poly::x2(f3), y1 = Poly::y1(f3), y2 = Poly::y2(f3);
  const Poly f = x1 + x1 * x2;
  EXPECT_EQ(homogeneous_component(f, 2), x1 * x2);
  EXPECT_FALSE(is_homogeneous(f));
  const Poly u1 = x1.pow(3) * y1 + x2.pow(3) * y2;
  EXPECT_EQ(degree(u1), 4);
  EXPECT_FALSE(degree(Poly(f3)).has_value());
  EXPECT_TRUE(is_homogeneous(Poly(f3)));
}

TEST(PolyArith, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(1234);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    const Field f = field_of_order(q);
    for (int it = 0; it < 40; ++it) {
      const Poly a = random_poly(f, rng, 6, 4), b = random_poly(f, rng, 6, 4), c = random_poly(f, rng, 6, 4);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_TRUE((a + (-a)).is_zero());
      EXPECT_EQ(a.pow(3), a * a * a);
    }
  }
}

TEST(PolyArith, CanonicalRegardlessOfTermOrder) {
  std::mt19937 rng(99);
  const Field f = field_of_order(5);
  for (int it = 0; it < 30; ++it) {
    std::vector<std::pair<Monomial, FieldElem>> terms;
    for (int i = 0; i < 8; ++i) {
      const auto monos = monomials_of_degree(3);
      terms.emplace_back(monos[rng() % monos.size()], f.from_code(rng() % 5));
    }
    auto shuffled = terms;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Poly a = Poly::from_terms(f, terms), b = Poly::from_terms(f, shuffled);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.to_string(), b.to_string());
    for (const auto& t : a.terms()) EXPECT_NE(t.coeff, 0u);
  }
}

TEST(Substitution, Examples) {
  const Field f3 = field_of_order(3);
  const Poly x1 = Poly::x1(f3), x2 = Poly::x2(f3), y1 = Poly::y1(f3), y2 = Poly::y2(f3);
  EXPECT_EQ(substitute_linear(y1, {x1, x2, y1, y2}), y1);
  EXPECT_EQ(substitute_linear(y1, {x1, x2, y1 + y2, y2}), y1 + y2);
  EXPECT_EQ(substitute_linear(x1 * x2, {x2, x1, y1, y2}), x1 * x2);
  EXPECT_THROW(LinearSubstitution(f3, {x1 * x1, x2, y1, y2}), std::invalid_argument);
}

TEST(Substitution, IsMultiplicative) {
  std::mt19937 rng(7);
  for (std::uint64_t q : {2, 3, 4}) {
    const Field f = field_of_order(q);
    for (int it = 0; it < 20; ++it) {
      std::array<Poly, 4> images;
      for (auto& img : images) img = random_poly(f, rng, 4, 0, 1);
      LinearSubstitution sub(f, images);
      const Poly a = random_poly(f, rng, 5, 0, 3), b = random_poly(f, rng, 5, 0, 2);
      EXPECT_EQ(sub.apply(a * b), sub.apply(a) * sub.apply(b));
      EXPECT_EQ(sub.apply(a + b), sub.apply(a) + sub.apply(b));
    }
  }
}

TEST(Star, ExamplesAndInvolution) {
  const Field f3 = field_of_order(3);
  const Poly x1 = Poly::x1(f3), x2 = Poly::x2(f3), y1 = Poly::y1(f3), y2 = Poly::y2(f3);
  EXPECT_EQ(star(x1), y2);
  EXPECT_EQ(star(x2), y1);
  const Poly u0 = x1 * y1 + x2 * y2;
  EXPECT_EQ(star(u0), u0);
  std::mt19937 rng(5);
  for (int it = 0; it < 30; ++it) {
    const Poly a = random_poly(f3, rng, 6, 4), b = random_poly(f3, rng, 6, 4);
    EXPECT_EQ(star(star(a)), a);
    EXPECT_EQ(star(a * b), star(a) * star(b));
    EXPECT_EQ(star(a + b), star(a) + star(b));
  }
}

TEST(Division, Examples) {
  const Field f3 = field_of_order(3);
  const Poly x1 = Poly::x1(f3), x2 = Poly::x2(f3);
  const auto ok = exact_div(x1.pow(2) * x2, x1);
  ASSERT_TRUE(std::holds_alternative<Poly>(ok));
  EXPECT_EQ(std::get<Poly>(ok), x1 * x2);
  const auto bad = exact_div(x1 + x2, x1);
  ASSERT_TRUE(std::holds_alternative<NotDivisible>(bad));
  EXPECT_EQ(std::get<NotDivisible>(bad).remainder_lead, Monomial::of(0, 1, 0, 0));
  EXPECT_THROW(exact_div_or_throw(x1 + x2, x1, "test"), std::logic_error);
  EXPECT_THROW(divide(x1, Poly(f3)), std::invalid_argument);
}

TEST(Division, DividesByU0) {
  for (std::uint64_t q : {2, 3}) {
    const Field f = field_of_order(q);
    const unsigned qq = static_cast<unsigned>(q);
    const Poly x1 = Poly::x1(f), x2 = Poly::x2(f), y1 = Poly::y1(f), y2 = Poly::y2(f);
    const Poly u0 = x1 * y1 + x2 * y2;
    const Poly u1 = x1.pow(qq) * y1 + x2.pow(qq) * y2;
    const Poly u1s = x1 * y1.pow(qq) + x2 * y2.pow(qq);
    const Poly d = x2 * x1.pow(qq) - x2.pow(qq) * x1;
    const Poly ds = y1 * y2.pow(qq) - y1.pow(qq) * y2;
    EXPECT_EQ(exact_div_or_throw(u1 * u1s - d * ds, u0, "u0"), u0.pow(qq)) << "q=" << q;
  }
}

TEST(Division, RoundTripOnRandomInputs) {
  std::mt19937 rng(2024);
  for (std::uint64_t q : {2, 3, 5, 9}) {
    const Field f = field_of_order(q);
    for (int it = 0; it < 25; ++it) {
      const Poly h = random_poly(f, rng, 6, 4);
      Poly g = random_poly(f, rng, 4, 3);
      if (g.is_zero()) g = Poly::y1(f);
      const auto r = exact_div(h * g, g);
      ASSERT_TRUE(std::holds_alternative<Poly>(r));
      EXPECT_EQ(std::get<Poly>(r), h);
      const auto dr = divide(h, g);
      EXPECT_EQ(dr.quotient * g + dr.remainder, h);
    }
  }
}
