#include <gtest/gtest.h>

#include <set>

#include "modinv/gf.hpp"

using namespace modinv;

namespace {

std::vector<Field> small_fields() {
  std::vector<Field> out;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) out.push_back(field_of_order(q));
  return out;
}

}  // namespace

TEST(FieldMake, CanonicalModuli) {
  EXPECT_EQ(Field::make(2, 1).modulus(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(Field::make(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  // Candidates with c0 = 0 have the root 0, so the first hit has c0 = 1.
  EXPECT_EQ(Field::make(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::make(2, 3).modulus(), (std::vector<std::uint32_t>{1, 0, 1, 1}));  // T^3 + T^2 + 1
  EXPECT_EQ(Field::make(3, 2).to_string(), "3^2/1,0,1");
}

TEST(FieldMake, RejectsBadInput) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(3, 0), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 17), std::out_of_range);
  EXPECT_THROW(field_of_order(6), std::invalid_argument);
  EXPECT_THROW(field_of_order(1), std::invalid_argument);
  EXPECT_THROW(Field::with_modulus(2, {1, 0, 1}), std::invalid_argument);  // (T+1)^2
}

TEST(FieldMake, SplitPrimePower) {
  EXPECT_EQ(split_prime_power(9), (std::pair<std::uint32_t, std::uint32_t>{3, 2}));
  EXPECT_EQ(split_prime_power(7), (std::pair<std::uint32_t, std::uint32_t>{7, 1}));
  EXPECT_EQ(split_prime_power(1024), (std::pair<std::uint32_t, std::uint32_t>{2, 10}));
  EXPECT_THROW(split_prime_power(12), std::invalid_argument);
}

TEST(FieldArith, SmallExamples) {
  const Field f3 = field_of_order(3);
  EXPECT_EQ(f3.from_int(2) + f3.from_int(2), f3.one());
  EXPECT_EQ(f3.from_int(2).inv(), f3.from_int(2));
  EXPECT_EQ(f3.from_int(-1), f3.from_int(2));

  const Field f4 = field_of_order(4);
  const FieldElem t = f4.generator();
  EXPECT_EQ(t * t, t + f4.one());
  EXPECT_EQ((t * t).to_string(), "1+T");
  EXPECT_THROW(f4.zero().inv(), std::domain_error);
}

TEST(FieldArith, MixingModelsThrows) {
  const Field a = field_of_order(3);
  const Field b = field_of_order(5);
  EXPECT_THROW(a.one() + b.one(), std::invalid_argument);
}

TEST(FieldArith, EnumerationSizes) {
  EXPECT_EQ(enumerate(field_of_order(2)).size(), 2u);
  const auto nz = enumerate_nonzero(field_of_order(3));
  ASSERT_EQ(nz.size(), 2u);
  EXPECT_EQ(nz[0].to_string(), "1");
  EXPECT_EQ(nz[1].to_string(), "2");
  std::set<std::uint32_t> codes;
  for (const auto& e : enumerate(field_of_order(4))) codes.insert(e.code());
  EXPECT_EQ(codes.size(), 4u);
}

TEST(FieldAxioms, FullEnumeration) {
  for (const auto& f : small_fields()) {
    SCOPED_TRACE(f.to_string());
    const auto els = f.elements();
    const std::uint32_t p = f.characteristic();
    for (const auto& a : els) {
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inv(), f.one());
        EXPECT_EQ(a.pow(f.order() - 1), f.one());
        EXPECT_EQ(a.pow(-1), a.inv());
      }
      EXPECT_EQ(a + (-a), f.zero());
      for (const auto& b : els) {
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b).pow(p), a.pow(p) + b.pow(p));
        if (f.order() <= 9) {
          for (const auto& c : els) EXPECT_EQ(a * (b + c), a * b + a * c);
        }
      }
    }
  }
}

TEST(FieldAxioms, PrimitiveElementHasFullOrder) {
  for (const auto& f : small_fields()) {
    EXPECT_EQ(f.primitive_element().multiplicative_order(), f.order() - 1) << f.to_string();
  }
}

TEST(PowerSum, Examples) {
  const Field f3 = field_of_order(3);
  EXPECT_EQ(power_sum(f3, 1), f3.zero());
  EXPECT_EQ(power_sum(f3, 2), f3.from_int(-1));
  const Field f4 = field_of_order(4);
  EXPECT_EQ(power_sum(f4, 3), f4.one());
  // a = 0 counts the q-1 nonzero elements.
  EXPECT_EQ(power_sum(field_of_order(5), 0), field_of_order(5).from_int(4));
}

TEST(PowerSum, TwoCaseFormula) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = field_of_order(q);
    for (std::uint64_t a = 1; a <= 3 * (q - 1); ++a) {
      const FieldElem expected = a % (q - 1) == 0 ? f.from_int(-1) : f.zero();
      EXPECT_EQ(power_sum(f, a), expected) << "q=" << q << " a=" << a;
    }
  }
}

TEST(FieldText, RoundTrip) {
  for (const auto& f : small_fields())
    for (const auto& a : f.elements()) EXPECT_EQ(parse_field_elem(f, a.to_string()), a) << a.to_string();
  const Field f9 = field_of_order(9);
  EXPECT_EQ(parse_field_elem(f9, "2*T"), f9.from_coords({0, 2}));
  EXPECT_EQ(parse_field_elem(f9, "T^2"), f9.from_int(-1));
  EXPECT_THROW(parse_field_elem(f9, "T+"), std::invalid_argument);
  EXPECT_EQ(parse_field_elem(field_of_order(8), "T^3 + T^2"), field_of_order(8).one());
  EXPECT_THROW(parse_field_elem(field_of_order(5), "T"), std::invalid_argument);
}
