#include <doctest.h>

#include "gencover/gf.hpp"
#include "oracles.hpp"

using namespace gencover;

namespace {

void check_axioms(const FieldPtr& F) {
  const Elem q = F->order();
  for (Elem a = 0; a < q; ++a) {
    CHECK(F->add(a, 0) == a);
    CHECK(F->mul(a, 1) == a);
    CHECK(F->add(a, F->neg(a)) == 0);
    if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
    for (Elem b = 0; b < q; ++b) {
      CHECK(F->add(a, b) == F->add(b, a));
      CHECK(F->mul(a, b) == F->mul(b, a));
      for (Elem c = 0; c < q; c += 1 + q / 7) {
        CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
        CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("prime and extension fields satisfy the field axioms") {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}})
    check_axioms(Field::create(p, m));
}

TEST_CASE("multiplication matches schoolbook reduction by the modulus") {
  for (auto [p, m] : {std::pair{2u, 3u}, {3u, 2u}, {2u, 5u}, {5u, 2u}, {3u, 3u}}) {
    const auto F = Field::create(p, m);
    for (Elem a = 0; a < F->order(); ++a)
      for (Elem b = 0; b < F->order(); ++b)
        REQUIRE(F->mul(a, b) == oracle::poly_mulmod(a, b, p, F->modulus()));
  }
}

TEST_CASE("modulus is the smallest irreducible, low coefficients first") {
  CHECK(Field::create(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::create(2, 3)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field::create(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(Field::create(7)->modulus() == std::vector<std::uint32_t>{0, 1});
  // x * x = x + 1 in GF(4).
  CHECK(Field::create(2, 2)->mul(2, 2) == 3);
  // x * x = -1 in GF(9).
  CHECK(Field::create(3, 2)->mul(3, 3) == 2);
}

TEST_CASE("irreducibility by trial division") {
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x + 1)^2
  CHECK(is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(is_irreducible({0, 1, 1}, 5));
}

TEST_CASE("large fields without tables still invert") {
  const auto F = Field::create(3, 13);
  CHECK(F->order() == 1594323u);
  for (Elem a : {1u, 2u, 3u, 12345u, 1594322u}) {
    CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK(F->mul(a, 777) == oracle::poly_mulmod(a, 777, 3, F->modulus()));
  }
}

TEST_CASE("field errors") {
  CHECK_THROWS_AS(Field::create(4), Error);
  try {
    Field::create(6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimeCharacteristic);
  }
  try {
    Field::create(2, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeOutOfRange);
  }
  try {
    Field::create(5, 1)->inv(0);
    FAIL("inverse of zero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("checked elements reject mixed fields") {
  const auto F4 = Field::create(2, 2);
  const auto F3 = Field::create(3);
  const GFElement a(F4, 2), b(F4, 3);
  CHECK((a * b).value() == F4->mul(2, 3));
  CHECK((a / a).value() == 1);
  CHECK((a - a).value() == 0);
  CHECK_THROWS_AS(a + GFElement(F3, 1), Error);
  CHECK_THROWS_AS(GFElement(F3, 3), Error);

  const auto F9 = Field::create(3, 2);
  CHECK(embed_base(GFElement(F3, 2), F9).value() == 2);
  try {
    embed_base(a, F9);
    FAIL("embedding from a non-prime field");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimeBaseField);
  }
  try {
    embed_base(GFElement(Field::create(2), 1), F9);
    FAIL("characteristic mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CharacteristicMismatch);
  }
}

TEST_CASE("fields compare by parameters") {
  CHECK(same_field(Field::create(2, 3), Field::create(2, 3)));
  CHECK_FALSE(same_field(Field::create(2, 3), Field::create(3, 2)));
  CHECK(Field::create(2, 3)->name() == "GF(8)");
}
