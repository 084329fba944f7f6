#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "arcchroma/field.hpp"

using arcchroma::Field;
using arcchroma::prime_power_decomposition;
using arcchroma::subfield_embedding;
using arcchroma::trace_in_ambient;
using arcchroma::trace_to_subfield;

TEST_CASE("canonical reducing polynomials") {
  // lexicographically smallest monic irreducible per degree, recomputed
  // independently with polynomial trial division
  const struct { int p, m; std::uint32_t modulus; } table[] = {
      {2, 1, 2},  {3, 1, 3},   {5, 1, 5},   {7, 1, 7},   {2, 2, 7},
      {2, 3, 11}, {3, 2, 10},  {2, 4, 19},  {2, 6, 67},  {3, 3, 34},
      {5, 3, 131}, {7, 3, 345}, {2, 9, 515}, {3, 6, 734},
  };
  for (const auto& row : table) {
    CAPTURE(row.p);
    CAPTURE(row.m);
    CHECK(Field::get(row.p, row.m).modulus() == row.modulus);
  }
}

TEST_CASE("field axioms hold on every small extension field") {
  for (const auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const Field& f = Field::get(p, m);
    const std::uint32_t q = f.order();
    CAPTURE(q);
    for (std::uint32_t a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.pow(a, q) == a);  // Frobenius fixes the whole field
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.inv(a) == f.pow(a, q - 2));
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        for (std::uint32_t c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // characteristic: p-fold sum vanishes
    for (std::uint32_t a = 0; a < q; ++a) {
      std::uint32_t s = 0;
      for (int i = 0; i < p; ++i) s = f.add(s, a);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("multiplication rows pinned") {
  const Field& f4 = Field::get(2, 2);
  const std::vector<std::uint32_t> row4 = {0, 2, 3, 1};
  for (std::uint32_t b = 0; b < 4; ++b) CHECK(f4.mul(2, b) == row4[b]);

  const Field& f8 = Field::get(2, 3);
  const std::vector<std::uint32_t> row8 = {0, 2, 4, 6, 3, 1, 7, 5};
  for (std::uint32_t b = 0; b < 8; ++b) CHECK(f8.mul(2, b) == row8[b]);

  const Field& f9 = Field::get(3, 2);
  const std::vector<std::uint32_t> row9 = {0, 4, 8, 5, 6, 1, 7, 2, 3};
  for (std::uint32_t b = 0; b < 9; ++b) CHECK(f9.mul(4, b) == row9[b]);

  const Field& f16 = Field::get(2, 4);
  const std::vector<std::uint32_t> row16 = {0, 2, 4, 6, 8, 10, 12, 14, 3, 1, 7, 5, 11, 9, 15, 13};
  for (std::uint32_t b = 0; b < 16; ++b) CHECK(f16.mul(2, b) == row16[b]);
}

TEST_CASE("inverse tables pinned") {
  const auto check_inverses = [](const Field& f, const std::vector<std::uint32_t>& inv) {
    for (std::uint32_t a = 1; a < f.order(); ++a) CHECK(f.inv(a) == inv[a - 1]);
  };
  check_inverses(Field::get(2, 2), {1, 3, 2});
  check_inverses(Field::get(2, 3), {1, 5, 6, 7, 2, 3, 4});
  check_inverses(Field::get(3, 2), {1, 2, 6, 5, 4, 3, 8, 7});
  check_inverses(Field::get(2, 4), {1, 9, 14, 13, 11, 7, 6, 15, 2, 12, 5, 10, 4, 3, 8});
}

TEST_CASE("smallest primitive elements") {
  const struct { int p, m; std::uint32_t g; } table[] = {
      {2, 1, 1}, {3, 1, 2}, {5, 1, 2}, {7, 1, 3}, {11, 1, 2}, {13, 1, 2},
      {2, 2, 2}, {2, 3, 2}, {3, 2, 4}, {2, 4, 2},
  };
  for (const auto& row : table) {
    const Field& f = Field::get(row.p, row.m);
    CAPTURE(f.order());
    CHECK(f.primitive_element() == row.g);
    // really a generator: walk the powers and count the cycle
    if (f.order() > 2) {
      std::uint32_t x = f.primitive_element();
      std::uint32_t steps = 1;
      while (x != 1) {
        x = f.mul(x, f.primitive_element());
        ++steps;
      }
      CHECK(steps == f.order() - 1);
    }
  }
}

TEST_CASE("cubic trace values pinned for GF(8) over GF(2)") {
  const Field& f8 = Field::get(2, 3);
  const std::vector<std::uint32_t> expected = {0, 1, 0, 1, 0, 1, 0, 1};
  for (std::uint32_t a = 0; a < 8; ++a) {
    const auto t = arcchroma::trace_to_subfield(f8.element(a), 2);
    CHECK(t.value == expected[a]);
    CHECK(t.field == &Field::get(2, 1));
  }
}

TEST_CASE("cubic trace has a kernel of size q^2") {
  for (int q : {2, 3, 4}) {
    const auto pm = prime_power_decomposition(q);
    REQUIRE(pm.has_value());
    const Field& big = Field::get(pm->first, 3 * pm->second);
    int zeros = 0;
    for (std::uint32_t a = 0; a < big.order(); ++a)
      if (trace_in_ambient(big, a, static_cast<std::uint32_t>(q)) == 0) ++zeros;
    CHECK(zeros == q * q);
  }
}

TEST_CASE("trace is additive and lands in the subfield") {
  const Field& big = Field::get(2, 6);
  const Field& sub = Field::get(2, 2);
  const auto& emb = subfield_embedding(big, sub);
  for (std::uint32_t a = 0; a < big.order(); ++a) {
    const std::uint32_t t = trace_in_ambient(big, a, 4);
    CHECK(emb.in_image(t));
    for (std::uint32_t b = 0; b < 8; ++b) {
      const std::uint32_t lhs = trace_in_ambient(big, big.add(a, b), 4);
      const std::uint32_t rhs = big.add(trace_in_ambient(big, a, 4), trace_in_ambient(big, b, 4));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("subfield embeddings are field homomorphisms") {
  const auto check_embedding = [](const Field& big, const Field& sub) {
    const auto& emb = subfield_embedding(big, sub);
    REQUIRE(emb.to_ambient.size() == sub.order());
    CHECK(emb.to_ambient[0] == 0);
    CHECK(emb.to_ambient[1] == 1);
    for (std::uint32_t a = 0; a < sub.order(); ++a) {
      CHECK(emb.to_subfield(emb.to_ambient[a]) == a);
      for (std::uint32_t b = 0; b < sub.order(); ++b) {
        CHECK(emb.to_ambient[sub.add(a, b)] == big.add(emb.to_ambient[a], emb.to_ambient[b]));
        CHECK(emb.to_ambient[sub.mul(a, b)] == big.mul(emb.to_ambient[a], emb.to_ambient[b]));
      }
    }
  };
  check_embedding(Field::get(2, 4), Field::get(2, 2));
  check_embedding(Field::get(3, 6), Field::get(3, 2));
  check_embedding(Field::get(2, 6), Field::get(2, 3));
}

TEST_CASE("embedding rejects values outside the image") {
  const Field& big = Field::get(2, 4);
  const Field& sub = Field::get(2, 2);
  const auto& emb = subfield_embedding(big, sub);
  int inside = 0;
  for (std::uint32_t v = 0; v < big.order(); ++v) {
    if (emb.in_image(v)) {
      ++inside;
    } else {
      CHECK_THROWS_AS(emb.to_subfield(v), std::invalid_argument);
    }
  }
  CHECK(inside == 4);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(Field::get(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(6, 2), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 21), std::invalid_argument);
  CHECK_THROWS_AS(Field::get(2, 3).inv(0), std::domain_error);
  CHECK_THROWS_AS(Field::get(2, 2).element(4), std::invalid_argument);
  CHECK_THROWS_AS(subfield_embedding(Field::get(2, 3), Field::get(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(subfield_embedding(Field::get(3, 2), Field::get(2, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(trace_to_subfield(Field::get(2, 4).element(1), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(trace_to_subfield(Field::get(2, 6).element(1), 5),
                  std::invalid_argument);
}

TEST_CASE("fields are interned") {
  CHECK(&Field::get(2, 3) == &Field::get(2, 3));
  CHECK(&Field::get(2, 3) != &Field::get(3, 2));
}

TEST_CASE("element handles carry their field") {
  const Field& f = Field::get(3, 2);
  const auto a = f.element(4);
  const auto b = f.element(7);
  CHECK((a + b).value == f.add(4, 7));
  CHECK((a - b).value == f.sub(4, 7));
  CHECK((a * b).value == f.mul(4, 7));
  CHECK((-a).value == f.neg(4));
  CHECK(a.inverse().value == f.inv(4));
  const auto other = Field::get(2, 2).element(1);
  CHECK_THROWS_AS(a + other, std::invalid_argument);
  CHECK_THROWS_AS(a * other, std::invalid_argument);
}

TEST_CASE("prime power decomposition") {
  using P = std::pair<int, int>;
  CHECK(prime_power_decomposition(2) == P{2, 1});
  CHECK(prime_power_decomposition(4) == P{2, 2});
  CHECK(prime_power_decomposition(8) == P{2, 3});
  CHECK(prime_power_decomposition(9) == P{3, 2});
  CHECK(prime_power_decomposition(16) == P{2, 4});
  CHECK(prime_power_decomposition(49) == P{7, 2});
  CHECK(prime_power_decomposition(64) == P{2, 6});
  CHECK(prime_power_decomposition(81) == P{3, 4});
  CHECK(prime_power_decomposition(1024) == P{2, 10});
  CHECK_FALSE(prime_power_decomposition(1).has_value());
  CHECK_FALSE(prime_power_decomposition(0).has_value());
  CHECK_FALSE(prime_power_decomposition(6).has_value());
  CHECK_FALSE(prime_power_decomposition(12).has_value());
  CHECK_FALSE(prime_power_decomposition(72).has_value());
}

TEST_CASE("primality") {
  CHECK(arcchroma::is_prime(2));
  CHECK(arcchroma::is_prime(3));
  CHECK(arcchroma::is_prime(61));
  CHECK_FALSE(arcchroma::is_prime(1));
  CHECK_FALSE(arcchroma::is_prime(0));
  CHECK_FALSE(arcchroma::is_prime(-7));
  CHECK_FALSE(arcchroma::is_prime(57));
}
