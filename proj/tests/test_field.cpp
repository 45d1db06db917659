#include <doctest.h>

#include <random>

#include "diffspec/field.hpp"
#include "modarith.hpp"

using namespace diffspec;

namespace {

// Powers of g = x in GF(16) = GF(2)[x]/(x^4 + x + 1), worked out by hand
// with long division; the independent reference for everything below.
constexpr std::uint64_t kPowG[15] = {0x1, 0x2, 0x4, 0x8, 0x3, 0x6, 0xC, 0xB,
                                     0x5, 0xA, 0x7, 0xE, 0xF, 0xD, 0x9};

}  // namespace

TEST_CASE("make_field constructs GF(2^{4n}) with the documented defaults") {
  const Field f = make_field(1);
  CHECK(f.degree() == 4);
  CHECK(f.modulus() == 0x13);
  CHECK(f.order() == 15);

  const Field f2 = make_field(2);
  CHECK(f2.order() == 255);

  CHECK_THROWS_AS(make_field(0), std::out_of_range);
  CHECK_THROWS_AS(make_field(16), std::out_of_range);
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 is reducible
  CHECK_THROWS_AS(make_field(1, 0x15), std::invalid_argument);
  // wrong degree
  CHECK_THROWS_AS(make_field(1, 0x7), std::invalid_argument);
}

TEST_CASE("default modulus table is irreducible for every degree") {
  // Construction re-verifies irreducibility, so this also guards the table.
  for (unsigned m = 1; m <= 60; ++m) {
    const Field f(m);
    CHECK(f.modulus() == default_modulus_for_degree(m));
    CHECK(f.order() == (std::uint64_t{1} << m) - 1);
  }
  CHECK(default_modulus_for_degree(1) == 0x2);
  CHECK(default_modulus_for_degree(2) == 0x7);
  CHECK(default_modulus_for_degree(3) == 0xB);
  CHECK(default_modulus_for_degree(4) == 0x13);
  CHECK(default_modulus_for_degree(8) == 0x11B);
  CHECK(is_irreducible_poly(0x13, 4));
  CHECK_FALSE(is_irreducible_poly(0x15, 4));
  CHECK_FALSE(is_irreducible_poly(0x13, 5));
}

TEST_CASE("addition is coefficient-wise xor") {
  const Field f = make_field(1);
  const FieldElement a = f.element(0x8), b = f.element(0xF);
  CHECK(a + f.zero() == a);
  CHECK(a + a == f.zero());
  CHECK((a + b).bits == 0x7);

  const Field g = make_field(1);
  CHECK(f.element(3) + g.element(5) == f.element(6));  // same field by value

  const Field other = make_field(2);
  CHECK_THROWS_AS(f.element(1) + other.element(1), std::invalid_argument);
}

TEST_CASE("GF(16) multiplication matches the hand power table") {
  const Field f = make_field(1);
  for (int i = 0; i < 15; ++i) {
    for (int j = 0; j < 15; ++j) {
      const FieldElement prod = f.element(kPowG[i]) * f.element(kPowG[j]);
      CHECK(prod.bits == kPowG[(i + j) % 15]);
    }
    CHECK((f.zero() * f.element(kPowG[i])).bits == 0);
  }
  CHECK((f.element(0x2) * f.element(0x4)).bits == 0x8);
  CHECK((f.element(0x9) * f.element(0x2)).bits == 0x1);
}

TEST_CASE("inversion") {
  const Field f = make_field(1);
  CHECK(inv(f.one()) == f.one());
  CHECK(inv(f.element(0x2)).bits == 0x9);
  CHECK_THROWS_AS(inv(f.zero()), std::domain_error);
  for (unsigned m = 1; m <= 12; ++m) {
    const Field g(m);
    for (std::uint64_t a = 1; a <= g.order(); ++a)
      CHECK(g.mul_raw(a, g.inv_raw(a)) == 1);
  }
}

TEST_CASE("exponentiation") {
  const Field f = make_field(1);
  CHECK(pow(f.element(0x2), 5).bits == 0x6);
  CHECK(pow(f.element(0x7), 0) == f.one());
  CHECK(pow(f.zero(), 0) == f.one());  // 0^0 = 1 by convention
  CHECK(pow(f.zero(), 3) == f.zero());
  CHECK_THROWS_AS(pow(f.zero(), -1), std::domain_error);
  for (std::uint64_t a = 1; a <= f.order(); ++a) {
    CHECK(pow(f.element(a), static_cast<std::int64_t>(f.order())) == f.one());
    CHECK(pow(f.element(a), -1) == inv(f.element(a)));
  }
  // fractional exponents are residues mod the odd order: a^(1/2) squares to a
  const FieldElement a = f.element(0xB);
  const FieldElement half = pow(a, static_cast<std::int64_t>(f.exp_residue(1, 2)));
  CHECK(half * half == a);
}

TEST_CASE("frobenius powers") {
  const Field f = make_field(1);
  CHECK(frobenius(f.element(0x2), 1).bits == 0x4);
  for (std::uint64_t a = 0; a <= f.order(); ++a) {
    CHECK(frobenius(f.element(a), 0) == f.element(a));
    CHECK(frobenius(f.element(a), f.degree()) == f.element(a));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const FieldElement a = f.element(rng() & 0xF), b = f.element(rng() & 0xF);
    CHECK(frobenius(a + b, 1) == frobenius(a, 1) + frobenius(b, 1));
    CHECK(frobenius(a * b, 1) == frobenius(a, 1) * frobenius(b, 1));
  }
}

TEST_CASE("frobenius iterated m times is the identity (exhaustive m <= 12)") {
  for (unsigned m = 1; m <= 12; ++m) {
    const Field f(m);
    for (std::uint64_t a = 0; a <= f.order(); ++a) {
      std::uint64_t v = a;
      for (unsigned i = 0; i < m; ++i) v = f.mul_raw(v, v);
      CHECK(v == a);
    }
  }
}

TEST_CASE("relative trace") {
  const Field f = make_field(1);
  CHECK(rel_trace(f.element(0x8), 1) == f.one());
  CHECK(rel_trace(f.element(0x2), 1) == f.zero());
  CHECK(rel_trace(f.zero(), 2) == f.zero());
  CHECK_THROWS_AS(rel_trace(f.one(), 3), std::invalid_argument);

  // result lands in GF(2^s)
  for (std::uint64_t a = 0; a <= f.order(); ++a) {
    CHECK(in_subfield(rel_trace(f.element(a), 2), 2));
    CHECK(in_subfield(rel_trace(f.element(a), 1), 1));
  }
}

TEST_CASE("relative norm") {
  const Field f = make_field(1);
  CHECK(rel_norm(f.one(), 2) == f.one());
  CHECK(rel_norm(f.zero(), 2) == f.zero());
  CHECK(rel_norm(f.element(0x2), 2).bits == 0x6);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const FieldElement a = f.element(1 + rng() % 15), b = f.element(1 + rng() % 15);
    CHECK(rel_norm(a * b, 2) == rel_norm(a, 2) * rel_norm(b, 2));
    CHECK(in_subfield(rel_norm(a, 2), 2));
  }
}

TEST_CASE("trace transitivity through every intermediate subfield") {
  for (unsigned m = 1; m <= 12; ++m) {
    const Field f(m);
    for (unsigned s = 1; s <= m; ++s) {
      if (m % s != 0) continue;
      for (std::uint64_t a = 0; a <= f.order(); ++a) {
        const FieldElement x = f.element(a);
        CHECK(rel_trace(x, 1) == subfield_trace(rel_trace(x, s), s, 1));
      }
    }
  }
}

TEST_CASE("trace is GF(2^s)-linear") {
  const Field f = make_field(2);  // GF(256), s = 2 and s = 4 available
  std::mt19937_64 rng(13);
  for (unsigned s : {1u, 2u, 4u}) {
    for (int i = 0; i < 100; ++i) {
      const FieldElement x = f.element(rng() & 0xFF), y = f.element(rng() & 0xFF);
      CHECK(rel_trace(x + y, s) == rel_trace(x, s) + rel_trace(y, s));
      const FieldElement c = rel_norm(f.element(1 + rng() % 255), s);  // lies in GF(2^s)
      CHECK(rel_trace(c * x, s) == c * rel_trace(x, s));
    }
  }
}

TEST_CASE("absolute trace is balanced (exhaustive m <= 12)") {
  for (unsigned m = 1; m <= 12; ++m) {
    const Field f(m);
    std::uint64_t ones = 0;
    for (std::uint64_t a = 0; a <= f.order(); ++a)
      if (rel_trace(f.element(a), 1).is_one()) ++ones;
    CHECK(ones == (std::uint64_t{1} << (m - 1)));
  }
}

TEST_CASE("square roots") {
  const Field f = make_field(1);
  CHECK(sqrt(f.zero()) == f.zero());
  CHECK(sqrt(f.one()) == f.one());
  CHECK(sqrt(f.element(0x4)).bits == 0x2);
  for (unsigned m = 1; m <= 16; ++m) {
    const Field g(m);
    for (std::uint64_t a = 0; a <= g.order(); ++a) {
      const std::uint64_t r = g.sqrt_raw(a);
      CHECK(g.mul_raw(r, r) == a);
      CHECK(g.sqrt_raw(g.mul_raw(a, a)) == a);
    }
  }
}

TEST_CASE("field axioms on random triples, large schoolbook-path field") {
  const Field f(37);  // no log tables at this size
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order());
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = f.element(dist(rng)), b = f.element(dist(rng)),
                       c = f.element(dist(rng));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) {
      CHECK(a * inv(a) == f.one());
      CHECK(pow(a, static_cast<std::int64_t>(f.order())) == f.one());
    }
  }
}

TEST_CASE("log-table fast path is bit-identical to the shift-xor reference") {
  for (unsigned m : {4u, 11u, 16u}) {
    const Field f(m);
    std::mt19937_64 rng(m);
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order());
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t a = dist(rng), b = dist(rng);
      CHECK(f.mul_raw(a, b) == f.mul_ref_raw(a, b));
      if (a != 0) CHECK(f.inv_raw(a) == f.pow_raw(a, f.order() - 1));
    }
  }
}

TEST_CASE("hex rendering is fixed-width and round-trips") {
  const Field f = make_field(1);
  CHECK(f.to_hex(f.element(0xB)) == "0xB");
  CHECK(f.parse_hex("0xB").bits == 0xB);
  CHECK(f.parse_hex("b").bits == 0xB);
  CHECK_THROWS_AS(f.parse_hex("0x10"), std::invalid_argument);
  CHECK_THROWS_AS(f.parse_hex(""), std::invalid_argument);
  CHECK_THROWS_AS(f.parse_hex("0xZZ"), std::invalid_argument);

  const Field g = make_field(2);
  CHECK(g.to_hex(g.element(0x1)) == "0x01");
  CHECK(g.to_hex(g.element(0xAB)) == "0xAB");
  for (std::uint64_t a = 0; a <= g.order(); ++a)
    CHECK(g.parse_hex(g.to_hex(g.element(a))).bits == a);
}

TEST_CASE("field spec strings") {
  const Field f = make_field(2);
  CHECK(f.spec_string() == "n=2");
  const Field g(8, 0x11D);
  CHECK(g.spec_string() == "m=8,modulus=0x11D");

  CHECK(field_from_spec("n=2").same_field(f));
  CHECK(field_from_spec("m=8,modulus=0x11D").same_field(g));
  CHECK(field_from_spec("m=6").degree() == 6);
  CHECK_THROWS_AS(field_from_spec("k=2"), std::invalid_argument);
  CHECK_THROWS_AS(field_from_spec("n=2,m=8"), std::invalid_argument);
}

TEST_CASE("subfield helpers validate their tower") {
  const Field f = make_field(2);  // m = 8
  CHECK_THROWS_AS(in_subfield(f.one(), 3), std::invalid_argument);
  CHECK_THROWS_AS(subfield_trace(f.one(), 8, 3), std::invalid_argument);
  // element outside the stated subfield
  CHECK_THROWS_AS(subfield_trace(f.generator(), 2, 1), std::invalid_argument);
  CHECK(subfield_trace(f.one(), 2, 1) == f.zero());  // 1 + 1
}

TEST_CASE("order factorization and generator verification") {
  const Field f = make_field(3);  // order 4095 = 3^2 * 5 * 7 * 13
  using Factors = std::vector<std::pair<std::uint64_t, unsigned>>;
  CHECK(f.order_factorization() == Factors{{3, 2}, {5, 1}, {7, 1}, {13, 1}});

  CHECK(modarith::is_prime(2));
  CHECK(modarith::is_prime((std::uint64_t{1} << 61) - 1));
  CHECK_FALSE(modarith::is_prime((std::uint64_t{1} << 60) - 1));
  CHECK(modarith::modinv(2, 15) == 8);
  CHECK(modarith::mulmod(modarith::modinv(7, 255), 7, 255) == 1);
}
