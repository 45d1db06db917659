#include <doctest.h>

#include <random>

#include "diffspec/equation.hpp"
#include "diffspec/spectrum.hpp"

using namespace diffspec;

namespace {

std::map<std::uint64_t, std::uint64_t> bins(
    std::initializer_list<std::pair<const std::uint64_t, std::uint64_t>> il) {
  return std::map<std::uint64_t, std::uint64_t>(il);
}

}  // namespace

TEST_CASE("brute spectrum: degenerate linear exponent") {
  const Field f = make_field(1);
  const SpectrumHistogram h = brute_spectrum(f, 1);
  CHECK(h.w == bins({{0, 15}, {16, 1}}));  // every x maps to b = 1
  CHECK(h.delta_f == 16);
}

TEST_CASE("brute spectrum: frozen quartic-family values") {
  const Field f1 = make_field(1);
  CHECK(brute_spectrum(f1, 13).w == bins({{0, 9}, {2, 6}, {4, 1}}));

  const Field f2 = make_field(2);
  CHECK(brute_spectrum(f2, 83).w == bins({{0, 155}, {2, 96}, {12, 4}, {16, 1}}));
}

TEST_CASE("closed-form spectrum bins") {
  CHECK(closed_form_spectrum(make_field(1)).w == bins({{0, 9}, {2, 6}, {4, 1}}));
  CHECK(closed_form_spectrum(make_field(2)).w == bins({{0, 155}, {2, 96}, {12, 4}, {16, 1}}));
  CHECK(closed_form_spectrum(make_field(3)).w ==
        bins({{0, 2295}, {2, 1792}, {56, 8}, {64, 1}}));

  // stays well-formed at sizes far beyond any scan
  const SpectrumHistogram big = closed_form_spectrum(make_field(15));
  validate_histogram(big);
  CHECK(big.delta_f == (std::uint64_t{1} << 30));
}

TEST_CASE("closed form equals brute force for n <= 3") {
  for (unsigned n = 1; n <= 3; ++n) {
    const Field f = make_field(n);
    CHECK(brute_spectrum(f, quartic_power_exponent(f)) == closed_form_spectrum(f));
  }
}

TEST_CASE("histogram identities hold for random exponents") {
  std::mt19937_64 rng(0);
  for (unsigned m : {8u, 12u}) {
    const Field f(m);
    for (int i = 0; i < 10; ++i) {
      const std::uint64_t d = rng() % f.order();
      validate_histogram(brute_spectrum(f, d));
    }
  }
}

TEST_CASE("spectrum is invariant under doubling the exponent") {
  std::mt19937_64 rng(1);
  for (unsigned m : {6u, 8u, 12u}) {
    const Field f(m);
    for (int i = 0; i < 8; ++i) {
      const std::uint64_t d = 1 + rng() % (f.order() - 1);
      CHECK(brute_spectrum(f, d).w == brute_spectrum(f, (2 * d) % f.order()).w);
    }
  }
}

TEST_CASE("spectrum scan is independent of the worker count") {
  const Field f = make_field(3);
  const std::uint64_t d = quartic_power_exponent(f);
  const SpectrumHistogram one = brute_spectrum(f, d, 1);
  const SpectrumHistogram four = brute_spectrum(f, d, 4);
  CHECK(one == four);
  CHECK(per_b_solution_counts(f, d, 1) == per_b_solution_counts(f, d, 3));
}

TEST_CASE("per-b counts agree with the brute-force solver, n = 1") {
  const Field f = make_field(1);
  const auto counts = per_b_solution_counts(f, 13);
  for (std::uint64_t bits = 0; bits < 16; ++bits)
    CHECK(counts[bits] == brute_force_solutions(f.element(bits)).solutions.size());
}

TEST_CASE("differential uniformity") {
  CHECK(diff_uniformity(closed_form_spectrum(make_field(1))) == 4);
  CHECK(diff_uniformity(closed_form_spectrum(make_field(2))) == 16);
  CHECK(diff_uniformity(closed_form_spectrum(make_field(3))) == 64);

  SpectrumHistogram apn;
  apn.m = 8;
  apn.w = bins({{0, 128}, {2, 128}});
  CHECK(diff_uniformity(apn) == 2);

  SpectrumHistogram empty;
  CHECK_THROWS_AS(diff_uniformity(empty), std::invalid_argument);
}

TEST_CASE("oversize scans are refused") {
  const Field f(26);
  CHECK_THROWS_AS(brute_spectrum(f, 5), ResourceError);
  const Field g = make_field(5);
  CHECK_THROWS_AS(lambda_enumerate(g), ResourceError);
  CHECK_THROWS_AS(verify_conjecture(g), ResourceError);
}

TEST_CASE("conjecture verification passes at n = 1 and n = 2") {
  for (unsigned n = 1; n <= 2; ++n) {
    const VerifyReport r = verify_conjecture(make_field(n));
    CHECK(r.pass());
    CHECK(r.checks.size() == 4);
  }
}

TEST_CASE("results are basis-independent: override modulus, same spectrum") {
  // x^4 + x^3 + 1 instead of the default x^4 + x + 1
  const Field f = make_field(1, 0x19);
  CHECK(brute_spectrum(f, 13) == closed_form_spectrum(f));
  CHECK(lambda_enumerate(f).size() == 4);
  CHECK(verify_conjecture(f).pass());

  // and a different degree-8 modulus at n = 2
  const Field g = make_field(2, 0x11D);
  CHECK(brute_spectrum(g, 83) == closed_form_spectrum(g));
  CHECK(verify_conjecture(g).pass());
}

TEST_CASE("a corrupted closed form is detected") {
  VerifyOptions opts;
  opts.inject_fault = true;
  const VerifyReport r = verify_conjecture(make_field(1), opts);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.discrepancies.empty());
}
