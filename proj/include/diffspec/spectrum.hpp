#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "diffspec/field.hpp"

namespace diffspec {

/// Differential spectrum of x -> x^d over GF(2^m): w[i] counts the b values
/// hit by exactly i solutions of x^d + (x+1)^d = b. w[0] is stored
/// explicitly. Well-formed histograms satisfy
///   sum w_i = 2^m,  sum i * w_i = 2^m,  and every populated key is even.
struct SpectrumHistogram {
  unsigned m = 0;
  std::uint64_t d = 0;
  std::map<std::uint64_t, std::uint64_t> w;
  std::uint64_t delta_f = 0;

  bool operator==(const SpectrumHistogram& other) const {
    return m == other.m && d == other.d && w == other.w;
  }
};

/// Throws InternalError if the histogram identities fail.
void validate_histogram(const SpectrumHistogram& h);

/// Max populated key > 0 (the differential uniformity). Throws on an empty
/// or all-zero histogram.
std::uint64_t diff_uniformity(const SpectrumHistogram& h);

/// Number of solutions of x^d + (x+1)^d = b for every b, indexed by
/// encoding. One pass over the field; capped at m <= 24. jobs = 0 picks the
/// hardware thread count; the result is independent of partitioning.
std::vector<std::uint32_t> per_b_solution_counts(const Field& field, std::uint64_t d,
                                                 unsigned jobs = 0);

/// Spectrum by exhaustive scan, any exponent. Capped at m <= 24.
SpectrumHistogram brute_spectrum(const Field& field, std::uint64_t d, unsigned jobs = 0);

/// The four-bin spectrum of d = q^3 + q^2 + q - 1:
///   w_0 = (q^3/2 - 1)(q+1), w_2 = q^3(q-1)/2, w_{q^2-q} = q, w_{q^2} = 1,
/// with colliding keys merged by addition (q = 2 merges the 2-bins).
SpectrumHistogram closed_form_spectrum(const Field& field);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> discrepancies;
  bool pass() const { return discrepancies.empty(); }
};

struct VerifyOptions {
  unsigned jobs = 0;
  std::uint64_t seed = 0;
  /// Corrupts the closed-form histogram before comparison; the report must
  /// then carry discrepancies (harness self-check).
  bool inject_fault = false;
  /// Emit progress lines to stderr (used by the n = 4 soft mode).
  bool progress = false;
};

/// Checks the closed-form spectrum and the per-b solution structure against
/// the brute-force scan: histogram equality, the unique q^2-fiber at b = 1,
/// the (q^2-q)-fibers on mu_{q+1} \ {1}, and 2-solution fibers exactly on
/// Lambda. n <= 4.
VerifyReport verify_conjecture(const Field& field, const VerifyOptions& options = {});

}  // namespace diffspec
