#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diffspec/errors.hpp"

namespace diffspec {

class Field;

/// Element of GF(2^m) in the polynomial basis: bit i of `bits` is the
/// coefficient of x^i. An element is only meaningful together with the
/// Field that produced it and must not outlive it.
struct FieldElement {
  std::uint64_t bits = 0;
  const Field* field = nullptr;

  bool is_zero() const { return bits == 0; }
  bool is_one() const { return bits == 1; }
};

bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
/// Orders by encoding; only meaningful between elements of one field.
inline bool operator<(const FieldElement& a, const FieldElement& b) { return a.bits < b.bits; }

FieldElement operator+(FieldElement a, FieldElement b);
FieldElement operator*(FieldElement a, FieldElement b);
FieldElement operator/(FieldElement a, FieldElement b);

/// A binary extension field GF(2^m), 1 <= m <= 60, as GF(2)[x]/(modulus).
///
/// The modulus is verified irreducible at construction. All derived data
/// (group-order factorization, generator, log/antilog tables for m <= 16)
/// is computed eagerly, so a constructed Field is immutable and safe to
/// share across threads.
class Field {
 public:
  /// Uses the built-in default modulus for the degree: the irreducible
  /// polynomial with the smallest integer encoding.
  explicit Field(unsigned degree);
  /// Explicit modulus, encoded with bit i = coefficient of x^i (so bit
  /// `degree` must be set). Throws std::invalid_argument if the degree is
  /// wrong or the polynomial is reducible.
  Field(unsigned degree, std::uint64_t modulus);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned degree() const { return m_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return order_; }  // 2^m - 1
  std::uint64_t size() const { return order_ + 1; }
  bool uses_default_modulus() const;

  /// n with m = 4n; throws std::invalid_argument unless 4 | m.
  unsigned quartic_n() const;
  /// q = 2^(m/4).
  std::uint64_t q() const { return std::uint64_t{1} << quartic_n(); }

  FieldElement zero() const { return {0, this}; }
  FieldElement one() const { return {1, this}; }
  FieldElement element(std::uint64_t bits) const;

  /// Smallest-encoding multiplicative generator (order exactly 2^m - 1).
  FieldElement generator() const { return {generator_, this}; }
  /// Prime factorization of 2^m - 1 as (prime, multiplicity) pairs.
  const std::vector<std::pair<std::uint64_t, unsigned>>& order_factorization() const {
    return factors_;
  }

  // Arithmetic on raw encodings. These are the hot paths used by full-field
  // scans; the FieldElement wrappers below add context checks.
  std::uint64_t add_raw(std::uint64_t a, std::uint64_t b) const { return a ^ b; }
  std::uint64_t mul_raw(std::uint64_t a, std::uint64_t b) const {
    if (!log_.empty()) {
      if (a == 0 || b == 0) return 0;
      std::uint64_t s = log_[a] + log_[b];
      if (s >= order_) s -= order_;
      return antilog_[s];
    }
    return mul_ref_raw(a, b);
  }
  /// Table-free shift-and-xor product; bit-identical to mul_raw.
  std::uint64_t mul_ref_raw(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sqr_raw(std::uint64_t a) const { return mul_raw(a, a); }
  std::uint64_t inv_raw(std::uint64_t a) const;
  /// a^e with e an exponent residue (reduced mod order for a != 0);
  /// 0^0 = 1 by convention, 0^e = 0 for e > 0.
  std::uint64_t pow_raw(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t frobenius_raw(std::uint64_t a, unsigned j) const;
  std::uint64_t sqrt_raw(std::uint64_t a) const { return frobenius_raw(a, m_ - 1); }

  /// num/den as an exponent residue mod 2^m - 1. den must be coprime to
  /// the order (powers of two always are).
  std::uint64_t exp_residue(std::int64_t num, std::uint64_t den = 1) const;

  /// Fixed-width hex (ceil(m/4) nibbles, 0x prefix, uppercase).
  std::string to_hex(FieldElement a) const;
  FieldElement parse_hex(const std::string& text) const;

  /// "n=<k>" for a quartic field with the default modulus, otherwise
  /// "m=<m>,modulus=0x<hex>".
  std::string spec_string() const;

  bool same_field(const Field& other) const {
    return m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  void init();
  std::uint64_t find_generator_value() const;

  unsigned m_ = 0;
  std::uint64_t modulus_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t generator_ = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> factors_;
  // log/antilog tables, built for m <= 16; empty otherwise.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;
};

/// The paper-scale constructor: GF(2^{4n}) housing q = 2^n. 1 <= n <= 15.
Field make_field(unsigned n, std::optional<std::uint64_t> modulus = std::nullopt);

/// Parses "n=<k>" or "m=<k>,modulus=0x<hex>" (the CLI/config field format).
Field field_from_spec(const std::string& spec);

FieldElement add(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement inv(FieldElement a);
FieldElement pow(FieldElement a, std::int64_t e);
FieldElement frobenius(FieldElement a, unsigned j);
/// Trace from GF(2^m) onto GF(2^s), s | m: sum of a^(2^(s*i)).
FieldElement rel_trace(FieldElement a, unsigned s);
/// Norm from GF(2^m) onto GF(2^s), s | m: a^((2^m-1)/(2^s-1)).
FieldElement rel_norm(FieldElement a, unsigned s);
FieldElement sqrt(FieldElement a);

/// True iff a lies in the subfield GF(2^s) (fixed by the s-fold Frobenius).
bool in_subfield(FieldElement a, unsigned s);
/// Trace from GF(2^s_hi) onto GF(2^s_lo) of an element of GF(2^s_hi),
/// both embedded in the ambient field. s_lo | s_hi | m.
FieldElement subfield_trace(FieldElement a, unsigned s_hi, unsigned s_lo);

std::uint64_t default_modulus_for_degree(unsigned degree);
bool is_irreducible_poly(std::uint64_t poly, unsigned degree);

}  // namespace diffspec
