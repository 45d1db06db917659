#pragma once

#include <cstdint>
#include <vector>

#include "diffspec/field.hpp"

namespace diffspec {

/// Exponents realizing the factorization F_{q^4}* = mu_{q-1} mu_{q+1} mu_{q^2+1}:
/// raising x to n1/n2/n3 extracts the component in the respective subgroup.
/// All three are residues mod q^4 - 1 and satisfy
///   n1 (q-1) = n2 (q+1) = n3 (q^2+1) = 0  and  n1 + n2 + n3 = 1  (mod q^4-1).
struct DecompExponents {
  std::uint64_t q = 0;
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t n3 = 0;
};

/// The unique triple with x = x1 * x2 * x3 and
/// x1^(q-1) = x2^(q+1) = x3^(q^2+1) = 1.
struct Decomposition {
  FieldElement x1, x2, x3;
};

DecompExponents decomp_exponents(const Field& field);

/// True iff x^s = 1. Requires x != 0 and s | 2^m - 1.
bool is_unity_root(FieldElement x, std::uint64_t s);

Decomposition decompose(FieldElement x);
FieldElement recompose(const Decomposition& d);

/// Smallest-encoding multiplicative generator, order verified against every
/// prime divisor of 2^m - 1.
FieldElement find_generator(const Field& field);

/// The s elements of mu_s = {g^(i*(2^m-1)/s)}, in ascending i. s | 2^m - 1.
std::vector<FieldElement> enumerate_subgroup(const Field& field, std::uint64_t s);

/// Multiplicative order of x != 0.
std::uint64_t element_order(FieldElement x);

}  // namespace diffspec
