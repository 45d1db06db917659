#include "diffspec/decompose.hpp"

#include <stdexcept>

#include "modarith.hpp"

namespace diffspec {

using modarith::mulmod;

DecompExponents decomp_exponents(const Field& field) {
  const unsigned n = field.quartic_n();
  const std::uint64_t q = std::uint64_t{1} << n;
  const std::uint64_t ord = field.order();  // q^4 - 1, odd
  const std::uint64_t inv2 = (ord + 1) / 2;

  // n1 = (1+q^2)/2 * (1+q)/2, n2 = (1+q^2)/2 * (1-q)/2, n3 = (1-q^2)/2,
  // with the formal fractions read as residues mod the odd group order.
  const std::uint64_t q2 = mulmod(q, q, ord);
  const std::uint64_t half_1pq2 = mulmod((1 + q2) % ord, inv2, ord);
  const std::uint64_t half_1pq = mulmod((1 + q) % ord, inv2, ord);
  const std::uint64_t half_1mq = mulmod((ord + 1 - q) % ord, inv2, ord);

  DecompExponents e;
  e.q = q;
  e.n1 = mulmod(half_1pq2, half_1pq, ord);
  e.n2 = mulmod(half_1pq2, half_1mq, ord);
  e.n3 = mulmod((ord + 1 - q2) % ord, inv2, ord);

  if (mulmod(e.n1, q - 1, ord) != 0 || mulmod(e.n2, q + 1, ord) != 0 ||
      mulmod(e.n3, q2 + 1, ord) != 0 ||
      modarith::addmod(modarith::addmod(e.n1, e.n2, ord), e.n3, ord) != 1 % ord)
    throw InternalError("decomposition exponent identities failed");
  return e;
}

bool is_unity_root(FieldElement x, std::uint64_t s) {
  if (x.field == nullptr) throw std::invalid_argument("field element has no field context");
  if (x.is_zero()) throw std::domain_error("is_unity_root is undefined at zero");
  const Field& f = *x.field;
  if (s == 0 || f.order() % s != 0)
    throw std::invalid_argument("subgroup order must divide 2^m - 1");
  return f.pow_raw(x.bits, s) == 1;
}

Decomposition decompose(FieldElement x) {
  if (x.field == nullptr) throw std::invalid_argument("field element has no field context");
  if (x.is_zero()) throw std::domain_error("cannot decompose zero");
  const Field& f = *x.field;
  const DecompExponents e = decomp_exponents(f);
  return {{f.pow_raw(x.bits, e.n1), &f},
          {f.pow_raw(x.bits, e.n2), &f},
          {f.pow_raw(x.bits, e.n3), &f}};
}

FieldElement recompose(const Decomposition& d) { return d.x1 * d.x2 * d.x3; }

FieldElement find_generator(const Field& field) { return field.generator(); }

std::vector<FieldElement> enumerate_subgroup(const Field& field, std::uint64_t s) {
  if (s == 0 || field.order() % s != 0)
    throw std::invalid_argument("subgroup order must divide 2^m - 1");
  const std::uint64_t h = field.pow_raw(field.generator().bits, field.order() / s);
  std::vector<FieldElement> out;
  out.reserve(s);
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i < s; ++i) {
    out.push_back({cur, &field});
    cur = field.mul_raw(cur, h);
  }
  return out;
}

std::uint64_t element_order(FieldElement x) {
  if (x.field == nullptr) throw std::invalid_argument("field element has no field context");
  if (x.is_zero()) throw std::domain_error("zero has no multiplicative order");
  const Field& f = *x.field;
  std::uint64_t o = f.order();
  for (const auto& [p, mult] : f.order_factorization()) {
    for (unsigned i = 0; i < mult; ++i) {
      if (o % p == 0 && f.pow_raw(x.bits, o / p) == 1)
        o /= p;
      else
        break;
    }
  }
  return o;
}

}  // namespace diffspec
