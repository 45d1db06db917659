#include "diffspec/field.hpp"

#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "modarith.hpp"

namespace diffspec {

namespace {

// Smallest-encoding irreducible polynomial per degree 1..60. Entry m-1 is
// the default modulus of GF(2^m); irreducibility is re-verified whenever a
// Field is constructed, so the table cannot silently drift.
constexpr std::uint64_t kDefaultModulus[60] = {
    0x2ULL, 0x7ULL, 0xBULL, 0x13ULL,
    0x25ULL, 0x43ULL, 0x83ULL, 0x11BULL,
    0x203ULL, 0x409ULL, 0x805ULL, 0x1009ULL,
    0x201BULL, 0x4021ULL, 0x8003ULL, 0x1002BULL,
    0x20009ULL, 0x40009ULL, 0x80027ULL, 0x100009ULL,
    0x200005ULL, 0x400003ULL, 0x800021ULL, 0x100001BULL,
    0x2000009ULL, 0x400001BULL, 0x8000027ULL, 0x10000003ULL,
    0x20000005ULL, 0x40000003ULL, 0x80000009ULL, 0x10000008DULL,
    0x20000004BULL, 0x40000001BULL, 0x800000005ULL, 0x1000000035ULL,
    0x200000003FULL, 0x4000000063ULL, 0x8000000011ULL, 0x10000000039ULL,
    0x20000000009ULL, 0x40000000027ULL, 0x80000000059ULL, 0x100000000021ULL,
    0x20000000001BULL, 0x400000000003ULL, 0x800000000021ULL, 0x100000000002DULL,
    0x2000000000071ULL, 0x400000000001DULL, 0x800000000004BULL, 0x10000000000009ULL,
    0x20000000000047ULL, 0x4000000000007DULL, 0x80000000000047ULL, 0x100000000000095ULL,
    0x200000000000011ULL, 0x400000000000063ULL, 0x80000000000007BULL, 0x1000000000000003ULL,
};

inline int poly_degree(std::uint64_t p) { return static_cast<int>(std::bit_width(p)) - 1; }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t f) {
  const int df = poly_degree(f);
  while (a != 0 && poly_degree(a) >= df) a ^= f << (poly_degree(a) - df);
  return a;
}

// Product mod f; inputs must already be reduced mod f.
std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
  const int df = poly_degree(f);
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> df) & 1) a ^= f;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

void check_same_field(FieldElement a, FieldElement b) {
  if (a.field == nullptr || b.field == nullptr)
    throw std::invalid_argument("field element has no field context");
  if (!a.field->same_field(*b.field))
    throw std::invalid_argument("field context mismatch");
}

const Field& field_of(FieldElement a) {
  if (a.field == nullptr) throw std::invalid_argument("field element has no field context");
  return *a.field;
}

}  // namespace

std::uint64_t default_modulus_for_degree(unsigned degree) {
  if (degree < 1 || degree > 60) throw std::out_of_range("field degree must be in [1, 60]");
  return kDefaultModulus[degree - 1];
}

bool is_irreducible_poly(std::uint64_t poly, unsigned degree) {
  if (degree < 1 || degree > 60) return false;
  if ((poly >> degree) != 1) return false;  // must be monic of exactly this degree
  // f is irreducible iff x^(2^m) = x (mod f) and x^(2^(m/p)) - x is coprime
  // to f for every prime p dividing m.
  const std::uint64_t x = poly_mod(2, poly);
  std::uint64_t h = x;
  for (unsigned i = 0; i < degree; ++i) h = poly_mulmod(h, h, poly);
  if (h != x) return false;
  unsigned rest = degree;
  std::vector<unsigned> primes;
  for (unsigned p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    primes.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) primes.push_back(rest);
  for (unsigned p : primes) {
    std::uint64_t g = x;
    for (unsigned i = 0; i < degree / p; ++i) g = poly_mulmod(g, g, poly);
    if (poly_gcd(g ^ x, poly) != 1) return false;
  }
  return true;
}

Field::Field(unsigned degree) : Field(degree, default_modulus_for_degree(degree)) {}

Field::Field(unsigned degree, std::uint64_t modulus) : m_(degree), modulus_(modulus) { init(); }

void Field::init() {
  if (m_ < 1 || m_ > 60) throw std::out_of_range("field degree must be in [1, 60]");
  if ((modulus_ >> m_) != 1)
    throw std::invalid_argument("modulus is not a monic polynomial of the requested degree");
  if (!is_irreducible_poly(modulus_, m_))
    throw std::invalid_argument("modulus is reducible over GF(2)");
  order_ = (std::uint64_t{1} << m_) - 1;
  factors_ = modarith::factorize(order_);
  generator_ = find_generator_value();
  if (m_ <= 16) {
    log_.assign(std::uint64_t{1} << m_, 0);
    antilog_.assign(order_, 0);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < order_; ++i) {
      antilog_[i] = static_cast<std::uint32_t>(cur);
      log_[cur] = static_cast<std::uint32_t>(i);
      cur = mul_ref_raw(cur, generator_);
    }
    if (cur != 1) throw InternalError("generator does not have full order");
  }
}

std::uint64_t Field::find_generator_value() const {
  if (order_ == 1) return 1;
  for (std::uint64_t cand = 2; cand <= order_; ++cand) {
    bool ok = true;
    for (const auto& [p, mult] : factors_) {
      (void)mult;
      if (pow_raw(cand, order_ / p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return cand;
  }
  throw InternalError("no multiplicative generator found");
}

bool Field::uses_default_modulus() const { return modulus_ == kDefaultModulus[m_ - 1]; }

unsigned Field::quartic_n() const {
  if (m_ % 4 != 0) throw std::invalid_argument("field degree is not a multiple of 4");
  return m_ / 4;
}

FieldElement Field::element(std::uint64_t bits) const {
  if (m_ < 64 && (bits >> m_) != 0)
    throw std::invalid_argument("element encoding out of range for this field");
  return {bits, this};
}

std::uint64_t Field::mul_ref_raw(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> m_) & 1) a ^= modulus_;
  }
  return r;
}

std::uint64_t Field::inv_raw(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(2^m)");
  if (!log_.empty()) {
    std::uint64_t e = (order_ - log_[a]) % order_;
    return antilog_[e];
  }
  return pow_raw(a, order_ - 1);
}

std::uint64_t Field::pow_raw(std::uint64_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= order_;
  if (!log_.empty()) {
    std::uint64_t idx = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(log_[a]) * e) % order_);
    return antilog_[idx];
  }
  std::uint64_t r = 1, base = a;
  while (e != 0) {
    if (e & 1) r = mul_ref_raw(r, base);
    base = mul_ref_raw(base, base);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::frobenius_raw(std::uint64_t a, unsigned j) const {
  j %= m_;
  for (unsigned i = 0; i < j; ++i) a = mul_raw(a, a);
  return a;
}

std::uint64_t Field::exp_residue(std::int64_t num, std::uint64_t den) const {
  if (order_ == 1) return 0;
  std::int64_t r = num % static_cast<std::int64_t>(order_);
  if (r < 0) r += static_cast<std::int64_t>(order_);
  std::uint64_t res = static_cast<std::uint64_t>(r);
  if (den != 1) res = modarith::mulmod(res, modarith::modinv(den % order_, order_), order_);
  return res;
}

std::string Field::to_hex(FieldElement a) const {
  const unsigned width = (m_ + 3) / 4;
  static const char* digits = "0123456789ABCDEF";
  std::string out = "0x";
  for (unsigned i = width; i-- > 0;) out.push_back(digits[(a.bits >> (4 * i)) & 0xF]);
  return out;
}

FieldElement Field::parse_hex(const std::string& text) const {
  std::string_view s{text};
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  if (s.empty() || s.size() > 16) throw std::invalid_argument("malformed hex element: " + text);
  std::uint64_t bits = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), bits, 16);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::invalid_argument("malformed hex element: " + text);
  return element(bits);
}

std::string Field::spec_string() const {
  if (m_ % 4 == 0 && uses_default_modulus()) return "n=" + std::to_string(m_ / 4);
  std::ostringstream os;
  os << "m=" << m_ << ",modulus=0x" << std::uppercase << std::hex << modulus_;
  return os.str();
}

Field make_field(unsigned n, std::optional<std::uint64_t> modulus) {
  if (n < 1 || n > 15) throw std::out_of_range("n must be in [1, 15]");
  if (modulus) return Field(4 * n, *modulus);
  return Field(4 * n);
}

Field field_from_spec(const std::string& spec) {
  unsigned n = 0, m = 0;
  std::optional<std::uint64_t> modulus;
  std::istringstream is(spec);
  std::string part;
  while (std::getline(is, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad field spec: " + spec);
    std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "n")
      n = static_cast<unsigned>(std::stoul(value));
    else if (key == "m")
      m = static_cast<unsigned>(std::stoul(value));
    else if (key == "modulus")
      modulus = std::stoull(value, nullptr, 16);
    else
      throw std::invalid_argument("bad field spec key: " + key);
  }
  if (n != 0 && m != 0) throw std::invalid_argument("field spec must give n or m, not both");
  if (n != 0) return make_field(n, modulus);
  if (m == 0) throw std::invalid_argument("field spec must give n or m");
  if (modulus) return Field(m, *modulus);
  return Field(m);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.field == nullptr || b.field == nullptr) return a.field == b.field && a.bits == b.bits;
  return a.field->same_field(*b.field) && a.bits == b.bits;
}

FieldElement operator+(FieldElement a, FieldElement b) { return add(a, b); }
FieldElement operator*(FieldElement a, FieldElement b) { return mul(a, b); }
FieldElement operator/(FieldElement a, FieldElement b) { return mul(a, inv(b)); }

FieldElement add(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  return {a.field->add_raw(a.bits, b.bits), a.field};
}

FieldElement mul(FieldElement a, FieldElement b) {
  check_same_field(a, b);
  return {a.field->mul_raw(a.bits, b.bits), a.field};
}

FieldElement inv(FieldElement a) {
  const Field& f = field_of(a);
  return {f.inv_raw(a.bits), &f};
}

FieldElement pow(FieldElement a, std::int64_t e) {
  const Field& f = field_of(a);
  if (a.bits == 0) {
    if (e > 0) return f.zero();
    if (e == 0) return f.one();  // 0^0 = 1 by convention
    throw std::domain_error("zero raised to a negative power");
  }
  return {f.pow_raw(a.bits, f.exp_residue(e)), &f};
}

FieldElement frobenius(FieldElement a, unsigned j) {
  const Field& f = field_of(a);
  return {f.frobenius_raw(a.bits, j), &f};
}

FieldElement rel_trace(FieldElement a, unsigned s) {
  return subfield_trace(a, field_of(a).degree(), s);
}

FieldElement rel_norm(FieldElement a, unsigned s) {
  const Field& f = field_of(a);
  if (s < 1 || f.degree() % s != 0)
    throw std::invalid_argument("norm target degree must divide the field degree");
  const std::uint64_t e = f.order() / ((std::uint64_t{1} << s) - 1);
  return {f.pow_raw(a.bits, e), &f};
}

FieldElement sqrt(FieldElement a) {
  const Field& f = field_of(a);
  return {f.sqrt_raw(a.bits), &f};
}

bool in_subfield(FieldElement a, unsigned s) {
  const Field& f = field_of(a);
  if (s < 1 || f.degree() % s != 0)
    throw std::invalid_argument("subfield degree must divide the field degree");
  return f.frobenius_raw(a.bits, s) == a.bits;
}

FieldElement subfield_trace(FieldElement a, unsigned s_hi, unsigned s_lo) {
  const Field& f = field_of(a);
  if (s_hi < 1 || f.degree() % s_hi != 0 || s_lo < 1 || s_hi % s_lo != 0)
    throw std::invalid_argument("trace degrees must form a subfield tower");
  if (!in_subfield(a, s_hi))
    throw std::invalid_argument("trace argument does not lie in the stated subfield");
  std::uint64_t acc = a.bits, cur = a.bits;
  for (unsigned i = 1; i < s_hi / s_lo; ++i) {
    cur = f.frobenius_raw(cur, s_lo);
    acc ^= cur;
  }
  return {acc, &f};
}

}  // namespace diffspec
