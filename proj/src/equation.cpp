#include "diffspec/equation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace diffspec {

namespace {

const Field& field_of(FieldElement a) {
  if (a.field == nullptr) throw std::invalid_argument("field element has no field context");
  return *a.field;
}

void append_sorted_unique(std::vector<FieldElement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end(),
                      [](FieldElement a, FieldElement b) { return a.bits == b.bits; }),
          v.end());
}

// x^d + (x+1)^d over raw encodings.
std::uint64_t eq_lhs(const Field& f, std::uint64_t x, std::uint64_t d) {
  return f.pow_raw(x, d) ^ f.pow_raw(x ^ 1, d);
}

void require_solution_set(const Field& f, const SolutionSet& s, std::uint64_t expected) {
  const std::uint64_t d = quartic_power_exponent(f);
  if (s.solutions.size() != expected)
    throw InternalError("constructive solver produced " + std::to_string(s.solutions.size()) +
                        " solutions, expected " + std::to_string(expected));
  for (FieldElement x : s.solutions)
    if (eq_lhs(f, x.bits, d) != s.b.bits)
      throw InternalError("constructive solver produced a non-solution");
}

}  // namespace

std::string to_string(BClass c) {
  switch (c) {
    case BClass::One: return "ONE";
    case BClass::MuQ1NotOne: return "MU_Q1_NOT_ONE";
    case BClass::Lambda: return "LAMBDA";
    case BClass::None: return "NONE";
  }
  return "?";
}

std::string to_string(SolveMethod m) {
  return m == SolveMethod::Brute ? "BRUTE" : "CLOSED_CONSTRUCTIVE";
}

std::uint64_t quartic_power_exponent(const Field& field) {
  const std::uint64_t q = field.q();
  return q * q * q + q * q + q - 1;
}

std::vector<FieldElement> solve_artin_schreier(FieldElement delta) {
  const Field& f = field_of(delta);
  const unsigned m = f.degree();

  // Row-reduce the columns of L(x) = x^2 + x on the fly: basis[j] holds a
  // reduced image with leading bit j together with its preimage.
  std::array<std::uint64_t, 64> img{}, pre{};
  std::array<bool, 64> have{};
  for (unsigned i = 0; i < m; ++i) {
    std::uint64_t e = std::uint64_t{1} << i;
    std::uint64_t v = f.sqr_raw(e) ^ e;
    std::uint64_t p = e;
    for (int bit = static_cast<int>(m) - 1; bit >= 0 && v != 0; --bit) {
      if (((v >> bit) & 1) == 0) continue;
      if (have[bit]) {
        v ^= img[bit];
        p ^= pre[bit];
      } else {
        have[bit] = true;
        img[bit] = v;
        pre[bit] = p;
        break;
      }
    }
  }

  std::uint64_t v = delta.bits, root = 0;
  for (int bit = static_cast<int>(m) - 1; bit >= 0 && v != 0; --bit) {
    if (((v >> bit) & 1) == 0) continue;
    if (!have[bit]) return {};  // delta outside the image: absolute trace 1
    v ^= img[bit];
    root ^= pre[bit];
  }
  std::vector<FieldElement> out{{root, &f}, {root ^ 1, &f}};
  append_sorted_unique(out);
  return out;
}

std::vector<FieldElement> solve_x_plus_inv(FieldElement a, PhiDomain domain) {
  const Field& f = field_of(a);
  if (a.is_zero()) throw std::domain_error("x + 1/x = a requires a != 0");
  const unsigned n = f.quartic_n();
  const std::uint64_t q = f.q();

  unsigned level;  // subfield degree where a lives
  std::uint64_t mu_order;
  if (in_subfield(a, n)) {
    level = n;
    mu_order = q + 1;
  } else if (in_subfield(a, 2 * n)) {
    level = 2 * n;
    mu_order = q * q + 1;
  } else {
    throw std::invalid_argument("a must lie in F_q or F_{q^2}");
  }

  // x + 1/x = a  <=>  x^2 + a x + 1 = 0; substitute x = a u to reach
  // u^2 + u + 1/a^2 = 0 and map roots back.
  FieldElement delta = inv(a * a);
  std::vector<FieldElement> out;
  for (FieldElement u : solve_artin_schreier(delta)) {
    FieldElement x = a * u;
    if (x.is_zero() || x.is_one()) continue;
    const bool keep = domain == PhiDomain::UnityRoots ? f.pow_raw(x.bits, mu_order) == 1
                                                      : in_subfield(x, level);
    if (keep) out.push_back(x);
  }
  append_sorted_unique(out);
  return out;
}

std::vector<FieldElement> image_set_phi(const Field& field, PhiGroup group) {
  const unsigned n = field.quartic_n();
  if (n > 4) throw ResourceError("image_set_phi enumerates the group; needs n <= 4");
  const std::uint64_t q = field.q();
  std::uint64_t s = 0;
  switch (group) {
    case PhiGroup::MuQ2Plus1: s = q * q + 1; break;
    case PhiGroup::FQ2Star: s = q * q - 1; break;
    case PhiGroup::MuQPlus1: s = q + 1; break;
    case PhiGroup::FQStar: s = q - 1; break;
  }
  std::vector<FieldElement> out;
  if (s == 0) return out;  // F_2* \ {1} is empty at q = 2
  for (FieldElement x : enumerate_subgroup(field, s)) {
    if (x.is_one()) continue;
    out.push_back(x + inv(x));
  }
  append_sorted_unique(out);
  return out;
}

std::uint64_t count_trace_system(FieldElement beta, FieldElement gamma) {
  const Field& f = field_of(beta);
  if (gamma.field == nullptr || !f.same_field(*gamma.field))
    throw std::invalid_argument("field context mismatch");
  if (beta.is_zero()) throw std::domain_error("count_trace_system requires beta != 0");
  const unsigned m = f.degree();
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    if (rel_trace({f.mul_raw(beta.bits, x), &f}, 1).is_one() &&
        rel_trace({f.mul_raw(gamma.bits, x), &f}, 1).is_one())
      ++count;
  }
  return count;
}

LambdaWitness lambda_condition(FieldElement b) {
  const Field& f = field_of(b);
  const unsigned n = f.quartic_n();
  const std::uint64_t q = f.q();

  LambdaWitness w;
  w.t = b + frobenius(b, 2 * n);        // Tr_{q^2 -> q^4}(b)
  w.nrm = b * frobenius(b, 2 * n);      // N_{q^2 -> q^4}(b)
  w.t_prime = w.t + frobenius(w.t, n);  // lands in F_q
  w.n_prime = w.nrm + f.one();
  if (w.t_prime.is_zero() || w.n_prime.is_zero()) return w;

  // n'^((q+1)/2) / t' lies in F_q; the half power is sqrt of the q+1 power.
  FieldElement val = sqrt(pow(w.n_prime, static_cast<std::int64_t>(q + 1))) / w.t_prime;
  if (!in_subfield(val, n)) throw InternalError("Lambda criterion value escaped F_q");
  w.criterion_bit = subfield_trace(val, n, 1).is_one() ? 1 : 0;
  w.in_lambda = w.criterion_bit == 1;
  return w;
}

bool in_lambda(FieldElement b) { return lambda_condition(b).in_lambda; }

std::vector<FieldElement> lambda_enumerate(const Field& field) {
  const unsigned n = field.quartic_n();
  if (n > 4) throw ResourceError("lambda_enumerate scans the field; needs n <= 4");
  std::vector<FieldElement> out;
  for (std::uint64_t bits = 1; bits <= field.order(); ++bits) {
    FieldElement b{bits, &field};
    if (in_lambda(b)) out.push_back(b);
  }
  return out;
}

BClass classify_b(FieldElement b) {
  const Field& f = field_of(b);
  const std::uint64_t q = f.q();
  if (b.is_one()) return BClass::One;
  if (!b.is_zero() && f.pow_raw(b.bits, q + 1) == 1) return BClass::MuQ1NotOne;
  if (in_lambda(b)) return BClass::Lambda;
  return BClass::None;
}

std::uint64_t count_solutions(FieldElement b) {
  const std::uint64_t q = field_of(b).q();
  switch (classify_b(b)) {
    case BClass::One: return q * q;
    case BClass::MuQ1NotOne: return q * q - q;
    case BClass::Lambda: return 2;
    case BClass::None: return 0;
  }
  return 0;
}

SolutionSet brute_force_solutions(FieldElement b) {
  const Field& f = field_of(b);
  if (f.quartic_n() > 4) throw ResourceError("brute-force solve scans the field; needs n <= 4");
  const std::uint64_t d = quartic_power_exponent(f);
  SolutionSet s{b, {}, SolveMethod::Brute};
  for (std::uint64_t x = 0; x <= f.order(); ++x)
    if (eq_lhs(f, x, d) == b.bits) s.solutions.push_back({x, &f});
  return s;
}

SolutionSet solve_constructive(FieldElement b) {
  const Field& f = field_of(b);
  if (classify_b(b) != BClass::Lambda)
    throw std::invalid_argument("solve_constructive requires b in Lambda");
  const unsigned n = f.quartic_n();
  const std::uint64_t q = f.q();
  const DecompExponents E = decomp_exponents(f);

  const FieldElement bp = frobenius(b, 2 * n - 1);  // b^(q^2/2)
  const FieldElement t = bp + frobenius(bp, 2 * n);
  const FieldElement nrm = bp * frobenius(bp, 2 * n);
  const FieldElement tp = t + frobenius(t, n);
  const FieldElement np = nrm + f.one();
  if (tp.is_zero() || np.is_zero()) throw InternalError("Lambda data degenerate for b in Lambda");

  // n' z^2 + t' z + n'^q = 0, normalized to w^2 + w + n'^(q+1)/t'^2 = 0
  // with w = (n'/t') z.
  const FieldElement delta = pow(np, static_cast<std::int64_t>(q + 1)) / (tp * tp);
  const std::vector<FieldElement> ws = solve_artin_schreier(delta);
  if (ws.size() != 2) throw InternalError("normalized quadratic did not split");
  const FieldElement ratio = tp / np;
  const FieldElement z1 = ratio * ws[0];
  const FieldElement z2 = ratio * ws[1];
  if (f.pow_raw(z1.bits, q + 1) != 1 || f.pow_raw(z2.bits, q + 1) != 1)
    throw InternalError("quadratic roots escaped mu_{q+1} for b in Lambda");

  const FieldElement x2 = sqrt(z1);
  const FieldElement y2 = sqrt(z2);
  const FieldElement den = x2 / y2 + y2 / x2;
  const FieldElement S = (y2 * bp + inv(y2)) / den;
  const FieldElement T = (x2 * bp + inv(x2)) / den;
  if (S.is_zero() || T.is_zero()) throw InternalError("Cramer numerator vanished for b in Lambda");
  if (f.pow_raw(S.bits, E.n2) != 1 || f.pow_raw(T.bits, E.n2) != 1)
    throw InternalError("side condition S^n2 = T^n2 = 1 failed");

  const FieldElement x = FieldElement{f.pow_raw(S.bits, E.n1), &f} * x2 *
                         FieldElement{f.pow_raw(S.bits, E.n3), &f};
  const FieldElement y = FieldElement{f.pow_raw(T.bits, E.n1), &f} * y2 *
                         FieldElement{f.pow_raw(T.bits, E.n3), &f};
  if ((x + y) != f.one()) throw InternalError("constructed pair does not satisfy x + y = 1");

  SolutionSet s{b, {x, y}, SolveMethod::ClosedConstructive};
  append_sorted_unique(s.solutions);
  require_solution_set(f, s, 2);
  return s;
}

std::vector<FieldElement> mu_case_degenerate_solutions(const Field& field) {
  // x = 0 and x = 1 solve directly; the x2 = y2 = x3 = y3 = 1 branch
  // contributes the pairs x1 + y1 = 1 in F_q* x F_q*, i.e. x = x1 for x1
  // outside {0, 1}.
  std::vector<FieldElement> out{field.zero(), field.one()};
  for (FieldElement x1 : enumerate_subgroup(field, field.q() - 1))
    if (!x1.is_one()) out.push_back(x1);
  return out;
}

SolutionSet solve_mu_case(FieldElement b) {
  const Field& f = field_of(b);
  const BClass cls = classify_b(b);
  if (cls != BClass::One && cls != BClass::MuQ1NotOne)
    throw std::invalid_argument("solve_mu_case requires b = 1 or b in mu_{q+1} \\ {1}");
  const unsigned n = f.quartic_n();
  if (n > 8) throw ResourceError("mu-case solution lists grow as q^2; needs n <= 8");
  const std::uint64_t q = f.q();
  const DecompExponents E = decomp_exponents(f);

  const FieldElement bp = frobenius(b, 2 * n - 1);  // b^(q^2/2), stays in mu_{q+1}
  if (f.pow_raw(bp.bits, q + 1) != 1) throw InternalError("b' escaped mu_{q+1}");
  const FieldElement bpp = sqrt(bp);
  const FieldElement x2 = inv(bpp);  // shared mu_{q+1} component x2 = y2 = b'^(-1/2)

  SolutionSet s{b, {}, SolveMethod::ClosedConstructive};
  const std::vector<FieldElement> fq_star = enumerate_subgroup(f, q - 1);

  if (cls == BClass::One) {
    s.solutions = mu_case_degenerate_solutions(f);
    // Distinct x2 != y2 in mu_{q+1} \ {1}: with b' = 1 the component
    // quadratic is trivial, so every ordered pair yields one solution.
    const std::vector<FieldElement> mu = enumerate_subgroup(f, q + 1);
    for (FieldElement a2 : mu) {
      if (a2.is_one()) continue;
      for (FieldElement b2 : mu) {
        if (b2.is_one() || b2 == a2) continue;
        const FieldElement den = a2 / b2 + b2 / a2;
        const FieldElement S = (b2 * bp + inv(b2)) / den;
        const FieldElement T = (a2 * bp + inv(a2)) / den;
        if (f.pow_raw(S.bits, E.n2) != 1 || f.pow_raw(T.bits, E.n2) != 1)
          throw InternalError("side condition failed in the b = 1 pair branch");
        const FieldElement x = FieldElement{f.pow_raw(S.bits, E.n1), &f} * a2 *
                               FieldElement{f.pow_raw(S.bits, E.n3), &f};
        s.solutions.push_back(x);
      }
    }
  } else {
    // b'' lies outside F_q, so x1 x3 + y1 y3 = b'' forces x3 + 1/x3 =
    // (x1 + y1 + b'')^2 / (x1 b'') with roots in mu_{q^2+1} \ {1}. Pairs
    // with x1 + y1 = 1 make that value land in F_q and contribute nothing.
    for (FieldElement x1 : fq_star) {
      for (FieldElement y1 : fq_star) {
        const FieldElement z1 = x1 + y1;
        if (z1.is_one()) continue;
        const FieldElement a = (z1 + bpp) * (z1 + bpp) / (x1 * bpp);
        for (FieldElement x3 : solve_x_plus_inv(a, PhiDomain::UnityRoots)) {
          const FieldElement y3 = (x1 * x3 + bpp) / y1;
          if (f.pow_raw(y3.bits, q * q + 1) != 1)
            throw InternalError("recovered y3 escaped mu_{q^2+1}");
          s.solutions.push_back(x1 * x2 * x3);
        }
      }
    }
  }

  append_sorted_unique(s.solutions);
  require_solution_set(f, s, count_solutions(b));
  return s;
}

}  // namespace diffspec
