#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffspec/decompose.hpp"
#include "diffspec/field.hpp"

namespace diffspec {

/// Classification of the right-hand side b of x^d + (x+1)^d = b over
/// GF(q^4), d = q^3 + q^2 + q - 1. The four classes partition the field and
/// determine the solution count: q^2, q^2 - q, 2, 0 respectively.
enum class BClass { One, MuQ1NotOne, Lambda, None };

std::string to_string(BClass c);

/// Intermediate values of the Lambda criterion for one b:
///   t  = Tr_{q^2 -> q^4}(b),  nrm = N_{q^2 -> q^4}(b),
///   t' = t + t^q,             n'  = nrm + 1,
/// and the GF(2) value of Tr_{2 -> q}(n'^((q+1)/2) / t').
struct LambdaWitness {
  FieldElement t;
  FieldElement nrm;
  FieldElement t_prime;
  FieldElement n_prime;
  int criterion_bit = 0;
  bool in_lambda = false;
};

enum class SolveMethod { Brute, ClosedConstructive };

std::string to_string(SolveMethod m);

/// All x with x^d + (x+1)^d = b, sorted by encoding.
struct SolutionSet {
  FieldElement b;
  std::vector<FieldElement> solutions;
  SolveMethod method = SolveMethod::Brute;
};

/// d = q^3 + q^2 + q - 1 for the field's q.
std::uint64_t quartic_power_exponent(const Field& field);

/// Roots of x^2 + x + delta in delta's field, found by solving the GF(2)-
/// linear system for x -> x^2 + x in the polynomial basis. Empty iff the
/// absolute trace of delta is 1; otherwise the pair {r, r+1}.
std::vector<FieldElement> solve_artin_schreier(FieldElement delta);

/// Where to look for solutions of x + 1/x = a: the unity-root subgroup
/// (mu_{q+1} resp. mu_{q^2+1}) or the subfield (F_q resp. F_{q^2}).
enum class PhiDomain { UnityRoots, Subfield };

/// Solutions of x + 1/x = a restricted to the requested domain, minus {1}.
/// The level is read off a: a in F_q solves against mu_{q+1} / F_q, a in
/// F_{q^2} (but not F_q) against mu_{q^2+1} / F_{q^2}. Returns 0 or 2
/// elements whose product is 1.
std::vector<FieldElement> solve_x_plus_inv(FieldElement a, PhiDomain domain);

enum class PhiGroup { MuQ2Plus1, FQ2Star, MuQPlus1, FQStar };

/// Image of x -> x + 1/x over the group minus {1}; sorted, deduplicated.
/// Enumerates the group, so capped at n <= 4.
std::vector<FieldElement> image_set_phi(const Field& field, PhiGroup group);

/// |{x in F : Tr(beta x) = 1 and Tr(gamma x) = 1}| by exhaustive scan of
/// beta's field (absolute traces). beta != 0.
std::uint64_t count_trace_system(FieldElement beta, FieldElement gamma);

/// Evaluates the Lambda membership criterion for b; total on the field
/// (b = 0, t' = 0 and n' = 0 all report false without error).
LambdaWitness lambda_condition(FieldElement b);
bool in_lambda(FieldElement b);

/// All b in F* satisfying the Lambda criterion, ascending. Full-field scan,
/// capped at n <= 4; the result has exactly q^3 (q-1) / 2 elements.
std::vector<FieldElement> lambda_enumerate(const Field& field);

BClass classify_b(FieldElement b);

/// Predicted number of solutions of x^d + (x+1)^d = b.
std::uint64_t count_solutions(FieldElement b);

/// Oracle: scans every x in the field. Capped at n <= 4.
SolutionSet brute_force_solutions(FieldElement b);

/// Closed-form solver for b in Lambda: quadratic in the norm/trace data of
/// b^(q^2/2), square roots back to the mu_{q+1} components, Cramer recovery
/// of the remaining components. Returns exactly 2 solutions.
SolutionSet solve_constructive(FieldElement b);

/// The b = 1 solutions that fall outside the generic pair enumeration:
/// x = 0, x = 1, and the q - 2 values x = x1 with x1 and x1 + 1 both in
/// F_q*. Kept separate because this bookkeeping is the easiest place to
/// drop solutions; always returns exactly q elements.
std::vector<FieldElement> mu_case_degenerate_solutions(const Field& field);

/// Constructive solver for b = 1 and b in mu_{q+1} \ {1}: enumerates the
/// F_q* components and recovers the mu_{q^2+1} part per solution. Output
/// grows as q^2, so capped at n <= 8.
SolutionSet solve_mu_case(FieldElement b);

}  // namespace diffspec
