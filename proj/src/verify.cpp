#include "diffspec/verify.hpp"

#include <algorithm>
#include <iostream>
#include <random>

#include "diffspec/decompose.hpp"
#include "diffspec/equation.hpp"

namespace diffspec {

namespace {

bool same_elements(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].bits != b[i].bits) return false;
  return true;
}

// {a in F_{2^s}* : Tr_{2 -> 2^s}(1/a) = bit}, ascending.
std::vector<FieldElement> trace_characterized_set(const Field& f, unsigned s, int bit) {
  std::vector<FieldElement> out;
  for (FieldElement a : enumerate_subgroup(f, (std::uint64_t{1} << s) - 1))
    if ((subfield_trace(inv(a), s, 1).is_one() ? 1 : 0) == bit) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_lambda_census(const Field& f, std::string& detail) {
  const std::uint64_t q = f.q();
  const auto lam = lambda_enumerate(f);
  const std::uint64_t expected = q * q * q * (q - 1) / 2;
  if (lam.size() != expected) {
    detail = "got " + std::to_string(lam.size()) + ", expected " + std::to_string(expected);
    return false;
  }
  for (FieldElement b : lam) {
    if (b.is_one() || f.pow_raw(b.bits, q + 1) == 1) {
      detail = "Lambda meets {1} or mu_{q+1} at " + f.to_hex(b);
      return false;
    }
  }
  detail = "size " + std::to_string(expected) + ", disjoint from mu_{q+1}";
  return true;
}

bool check_decomposition(const Field& f, std::string& detail) {
  const std::uint64_t q = f.q();
  for (std::uint64_t bits = 1; bits <= f.order(); ++bits) {
    const FieldElement x{bits, &f};
    const Decomposition dc = decompose(x);
    if (f.pow_raw(dc.x1.bits, q - 1) != 1 || f.pow_raw(dc.x2.bits, q + 1) != 1 ||
        f.pow_raw(dc.x3.bits, q * q + 1) != 1 || recompose(dc) != x) {
      detail = "failed at x = " + f.to_hex(x);
      return false;
    }
  }
  detail = "round-trip and order conditions over F*";
  return true;
}

bool check_artin_schreier(const Field& f, std::string& detail) {
  for (std::uint64_t bits = 0; bits <= f.order(); ++bits) {
    const FieldElement delta{bits, &f};
    const auto roots = solve_artin_schreier(delta);
    const std::size_t expected = rel_trace(delta, 1).is_one() ? 0 : 2;
    if (roots.size() != expected) {
      detail = "wrong root count at delta = " + f.to_hex(delta);
      return false;
    }
    for (FieldElement r : roots) {
      if (r * r + r != delta) {
        detail = "bad root at delta = " + f.to_hex(delta);
        return false;
      }
    }
  }
  detail = "root counts match the trace criterion for every delta";
  return true;
}

bool check_phi_images(const Field& f, std::string& detail) {
  const unsigned n = f.quartic_n();
  const struct {
    PhiGroup group;
    unsigned level;
    int bit;
    const char* name;
  } items[] = {
      {PhiGroup::MuQ2Plus1, 2 * n, 1, "mu_{q^2+1}"},
      {PhiGroup::FQ2Star, 2 * n, 0, "F_{q^2}*"},
      {PhiGroup::MuQPlus1, n, 1, "mu_{q+1}"},
      {PhiGroup::FQStar, n, 0, "F_q*"},
  };
  for (const auto& item : items) {
    if (!same_elements(image_set_phi(f, item.group),
                       trace_characterized_set(f, item.level, item.bit))) {
      detail = std::string("image of ") + item.name + " differs from its trace set";
      return false;
    }
  }
  detail = "all four Phi images match their trace characterizations";
  return true;
}

bool check_x_plus_inv(const Field& f, std::string& detail) {
  const unsigned n = f.quartic_n();
  const std::uint64_t q = f.q();
  // Exhaustively compare the solver output with subgroup/subfield scans at
  // both levels.
  for (unsigned lvl = 0; lvl < 2; ++lvl) {
    const unsigned s = lvl == 0 ? n : 2 * n;
    const std::uint64_t mu_ord = lvl == 0 ? q + 1 : q * q + 1;
    const auto subfield = enumerate_subgroup(f, (std::uint64_t{1} << s) - 1);
    const auto mu = enumerate_subgroup(f, mu_ord);
    for (FieldElement a : subfield) {
      if (lvl == 1 && in_subfield(a, n)) continue;  // level is read off a
      std::vector<FieldElement> want_mu, want_sub;
      for (FieldElement x : mu)
        if (!x.is_one() && x + inv(x) == a) want_mu.push_back(x);
      for (FieldElement x : subfield)
        if (!x.is_one() && x + inv(x) == a) want_sub.push_back(x);
      std::sort(want_mu.begin(), want_mu.end());
      std::sort(want_sub.begin(), want_sub.end());
      if (!same_elements(solve_x_plus_inv(a, PhiDomain::UnityRoots), want_mu) ||
          !same_elements(solve_x_plus_inv(a, PhiDomain::Subfield), want_sub)) {
        detail = "solver disagrees with scan at a = " + f.to_hex(a);
        return false;
      }
    }
  }
  detail = "solver matches subgroup and subfield scans at both levels";
  return true;
}

bool check_trace_system(unsigned n, std::string& detail) {
  const Field fq(n);
  const std::uint64_t q = fq.size();
  for (std::uint64_t beta = 1; beta < q; ++beta) {
    for (std::uint64_t gamma = 0; gamma < q; ++gamma) {
      const std::uint64_t got = count_trace_system({beta, &fq}, {gamma, &fq});
      const std::uint64_t expected = gamma == 0 ? 0 : (gamma == beta ? q / 2 : q / 4);
      if (got != expected) {
        detail = "wrong count at beta = " + std::to_string(beta) +
                 ", gamma = " + std::to_string(gamma);
        return false;
      }
    }
  }
  detail = "all (beta, gamma) pairs match the closed form in GF(2^" + std::to_string(n) + ")";
  return true;
}

bool check_axioms(const Field& f, std::uint64_t seed, std::string& detail) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.order());
  auto el = [&] { return FieldElement{dist(rng), &f}; };
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = el(), b = el(), c = el();
    if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c) || a * b != b * a ||
        a * (b + c) != a * b + a * c) {
      detail = "axiom failed on a sampled triple";
      return false;
    }
    if (!a.is_zero() && (a * inv(a) != f.one() || pow(a, static_cast<std::int64_t>(f.order())) != f.one())) {
      detail = "inverse or Lagrange failed on a sample";
      return false;
    }
    if (frobenius(a + b, 1) != frobenius(a, 1) + frobenius(b, 1) ||
        frobenius(a * b, 1) != frobenius(a, 1) * frobenius(b, 1)) {
      detail = "Frobenius is not a homomorphism on a sample";
      return false;
    }
  }
  detail = "200 seeded samples";
  return true;
}

}  // namespace

VerifyReport run_full_verification(const Field& field, const VerifyOptions& options) {
  const unsigned n = field.quartic_n();
  if (n > 4) throw ResourceError("full verification scans the field; needs n <= 4");

  VerifyReport report = verify_conjecture(field, options);
  auto run = [&](const char* name, auto&& fn) {
    if (options.progress) std::cerr << "verify: " << name << "\n";
    std::string detail;
    const bool ok = fn(detail);
    report.checks.push_back({name, ok, detail});
    if (!ok) report.discrepancies.push_back(std::string(name) + ": " + detail);
  };

  run("lambda_census", [&](std::string& d) { return check_lambda_census(field, d); });
  run("decomposition_roundtrip", [&](std::string& d) { return check_decomposition(field, d); });
  run("artin_schreier_roots", [&](std::string& d) { return check_artin_schreier(field, d); });
  run("phi_images", [&](std::string& d) { return check_phi_images(field, d); });
  run("x_plus_inv_solver", [&](std::string& d) { return check_x_plus_inv(field, d); });
  run("trace_system_counts", [&](std::string& d) { return check_trace_system(n, d); });
  run("field_axioms_spot", [&](std::string& d) { return check_axioms(field, options.seed, d); });
  return report;
}

}  // namespace diffspec
