#include "diffspec/spectrum.hpp"

#include <atomic>
#include <iostream>
#include <memory>
#include <thread>

#include "diffspec/decompose.hpp"
#include "diffspec/equation.hpp"

namespace diffspec {

namespace {

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

SpectrumHistogram histogram_from_counts(const Field& field, std::uint64_t d,
                                        const std::vector<std::uint32_t>& counts) {
  SpectrumHistogram h;
  h.m = field.degree();
  h.d = d;
  for (std::uint32_t c : counts) ++h.w[c];
  h.delta_f = diff_uniformity(h);
  return h;
}

}  // namespace

void validate_histogram(const SpectrumHistogram& h) {
  const std::uint64_t size = std::uint64_t{1} << h.m;
  std::uint64_t total = 0, weighted = 0;
  for (const auto& [i, wi] : h.w) {
    if (wi == 0) continue;
    if (i % 2 != 0) throw InternalError("spectrum key " + std::to_string(i) + " is odd");
    total += wi;
    weighted += i * wi;
  }
  if (total != size) throw InternalError("spectrum does not classify every b");
  if (weighted != size) throw InternalError("spectrum does not account for every x");
}

std::uint64_t diff_uniformity(const SpectrumHistogram& h) {
  std::uint64_t best = 0;
  for (const auto& [i, wi] : h.w)
    if (i > 0 && wi > 0) best = std::max(best, i);
  if (best == 0) throw std::invalid_argument("histogram has no populated positive bin");
  return best;
}

std::vector<std::uint32_t> per_b_solution_counts(const Field& field, std::uint64_t d,
                                                 unsigned jobs) {
  const unsigned m = field.degree();
  if (m > 24) throw ResourceError("full-field spectrum scan needs m <= 24");
  const std::uint64_t size = std::uint64_t{1} << m;
  const std::uint64_t ord = field.order();

  // Power table x -> x^d built along the generator walk: one multiply per
  // element instead of a full exponentiation.
  std::vector<std::uint32_t> pd(size);
  pd[0] = d == 0 ? 1 : 0;
  const std::uint64_t g = field.generator().bits;
  const std::uint64_t gd = field.pow_raw(g, d % ord);
  std::uint64_t cur = 1, curd = 1;
  for (std::uint64_t i = 0; i < ord; ++i) {
    pd[cur] = static_cast<std::uint32_t>(curd);
    cur = field.mul_raw(cur, g);
    curd = field.mul_raw(curd, gd);
  }

  // Counts merge by addition, so the result does not depend on how the
  // x-range is split across workers.
  std::unique_ptr<std::atomic<std::uint32_t>[]> counts(new std::atomic<std::uint32_t>[size]);
  for (std::uint64_t i = 0; i < size; ++i) counts[i].store(0, std::memory_order_relaxed);

  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_jobs(jobs), size));
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t x = lo; x < hi; ++x)
      counts[pd[x] ^ pd[x ^ 1]].fetch_add(1, std::memory_order_relaxed);
  };
  if (workers <= 1) {
    scan(0, size);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (size + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(size, lo + chunk);
      if (lo < hi) pool.emplace_back(scan, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint32_t> out(size);
  for (std::uint64_t i = 0; i < size; ++i) out[i] = counts[i].load(std::memory_order_relaxed);
  return out;
}

SpectrumHistogram brute_spectrum(const Field& field, std::uint64_t d, unsigned jobs) {
  return histogram_from_counts(field, d, per_b_solution_counts(field, d, jobs));
}

SpectrumHistogram closed_form_spectrum(const Field& field) {
  const std::uint64_t q = field.q();
  SpectrumHistogram h;
  h.m = field.degree();
  h.d = quartic_power_exponent(field);
  h.w[0] += (q * q * q / 2 - 1) * (q + 1);
  h.w[2] += q * q * q * (q - 1) / 2;
  h.w[q * q - q] += q;
  h.w[q * q] += 1;
  h.delta_f = q * q;
  validate_histogram(h);
  return h;
}

VerifyReport verify_conjecture(const Field& field, const VerifyOptions& options) {
  const unsigned n = field.quartic_n();
  if (n > 4) throw ResourceError("conjecture verification scans the field; needs n <= 4");
  const std::uint64_t q = field.q();
  const std::uint64_t d = quartic_power_exponent(field);

  VerifyReport report;
  auto check = [&report](const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
    if (!pass) report.discrepancies.push_back(name + ": " + detail);
  };
  auto progress = [&](const std::string& msg) {
    if (options.progress) std::cerr << "verify: " << msg << "\n";
  };

  progress("scanning x^d + (x+1)^d over the field");
  const std::vector<std::uint32_t> counts = per_b_solution_counts(field, d, options.jobs);
  SpectrumHistogram brute = histogram_from_counts(field, d, counts);
  SpectrumHistogram closed = closed_form_spectrum(field);
  if (options.inject_fault) {
    closed.w[0] -= 1;
    closed.w[2] += 1;
  }
  check("spectrum_histogram", brute == closed,
        brute == closed ? "closed form matches brute force"
                        : "closed form differs from brute force");

  progress("classifying every b");
  bool unique_full = true, mu_fibers = true, rest_ok = true;
  std::string unique_detail, mu_detail, rest_detail;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << field.degree()); ++bits) {
    const FieldElement b{bits, &field};
    const std::uint32_t got = counts[bits];
    if ((got == q * q) != (bits == 1) && unique_full) {
      unique_full = false;
      unique_detail = "b = " + field.to_hex(b);
    }
    const bool in_mu = bits != 0 && bits != 1 && field.pow_raw(bits, q + 1) == 1;
    if (in_mu && got != q * q - q && mu_fibers) {
      mu_fibers = false;
      mu_detail = "b = " + field.to_hex(b);
    }
    if (!in_mu && bits != 1) {
      const bool lam = in_lambda(b);
      if ((got != 0 && got != 2) || (got == 2) != lam) {
        if (rest_ok) {
          rest_ok = false;
          rest_detail = "b = " + field.to_hex(b);
        }
      }
    }
  }
  check("unique_q2_fiber", unique_full,
        unique_full ? "only b = 1 has q^2 solutions" : "wrong fiber at " + unique_detail);
  check("mu_fibers", mu_fibers,
        mu_fibers ? "every b in mu_{q+1} \\ {1} has q^2 - q solutions"
                  : "wrong fiber at " + mu_detail);
  check("remaining_fibers", rest_ok,
        rest_ok ? "all other b have 0 or 2 solutions, 2 exactly on Lambda"
                : "wrong fiber at " + rest_detail);
  return report;
}

}  // namespace diffspec
