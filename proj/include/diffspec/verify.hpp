#pragma once

#include "diffspec/field.hpp"
#include "diffspec/spectrum.hpp"

namespace diffspec {

/// The one-shot verification bundle behind `verify`: the conjecture checks
/// of verify_conjecture plus the Lambda census, decomposition round-trip,
/// quadratic/trace-system/Phi-image exhaustive suites, and a seeded field
/// axiom spot check. n <= 4 (full-field scans).
VerifyReport run_full_verification(const Field& field, const VerifyOptions& options = {});

}  // namespace diffspec
