#pragma once

// Full proof runs assembled from the module certificates.

#include "officers/certificate.hpp"
#include "officers/mols_search.hpp"
#include "officers/parallax.hpp"

namespace officers {

struct VerifyOptions {
  ArithmeticFault fault;
};

// Five steps: Gram rank and dimension bound, dependency count, parallax
// enumeration, exclusions of 2226/3330/3332, the 2222 case.
ProofReport verify_officers(const VerifyOptions& options = {});

// Six steps ending with the net implication; the Bruck-Ryser test for
// order 6 is attached as a note.
ProofReport verify_affine();

// Order 7 stops at the first mate unless asked otherwise; the full scan
// takes several minutes.
OracleOptions default_oracle_options(int order);

struct OracleRun {
  ProofReport report;
  OracleResult result;
};

// Throws UnsupportedError for orders outside 2..7.
OracleRun run_oracle(int order, const OracleOptions& options);

// verify_officers, verify_affine and run_oracle(6), one step each.
ProofReport verify_all(const VerifyOptions& options, const OracleOptions& oracle_options);

}  // namespace officers
