#pragma once

/// @file verify.hpp
/// The one-shot verification suite: nine end-to-end checks covering the
/// fusion oracle, the evidence-driven extension-ring derivation, the
/// grading/automorphism results, the Fock/character cross-oracles, the
/// conformal triple, the branching solve and the property spot checks.
/// Shared by the CLI's verify-all command and the acceptance runner.

#include "potts/fock/evidence.hpp"
#include "potts/fusion/sandwich.hpp"

#include <string>
#include <variant>
#include <vector>

namespace potts {

struct VerifyCheck {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // failure explanation (empty on pass)
    double seconds = 0.0;
};

/// Runs all nine checks in order; never throws (failures and exceptions
/// are reported per check).  A TruncationError is recorded verbatim with
/// the prefix "truncation:" in the detail so callers can map it to the
/// resource exit code.
std::vector<VerifyCheck> run_verification_suite();

/// End-to-end derivation of the extension table from Fock-space evidence:
/// runs the conformal triple search, the evidence computations, and the
/// bounds+evidence solver against the base ring.  Evidence items whose id
/// appears in `drop_ids` are withheld from the solver.
struct TableBDerivation {
    std::vector<fock::EvidenceOutcome> items;  // with established flags
    std::variant<fusion::FusionRing, fusion::AmbiguityReport> result;
};
TableBDerivation derive_table_b(const std::vector<std::string>& drop_ids,
                                const fock::Cutoff& cutoff);

}  // namespace potts
