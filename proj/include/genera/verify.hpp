#pragma once

#include <string>
#include <vector>

namespace genera {

/// One entry of the self-check ledger run by `genera verify-all`.
struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail; // short failure context, empty on success
};

/// Runs every self-check (exact arithmetic, fixed RNG seeds, deterministic
/// order) and returns the ledger.
std::vector<VerifyCheck> run_verification();

} // namespace genera
