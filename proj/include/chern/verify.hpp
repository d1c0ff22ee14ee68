#pragma once

// Runs every bound that applies to a descriptor against its stored oracles.

#include "chern/bounds.hpp"
#include "chern/catalog.hpp"

#include <string>
#include <vector>

namespace chern {

struct VerificationReport {
    std::string descriptor;
    std::vector<BoundReport> reports;

    /// "pass" unless some report is violated.
    bool pass() const;
    std::string overall() const { return pass() ? "pass" : "fail"; }
    /// The first report with this name, or nullptr.
    const BoundReport* find(const std::string& name) const;
};

VerificationReport verify(const SheafDescriptor& d);

/// In catalog order; descriptors are checked in parallel.
std::vector<VerificationReport> verify_all(const std::vector<SheafDescriptor>& catalog);

}  // namespace chern
