#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dcolor/drift.hpp"

namespace dcolor {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptOptions {
    std::size_t threads = 0;
    // Potential under test for the drift and gadget criteria; defaults to
    // monochromatic_component_count.
    PhiFunction phi;
    // Receives one line per criterion as soon as it finishes.
    std::ostream* progress = nullptr;
};

// clique (AC-1, AC-2), per-vertex (AC-3), bipartite (AC-4), drift (AC-5, AC-7),
// adversarial (AC-6), mimic (AC-8), fig2 (AC-9), coherence (AC-10), all.
const std::vector<std::string>& acceptance_suites();

// Runs the criteria of a suite with their pinned seeds and tolerances.
// Throws std::invalid_argument for an unknown suite.
std::vector<CriterionResult> run_acceptance(std::string_view suite, const AcceptOptions& options = {});

std::string format_criterion(const CriterionResult& r);

// Report body plus a closing sign-off line carrying an FNV-1a digest of the
// body.
std::string format_acceptance_report(std::string_view suite, const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results) noexcept;

}  // namespace dcolor
