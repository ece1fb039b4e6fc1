#pragma once

#include "parhol/classify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace parhol {

struct Failure {
    std::string entry;
    std::string detail;
    bool operator==(const Failure&) const = default;
};

struct VerificationSummary {
    std::string suite;
    long entries_checked = 0;
    std::vector<Failure> failures;  // empty <=> suite passed
    Bounds bounds;
    double wall_seconds = 0;
    std::vector<std::string> notes;

    bool ok() const { return failures.empty(); }
    bool operator==(const VerificationSummary&) const = default;
};

// Like normal_holonomy, but when dimension-and-type matching leaves
// several candidates, builds the matrix model of m and disambiguates with
// its effective slice dimension.
HSSDescriptor holonomy_with_certificate(const Submanifold& m,
                                        const Bounds& bounds = {});

// Table 2: first_codim agrees with the closed forms on every entry.
VerificationSummary verify_table2(const Bounds& bounds = {});

// Table 1: the computed normal holonomy of every row's orbit equals the
// stored column-3 space, and the orbit dimensions are consistent, across
// parameter sweeps.
VerificationSummary verify_table1(const Bounds& bounds = {});

// Rank >= 3 exclusions: every scan entry has an empty candidate list.
VerificationSummary verify_para(const Bounds& bounds = {});

// Codimension inequality codim(f_d) > m(m+1)/2 for d = 2,3 on rank >= 2
// entries and d = 3..5 on CP^n, n <= 4; also the weak second-embedding
// bound, with equality cases noted.
VerificationSummary verify_alto(const Bounds& bounds = {});

// Matrix-model certificates on the four classical orbit families.
VerificationSummary verify_orbits(const Bounds& bounds = {});

std::vector<VerificationSummary> verify_all(const Bounds& bounds = {});

nlohmann::json to_json(const VerificationSummary& s);
VerificationSummary summary_from_json(const nlohmann::json& j);

}  // namespace parhol
