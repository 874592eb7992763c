#pragma once

#include <string>
#include <vector>

#include "regmap/coset_enumerator.hpp"

namespace regmap {

// Outcome of one named cross-check. `detail` explains a failure, or
// carries a note on checks that pass vacuously (an absent fixture).
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    EnumOptions enum_options;
    std::string fixture_dir = "fixtures";
    double tolerance = 1e-9;
};

// Sphere maps: traces every map in the spherical census and compares
// curve counts, links, and indices against the frozen aggregates.
std::vector<CheckResult> verify_spherical(const VerifyOptions& options = {});

// Torus maps: checks the lattice computation against the closed-form
// patterns and orders for sides 1..6, and cross-checks sides 1..3 by
// enumerating the presentation and tracing.
std::vector<CheckResult> verify_tori(const VerifyOptions& options = {});

// Surface families: enumerates each family member, compares orders,
// patterns, duals against the census, the matrix models, and mirror
// lengths against their pinned values.
std::vector<CheckResult> verify_families(const VerifyOptions& options = {});

// Oracle sweep: for every built-in map, the flag tracer must agree with
// the classification-based report and respect the mirror-count bound.
std::vector<CheckResult> verify_oracle(const VerifyOptions& options = {});

// Census rows: reproduces every row from its builder or fixture. A row
// whose fixture is absent passes with a note; a disagreeing fixture
// fails.
std::vector<CheckResult> verify_fixtures(const VerifyOptions& options = {});

// All five suites in the order above.
std::vector<CheckResult> verify_all(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

// One line per result: "ok <name>" or "FAIL <name>: <detail>", plus a
// closing "<passed>/<total> checks passed" line.
std::string render_check_results(const std::vector<CheckResult>& results);

}  // namespace regmap
