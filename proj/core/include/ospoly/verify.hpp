#pragma once

#include "ospoly/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ospoly {

// Desk-scale verification suites.  Randomized checks use fixed seeds, so
// repeated runs produce identical reports byte for byte.
SuiteReport run_casimir_suite(); // ghost-center, Casimir and algebra-structure identities
SuiteReport run_trace_suite();   // functional existence/symmetry/invariance, isotropy, rank
SuiteReport run_ortho_suite();   // Gram patterns, degree laws, mirrors
SuiteReport run_diffeq_suite();  // difference/eigen equations with variant arbitration
SuiteReport run_closed_suite();  // hypergeometric closed forms and leading coefficients
SuiteReport run_matrix_suite();  // finite matrix model as independent oracle

const std::vector<std::string>& suite_names();

// One of the six suites, or "all" for their concatenation (suite = "all").
std::optional<SuiteReport> run_suite(const std::string& name);

} // namespace ospoly
