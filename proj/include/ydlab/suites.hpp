#pragma once

#include "ydlab/aqg.hpp"
#include "ydlab/catalog.hpp"
#include "ydlab/model_io.hpp"

namespace ydlab {

enum class SuiteFormat { Text, Structured };

/// Batch verification request. Unknown suite names are rejected before any
/// computation; reports are deterministic for identical inputs.
struct SuiteSpec {
    std::string suite;  // hopf | pairing | constructions | yd | heisenberg-double | aqg | all
    std::string catalog;
    std::string file;
    SuiteFormat format = SuiteFormat::Text;
    int max_order = 6;
};

struct SuiteOutcome {
    int exit_code = 0;  // 0 pass, 1 failed checks, 2 usage or parse error
    std::string text;
};

bool suite_name_known(const std::string& name);

SuiteOutcome run_suite(const SuiteSpec& spec);

// Per-suite drivers, reusable from the acceptance harness.
std::vector<std::pair<std::string, Report>> suite_hopf(const FiniteGroup& G);
std::vector<std::pair<std::string, Report>> suite_pairing(const FiniteGroup& G);
std::vector<std::pair<std::string, Report>> suite_constructions(const FiniteGroup& G);
std::vector<std::pair<std::string, Report>> suite_yd(const GroupAction& act);
std::vector<std::pair<std::string, Report>> suite_heisenberg_double(const FiniteGroup& G);
std::vector<std::pair<std::string, Report>> suite_aqg(const GroupAction& act);

} // namespace ydlab
