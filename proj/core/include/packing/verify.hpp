#pragma once

#include "packing/equivariant.hpp"

#include <string>
#include <vector>

namespace packing {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const;
    void add(std::string name, bool pass, std::string detail = "");
};

/// Named verification suites runnable from the CLI. "all" runs every suite.
const std::vector<std::string>& suite_names();
std::vector<SuiteReport> run_suites(const std::string& name, HomologyEngine& engine,
                                    std::int64_t oracle_cap = 50'000'000);

SuiteReport verify_figure1(HomologyEngine& engine);
SuiteReport verify_examples(HomologyEngine& engine);
SuiteReport verify_linear_strand_segre(HomologyEngine& engine);
SuiteReport verify_linear_strand_veronese();
SuiteReport verify_koszul_oracle(HomologyEngine& engine,
                                 std::int64_t oracle_cap = 50'000'000);
SuiteReport verify_vanishing(HomologyEngine& engine);
SuiteReport verify_stability(HomologyEngine& engine);
SuiteReport verify_les(HomologyEngine& engine);
SuiteReport verify_spectra(HomologyEngine& engine);
SuiteReport verify_structure(HomologyEngine& engine);

}  // namespace packing
