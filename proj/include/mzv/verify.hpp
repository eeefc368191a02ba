#ifndef MZV_VERIFY_HPP
#define MZV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mzv {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // first counterexample when failing
};

struct VerifyOptions {
    int max_weight = 8;   // exhaustive word bound W
    int n_max = 5;        // operator index bound
    // commutator and ad-power cross-checks are scheduled so composite output
    // weight stays <= comm_output_cap; raise it to run the full-depth checks
    int comm_output_cap = 12;
    int keyprop_weight = 5;
    int keyprop_nmax = 4;
    int jobs = 0;
    std::uint64_t seed = 0;
};

std::vector<CheckResult> suite_core(const VerifyOptions& opts);
std::vector<CheckResult> suite_operators(const VerifyOptions& opts);
std::vector<CheckResult> suite_keyprop(const VerifyOptions& opts);
std::vector<CheckResult> suite_inclusion(const VerifyOptions& opts, const std::vector<int>& weights);
std::vector<CheckResult> suite_appendix(const VerifyOptions& opts);

// name in {core, operators, keyprop, inclusion, appendix, all}
std::vector<CheckResult> run_suite(const std::string& name, const VerifyOptions& opts);

} // namespace mzv

#endif
