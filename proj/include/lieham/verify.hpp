#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lieham::verify {

struct CheckResult {
    std::string id;
    bool pass = false;
    double residual = 0.0;  // 0 for exact checks
    std::string detail;
};

struct Options {
    std::uint64_t seed = 42;
    double tol = 1e-10;
    int points = 50;
    std::string inject;  // fault-injection fixture id ("" = none)
};

std::vector<CheckResult> run_algebra_suite(const Options& opts);
std::vector<CheckResult> run_kks_suite(const Options& opts);
std::vector<CheckResult> run_leaf_suite(const Options& opts);
std::vector<CheckResult> run_group_suite(const Options& opts);
std::vector<CheckResult> run_suite(const std::string& name, const Options& opts);  // + "all"

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace lieham::verify
