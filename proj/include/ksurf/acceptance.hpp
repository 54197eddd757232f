#ifndef KSURF_ACCEPTANCE_HPP
#define KSURF_ACCEPTANCE_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace ksurf
{

struct CriterionResult
{
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

// KSURF_DATA_DIR from the environment if set, else the source-tree data/
// directory compiled in.
std::filesystem::path default_data_dir();

// Runs every acceptance criterion against the shipped configs under
// data_dir/series. Exceptions inside a criterion are reported as failures.
std::vector<CriterionResult> run_acceptance(const std::filesystem::path &data_dir);

} // namespace ksurf

#endif
