#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcx/certificate_io.hpp"
#include "kcx/extractor.hpp"

namespace kcx {

inline constexpr std::uint64_t default_seed = 20240611;

// One randomized or exhaustive check. Passes with at least one trial and no
// failures.
struct Check {
    int criterion = 0;
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::string detail{};  // first failure, or a short note

    bool passed() const { return trials > 0 && failures == 0; }
};

struct SuiteInstance {
    std::string id;
    std::string spec;  // generator spec
    int k = 1;
    PaletteMode mode = PaletteMode::plain;
    int list_size = 0;  // list mode: every vertex gets 0..list_size-1
    std::string expect = "certified";
};

struct InstanceRecord {
    std::string id;
    std::string spec;
    int k = 1;
    PaletteMode mode = PaletteMode::plain;
    std::string expect;
    std::string outcome;  // certified, not_inextensible, resource_limit, contradiction, rejected, error
    std::string detail;
    std::size_t subgraph_order = 0;
    int min_cut = 0;
    std::string evidence;
    std::uint64_t decisions = 0;
    std::uint64_t backtracks = 0;
    bool verified = false;
    bool rechecked = false;    // connectivity and colouring re-derived by the oracles
    std::string certificate;   // serialized certificate, empty if none
    double wall_ms = 0.0;      // human output only

    bool passed() const;
};

struct RunReport {
    std::string suite;
    std::uint64_t seed = default_seed;
    std::vector<InstanceRecord> instances;
    std::vector<Check> checks;

    bool passed() const;
};

// Machine-readable form. Wall times are left out so equal runs give equal
// bytes.
Json to_json(const RunReport& report);
std::string to_text(const RunReport& report);
// One line per instance and check, with wall times.
std::string summary(const RunReport& report);

std::vector<SuiteInstance> theorem1_instances();
std::vector<SuiteInstance> theorem2_instances();
Graph instance_graph(const SuiteInstance& inst);
ExtractConfig instance_config(const SuiteInstance& inst, const Graph& g);
ListAssignment uniform_lists(const Graph& g, int size);
InstanceRecord run_instance(const SuiteInstance& inst);

RunReport run_theorem1();
RunReport run_theorem2();
RunReport run_oracles(std::uint64_t seed = default_seed);
RunReport run_properties(std::uint64_t seed = default_seed);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown name.
RunReport run_suite(const std::string& name, std::uint64_t seed = default_seed);

}  // namespace kcx
