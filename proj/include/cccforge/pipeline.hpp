#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cccforge/code.hpp"
#include "cccforge/designs.hpp"
#include "cccforge/io.hpp"

namespace ccc {

using Artifact = std::variant<Code, Gdc, BlockDesign>;

struct StepReport {
    std::string name;
    std::string op;
    std::string what;  // human-readable result: kind, type, size
    long long size = 0;
    bool pass = false;
    std::string note;
};

struct PipelineReport {
    std::string name;
    std::vector<StepReport> steps;
    bool pass = false;
    bool data_gated = false;  // a referenced data file is absent
    std::string note;
};

struct PipelineResult {
    PipelineReport report;
    std::map<std::string, Artifact> artifacts;
};

/// Execute a declarative pipeline: named steps referencing earlier
/// outputs, every intermediate artifact re-verified. File references
/// resolve against data_root. When out_dir is nonempty every code/gdc
/// artifact is written there in the canonical format.
PipelineResult run_pipeline(const json& spec, const std::filesystem::path& data_root,
                            const std::filesystem::path& out_dir = {});

/// Load any catalog entry: a canonical code file, a code/gdc recipe
/// (expanded), or a starter recipe (run through the Room construction to
/// the derived code). The artifact is verified before it is returned.
Artifact load_catalog_artifact(const std::filesystem::path& path);

/// Parse "12^4 9^1" into the sorted size multiset {9,12,12,12,12}.
std::vector<int> parse_type_string(const std::string& text);

}  // namespace ccc
