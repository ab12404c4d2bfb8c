#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cccforge/pipeline.hpp"

namespace ccc {

struct CatalogEntryReport {
    std::string file;     // path relative to the catalog root
    std::string source;
    std::string what;     // expanded artifact description
    long long size = 0;
    long long expected = 0;
    int n = 0;
    int d = 0;
    bool optimal_claim = false;
    bool pass = false;
    bool data_gated = false;
    std::string note;
};

struct CatalogReport {
    std::vector<CatalogEntryReport> entries;  // sorted by file name
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t gated = 0;

    bool all_pass() const { return failed == 0; }
};

/// Expand, verify and size-check every recipe under the directory
/// (recursively). Entries are processed in parallel; the report order is
/// by file name. Entries flagged "optimal" must meet u5/u6 exactly.
CatalogReport audit_catalog(const std::filesystem::path& directory);

/// Audit a single file; used by the CLI and by audit_catalog.
CatalogEntryReport audit_entry(const std::filesystem::path& file, const std::filesystem::path& root);

}  // namespace ccc
