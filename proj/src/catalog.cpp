#include "cccforge/catalog.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "cccforge/bounds.hpp"
#include "cccforge/recipe.hpp"

namespace ccc {

CatalogEntryReport audit_entry(const std::filesystem::path& file, const std::filesystem::path& root) {
    CatalogEntryReport entry;
    entry.file = std::filesystem::relative(file, root).string();
    try {
        json j = load_json(file);
        entry.source = j.value("source", "");
        entry.d = j.value("d", 0);
        entry.expected = j.value("expected_size", 0LL);
        entry.optimal_claim = j.value("optimal", false);
        if (j.value("data_gated", false)) {
            entry.data_gated = true;
            entry.note = "declared without block data; dependent pipelines are gated";
            return entry;
        }

        Artifact artifact = load_catalog_artifact(file);
        const Code* code = nullptr;
        if (std::holds_alternative<Code>(artifact)) {
            code = &std::get<Code>(artifact);
            entry.what = "(" + std::to_string(code->length()) + "," + std::to_string(code->declared_distance) + ") code";
        } else if (std::holds_alternative<Gdc>(artifact)) {
            const Gdc& g = std::get<Gdc>(artifact);
            code = &g.code;
            entry.what = "GDC(" + std::to_string(g.code.declared_distance) + ") type " + g.type_string();
        } else {
            entry.what = "design";
        }
        if (code) {
            entry.n = code->length();
            entry.d = code->declared_distance;
            entry.size = static_cast<long long>(code->size());
            if (entry.expected && entry.size != entry.expected) {
                entry.note = "size " + std::to_string(entry.size) + " != expected " + std::to_string(entry.expected);
                return entry;
            }
            if (entry.optimal_claim) {
                long long bound = entry.d == 5 ? bounds::u5(entry.n) : bounds::u6(entry.n);
                if (entry.size != bound) {
                    entry.note = "optimal claim misses the bound " + std::to_string(bound);
                    return entry;
                }
            }
        }
        entry.pass = true;
    } catch (const std::exception& e) {
        entry.note = e.what();
        if (entry.note.find("missing data file") != std::string::npos) entry.data_gated = true;
    }
    return entry;
}

CatalogReport audit_catalog(const std::filesystem::path& directory) {
    std::vector<std::filesystem::path> files;
    for (const auto& item : std::filesystem::recursive_directory_iterator(directory))
        if (item.is_regular_file() && item.path().extension() == ".json") files.push_back(item.path());
    std::sort(files.begin(), files.end());

    unsigned hw = std::thread::hardware_concurrency();
    const std::size_t threads = std::clamp<std::size_t>(hw ? hw : 1, 1, 8);
    std::vector<std::future<std::vector<CatalogEntryReport>>> parts;
    for (std::size_t t = 0; t < threads; ++t) {
        parts.push_back(std::async(std::launch::async, [&files, &directory, t, threads] {
            std::vector<CatalogEntryReport> local;
            for (std::size_t i = t; i < files.size(); i += threads)
                local.push_back(audit_entry(files[i], directory));
            return local;
        }));
    }

    CatalogReport report;
    for (auto& part : parts)
        for (auto& entry : part.get()) report.entries.push_back(std::move(entry));
    std::sort(report.entries.begin(), report.entries.end(),
              [](const CatalogEntryReport& a, const CatalogEntryReport& b) { return a.file < b.file; });
    for (const auto& entry : report.entries) {
        if (entry.data_gated) ++report.gated;
        else if (entry.pass) ++report.passed;
        else ++report.failed;
    }
    return report;
}

}  // namespace ccc
