#include "cccforge/code.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ccc {

void Code::normalize() {
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
}

std::vector<int> Gdc::type() const {
    std::vector<int> sizes;
    sizes.reserve(groups.size());
    for (const auto& g : groups) sizes.push_back(static_cast<int>(g.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string Gdc::type_string() const {
    std::map<int, int, std::greater<int>> mult;
    for (const auto& g : groups) ++mult[static_cast<int>(g.size())];
    std::ostringstream out;
    bool first = true;
    for (auto [size, count] : mult) {
        if (!first) out << ' ';
        out << size << '^' << count;
        first = false;
    }
    return out.str();
}

std::string VerificationReport::summary() const {
    std::ostringstream out;
    out << (pass ? "pass" : "FAIL") << ": " << word_count << " words";
    if (word_count >= 2) {
        out << ", min distance " << observed_min_distance;
        if (closest_pair) out << " at pair (" << closest_pair->first << "," << closest_pair->second << ")";
    }
    if (duplicate_count) out << ", " << duplicate_count << " duplicates";
    if (!composition_violations.empty())
        out << ", " << composition_violations.size() << " composition violations";
    if (!group_violations.empty())
        out << ", " << group_violations.size() << " group violations (first: word "
            << group_violations.front().first << " / group " << group_violations.front().second << ")";
    return out.str();
}

namespace {

struct PairScan {
    int min_distance = std::numeric_limits<int>::max();
    std::optional<std::pair<std::size_t, std::size_t>> closest;

    void consider(int d, std::size_t i, std::size_t j) {
        if (d < min_distance || (d == min_distance && closest && std::make_pair(i, j) < *closest)) {
            min_distance = d;
            closest = {i, j};
        }
    }
    void merge(const PairScan& other) {
        if (other.closest) consider(other.min_distance, other.closest->first, other.closest->second);
    }
};

PairScan scan_pairs(const std::vector<Codeword>& words) {
    const std::size_t n = words.size();
    if (n < 2) return {};
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t threads = std::clamp<std::size_t>(hw ? hw : 1, 1, 16);
    if (n < 256) threads = 1;
    std::vector<std::future<PairScan>> parts;
    for (std::size_t t = 0; t < threads; ++t) {
        parts.push_back(std::async(std::launch::async, [&words, n, t, threads] {
            PairScan local;
            for (std::size_t i = t; i < n; i += threads) {
                const Codeword& wi = words[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    local.consider(distance(wi, words[j]), i, j);
            }
            return local;
        }));
    }
    PairScan total;
    for (auto& p : parts) total.merge(p.get());
    return total;
}

}  // namespace

VerificationReport verify_code(const Code& c) {
    VerificationReport report;
    report.word_count = c.words.size();
    if (c.composition != std::array<int, 3>{2, 1, 1})
        throw std::invalid_argument("verification kernel expects composition [2,1,1]");

    const int n = c.length();
    for (std::size_t i = 0; i < c.words.size(); ++i) {
        const auto& w = c.words[i];
        bool ok = w.a[0] < w.a[1];
        for (int k = 0; ok && k < 4; ++k) {
            if (w.a[k] < 0 || w.a[k] >= n) ok = false;
            for (int l = k + 1; l < 4; ++l)
                if (w.a[k] == w.a[l]) ok = false;
        }
        if (!ok) report.composition_violations.push_back(i);
    }

    auto sorted = c.words;
    std::sort(sorted.begin(), sorted.end());
    report.duplicate_count =
        sorted.size() - static_cast<std::size_t>(std::distance(sorted.begin(), std::unique(sorted.begin(), sorted.end())));

    if (report.composition_violations.empty()) {
        PairScan scan = scan_pairs(c.words);
        report.observed_min_distance = scan.min_distance;
        report.closest_pair = scan.closest;
    }

    report.pass = report.duplicate_count == 0 && report.composition_violations.empty() &&
                  report.observed_min_distance >= c.declared_distance;
    return report;
}

VerificationReport verify_gdc(const Gdc& g) {
    const int n = g.code.length();
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::size_t covered = 0;
    for (std::size_t gi = 0; gi < g.groups.size(); ++gi) {
        for (int p : g.groups[gi]) {
            if (p < 0 || p >= n || owner[static_cast<std::size_t>(p)] != -1)
                throw std::invalid_argument("groups do not partition the point set");
            owner[static_cast<std::size_t>(p)] = static_cast<int>(gi);
            ++covered;
        }
    }
    if (covered != static_cast<std::size_t>(n))
        throw std::invalid_argument("groups do not partition the point set");

    VerificationReport report = verify_code(g.code);
    for (std::size_t wi = 0; wi < g.code.words.size(); ++wi) {
        const auto& w = g.code.words[wi];
        int seen[4];
        int count = 0;
        for (int k = 0; k < 4; ++k) {
            int grp = owner[static_cast<std::size_t>(w.a[k])];
            bool dup = false;
            for (int l = 0; l < count; ++l) dup |= seen[l] == grp;
            if (dup)
                report.group_violations.emplace_back(wi, static_cast<std::size_t>(grp));
            else
                seen[count++] = grp;
        }
    }
    report.pass = report.pass && report.group_violations.empty();
    return report;
}

std::vector<int> nonzero_census(const Code& c) {
    std::vector<int> census(static_cast<std::size_t>(c.length()), 0);
    for (const auto& w : c.words)
        for (int k = 0; k < 4; ++k) ++census[static_cast<std::size_t>(w.a[k])];
    return census;
}

std::vector<std::vector<int>> singleton_groups(int n) {
    std::vector<std::vector<int>> groups;
    groups.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) groups.push_back({i});
    return groups;
}

}  // namespace ccc
