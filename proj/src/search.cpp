#include "cccforge/search.hpp"

#include <algorithm>
#include <stdexcept>

#include "cccforge/bounds.hpp"

namespace ccc {

std::vector<Codeword> enumerate_candidates(int n) {
    if (n < 4) throw std::invalid_argument("candidates need n >= 4");
    std::vector<Codeword> words;
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = a1 + 1; a2 < n; ++a2)
            for (int a3 = 0; a3 < n; ++a3) {
                if (a3 == a1 || a3 == a2) continue;
                for (int a4 = 0; a4 < n; ++a4) {
                    if (a4 == a1 || a4 == a2 || a4 == a3) continue;
                    words.push_back({{a1, a2, a3, a4}});
                }
            }
    std::sort(words.begin(), words.end());
    return words;
}

CompatGraph::CompatGraph(int n, int d) : n_(n), d_(d), words_(enumerate_candidates(n)) {
    const std::size_t v = words_.size();
    stride_ = (v + 63) / 64;
    rows_.assign(v * stride_, 0);
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (distance(words_[i], words_[j]) >= d_) {
                rows_[i * stride_ + j / 64] |= std::uint64_t{1} << (j % 64);
                rows_[j * stride_ + i / 64] |= std::uint64_t{1} << (i % 64);
            }
}

std::size_t CompatGraph::degree(std::size_t i) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < stride_; ++w)
        total += static_cast<std::size_t>(__builtin_popcountll(rows_[i * stride_ + w]));
    return total;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    const CompatGraph& graph;
    std::size_t stride;
    std::vector<std::size_t> best;
    std::vector<std::size_t> current;
    long long nodes = 0;
    Clock::time_point deadline;
    bool timed_out = false;
    std::size_t hard_cap;

    Searcher(const CompatGraph& g, Clock::time_point dl, std::size_t cap)
        : graph(g), stride(g.row_stride()), deadline(dl), hard_cap(cap) {}

    static bool test_bit(const std::uint64_t* set, std::size_t i) {
        return (set[i / 64] >> (i % 64)) & 1;
    }

    bool out_of_time() {
        if (!timed_out && (nodes & 1023) == 0 && Clock::now() > deadline) timed_out = true;
        return timed_out;
    }

    /// Greedy colouring: vertices emitted colour class by colour class, so
    /// bound[i] = colour of order[i] caps any clique inside order[0..i].
    void colour_order(const std::vector<std::size_t>& verts, std::vector<std::size_t>& order,
                      std::vector<std::size_t>& bound) const {
        order.clear();
        bound.clear();
        std::vector<std::size_t> pool = verts;
        std::vector<std::size_t> leftover;
        std::vector<std::uint64_t> blocked(stride);
        std::size_t colour = 0;
        while (!pool.empty()) {
            ++colour;
            leftover.clear();
            std::fill(blocked.begin(), blocked.end(), 0);
            for (std::size_t v : pool) {
                if (test_bit(blocked.data(), v)) {
                    leftover.push_back(v);
                    continue;
                }
                order.push_back(v);
                bound.push_back(colour);
                const std::uint64_t* row = graph.row(v);
                for (std::size_t w = 0; w < stride; ++w) blocked[w] |= row[w];
            }
            pool.swap(leftover);
        }
    }

    void expand(const std::vector<std::size_t>& verts) {
        ++nodes;
        if (out_of_time() || best.size() >= hard_cap) return;
        std::vector<std::size_t> order, bound;
        colour_order(verts, order, bound);
        std::vector<std::size_t> next;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + bound[idx] <= best.size()) return;
            if (out_of_time() || best.size() >= hard_cap) return;
            std::size_t v = order[idx];
            current.push_back(v);
            next.clear();
            const std::uint64_t* row = graph.row(v);
            for (std::size_t j = 0; j < idx; ++j)
                if (test_bit(row, order[j])) next.push_back(order[j]);
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else if (current.size() + next.size() > best.size()) {
                expand(next);
            }
            current.pop_back();
        }
    }
};

}  // namespace

SearchResult max_code_exact(int n, int d, std::chrono::seconds budget) {
    if (d != 5 && d != 6) throw std::invalid_argument("the oracle covers d in {5,6}");
    auto start = Clock::now();
    CompatGraph graph(n, d);

    const std::size_t cap =
        static_cast<std::size_t>(d == 5 ? bounds::u5(n) : bounds::u6(n));
    Searcher searcher(graph, start + budget, cap);

    // symmetry: relabelling coordinates maps any codeword onto <0,1,2,3>
    // and fixes the graph, so one branch through that vertex suffices
    const Codeword root{{0, 1, 2, 3}};
    std::size_t root_id =
        static_cast<std::size_t>(std::lower_bound(graph.words().begin(), graph.words().end(), root) -
                                 graph.words().begin());
    searcher.best = {root_id};
    searcher.current = {root_id};
    std::vector<std::size_t> neighbourhood;
    for (std::size_t j = 0; j < graph.order(); ++j)
        if (graph.adjacent(root_id, j)) neighbourhood.push_back(j);
    if (!neighbourhood.empty()) searcher.expand(neighbourhood);

    SearchResult result;
    result.size = searcher.best.size();
    result.nodes = searcher.nodes;
    result.proven = !searcher.timed_out || searcher.best.size() >= cap;
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result.witness.points = PointSet::plain(n);
    result.witness.declared_distance = d;
    for (std::size_t v : searcher.best) result.witness.words.push_back(graph.words()[v]);
    result.witness.normalize();
    auto report = verify_code(result.witness);
    if (!report.pass) throw std::logic_error("search produced an invalid witness: " + report.summary());
    result.witness.verified = true;
    return result;
}

bool verify_lower_bound(const Code& c, int n, int d, std::size_t claimed_size) {
    if (c.length() != n || c.size() != claimed_size) return false;
    Code copy = c;
    copy.declared_distance = d;
    return verify_code(copy).pass;
}

}  // namespace ccc
