#include "paspt/lca.hpp"

#include <algorithm>
#include <utility>

namespace paspt {

LcaIndex::LcaIndex(const ShortestPathTree& t) {
    const int n = static_cast<int>(t.parent.size());
    first_.assign(static_cast<size_t>(n), -1);
    if (t.root < 0 || !t.is_reached(t.root)) return;

    euler_.reserve(2 * static_cast<size_t>(t.reached));
    std::vector<std::pair<int, size_t>> stack{{t.root, 0}};
    auto visit = [&](int v) {
        if (first_[static_cast<size_t>(v)] < 0) first_[static_cast<size_t>(v)] = static_cast<int>(euler_.size());
        euler_.push_back(v);
    };
    visit(t.root);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < t.children[static_cast<size_t>(v)].size()) {
            int c = t.children[static_cast<size_t>(v)][idx++];
            visit(c);
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
            if (!stack.empty()) visit(stack.back().first);
        }
    }

    const int m = static_cast<int>(euler_.size());
    depth_.resize(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) depth_[static_cast<size_t>(i)] = t.level[static_cast<size_t>(euler_[static_cast<size_t>(i)])];

    log2_.assign(static_cast<size_t>(m) + 1, 0);
    for (int i = 2; i <= m; ++i) log2_[static_cast<size_t>(i)] = log2_[static_cast<size_t>(i) / 2] + 1;

    const int levels = log2_[static_cast<size_t>(m)] + 1;
    table_.assign(static_cast<size_t>(levels), std::vector<int>(static_cast<size_t>(m)));
    for (int i = 0; i < m; ++i) table_[0][static_cast<size_t>(i)] = i;
    for (int j = 1; j < levels; ++j) {
        const int half = 1 << (j - 1);
        for (int i = 0; i + (1 << j) <= m; ++i)
            table_[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                min_pos(table_[static_cast<size_t>(j) - 1][static_cast<size_t>(i)],
                        table_[static_cast<size_t>(j) - 1][static_cast<size_t>(i + half)]);
    }
}

int LcaIndex::lca(int u, int v) const {
    if (u < 0 || v < 0 || static_cast<size_t>(u) >= first_.size() || static_cast<size_t>(v) >= first_.size())
        return -1;
    int a = first_[static_cast<size_t>(u)], b = first_[static_cast<size_t>(v)];
    if (a < 0 || b < 0) return -1;
    if (a > b) std::swap(a, b);
    const int j = log2_[static_cast<size_t>(b - a + 1)];
    const int pos = min_pos(table_[static_cast<size_t>(j)][static_cast<size_t>(a)],
                            table_[static_cast<size_t>(j)][static_cast<size_t>(b - (1 << j) + 1)]);
    return euler_[static_cast<size_t>(pos)];
}

}  // namespace paspt
