#include "paspt/decompose.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace paspt {

PathDecomposition decompose(const ShortestPathTree& t) {
    if (t.root < 0 || !t.is_reached(t.root))
        throw std::invalid_argument("decompose: empty tree");
    const std::vector<int> size = t.subtree_sizes();

    PathDecomposition out;
    // (component root, attachment vertex or -1, recursion depth)
    std::vector<std::array<int, 3>> work{{t.root, -1, 0}};
    while (!work.empty()) {
        auto [comp_root, attach, depth] = work.back();
        work.pop_back();
        out.max_depth = std::max(out.max_depth, depth);

        TreePath path;
        path.depth = depth;
        if (attach >= 0) path.vertices.push_back(attach);
        int cur = comp_root;
        for (;;) {
            path.vertices.push_back(cur);
            const auto& kids = t.children[static_cast<size_t>(cur)];
            if (kids.empty()) break;
            int heavy = kids[0];
            for (int c : kids)
                if (size[static_cast<size_t>(c)] > size[static_cast<size_t>(heavy)]) heavy = c;
            for (int c : kids)
                if (c != heavy) work.push_back({c, cur, depth + 1});
            cur = heavy;
        }
        out.paths.push_back(std::move(path));
    }
    return out;
}

}  // namespace paspt
