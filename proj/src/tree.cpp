#include "crossnest/tree.hpp"

#include <stdexcept>

namespace crossnest {

std::vector<SetPartition> children(const SetPartition& lam) {
    const int n = lam.n();
    const int k = lam.block_count();
    std::vector<std::vector<int>> shifted;
    shifted.reserve(static_cast<size_t>(k));
    for (const auto& block : lam.blocks()) {
        std::vector<int> up;
        up.reserve(block.size());
        for (int v : block) up.push_back(v + 1);
        shifted.push_back(std::move(up));
    }

    std::vector<SetPartition> out;
    out.reserve(static_cast<size_t>(k) + 1);
    {
        auto blocks = shifted;
        blocks.push_back({1});
        out.emplace_back(n + 1, std::move(blocks));
    }
    for (int i = 0; i < k; ++i) {
        auto blocks = shifted;
        blocks[static_cast<size_t>(i)].insert(blocks[static_cast<size_t>(i)].begin(), 1);
        out.emplace_back(n + 1, std::move(blocks));
    }
    return out;
}

SetPartition parent(const SetPartition& p) {
    if (p.n() < 1) throw std::invalid_argument("parent: empty partition has no parent");
    std::vector<std::vector<int>> blocks;
    for (const auto& block : p.blocks()) {
        std::vector<int> down;
        for (int v : block)
            if (v != 1) down.push_back(v - 1);
        if (!down.empty()) blocks.push_back(std::move(down));
    }
    return SetPartition(p.n() - 1, std::move(blocks));
}

std::vector<SetPartition> level(const SetPartition& lam, int l) {
    if (l < 0) throw std::invalid_argument("level: negative depth");
    std::vector<SetPartition> frontier{lam};
    for (int step = 0; step < l; ++step) {
        std::vector<SetPartition> next;
        next.reserve(frontier.size() * 2);
        for (const SetPartition& p : frontier)
            for (SetPartition& child : children(p)) next.push_back(std::move(child));
        frontier = std::move(next);
    }
    return frontier;
}

std::vector<SetPartition> level_m(const SetPartition& lam, int l, int m) {
    std::vector<SetPartition> out;
    for (SetPartition& p : level(lam, l))
        if (p.block_count() == m) out.push_back(std::move(p));
    return out;
}

MultiSet<GroupVec> stat_distribution(const SetPartition& lam, int l,
                                     std::optional<int> m, GroupVec alpha,
                                     GroupVec beta) {
    MultiSet<GroupVec> out;
    for (const SetPartition& p : level(lam, l))
        if (!m || p.block_count() == *m) out.add(stat(p, alpha, beta));
    return out;
}

}  // namespace crossnest
