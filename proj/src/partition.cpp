#include "crossnest/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace crossnest {

SetPartition::SetPartition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 0) throw std::invalid_argument("SetPartition: negative ground-set size");
    for (auto& block : blocks_) {
        if (block.empty()) throw std::invalid_argument("SetPartition: empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    std::vector<char> seen(static_cast<size_t>(n_) + 1, 0);
    int covered = 0;
    for (const auto& block : blocks_) {
        for (int v : block) {
            if (v < 1 || v > n_)
                throw std::invalid_argument("SetPartition: element out of range: " +
                                            std::to_string(v));
            if (seen[v])
                throw std::invalid_argument("SetPartition: duplicate element " +
                                            std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n_) {
        for (int v = 1; v <= n_; ++v)
            if (!seen[v])
                throw std::invalid_argument("SetPartition: missing element " +
                                            std::to_string(v));
    }
}

std::string SetPartition::str() const {
    std::ostringstream out;
    for (size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out << '/';
        for (size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out << ',';
            out << blocks_[b][i];
        }
    }
    return out.str();
}

SetPartition parse_partition(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                             text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    if (text.empty()) return SetPartition{};

    std::vector<std::vector<int>> blocks;
    std::vector<int> block;
    std::string token;
    int max_element = 0;

    auto flush_token = [&]() {
        if (token.empty())
            throw std::invalid_argument("parse_partition: empty element token");
        long long value = 0;
        for (char ch : token) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("parse_partition: bad token '" + token + "'");
            value = value * 10 + (ch - '0');
            if (value > 1'000'000)
                throw std::invalid_argument("parse_partition: element too large in token '" +
                                            token + "'");
        }
        if (value < 1)
            throw std::invalid_argument("parse_partition: bad token '" + token + "'");
        block.push_back(static_cast<int>(value));
        max_element = std::max(max_element, static_cast<int>(value));
        token.clear();
    };
    auto flush_block = [&]() {
        if (block.empty())
            throw std::invalid_argument("parse_partition: empty block");
        blocks.push_back(std::move(block));
        block.clear();
    };

    for (char ch : text) {
        if (ch == ',') {
            flush_token();
        } else if (ch == '/') {
            flush_token();
            flush_block();
        } else {
            token.push_back(ch);
        }
    }
    flush_token();
    flush_block();
    return SetPartition(max_element, std::move(blocks));
}

std::vector<Arc> arcs(const SetPartition& p) {
    std::vector<Arc> out;
    out.reserve(static_cast<size_t>(std::max(0, p.n() - p.block_count())));
    for (const auto& block : p.blocks())
        for (size_t i = 0; i + 1 < block.size(); ++i)
            out.push_back(Arc{block[i], block[i + 1]});
    return out;
}

namespace {

bool is_crossing(Arc x, Arc y) {
    if (y.i < x.i) std::swap(x, y);
    return x.i < y.i && y.i < x.j && x.j < y.j;
}

bool is_nesting(Arc x, Arc y) {
    if (y.i < x.i) std::swap(x, y);
    return x.i < y.i && y.j < x.j;
}

}  // namespace

long long cr(const SetPartition& p) {
    const auto a = arcs(p);
    long long count = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (is_crossing(a[i], a[j])) ++count;
    return count;
}

long long ne(const SetPartition& p) {
    const auto a = arcs(p);
    long long count = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (is_nesting(a[i], a[j])) ++count;
    return count;
}

long long al(const SetPartition& p) {
    const auto a = arcs(p);
    long long count = 0;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (!is_crossing(a[i], a[j]) && !is_nesting(a[i], a[j])) ++count;
    return count;
}

std::vector<VertexRole> vertex_roles(const SetPartition& p) {
    if (p.n() < 1) throw std::invalid_argument("vertex_roles: empty partition");
    std::vector<VertexRole> roles(static_cast<size_t>(p.n()));
    for (const auto& block : p.blocks()) {
        for (int v : block) {
            const bool is_min = v == block.front();
            const bool is_max = v == block.back();
            roles[static_cast<size_t>(v - 1)] =
                is_min ? (is_max ? VertexRole::Singleton : VertexRole::Opener)
                       : (is_max ? VertexRole::Closer : VertexRole::Transient);
        }
    }
    return roles;
}

namespace detail {

SetPartition partition_from_rgs(const std::vector<int>& rgs) {
    int k = 0;
    for (int v : rgs) k = std::max(k, v + 1);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(k));
    for (size_t i = 0; i < rgs.size(); ++i)
        blocks[static_cast<size_t>(rgs[i])].push_back(static_cast<int>(i) + 1);
    return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

}  // namespace detail

std::vector<SetPartition> all_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<SetPartition> all_partitions_k(int n, int k) {
    std::vector<SetPartition> out;
    for_each_partition_k(n, k, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

}  // namespace crossnest
