#include "crossnest/group_seq.hpp"

#include <map>
#include <stdexcept>

#include "crossnest/tree.hpp"

namespace crossnest {

std::string to_string(GroupVec g) {
    return "(" + std::to_string(g.a) + "," + std::to_string(g.b) + ")";
}

GroupVec stat(const SetPartition& p, GroupVec alpha, GroupVec beta) {
    return cr(p) * alpha + ne(p) * beta;
}

UV uv_seq(const SetPartition& p) {
    if (p.block_count() < 1) throw std::invalid_argument("uv_seq: empty partition");
    const auto edge = arcs(p);
    UV out;
    out.u.reserve(static_cast<size_t>(p.block_count()));
    out.v.reserve(static_cast<size_t>(p.block_count()));
    for (const auto& block : p.blocks()) {
        const int b = block.front();
        int covering = 0;
        int left = 0;
        for (const Arc& e : edge) {
            if (e.i < b && b < e.j) ++covering;
            if (e.j < b) ++left;
        }
        out.u.push_back(covering);
        out.v.push_back(left);
    }
    return out;
}

GSeq seq_stat(const SetPartition& p, GroupVec alpha, GroupVec beta) {
    const UV uv = uv_seq(p);
    const GroupVec base = stat(p, alpha, beta);
    GSeq out;
    out.reserve(uv.u.size());
    for (size_t j = 0; j < uv.u.size(); ++j)
        out.push_back(base + uv.u[j] * alpha + uv.v[j] * beta);
    return out;
}

GSeq op_M(const GSeq& s) {
    if (s.empty()) throw std::invalid_argument("op_M: empty sequence");
    GSeq out;
    out.reserve(s.size() + 1);
    out.push_back(s.front());
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

GSeq op_R(const GSeq& s, GroupVec alpha, GroupVec beta, int i) {
    const int l = static_cast<int>(s.size());
    if (i < 1 || i > l) throw std::out_of_range("op_R: index outside [1, length]");
    const GroupVec xi = s[static_cast<size_t>(i - 1)];
    const GroupVec shift = xi - s.front();
    GSeq out;
    out.reserve(s.size());
    out.push_back(xi);
    for (int j = 1; j < i; ++j) out.push_back(s[static_cast<size_t>(j - 1)] + shift + alpha);
    for (int j = i + 1; j <= l; ++j) out.push_back(s[static_cast<size_t>(j - 1)] + shift + beta);
    return out;
}

MultiSet<GroupVec> f_gamma_r(const GSeq& s, GroupVec gamma, int r) {
    if (r < 0) throw std::invalid_argument("f_gamma_r: negative r");
    MultiSet<GroupVec> out;
    const int l = static_cast<int>(s.size());
    const GroupVec offset = gamma - (r - 1) * s.front();
    // r-subsets of indices {2,...,l} (1-based).
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, GroupVec sum) -> void {
        if (static_cast<int>(pick.size()) == r) {
            out.add(sum + offset);
            return;
        }
        const int still_needed = r - static_cast<int>(pick.size());
        for (int idx = from; idx + still_needed - 1 <= l; ++idx) {
            pick.push_back(idx);
            self(self, idx + 1, sum + s[static_cast<size_t>(idx - 1)]);
            pick.pop_back();
        }
    };
    rec(rec, 2, GroupVec{});
    return out;
}

MultiSet<GSeq> op_M(const MultiSet<GSeq>& x) {
    MultiSet<GSeq> out;
    for (const auto& [s, m] : x.items()) out.add(op_M(s), m);
    return out;
}

MultiSet<GSeq> op_R_all(const MultiSet<GSeq>& x, GroupVec alpha, GroupVec beta) {
    MultiSet<GSeq> out;
    for (const auto& [s, m] : x.items())
        for (int i = 1; i <= static_cast<int>(s.size()); ++i)
            out.add(op_R(s, alpha, beta, i), m);
    return out;
}

MultiSet<GroupVec> f_gamma_r(const MultiSet<GSeq>& x, GroupVec gamma, int r) {
    MultiSet<GroupVec> out;
    for (const auto& [s, m] : x.items()) {
        const MultiSet<GroupVec> one = f_gamma_r(s, gamma, r);
        for (const auto& [g, c] : one.items()) out.add(g, c * m);
    }
    return out;
}

MultiSet<GSeq> level_seq_direct(const SetPartition& lam, int l, int m,
                                GroupVec alpha, GroupVec beta) {
    if (lam.block_count() < 1)
        throw std::invalid_argument("level_seq_direct: empty partition");
    MultiSet<GSeq> out;
    for (const SetPartition& mu : level_m(lam, l, m)) out.add(seq_stat(mu, alpha, beta));
    return out;
}

MultiSet<GSeq> level_seq_recurrence(const SetPartition& lam, int l, int m,
                                    GroupVec alpha, GroupVec beta) {
    if (lam.block_count() < 1)
        throw std::invalid_argument("level_seq_recurrence: empty partition");
    if (l < 0) throw std::invalid_argument("level_seq_recurrence: negative level");
    const int k = lam.block_count();
    std::map<int, MultiSet<GSeq>> row;
    row[k].add(seq_stat(lam, alpha, beta));
    for (int step = 1; step <= l; ++step) {
        std::map<int, MultiSet<GSeq>> next;
        for (int blocks = k; blocks <= k + step; ++blocks) {
            MultiSet<GSeq> e;
            if (auto it = row.find(blocks); it != row.end())
                e += op_R_all(it->second, alpha, beta);
            if (auto it = row.find(blocks - 1); it != row.end())
                e += op_M(it->second);
            if (!e.empty()) next[blocks] = std::move(e);
        }
        row = std::move(next);
    }
    if (auto it = row.find(m); it != row.end()) return it->second;
    return {};
}

MultiSet<GSeq> level_seq_multiset(const SetPartition& lam, int l, int m,
                                  GroupVec alpha, GroupVec beta) {
    MultiSet<GSeq> direct = level_seq_direct(lam, l, m, alpha, beta);
    const MultiSet<GSeq> recur = level_seq_recurrence(lam, l, m, alpha, beta);
    if (direct != recur)
        throw std::logic_error(
            "level_seq_multiset: direct enumeration and level recurrence disagree for " +
            lam.str() + " at l=" + std::to_string(l) + " m=" + std::to_string(m));
    return direct;
}

}  // namespace crossnest
