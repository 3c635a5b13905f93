#include "crossnest/charlier.hpp"

#include <set>
#include <stdexcept>

namespace crossnest {

std::vector<int> RBMPath::heights() const {
    std::vector<int> h(steps.size());
    int y = 0;
    for (size_t i = 0; i < steps.size(); ++i) {
        h[i] = y;
        if (steps[i] == Step::NE) ++y;
        if (steps[i] == Step::SE) --y;
    }
    return h;
}

bool RBMPath::is_valid() const {
    int y = 0;
    for (Step s : steps) {
        if (s == Step::BE && y == 0) return false;
        if (s == Step::NE) ++y;
        if (s == Step::SE) --y;
        if (y < 0) return false;
    }
    return y == 0;
}

std::string RBMPath::str() const {
    std::string out;
    out.reserve(steps.size());
    for (Step s : steps) {
        switch (s) {
            case Step::NE: out.push_back('N'); break;
            case Step::SE: out.push_back('S'); break;
            case Step::RE: out.push_back('R'); break;
            case Step::BE: out.push_back('B'); break;
        }
    }
    return out;
}

RBMPath parse_path(std::string_view text) {
    RBMPath path;
    path.steps.reserve(text.size());
    for (char ch : text) {
        switch (ch) {
            case 'N': path.steps.push_back(Step::NE); break;
            case 'S': path.steps.push_back(Step::SE); break;
            case 'R': path.steps.push_back(Step::RE); break;
            case 'B': path.steps.push_back(Step::BE); break;
            default:
                throw std::invalid_argument(std::string("parse_path: bad step letter '") +
                                            ch + "'");
        }
    }
    return path;
}

bool CharlierDiagram::is_valid() const {
    if (!path.is_valid()) return false;
    if (xi.size() != path.steps.size()) return false;
    const auto h = path.heights();
    for (size_t i = 0; i < xi.size(); ++i) {
        const Step s = path.steps[i];
        if (s == Step::NE || s == Step::RE) {
            if (xi[i] != 1) return false;
        } else {
            if (xi[i] < 1 || xi[i] > h[i]) return false;
        }
    }
    return true;
}

RBMPath shape(const SetPartition& lam) {
    RBMPath path;
    for (VertexRole role : vertex_roles(lam)) {
        switch (role) {
            case VertexRole::Opener: path.steps.push_back(Step::NE); break;
            case VertexRole::Closer: path.steps.push_back(Step::SE); break;
            case VertexRole::Singleton: path.steps.push_back(Step::RE); break;
            case VertexRole::Transient: path.steps.push_back(Step::BE); break;
        }
    }
    return path;
}

namespace {

// Shared decoder: rank selects from the currently available openers and
// transients left of the vertex being processed, right-to-left when
// from_right is set.
SetPartition phi_decode(const CharlierDiagram& d, bool from_right) {
    if (!d.is_valid()) throw std::invalid_argument("phi: invalid Charlier diagram");
    const int n = d.path.size();
    std::vector<int> available;  // ascending vertex numbers
    std::vector<int> link_to(static_cast<size_t>(n) + 1, 0);  // arc partner to the left
    for (int v = 1; v <= n; ++v) {
        const Step s = d.path.steps[static_cast<size_t>(v - 1)];
        if (s == Step::SE || s == Step::BE) {
            const int rank = d.xi[static_cast<size_t>(v - 1)];
            const size_t idx = from_right ? available.size() - static_cast<size_t>(rank)
                                          : static_cast<size_t>(rank - 1);
            link_to[static_cast<size_t>(v)] = available[idx];
            available.erase(available.begin() + static_cast<long>(idx));
        }
        if (s == Step::NE || s == Step::BE) available.push_back(v);
    }

    // Chains of links are the blocks.
    std::vector<int> next(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const int partner = link_to[static_cast<size_t>(v)];
        if (partner != 0) next[static_cast<size_t>(partner)] = v;
    }
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= n; ++v) {
        if (link_to[static_cast<size_t>(v)] != 0) continue;  // not a block minimum
        std::vector<int> block;
        for (int w = v; w != 0; w = next[static_cast<size_t>(w)]) block.push_back(w);
        blocks.push_back(std::move(block));
    }
    return SetPartition(n, std::move(blocks));
}

CharlierDiagram phi_encode(const SetPartition& lam, bool from_right) {
    const int n = lam.n();
    RBMPath path = shape(lam);
    std::vector<int> prev(static_cast<size_t>(n) + 1, 0);
    for (const Arc& e : arcs(lam)) prev[static_cast<size_t>(e.j)] = e.i;

    std::vector<int> xi(static_cast<size_t>(n), 1);
    std::vector<int> available;
    for (int v = 1; v <= n; ++v) {
        const Step s = path.steps[static_cast<size_t>(v - 1)];
        if (s == Step::SE || s == Step::BE) {
            const int partner = prev[static_cast<size_t>(v)];
            const auto it = std::lower_bound(available.begin(), available.end(), partner);
            const size_t idx = static_cast<size_t>(it - available.begin());
            xi[static_cast<size_t>(v - 1)] =
                from_right ? static_cast<int>(available.size() - idx)
                           : static_cast<int>(idx + 1);
            available.erase(it);
        }
        if (s == Step::NE || s == Step::BE) available.push_back(v);
    }
    return CharlierDiagram{std::move(path), std::move(xi)};
}

}  // namespace

SetPartition phi_r(const CharlierDiagram& d) { return phi_decode(d, true); }
SetPartition phi_l(const CharlierDiagram& d) { return phi_decode(d, false); }
CharlierDiagram phi_r_inv(const SetPartition& lam) { return phi_encode(lam, true); }
CharlierDiagram phi_l_inv(const SetPartition& lam) { return phi_encode(lam, false); }

std::vector<int> profile(const RBMPath& m) {
    const auto h = m.heights();
    std::vector<int> d;
    for (size_t i = 0; i < h.size(); ++i) {
        if (m.steps[i] != Step::NE && m.steps[i] != Step::RE) continue;
        if (static_cast<size_t>(h[i]) >= d.size()) d.resize(static_cast<size_t>(h[i]) + 1, 0);
        ++d[static_cast<size_t>(h[i])];
    }
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

std::vector<int> semi_type(const RBMPath& m) {
    std::vector<int> eps;
    eps.reserve(m.steps.size());
    for (Step s : m.steps)
        eps.push_back(s == Step::SE || s == Step::BE ? 1 : 0);
    return eps;
}

SemitypePath path_from_semitype(const std::vector<int>& eps) {
    const int n = static_cast<int>(eps.size());
    SemitypePath out;
    out.path.steps.assign(static_cast<size_t>(n), Step::RE);
    std::set<int> open_zeros;  // zero positions whose step is still undecided
    for (int i = 1; i <= n; ++i)
        if (eps[static_cast<size_t>(i - 1)] == 0) open_zeros.insert(i);

    // Built from the right end: a 1 pairs with the leftmost undecided zero
    // (making a SE/NE pair) or, with no zero left of it, becomes a BE step.
    for (int i = n; i >= 1; --i) {
        if (eps[static_cast<size_t>(i - 1)] == 0) {
            if (open_zeros.count(i)) {
                out.path.steps[static_cast<size_t>(i - 1)] = Step::RE;
                open_zeros.erase(i);
            }
        } else {
            auto first = open_zeros.begin();
            if (first != open_zeros.end() && *first < i) {
                out.path.steps[static_cast<size_t>(i - 1)] = Step::SE;
                out.path.steps[static_cast<size_t>(*first - 1)] = Step::NE;
                open_zeros.erase(first);
            } else {
                out.path.steps[static_cast<size_t>(i - 1)] = Step::BE;
            }
        }
    }
    out.restricted = out.path.is_valid();
    return out;
}

long long ne_of_semitype(const std::vector<int>& eps) {
    const SemitypePath sp = path_from_semitype(eps);
    const auto h = sp.path.heights();
    long long total = 0;
    for (size_t i = 0; i < eps.size(); ++i)
        if (eps[i] == 1) total += h[i] - 1;
    return total;
}

}  // namespace crossnest
