#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crossnest/partition.hpp"

namespace crossnest {

/// Steps of a bicolored Motzkin path: up, down, red east, blue east.
enum class Step : unsigned char { NE, SE, RE, BE };

/// Restricted bicolored Motzkin path: runs from (0,0) to (n,0), never below
/// the x-axis, and has no blue east step of height 0. The height of a step
/// is the y-coordinate of its left endpoint.
struct RBMPath {
    std::vector<Step> steps;

    int size() const { return static_cast<int>(steps.size()); }

    /// Left-endpoint heights, one per step.
    std::vector<int> heights() const;

    bool is_valid() const;

    /// One letter per step over {N,S,R,B}.
    std::string str() const;

    friend bool operator==(const RBMPath&, const RBMPath&) = default;
    friend auto operator<=>(const RBMPath&, const RBMPath&) = default;
};

/// Inverse of RBMPath::str(); throws std::invalid_argument on other letters.
RBMPath parse_path(std::string_view text);

/// A path together with a choice sequence: xi_i = 1 on NE/RE steps and
/// 1 <= xi_i <= height on SE/BE steps.
struct CharlierDiagram {
    RBMPath path;
    std::vector<int> xi;

    bool is_valid() const;

    friend bool operator==(const CharlierDiagram&, const CharlierDiagram&) = default;
};

/// Path of a partition: vertex roles map to steps as
/// Opener->NE, Closer->SE, Singleton->RE, Transient->BE. Requires n >= 1.
RBMPath shape(const SetPartition& lam);

/// Decodes a diagram into a partition. Closers and transients are processed
/// left to right; vertex i connects to the xi_i-th available opener or
/// transient to its left, ranked right-to-left (phi_r) or left-to-right
/// (phi_l). An opener/transient stops being available once chosen.
/// Throws std::invalid_argument on an invalid diagram.
SetPartition phi_r(const CharlierDiagram& d);
SetPartition phi_l(const CharlierDiagram& d);

/// Constructive inverses; both share the path shape(lam).
CharlierDiagram phi_r_inv(const SetPartition& lam);
CharlierDiagram phi_l_inv(const SetPartition& lam);

/// pr(M): entry i counts NE and RE steps starting at height i, trimmed so
/// the last entry is nonzero. Sums to the number of blocks.
std::vector<int> profile(const RBMPath& m);

/// st(M): 0 for NE/RE steps, 1 for SE/BE steps.
std::vector<int> semi_type(const RBMPath& m);

/// Backward three-rule reconstruction of a path from a semi-type. The path
/// always stays on or above the x-axis; it is restricted (no BE at height 0)
/// exactly when eps starts with 0, reported via `restricted`.
struct SemitypePath {
    RBMPath path;
    bool restricted = false;
};
SemitypePath path_from_semitype(const std::vector<int>& eps);

/// Sum of (height - 1) over the 1-positions of eps in the reconstructed
/// path: the largest nesting count attainable with this semi-type.
long long ne_of_semitype(const std::vector<int>& eps);

namespace detail {

template <typename F>
void diagram_enumerate(int n, F& visit) {
    RBMPath path;
    path.steps.assign(n, Step::RE);
    std::vector<int> xi(n, 1);
    auto rec = [&](auto&& self, int pos, int h) -> void {
        if (h > n - pos) return;  // cannot get back to the axis
        if (pos == n) {
            visit(CharlierDiagram{path, xi});
            return;
        }
        xi[pos] = 1;
        path.steps[pos] = Step::NE;
        self(self, pos + 1, h + 1);
        path.steps[pos] = Step::RE;
        self(self, pos + 1, h);
        if (h >= 1) {
            path.steps[pos] = Step::SE;
            for (int x = 1; x <= h; ++x) {
                xi[pos] = x;
                self(self, pos + 1, h - 1);
            }
            path.steps[pos] = Step::BE;
            for (int x = 1; x <= h; ++x) {
                xi[pos] = x;
                self(self, pos + 1, h);
            }
        }
    };
    rec(rec, 0, 0);
}

}  // namespace detail

/// Visits every Charlier diagram of length n exactly once.
template <typename F>
void for_each_diagram(int n, F&& visit) {
    detail::diagram_enumerate(n, visit);
}

}  // namespace crossnest
