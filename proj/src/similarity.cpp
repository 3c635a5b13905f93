#include "crossnest/similarity.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "crossnest/charlier.hpp"
#include "crossnest/group_seq.hpp"

namespace crossnest {

long long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::vector<int> crseq(const SetPartition& lam) { return uv_seq(lam).u; }

std::vector<int> crset_profile(const SetPartition& lam) {
    std::vector<int> d;
    for (int u : crseq(lam)) {
        if (static_cast<size_t>(u) >= d.size()) d.resize(static_cast<size_t>(u) + 1, 0);
        ++d[static_cast<size_t>(u)];
    }
    return d;
}

std::vector<int> neseq(const SetPartition& lam) { return uv_seq(lam).v; }

long long count_classes_brute(int n, int k, SimStat which) {
    if (k < 1 || k > n) throw std::invalid_argument("count_classes_brute: need 1 <= k <= n");
    std::set<std::pair<std::vector<int>, long long>> keys;
    for_each_partition_k(n, k, [&](const SetPartition& p) {
        if (which == SimStat::cr)
            keys.emplace(crset_profile(p), cr(p));
        else
            keys.emplace(neseq(p), ne(p));
    });
    return static_cast<long long>(keys.size());
}

long long cr_upper_bound(int n, int k, int l) {
    return static_cast<long long>(n - k - 1) * l - static_cast<long long>(l) * (l - 1) / 2;
}

long long count_cr_formula(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("count_cr_formula: need 1 <= k <= n");
    const int m = std::min(n - k, k - 1);
    long long total = 0;
    for (int l = 0; l <= m; ++l) total += binom(k - 1, l) * (cr_upper_bound(n, k, l) + 1);
    return total;
}

long long count_cr_closed(int n, int k) {
    if (k < 1 || n < 2 * k - 1)
        throw std::invalid_argument("count_cr_closed: requires n >= 2k-1");
    const long long first = k >= 2
        ? static_cast<long long>(n - k - 1) * (k - 1) * (1LL << (k - 2))
        : 0;
    const long long second = 1LL << (k - 1);
    long long third = 0;  // (k-1)(k-2) 2^{k-4}: integral for every k
    if (k == 3) third = 1;
    if (k >= 4) third = static_cast<long long>(k - 1) * (k - 2) * (1LL << (k - 4));
    return first + second - third;
}

long long count_ne_recurrence(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("count_ne_recurrence: need 1 <= k <= n");
    // f[r][j] for 1 <= j <= r <= n.
    std::vector<std::vector<long long>> f(static_cast<size_t>(n) + 1);
    for (int r = 1; r <= n; ++r) {
        f[static_cast<size_t>(r)].assign(static_cast<size_t>(r) + 1, 0);
        f[static_cast<size_t>(r)][1] = 1;
        for (int j = 2; j <= r; ++j) {
            long long sum = 0;
            for (int s = j - 1; s <= r - 1; ++s) sum += f[static_cast<size_t>(s)][static_cast<size_t>(j - 1)];
            f[static_cast<size_t>(r)][static_cast<size_t>(j)] = sum + (j - 1) * binom(r - 2, j);
        }
    }
    return f[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

long long count_ne_total(int n) {
    if (n < 1) throw std::invalid_argument("count_ne_total: need n >= 1");
    if (n == 1) return 1;
    if (n == 2) return 2;
    const long long poly = static_cast<long long>(n) * n - 5LL * n + 22;
    if (n >= 5) return poly << (n - 5);
    return poly / (1LL << (5 - n));  // n = 3, 4: exactly divisible
}

namespace {

long long semitype_height_sum(int n, int k, bool require_first_zero) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (n == 0) return 0;
    long long total = 0;
    std::vector<int> eps(static_cast<size_t>(n));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int zeros = 0;
        for (int i = 0; i < n; ++i) {
            eps[static_cast<size_t>(i)] = (mask >> i) & 1u;
            zeros += 1 - eps[static_cast<size_t>(i)];
        }
        if (zeros != k) continue;
        if (require_first_zero && eps[0] != 0) continue;
        const SemitypePath sp = path_from_semitype(eps);
        const auto h = sp.path.heights();
        for (int i = 0; i < n; ++i)
            if (eps[static_cast<size_t>(i)] == 1) total += h[static_cast<size_t>(i)];
    }
    return total;
}

}  // namespace

long long g_semitype_sum(int n, int k) { return semitype_height_sum(n, k, true); }
long long gstar_semitype_sum(int n, int k) { return semitype_height_sum(n, k, false); }

SetPartition witness_cr(int n, int k, const std::vector<int>& composition, long long c) {
    const int parts = static_cast<int>(composition.size());
    const int l = parts - 1;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("witness_cr: infeasible parameters (" + why + ")");
    };
    if (k < 1 || k > n) fail("need 1 <= k <= n");
    if (parts < 1) fail("empty composition");
    long long sum = 0;
    for (int d : composition) {
        if (d < 1) fail("composition parts must be positive");
        sum += d;
    }
    if (sum != k) fail("composition must sum to the block count");
    if (l > n - k) fail("too many parts: need l+1 <= n-k+1");
    const long long bound = cr_upper_bound(n, k, l);
    if (c < 0 || c > bound)
        fail("crossing count outside [0, " + std::to_string(bound) + "]");

    CharlierDiagram d;
    if (l < n - k) {
        // d_t - 1 singles then an up step per part, a blue run, a down run.
        for (int t = 0; t <= l; ++t) {
            for (int rep = 0; rep < composition[static_cast<size_t>(t)] - 1; ++rep)
                d.path.steps.push_back(Step::RE);
            d.path.steps.push_back(Step::NE);
        }
        for (int rep = 0; rep < n - k - l - 1; ++rep) d.path.steps.push_back(Step::BE);
        for (int rep = 0; rep < l + 1; ++rep) d.path.steps.push_back(Step::SE);
    } else {
        // l == n - k: the top run is all singles and the path peaks at l.
        for (int t = 0; t < l; ++t) {
            for (int rep = 0; rep < composition[static_cast<size_t>(t)] - 1; ++rep)
                d.path.steps.push_back(Step::RE);
            d.path.steps.push_back(Step::NE);
        }
        for (int rep = 0; rep < composition[static_cast<size_t>(l)]; ++rep)
            d.path.steps.push_back(Step::RE);
        for (int rep = 0; rep < l; ++rep) d.path.steps.push_back(Step::SE);
    }

    d.xi.assign(static_cast<size_t>(n), 1);
    const auto heights = d.path.heights();
    long long remaining = c;
    for (size_t i = 0; i < d.xi.size() && remaining > 0; ++i) {
        const Step s = d.path.steps[i];
        if (s != Step::SE && s != Step::BE) continue;
        const long long slack = std::min<long long>(remaining, heights[i] - 1);
        d.xi[i] += static_cast<int>(slack);
        remaining -= slack;
    }
    return phi_r(d);
}

}  // namespace crossnest
