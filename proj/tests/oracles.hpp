#pragma once

// Test-side oracles, kept independent of the library code paths they check.

#include <vector>

namespace oracles {

// Bell numbers through B_{n+1} = sum_i C(n,i) B_i.
inline std::vector<long long> bell_numbers(int max_n) {
    std::vector<std::vector<long long>> choose(static_cast<size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        choose[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            choose[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                choose[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                choose[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
    std::vector<long long> bell{1};
    for (int n = 0; n < max_n; ++n) {
        long long next = 0;
        for (int i = 0; i <= n; ++i)
            next += choose[static_cast<size_t>(n)][static_cast<size_t>(i)] *
                    bell[static_cast<size_t>(i)];
        bell.push_back(next);
    }
    return bell;
}

// Stirling numbers of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline long long stirling2(int n, int k) {
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    std::vector<std::vector<long long>> s(static_cast<size_t>(n) + 1,
                                          std::vector<long long>(static_cast<size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            s[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                j * s[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
                s[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return s[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

// Catalan numbers through C_{n+1} = sum_i C_i C_{n-i}.
inline std::vector<long long> catalan_numbers(int max_n) {
    std::vector<long long> c{1};
    for (int n = 0; n < max_n; ++n) {
        long long next = 0;
        for (int i = 0; i <= n; ++i)
            next += c[static_cast<size_t>(i)] * c[static_cast<size_t>(n - i)];
        c.push_back(next);
    }
    return c;
}

}  // namespace oracles
