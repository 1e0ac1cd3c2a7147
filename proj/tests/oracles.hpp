#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's solvers; only the Graph value type is shared.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "ctxw/graph.hpp"

namespace oracle {

/// Cyclic Jacobi rotations; eigenvalues sorted descending.
inline Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXd a, double tol = 1e-14, int max_sweeps = 100) {
    const auto n = a.rows();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(off) <= tol * std::max(1.0, a.norm())) break;
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (a(p, q) == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    Eigen::VectorXd d = a.diagonal();
    std::sort(d.data(), d.data() + d.size(), std::greater<>());
    return d;
}

/// Largest clique by plain recursive enumeration (no colouring bound).
inline int max_clique(const ctxw::Graph& g) {
    const auto n = g.order();
    int best = 0;
    std::vector<ctxw::Vertex> current;
    std::function<void(ctxw::Vertex)> grow = [&](ctxw::Vertex from) {
        best = std::max(best, static_cast<int>(current.size()));
        if (current.size() + (n - from) <= static_cast<std::size_t>(best)) return;
        for (ctxw::Vertex v = from; v < n; ++v) {
            bool ok = std::all_of(current.begin(), current.end(), [&](ctxw::Vertex u) { return g.adjacent(u, v); });
            if (!ok) continue;
            current.push_back(v);
            grow(v + 1);
            current.pop_back();
        }
    };
    grow(0);
    return best;
}

/// Independence number by checking every vertex subset; n <= 20.
inline int alpha_by_subsets(const ctxw::Graph& g) {
    const auto n = g.order();
    int best = 0;
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (ctxw::Vertex u = 0; u < n && ok; ++u)
            for (ctxw::Vertex v = u + 1; v < n && ok; ++v)
                if ((m >> u & 1u) && (m >> v & 1u) && g.adjacent(u, v)) ok = false;
        if (ok) best = std::max(best, std::popcount(m));
    }
    return best;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// q-subsets of {1..2q} via a selector vector and std::prev_permutation,
/// then sorted lexicographically.
inline std::vector<std::vector<int>> q_subsets(int q) {
    std::vector<bool> pick(2 * q, false);
    std::fill(pick.begin(), pick.begin() + q, true);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> s;
        for (int i = 0; i < 2 * q; ++i)
            if (pick[i]) s.push_back(i + 1);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

inline int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return static_cast<int>(both.size());
}

}  // namespace oracle
