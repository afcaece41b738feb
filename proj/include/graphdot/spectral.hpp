#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "graph.hpp"

namespace graphdot {

namespace detail {

inline Eigen::MatrixXd signed_adjacency(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = (i == j) ? 0.0 : (g.has_edge(i, j) ? 1.0 : -1.0);
    return m;
}

}  // namespace detail

/// Upper bound on max_P tr(A_g P A_h P^T): permutations are orthogonal, and over
/// orthogonal conjugation the trace maximum is the sum of products of
/// similarly-sorted eigenvalues.
inline double spectral_trace_bound(const Graph& g, const Graph& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sg(detail::signed_adjacency(g),
                                                      Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sh(detail::signed_adjacency(h),
                                                      Eigen::EigenvaluesOnly);
    return sg.eigenvalues().dot(sh.eigenvalues());  // both ascending
}

}  // namespace graphdot
