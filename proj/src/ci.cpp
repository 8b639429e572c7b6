#include "dfv/ci.hpp"

#include <stdexcept>

#include "dfv/rational.hpp"

namespace dfv {

namespace {

void require_ci_shape(const StackedPartialPermutation& w) {
    if (!(w.p == w.q && w.q == w.r))
        throw std::invalid_argument("ci: requires p = q = r");
}

}  // namespace

bool is_symplectic(const StackedPartialPermutation& w) {
    require_ci_shape(w);
    int n = w.r;
    // (tau1^T tau2)(k, m) = <tau1 column k, tau2 column m>; with at most one
    // entry per column this is a direct pairing of the column data
    std::vector<std::vector<int>> prod(n, std::vector<int>(n, 0));
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m)
            prod[k][m] = (w.columns[k].plus != 0 && w.columns[m].minus != 0 &&
                          w.columns[k].plus == w.columns[m].minus)
                             ? 1
                             : 0;
    for (int k = 0; k < n; ++k)
        for (int m = k + 1; m < n; ++m)
            if (prod[k][m] != prod[m][k]) return false;
    return true;
}

std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>> complete_xi(
    const StackedPartialPermutation& w) {
    require_ci_shape(w);
    int n = w.r;
    OrbitGraph g = orbit_graph(w);
    std::vector<std::vector<int>> xi1(n), xi2(n);
    for (int i = 0; i < n; ++i) {
        xi1[i].assign(n, 0);
        xi2[i].assign(n, 0);
    }
    int col = 0;
    for (auto [i, j] : g.edges) {
        xi1[i - 1][col] = 1;
        xi2[j - 1][col] = 1;
        ++col;
    }
    for (int i : g.free_plus) xi1[i - 1][col++] = 1;
    for (int j : g.free_minus) xi2[j - 1][col++] = 1;
    if (col != n) throw std::logic_error("complete_xi: wrong column count");
    auto t1 = tau1_matrix(w);
    auto t2 = tau2_matrix(w);
    // stacked (xi1; xi2) has full rank n
    RationalMatrix stacked(2 * n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            stacked(i, j) = xi1[i][j];
            stacked(n + i, j) = xi2[i][j];
        }
    if (rank(stacked) != n) throw std::logic_error("complete_xi: rank deficient");
    // g = [[tau1, xi1], [tau2, -xi2]] invertible
    RationalMatrix big(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            big(i, j) = t1[i][j];
            big(n + i, j) = t2[i][j];
            big(i, n + j) = xi1[i][j];
            big(n + i, n + j) = -xi2[i][j];
        }
    if (rank(big) != 2 * n) throw std::logic_error("complete_xi: completion singular");
    // xi1^T tau1 = xi2^T tau2
    for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
            int lhs = 0, rhs = 0;
            for (int i = 0; i < n; ++i) {
                lhs += xi1[i][k] * t1[i][m];
                rhs += xi2[i][k] * t2[i][m];
            }
            if (lhs != rhs) throw std::logic_error("complete_xi: orthogonality fails");
        }
    return {xi1, xi2};
}

StackedPartialPermutation sigma(const StackedPartialPermutation& w) {
    auto [xi1, xi2] = complete_xi(w);
    return canonicalize(xi2, xi1);
}

std::vector<CiOrbit> enumerate_ci_orbits(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_ci_orbits: n < 1");
    std::vector<CiOrbit> out;
    for (const auto& w : enumerate_orbits(n, n, n))
        if (is_symplectic(w)) out.push_back({w, dim_orbit(w)});
    return out;
}

}  // namespace dfv
