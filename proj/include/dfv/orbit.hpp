#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "dfv/young.hpp"

namespace dfv {

/**
 * Stacked partial permutations omega = (tau1; tau2) of rank r, the
 * canonical parametrization of the K-orbits of the type-AIII double flag
 * variety (Fl(V+) x Fl(V-)) x Gr_r(V), together with the associated graph,
 * indecomposable decomposition, rank matrices, the dimension formula and
 * the closure order.
 */

// One column of the stacked matrix: a 1 in row `plus` of tau1 and/or a 1
// in row `minus` of tau2 (0 = no entry on that side).  Both present =
// edge, one present = marked point.
struct OrbitColumn {
    int plus = 0;
    int minus = 0;

    bool operator==(const OrbitColumn&) const = default;
    auto operator<=>(const OrbitColumn&) const = default;
};

struct StackedPartialPermutation {
    int p = 0, q = 0, r = 0;
    std::vector<OrbitColumn> columns;  // canonical order

    bool operator==(const StackedPartialPermutation&) const = default;
    auto operator<=>(const StackedPartialPermutation&) const = default;
};

struct OrbitGraph {
    std::vector<std::pair<int, int>> edges;  // (i+, j-) sorted lexicographically
    std::vector<int> marked_plus, marked_minus;
    std::vector<int> free_plus, free_minus;
};

struct Indecomposable {
    enum class Kind { plus_marked, plus_free, minus_marked, minus_free, edge };
    Kind kind = Kind::edge;
    int i = 0;  // + index (edge / plus kinds)
    int j = 0;  // - index (edge / minus kinds)

    bool operator==(const Indecomposable&) const = default;
    auto operator<=>(const Indecomposable&) const = default;
};

// validate and sort the columns into the canonical representative
StackedPartialPermutation make_orbit(int p, int q, std::vector<OrbitColumn> columns);
// from explicit 0/1 matrices tau1 (p x r) and tau2 (q x r)
StackedPartialPermutation canonicalize(const std::vector<std::vector<int>>& tau1,
                                       const std::vector<std::vector<int>>& tau2);
StackedPartialPermutation canonicalize(StackedPartialPermutation w);
std::vector<std::vector<int>> tau1_matrix(const StackedPartialPermutation& w);
std::vector<std::vector<int>> tau2_matrix(const StackedPartialPermutation& w);

OrbitGraph orbit_graph(const StackedPartialPermutation& w);
std::vector<Indecomposable> indec_decomposition(const StackedPartialPermutation& w);

// r[i][j] for 0 <= i <= p, 0 <= j <= q: edges inside {1..i} x {1..j} plus
// marked + points <= i plus marked - points <= j
std::vector<std::vector<int>> rank_matrix(const StackedPartialPermutation& w);

int dim_orbit(const StackedPartialPermutation& w);
int dim_variety(int p, int q, int r);
// closure order: a <= b iff rank_matrix(a) >= rank_matrix(b) entrywise
// away from (0,0)
bool closure_leq(const StackedPartialPermutation& a, const StackedPartialPermutation& b);

std::vector<StackedPartialPermutation> enumerate_orbits(int p, int q, int r);
long long count_orbits(int p, int q, int r);
// number of p x r partial permutation matrices
long long count_partial_permutations(int p, int r);

// covering pairs (lower index, upper index) of the closure order
std::vector<std::pair<int, int>> hasse_covers(
    const std::vector<StackedPartialPermutation>& orbits);

}  // namespace dfv
