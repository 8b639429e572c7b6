#include "dfv/orbit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dfv {

// edges by (i, j) lexicographic, then marked + by i, then marked - by j
static int column_class(const OrbitColumn& c) {
    if (c.plus && c.minus) return 0;
    if (c.plus) return 1;
    return 2;
}

static bool column_before(const OrbitColumn& a, const OrbitColumn& b) {
    int ca = column_class(a), cb = column_class(b);
    if (ca != cb) return ca < cb;
    return std::pair(a.plus, a.minus) < std::pair(b.plus, b.minus);
}

StackedPartialPermutation make_orbit(int p, int q, std::vector<OrbitColumn> columns) {
    if (p < 1 || q < 1) throw std::invalid_argument("make_orbit: p, q must be positive");
    int r = static_cast<int>(columns.size());
    if (r < 1 || r > p + q) throw std::invalid_argument("make_orbit: rank out of range");
    std::set<int> used_plus, used_minus;
    for (const auto& c : columns) {
        if (c.plus == 0 && c.minus == 0)
            throw std::invalid_argument("make_orbit: zero column");
        if (c.plus < 0 || c.plus > p || c.minus < 0 || c.minus > q)
            throw std::invalid_argument("make_orbit: index out of range");
        if (c.plus && !used_plus.insert(c.plus).second)
            throw std::invalid_argument("make_orbit: repeated + row index");
        if (c.minus && !used_minus.insert(c.minus).second)
            throw std::invalid_argument("make_orbit: repeated - row index");
    }
    std::sort(columns.begin(), columns.end(), column_before);
    return StackedPartialPermutation{p, q, r, std::move(columns)};
}

StackedPartialPermutation canonicalize(StackedPartialPermutation w) {
    return make_orbit(w.p, w.q, std::move(w.columns));
}

StackedPartialPermutation canonicalize(const std::vector<std::vector<int>>& tau1,
                                       const std::vector<std::vector<int>>& tau2) {
    int p = static_cast<int>(tau1.size());
    int q = static_cast<int>(tau2.size());
    if (p == 0 || q == 0 || tau1[0].empty())
        throw std::invalid_argument("canonicalize: empty matrix");
    int r = static_cast<int>(tau1[0].size());
    for (const auto& row : tau1)
        if (static_cast<int>(row.size()) != r)
            throw std::invalid_argument("canonicalize: ragged tau1");
    for (const auto& row : tau2)
        if (static_cast<int>(row.size()) != r)
            throw std::invalid_argument("canonicalize: tau1/tau2 column mismatch");
    std::vector<OrbitColumn> cols(r);
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < p; ++i) {
            if (tau1[i][j] == 0) continue;
            if (tau1[i][j] != 1 || cols[j].plus)
                throw std::invalid_argument("canonicalize: not a partial permutation");
            cols[j].plus = i + 1;
        }
        for (int i = 0; i < q; ++i) {
            if (tau2[i][j] == 0) continue;
            if (tau2[i][j] != 1 || cols[j].minus)
                throw std::invalid_argument("canonicalize: not a partial permutation");
            cols[j].minus = i + 1;
        }
    }
    return make_orbit(p, q, std::move(cols));
}

std::vector<std::vector<int>> tau1_matrix(const StackedPartialPermutation& w) {
    std::vector<std::vector<int>> m(w.p, std::vector<int>(w.r, 0));
    for (int j = 0; j < w.r; ++j)
        if (w.columns[j].plus) m[w.columns[j].plus - 1][j] = 1;
    return m;
}

std::vector<std::vector<int>> tau2_matrix(const StackedPartialPermutation& w) {
    std::vector<std::vector<int>> m(w.q, std::vector<int>(w.r, 0));
    for (int j = 0; j < w.r; ++j)
        if (w.columns[j].minus) m[w.columns[j].minus - 1][j] = 1;
    return m;
}

OrbitGraph orbit_graph(const StackedPartialPermutation& w) {
    OrbitGraph g;
    std::vector<bool> used_plus(w.p + 1, false), used_minus(w.q + 1, false);
    for (const auto& c : w.columns) {
        if (c.plus && c.minus) g.edges.push_back({c.plus, c.minus});
        else if (c.plus) g.marked_plus.push_back(c.plus);
        else g.marked_minus.push_back(c.minus);
        if (c.plus) used_plus[c.plus] = true;
        if (c.minus) used_minus[c.minus] = true;
    }
    std::sort(g.edges.begin(), g.edges.end());
    std::sort(g.marked_plus.begin(), g.marked_plus.end());
    std::sort(g.marked_minus.begin(), g.marked_minus.end());
    for (int i = 1; i <= w.p; ++i)
        if (!used_plus[i]) g.free_plus.push_back(i);
    for (int j = 1; j <= w.q; ++j)
        if (!used_minus[j]) g.free_minus.push_back(j);
    return g;
}

std::vector<Indecomposable> indec_decomposition(const StackedPartialPermutation& w) {
    OrbitGraph g = orbit_graph(w);
    std::vector<Indecomposable> out;
    using K = Indecomposable::Kind;
    for (auto [i, j] : g.edges) out.push_back({K::edge, i, j});
    for (int i : g.marked_plus) out.push_back({K::plus_marked, i, 0});
    for (int i : g.free_plus) out.push_back({K::plus_free, i, 0});
    for (int j : g.marked_minus) out.push_back({K::minus_marked, 0, j});
    for (int j : g.free_minus) out.push_back({K::minus_free, 0, j});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> rank_matrix(const StackedPartialPermutation& w) {
    std::vector<std::vector<int>> m(w.p + 1, std::vector<int>(w.q + 1, 0));
    for (int i = 0; i <= w.p; ++i)
        for (int j = 0; j <= w.q; ++j) {
            int cnt = 0;
            for (const auto& c : w.columns) {
                if (c.plus && c.minus) cnt += c.plus <= i && c.minus <= j;
                else if (c.plus) cnt += c.plus <= i;
                else cnt += c.minus <= j;
            }
            m[i][j] = cnt;
        }
    return m;
}

int dim_variety(int p, int q, int r) {
    return p * (p - 1) / 2 + q * (q - 1) / 2 + r * (p + q - r);
}

int dim_orbit(const StackedPartialPermutation& w) {
    OrbitGraph g = orbit_graph(w);
    int d = w.p * w.p + w.q * w.q;
    for (int i : g.free_plus) d -= i;
    for (int j : g.free_minus) d -= j;
    for (int i : g.marked_plus) {
        int cnt = 0;
        for (int i2 : g.marked_plus) cnt += i2 <= i;
        d -= cnt;
    }
    for (int j : g.marked_minus) {
        int cnt = 0;
        for (int j2 : g.marked_minus) cnt += j2 <= j;
        d -= cnt;
    }
    for (auto [i, j] : g.edges) {
        int cnt = 0;
        for (auto [i2, j2] : g.edges) cnt += i2 <= i && j2 <= j;
        for (int i2 : g.marked_plus) cnt += i2 <= i;
        for (int j2 : g.marked_minus) cnt += j2 <= j;
        d -= cnt;
    }
    return d;
}

bool closure_leq(const StackedPartialPermutation& a, const StackedPartialPermutation& b) {
    if (a.p != b.p || a.q != b.q || a.r != b.r)
        throw std::invalid_argument("closure_leq: mismatched (p,q,r)");
    auto ra = rank_matrix(a), rb = rank_matrix(b);
    for (int i = 0; i <= a.p; ++i)
        for (int j = 0; j <= a.q; ++j) {
            if (i == 0 && j == 0) continue;
            if (ra[i][j] < rb[i][j]) return false;
        }
    return true;
}

static void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        subsets_rec(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

static std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    subsets_rec(n, k, 1, cur, out);
    return out;
}

std::vector<StackedPartialPermutation> enumerate_orbits(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1 || r > p + q)
        throw std::invalid_argument("enumerate_orbits: invalid (p,q,r)");
    std::vector<StackedPartialPermutation> out;
    for (int k = 0; k <= r; ++k) {
        for (int s = 0; s + k <= r; ++s) {
            int t = r - k - s;
            if (k + s > p || k + t > q) continue;
            for (const auto& plus_used : subsets(p, k + s))
                for (const auto& plus_edge_pos : subsets(k + s, k))
                    for (const auto& minus_used : subsets(q, k + t))
                        for (const auto& minus_edge_pos : subsets(k + t, k)) {
                            std::vector<int> ei, ej, mp, mm;
                            {
                                std::vector<bool> isedge(k + s + 1, false);
                                for (int x : plus_edge_pos) isedge[x] = true;
                                for (int x = 1; x <= k + s; ++x)
                                    (isedge[x] ? ei : mp).push_back(plus_used[x - 1]);
                            }
                            {
                                std::vector<bool> isedge(k + t + 1, false);
                                for (int x : minus_edge_pos) isedge[x] = true;
                                for (int x = 1; x <= k + t; ++x)
                                    (isedge[x] ? ej : mm).push_back(minus_used[x - 1]);
                            }
                            // all bijections between edge endpoint sets
                            std::vector<int> perm(k);
                            for (int x = 0; x < k; ++x) perm[x] = x;
                            do {
                                std::vector<OrbitColumn> cols;
                                for (int x = 0; x < k; ++x)
                                    cols.push_back({ei[x], ej[perm[x]]});
                                for (int i : mp) cols.push_back({i, 0});
                                for (int j : mm) cols.push_back({0, j});
                                out.push_back(make_orbit(p, q, std::move(cols)));
                            } while (std::next_permutation(perm.begin(), perm.end()));
                        }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

static long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

long long count_orbits(int p, int q, int r) {
    long long total = 0;
    for (int k = 0; k <= r; ++k)
        for (int s = 0; s + k <= r; ++s) {
            int t = r - k - s;
            if (k + s > p || k + t > q) continue;
            long long fact = 1;
            for (int i = 2; i <= k; ++i) fact *= i;
            total += binom(p, k + s) * binom(k + s, k) * binom(q, k + t) *
                     binom(k + t, k) * fact;
        }
    return total;
}

long long count_partial_permutations(int p, int r) {
    long long total = 0;
    for (int k = 0; k <= std::min(p, r); ++k) {
        long long fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        total += binom(p, k) * binom(r, k) * fact;
    }
    return total;
}

std::vector<std::pair<int, int>> hasse_covers(
    const std::vector<StackedPartialPermutation>& orbits) {
    int n = static_cast<int>(orbits.size());
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) leq[i][j] = closure_leq(orbits[i], orbits[j]);
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool covered = true;
            for (int m = 0; m < n; ++m)
                if (m != i && m != j && leq[i][m] && leq[m][j]) {
                    covered = false;
                    break;
                }
            if (covered) covers.push_back({i, j});
        }
    return covers;
}

}  // namespace dfv
