#include "dfv/steinberg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dfv {

namespace {

struct GraphData {
    std::vector<int> ei, ej;          // edge endpoints, sorted
    PartialBijection sigma;           // j -> i over the edges
    std::vector<int> lp, lp_free;     // marked / free + points
    std::vector<int> mm, mm_free;     // marked / free - points
};

GraphData graph_data(const StackedPartialPermutation& w) {
    OrbitGraph g = orbit_graph(w);
    GraphData d;
    std::vector<std::pair<int, int>> by_j;  // (j, i)
    for (auto [i, j] : g.edges) {
        d.ei.push_back(i);
        by_j.push_back({j, i});
    }
    std::sort(d.ei.begin(), d.ei.end());
    std::sort(by_j.begin(), by_j.end());
    for (auto [j, i] : by_j) {
        d.ej.push_back(j);
        d.sigma.domain.push_back(j);
        d.sigma.values.push_back(i);
    }
    d.lp = g.marked_plus;
    d.lp_free = g.free_plus;
    d.mm = g.marked_minus;
    d.mm_free = g.free_minus;
    return d;
}

}  // namespace

bool grs_valid(const GrsQuintuple& t, int p, int q, int r) {
    if (!is_standard(t.t1) || !is_standard(t.t2)) return false;
    auto e1 = tableau_entries(t.t1);
    auto e2 = tableau_entries(t.t2);
    if (static_cast<int>(e1.size()) != p || static_cast<int>(e2.size()) != q)
        return false;
    for (int i = 0; i < p; ++i)
        if (e1[i] != i + 1) return false;
    for (int j = 0; j < q; ++j)
        if (e2[j] != j + 1) return false;
    Partition lambda = shape(t.t1), mu = shape(t.t2);
    if (!column_strip_leq(t.lambda_prime, lambda)) return false;
    if (!column_strip_leq(t.mu_prime, mu)) return false;
    if (!column_strip_leq(t.nu, t.lambda_prime)) return false;
    if (!column_strip_leq(t.nu, t.mu_prime)) return false;
    return partition_size(t.lambda_prime) + partition_size(t.mu_prime) ==
           partition_size(t.nu) + r;
}

std::pair<Partition, Partition> phi_k(const StackedPartialPermutation& w) {
    GraphData d = graph_data(w);
    StandardTableau t1 = plactic_product(
        plactic_product(column_tableau(d.lp), rs1(d.sigma)), column_tableau(d.lp_free));
    StandardTableau t2 = plactic_product(
        plactic_product(column_tableau(d.mm), rs2(d.sigma)), column_tableau(d.mm_free));
    return {shape(t1), shape(t2)};
}

std::pair<Partition, Partition> phi_k_via_w(const StackedPartialPermutation& w) {
    GraphData d = graph_data(w);
    std::vector<int> wplus, wminus;
    for (auto it = d.lp.rbegin(); it != d.lp.rend(); ++it) wplus.push_back(*it);
    for (int v : d.sigma.values) wplus.push_back(v);
    for (auto it = d.lp_free.rbegin(); it != d.lp_free.rend(); ++it)
        wplus.push_back(*it);
    PartialBijection sigma_inv = inverse(d.sigma);
    for (auto it = d.mm.rbegin(); it != d.mm.rend(); ++it) wminus.push_back(*it);
    for (int v : sigma_inv.values) wminus.push_back(v);
    for (auto it = d.mm_free.rbegin(); it != d.mm_free.rend(); ++it)
        wminus.push_back(*it);
    StandardTableau a, b;
    for (int v : wplus) a = row_insert(a, v);
    for (int v : wminus) b = row_insert(b, v);
    return {shape(a), shape(b)};
}

GrsQuintuple grs(const StackedPartialPermutation& w) {
    GraphData d = graph_data(w);
    StandardTableau s1 = rs1(d.sigma), s2 = rs2(d.sigma);
    StandardTableau ls1 = plactic_product(column_tableau(d.lp), s1);
    StandardTableau ms2 = plactic_product(column_tableau(d.mm), s2);
    GrsQuintuple t;
    t.t1 = plactic_product(ls1, column_tableau(d.lp_free));
    t.t2 = plactic_product(ms2, column_tableau(d.mm_free));
    t.lambda_prime = shape(ls1);
    t.mu_prime = shape(ms2);
    t.nu = shape(s1);
    return t;
}

namespace {

// Undo the insertions that created the boxes of sh(t) \ inner, a column
// strip, bottom-most row first.  The recovered values come back in the
// reverse order of their insertion (ascending for a peeled-off column).
std::pair<StandardTableau, std::vector<int>> peel_vertical(StandardTableau t,
                                                           const Partition& inner) {
    Partition outer = shape(t);
    if (!column_strip_leq(inner, outer))
        throw std::invalid_argument("peel: shapes are not a column strip apart");
    std::vector<int> vals;
    for (int i = static_cast<int>(outer.size()) - 1; i >= 0; --i) {
        int in = i < static_cast<int>(inner.size()) ? inner[i] : 0;
        if (outer[i] == in) continue;
        auto [smaller, v] = inverse_row_insert(t, i);
        t = smaller;
        vals.push_back(v);
    }
    return {t, vals};
}

// Same for a horizontal strip, right-most column first; recovered values
// come back descending.
std::pair<StandardTableau, std::vector<int>> peel_horizontal(StandardTableau t,
                                                             const Partition& inner) {
    Partition outer = shape(t);
    if (!column_strip_leq(conjugate(inner), conjugate(outer)))
        throw std::invalid_argument("peel: shapes are not a horizontal strip apart");
    std::vector<std::pair<int, int>> boxes;  // (column, row)
    for (int i = 0; i < static_cast<int>(outer.size()); ++i) {
        int in = i < static_cast<int>(inner.size()) ? inner[i] : 0;
        for (int c = in; c < outer[i]; ++c) boxes.push_back({c, i});
    }
    std::sort(boxes.rbegin(), boxes.rend());
    std::vector<int> vals;
    for (auto [c, i] : boxes) {
        auto [smaller, v] = inverse_row_insert(t, i);
        t = smaller;
        vals.push_back(v);
    }
    return {t, vals};
}

// split p = column(vals) * s with sh(column(vals) * s) prescribed by the
// caller and sh(s) = nu; uses the transpose anti-automorphism of the
// plactic monoid to turn the left factor into a right peel
std::pair<StandardTableau, std::vector<int>> peel_left_column(const StandardTableau& p,
                                                              const Partition& nu) {
    auto [rt, vals_desc] = peel_horizontal(transpose(p), conjugate(nu));
    for (size_t i = 0; i + 1 < vals_desc.size(); ++i)
        if (vals_desc[i] <= vals_desc[i + 1])
            throw std::invalid_argument("grs_inverse: left peel not descending");
    std::vector<int> vals(vals_desc.rbegin(), vals_desc.rend());
    return {transpose(rt), vals};
}

}  // namespace

StackedPartialPermutation grs_inverse(const GrsQuintuple& t, int p, int q, int r) {
    if (!grs_valid(t, p, q, r))
        throw std::invalid_argument("grs_inverse: invalid fiber element");
    auto [p1, lp_free] = peel_vertical(t.t1, t.lambda_prime);
    auto [p2, mm_free] = peel_vertical(t.t2, t.mu_prime);
    for (size_t i = 0; i + 1 < lp_free.size(); ++i)
        if (lp_free[i] >= lp_free[i + 1])
            throw std::invalid_argument("grs_inverse: right peel not ascending");
    for (size_t i = 0; i + 1 < mm_free.size(); ++i)
        if (mm_free[i] >= mm_free[i + 1])
            throw std::invalid_argument("grs_inverse: right peel not ascending");
    auto [s1, lp] = peel_left_column(p1, t.nu);
    auto [s2, mm] = peel_left_column(p2, t.nu);
    PartialBijection sigma = rs_inverse(s1, s2);
    std::vector<OrbitColumn> cols;
    for (size_t x = 0; x < sigma.domain.size(); ++x)
        cols.push_back({sigma.values[x], sigma.domain[x]});
    for (int i : lp) cols.push_back({i, 0});
    for (int j : mm) cols.push_back({0, j});
    StackedPartialPermutation w = make_orbit(p, q, std::move(cols));
    // the peeled-off free points must be exactly the unused vertices
    OrbitGraph g = orbit_graph(w);
    std::vector<int> fp = lp_free, fm = mm_free;
    std::sort(fp.begin(), fp.end());
    std::sort(fm.begin(), fm.end());
    if (fp != g.free_plus || fm != g.free_minus)
        throw std::invalid_argument("grs_inverse: free points inconsistent");
    return w;
}

std::vector<GrsQuintuple> fiber(const Partition& lambda, const Partition& mu, int r) {
    if (!is_partition(lambda) || !is_partition(mu))
        throw std::invalid_argument("fiber: invalid partition");
    std::vector<GrsQuintuple> out;
    auto t1s = standard_tableaux(lambda);
    auto t2s = standard_tableaux(mu);
    for (const auto& lp : column_strip_subdiagrams(lambda))
        for (const auto& mp : column_strip_subdiagrams(mu))
            for (const auto& nu : column_strip_subdiagrams(lp)) {
                if (!column_strip_leq(nu, mp)) continue;
                if (partition_size(lp) + partition_size(mp) !=
                    partition_size(nu) + r)
                    continue;
                for (const auto& t1 : t1s)
                    for (const auto& t2 : t2s)
                        out.push_back({t1, t2, lp, mp, nu});
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Partition, Partition> phi_s_aux_shapes(const StackedPartialPermutation& w) {
    GraphData d = graph_data(w);
    PartialBijection sigma_inv = inverse(d.sigma);
    int sp = static_cast<int>(d.lp_free.size());  // s' free + points
    int tp = static_cast<int>(d.mm_free.size());  // t' free - points
    // two-line array on the - side indices plus padding q+1..q+s'
    std::vector<std::pair<int, int>> wp, wm;
    for (size_t i = 0; i < d.mm.size(); ++i)
        wp.push_back({d.mm[i], -static_cast<int>(i) - 1});
    for (size_t x = 0; x < d.sigma.domain.size(); ++x)
        wp.push_back({d.sigma.domain[x], d.sigma.values[x]});
    for (int x = 1; x <= sp; ++x) wp.push_back({w.q + x, d.lp_free[sp - x]});
    for (size_t i = 0; i < d.lp.size(); ++i)
        wm.push_back({d.lp[i], -static_cast<int>(i) - 1});
    for (size_t x = 0; x < sigma_inv.domain.size(); ++x)
        wm.push_back({sigma_inv.domain[x], sigma_inv.values[x]});
    for (int x = 1; x <= tp; ++x) wm.push_back({w.p + x, d.mm_free[tp - x]});
    std::sort(wp.begin(), wp.end());
    std::sort(wm.begin(), wm.end());
    StandardTableau a, b;
    for (auto [dom, val] : wp) a = row_insert(a, val);
    for (auto [dom, val] : wm) b = row_insert(b, val);
    return {shape(a), shape(b)};
}

SignedYoungDiagram phi_s(const StackedPartialPermutation& w) {
    GraphData d = graph_data(w);
    int s = static_cast<int>(d.lp.size());
    int t = static_cast<int>(d.mm.size());
    auto [lambda, mu] = phi_k(w);
    auto [lambda_p, mu_p] = phi_s_aux_shapes(w);
    int cmax = w.p + w.q + 2;
    std::vector<int> nplus(cmax), nminus(cmax);
    for (int c = 1; c <= cmax; ++c) {
        if (c % 2 == 0) {
            nplus[c - 1] = boxes_in_first_columns(lambda, c);
            nminus[c - 1] = boxes_in_first_columns(mu, c);
        } else {
            nplus[c - 1] = s - t + boxes_in_first_columns(lambda_p, c);
            nminus[c - 1] = t - s + boxes_in_first_columns(mu_p, c);
        }
    }
    SignedYoungDiagram out = signed_diagram_from_column_counts(nplus, nminus);
    auto [np, nq] = signed_signature(out);
    if (np != w.p || nq != w.q)
        throw std::logic_error("phi_s: signature mismatch after reconstruction");
    return out;
}

}  // namespace dfv
