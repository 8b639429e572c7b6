#include "dfv/tits.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dfv {

int composition_sum(const Composition& c) {
    return std::accumulate(c.begin(), c.end(), 0);
}

int JointTriple::n() const { return composition_sum(c); }

int JointTriple::p() const {
    return composition_sum(a) - (a.empty() ? 0 : a.back());
}

int JointTriple::q() const {
    return composition_sum(b) - (b.empty() ? 0 : b.back());
}

bool in_lambda_j(const JointTriple& t) {
    if (t.a.empty() || t.b.empty() || t.c.empty()) return false;
    auto nonneg = [](const Composition& x) {
        return std::all_of(x.begin(), x.end(), [](int v) { return v >= 0; });
    };
    if (!nonneg(t.a) || !nonneg(t.b) || !nonneg(t.c)) return false;
    int n = t.n();
    if (n < 1) return false;
    if (composition_sum(t.a) != n || composition_sum(t.b) != n) return false;
    return t.p() + t.q() == n;
}

namespace {

// compositions of n into positive parts (the empty composition when n = 0)
std::vector<Composition> positive_compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int first = 1; first <= n; ++first)
        for (auto rest : positive_compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// min_norms[s] = minimal sum of squares over vectors x with 0 <= x_i <=
// parts_i and sum x_i = s
std::vector<int> min_norms(const Composition& parts) {
    int total = composition_sum(parts);
    std::vector<int> dp(total + 1, kInf);
    dp[0] = 0;
    for (int part : parts) {
        std::vector<int> next(total + 1, kInf);
        for (int s = 0; s <= total; ++s) {
            if (dp[s] == kInf) continue;
            for (int x = 0; x <= part && s + x <= total; ++x)
                next[s + x] = std::min(next[s + x], dp[s] + x * x);
        }
        dp = std::move(next);
    }
    return dp;
}

Composition drop_last(const Composition& x) {
    Composition r(x.begin(), x.end() - 1);
    return r;
}

}  // namespace

std::vector<JointTriple> enumerate_lambda_j(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_lambda_j: n < 1");
    std::vector<JointTriple> out;
    auto cs = positive_compositions(n);
    for (int p = 0; p <= n; ++p) {
        int q = n - p;
        for (const auto& ap : positive_compositions(p)) {
            Composition a = ap;
            a.push_back(q);
            for (const auto& bp : positive_compositions(q)) {
                Composition b = bp;
                b.push_back(p);
                for (const auto& c : cs) out.push_back({a, b, c});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

DimensionVector dimension_vector(const std::vector<Composition>& factors) {
    Rational dummy = tits_form(factors);  // validates the input
    (void)dummy;
    DimensionVector d;
    d.n = factors.empty() ? 0 : composition_sum(factors[0]);
    for (const auto& f : factors) {
        std::vector<int> branch;
        int acc = 0;
        for (size_t i = 0; i + 1 < f.size(); ++i) {
            acc += f[i];
            branch.push_back(acc);
        }
        d.branches.push_back(std::move(branch));
    }
    return d;
}

Rational tits_form(const std::vector<Composition>& factors) {
    if (factors.empty()) throw std::invalid_argument("tits_form: no factors");
    int n = composition_sum(factors[0]);
    long long norms = 0;
    for (const auto& f : factors) {
        if (composition_sum(f) != n)
            throw std::invalid_argument("tits_form: mismatched totals");
        for (int part : f) norms += static_cast<long long>(part) * part;
    }
    long long num = norms -
                    static_cast<long long>(factors.size() - 2) * n * n;
    return Rational(num, 2);
}

bool is_finite_bruteforce(const JointTriple& t) {
    if (!in_lambda_j(t)) throw std::invalid_argument("is_finite_bruteforce: not in Lambda^J");
    int p = t.p(), q = t.q();
    auto dpa = min_norms(drop_last(t.a));
    auto dpb = min_norms(drop_last(t.b));
    auto dpc = min_norms(t.c);
    // a summand mu has mu_a = (mu_a', sum mu_b') and mu_b = (mu_b', sum mu_a'),
    // so it is determined by sub-compositions of a', b' and c with matching
    // totals; infinite iff some such mu has Tits value <= 0, i.e. the total
    // squared norm is at most n0^2
    for (int sa = 0; sa <= p; ++sa) {
        if (dpa[sa] == kInf || sa > t.b.back()) continue;
        for (int sb = 0; sb <= q; ++sb) {
            if (dpb[sb] == kInf || sb > t.a.back()) continue;
            int n0 = sa + sb;
            if (n0 < 1 || n0 > static_cast<int>(dpc.size()) - 1) continue;
            if (dpc[n0] == kInf) continue;
            long long norm = dpa[sa] + dpb[sb] + dpc[n0] +
                             static_cast<long long>(sa) * sa +
                             static_cast<long long>(sb) * sb;
            if (norm <= static_cast<long long>(n0) * n0) return false;
        }
    }
    return true;
}

namespace {

struct Pattern {
    Composition a, b, c;  // nonzero parts, to be embedded part-by-part
};

const std::vector<Pattern>& forbidden_patterns() {
    static const std::vector<Pattern> list = {
        {{1, 1, 1}, {1, 1, 1}, {2, 2, 2}},
        {{2, 2}, {1, 1, 1, 1, 1}, {3, 3, 3}},
        {{1, 1}, {1, 1}, {1, 1, 1, 1}},
        {{3}, {1, 1, 1, 1, 1}, {2, 2, 2, 2}},
        {{2}, {1, 1, 1}, {1, 1, 1, 1, 1}},
        {{3}, {2, 2}, {1, 1, 1, 1, 1, 1, 1}},
    };
    return list;
}

// place each pattern part on a distinct target position with a large enough
// value; returns the chosen positions aligned with `pattern`, or nullopt
std::optional<std::vector<int>> embed_parts(const Composition& pattern,
                                            const Composition& target) {
    std::vector<int> order(target.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return target[i] > target[j]; });
    Composition sorted = pattern;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (sorted.size() > target.size()) return std::nullopt;
    std::vector<int> positions(sorted.size());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] > target[order[i]]) return std::nullopt;
        positions[i] = order[i];
    }
    return positions;
}

Composition place(const Composition& pattern_sorted_desc,
                  const std::vector<int>& positions, size_t target_len) {
    Composition out(target_len, 0);
    for (size_t i = 0; i < positions.size(); ++i)
        out[positions[i]] = pattern_sorted_desc[i];
    return out;
}

std::optional<JointTriple> try_pattern(const Pattern& pat, const JointTriple& t,
                                       bool swapped) {
    const Composition& pa = swapped ? pat.b : pat.a;
    const Composition& pb = swapped ? pat.a : pat.b;
    if (composition_sum(pb) > t.a.back()) return std::nullopt;
    if (composition_sum(pa) > t.b.back()) return std::nullopt;
    auto ea = embed_parts(pa, drop_last(t.a));
    auto eb = embed_parts(pb, drop_last(t.b));
    auto ec = embed_parts(pat.c, t.c);
    if (!ea || !eb || !ec) return std::nullopt;
    auto desc = [](Composition x) {
        std::sort(x.begin(), x.end(), std::greater<int>());
        return x;
    };
    Composition ma = place(desc(pa), *ea, t.a.size() - 1);
    ma.push_back(composition_sum(pb));
    Composition mb = place(desc(pb), *eb, t.b.size() - 1);
    mb.push_back(composition_sum(pa));
    Composition mc = place(desc(pat.c), *ec, t.c.size());
    return JointTriple{ma, mb, mc};
}

}  // namespace

std::optional<JointTriple> forbidden_witness(const JointTriple& t) {
    if (!in_lambda_j(t)) throw std::invalid_argument("forbidden_witness: not in Lambda^J");
    for (const auto& pat : forbidden_patterns())
        for (bool swapped : {false, true})
            if (auto w = try_pattern(pat, t, swapped)) return w;
    return std::nullopt;
}

bool is_finite_fast(const JointTriple& t) { return !forbidden_witness(t).has_value(); }

FactorShape factor_shape(const Composition& blocks) {
    FactorShape s;
    for (int b : blocks) {
        if (b <= 0) continue;
        ++s.blocks;
        s.total += b;
        s.min_block = s.min_block == 0 ? b : std::min(s.min_block, b);
    }
    return s;
}

ParabolicShape shape_of(const JointTriple& t) {
    return {factor_shape(t.c), factor_shape(drop_last(t.a)),
            factor_shape(drop_last(t.b))};
}

namespace {

bool table_rows(const FactorShape& P, const FactorShape& Q1, const FactorShape& Q2) {
    if (Q1.full() && Q2.full()) return true;
    if (Q1.mirabolic() && Q2.full()) return true;
    if (Q2.gl1()) return true;
    if (Q1.maximal() && Q2.gl2_full()) return true;
    if (P.blocks <= 6 && Q1.maximal() && Q2.full()) return true;
    if (P.blocks <= 4 && Q1.blocks <= 4 && Q2.full()) return true;
    if (P.blocks <= 4 && P.min_block == 1 && Q2.full()) return true;
    if (P.blocks <= 4 && Q2.full() && Q2.total <= 2) return true;
    if (P.blocks <= 3 && P.min_block == 1) return true;
    if (P.blocks <= 3 && P.min_block == 2 && Q2.blocks <= 2) return true;
    if (P.blocks <= 3 && (Q2.full() || Q2.mirabolic())) return true;
    if (P.blocks <= 3 && Q1.blocks <= 4 && Q2.maximal()) return true;
    if (P.blocks <= 2) return true;
    return false;
}

}  // namespace

bool classify_table(const ParabolicShape& shape) {
    return table_rows(shape.p, shape.q1, shape.q2) ||
           table_rows(shape.p, shape.q2, shape.q1);
}

bool is_finite_multi_flag_A(const std::vector<Composition>& factors) {
    if (factors.empty()) throw std::invalid_argument("multi-flag decider: no factors");
    int n = composition_sum(factors[0]);
    if (n < 1) throw std::invalid_argument("multi-flag decider: empty space");
    long long coeff = static_cast<long long>(factors.size()) - 2;
    std::vector<std::vector<int>> dps;
    for (const auto& f : factors) {
        if (composition_sum(f) != n)
            throw std::invalid_argument("multi-flag decider: mismatched totals");
        dps.push_back(min_norms(f));
    }
    // infinite iff some nonzero summand has Tits value <= 0; the minimal
    // squared norm per factor and total is attained independently
    for (int n0 = 1; n0 <= n; ++n0) {
        long long norm = 0;
        for (const auto& dp : dps) norm += dp[n0];
        if (norm <= coeff * n0 * n0) return false;
    }
    return true;
}

bool is_finite_triple_flag_A(const Composition& a1, const Composition& a2,
                             const Composition& a3) {
    return is_finite_multi_flag_A({a1, a2, a3});
}

}  // namespace dfv
