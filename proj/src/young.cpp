#include "dfv/young.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dfv {

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

int partition_size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

Partition conjugate(const Partition& p) {
    Partition q;
    if (p.empty()) return q;
    q.resize(p[0]);
    for (int c = 0; c < p[0]; ++c) {
        int cnt = 0;
        for (int part : p)
            if (part > c) ++cnt;
        q[c] = cnt;
    }
    return q;
}

bool partition_contains(const Partition& outer, const Partition& inner) {
    if (inner.size() > outer.size()) return false;
    for (size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

bool column_strip_leq(const Partition& inner, const Partition& outer) {
    if (!partition_contains(outer, inner)) return false;
    for (size_t i = 0; i < outer.size(); ++i) {
        int in = i < inner.size() ? inner[i] : 0;
        if (outer[i] - in > 1) return false;
    }
    return true;
}

int boxes_in_first_columns(const Partition& lam, int c) {
    int total = 0;
    for (int part : lam) total += std::min(part, c);
    return total;
}

bool dominates(const Partition& a, const Partition& b) {
    if (partition_size(a) != partition_size(b))
        throw std::invalid_argument("dominates: unequal sizes");
    int sa = 0, sb = 0;
    size_t m = std::max(a.size(), b.size());
    for (size_t i = 0; i < m; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

std::string partition_to_string(const Partition& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

Partition partition_from_string(const std::string& s) {
    Partition p;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        p.push_back(std::stoi(tok));
    }
    if (!is_partition(p)) throw std::invalid_argument("not a partition: " + s);
    return p;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Partition> column_strip_subdiagrams(const Partition& outer) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == outer.size()) {
            Partition trimmed = cur;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.push_back(trimmed);
            return;
        }
        int hi = outer[i];
        int lo = std::max(outer[i] - 1, 0);
        for (int v = hi; v >= lo; --v) {
            if (!cur.empty() && v > cur.back()) continue;
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool is_standard(const StandardTableau& t) {
    std::set<int> seen;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        if (row.empty()) return false;
        if (i + 1 < t.rows.size() && t.rows[i + 1].size() > row.size()) return false;
        for (size_t j = 0; j < row.size(); ++j) {
            if (!seen.insert(row[j]).second) return false;
            if (j + 1 < row.size() && row[j] >= row[j + 1]) return false;
            if (i + 1 < t.rows.size() && j < t.rows[i + 1].size() &&
                row[j] >= t.rows[i + 1][j])
                return false;
        }
    }
    return true;
}

Partition shape(const StandardTableau& t) {
    Partition p;
    for (const auto& row : t.rows) p.push_back(static_cast<int>(row.size()));
    return p;
}

std::vector<int> tableau_entries(const StandardTableau& t) {
    std::vector<int> e;
    for (const auto& row : t.rows) e.insert(e.end(), row.begin(), row.end());
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<int> reading_word(const StandardTableau& t) {
    std::vector<int> w;
    for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

StandardTableau column_tableau(std::vector<int> entries) {
    std::sort(entries.begin(), entries.end());
    StandardTableau t;
    for (int e : entries) t.rows.push_back({e});
    return t;
}

StandardTableau transpose(const StandardTableau& t) {
    StandardTableau u;
    if (t.rows.empty()) return u;
    u.rows.resize(t.rows[0].size());
    for (const auto& row : t.rows)
        for (size_t j = 0; j < row.size(); ++j) u.rows[j].push_back(row[j]);
    return u;
}

std::vector<StandardTableau> standard_tableaux(const Partition& sh) {
    std::vector<StandardTableau> out;
    int n = partition_size(sh);
    StandardTableau cur;
    cur.rows.resize(sh.size());
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(cur);
            return;
        }
        for (size_t i = 0; i < sh.size(); ++i) {
            size_t len = cur.rows[i].size();
            if (static_cast<int>(len) >= sh[i]) continue;
            if (i > 0 && cur.rows[i - 1].size() <= len) continue;
            cur.rows[i].push_back(next);
            self(self, next + 1);
            cur.rows[i].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

StandardTableau row_insert(const StandardTableau& t, int a) {
    for (const auto& row : t.rows)
        if (std::binary_search(row.begin(), row.end(), a))
            throw std::invalid_argument("row_insert: duplicate entry");
    StandardTableau u = t;
    int x = a;
    for (auto& row : u.rows) {
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return u;
        }
        std::swap(*it, x);
    }
    u.rows.push_back({x});
    return u;
}

std::pair<StandardTableau, int> inverse_row_insert(const StandardTableau& t, int row) {
    if (row < 0 || row >= static_cast<int>(t.rows.size()))
        throw std::invalid_argument("inverse_row_insert: bad row");
    size_t len = t.rows[row].size();
    if (row + 1 < static_cast<int>(t.rows.size()) && t.rows[row + 1].size() >= len)
        throw std::invalid_argument("inverse_row_insert: not an outer corner");
    StandardTableau u = t;
    int x = u.rows[row].back();
    u.rows[row].pop_back();
    if (u.rows[row].empty()) u.rows.erase(u.rows.begin() + row);
    for (int i = row - 1; i >= 0; --i) {
        auto& r = u.rows[i];
        // rightmost entry smaller than x bumps back up
        auto it = std::lower_bound(r.begin(), r.end(), x);
        if (it == r.begin())
            throw std::invalid_argument("inverse_row_insert: no entry to bump");
        --it;
        std::swap(*it, x);
    }
    return {u, x};
}

bool is_valid(const PartialBijection& s) {
    if (s.domain.size() != s.values.size()) return false;
    if (!std::is_sorted(s.domain.begin(), s.domain.end())) return false;
    std::set<int> d(s.domain.begin(), s.domain.end());
    std::set<int> v(s.values.begin(), s.values.end());
    return d.size() == s.domain.size() && v.size() == s.values.size();
}

PartialBijection inverse(const PartialBijection& s) {
    std::map<int, int> m;
    for (size_t i = 0; i < s.domain.size(); ++i) m[s.values[i]] = s.domain[i];
    PartialBijection t;
    for (auto& [v, d] : m) {
        t.domain.push_back(v);
        t.values.push_back(d);
    }
    return t;
}

StandardTableau rs1(const PartialBijection& s) {
    if (!is_valid(s)) throw std::invalid_argument("rs1: invalid partial bijection");
    StandardTableau t;
    for (int v : s.values) t = row_insert(t, v);
    return t;
}

StandardTableau rs2(const PartialBijection& s) { return rs1(inverse(s)); }

std::pair<StandardTableau, StandardTableau> rs(const PartialBijection& s) {
    return {rs1(s), rs2(s)};
}

PartialBijection rs_inverse(const StandardTableau& p, const StandardTableau& q) {
    if (shape(p) != shape(q))
        throw std::invalid_argument("rs_inverse: shape mismatch");
    // q is the recording tableau: undo insertions largest recorded label first
    std::vector<std::pair<int, std::pair<int, int>>> order;  // label -> box
    for (size_t i = 0; i < q.rows.size(); ++i)
        for (size_t j = 0; j < q.rows[i].size(); ++j)
            order.push_back({q.rows[i][j], {static_cast<int>(i), static_cast<int>(j)}});
    std::sort(order.begin(), order.end());
    StandardTableau cur = p;
    PartialBijection s;
    std::vector<std::pair<int, int>> pairs;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [row, col] = it->second;
        if (row >= static_cast<int>(cur.rows.size()) ||
            col != static_cast<int>(cur.rows[row].size()) - 1)
            throw std::invalid_argument("rs_inverse: q is not a recording tableau");
        auto [smaller, val] = inverse_row_insert(cur, row);
        cur = smaller;
        pairs.push_back({it->first, val});
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto& [d, v] : pairs) {
        s.domain.push_back(d);
        s.values.push_back(v);
    }
    return s;
}

StandardTableau plactic_product(const StandardTableau& t, const StandardTableau& u) {
    auto et = tableau_entries(t);
    auto eu = tableau_entries(u);
    std::vector<int> inter;
    std::set_intersection(et.begin(), et.end(), eu.begin(), eu.end(),
                          std::back_inserter(inter));
    if (!inter.empty())
        throw std::invalid_argument("plactic_product: overlapping entries");
    StandardTableau r = t;
    for (int a : reading_word(u)) r = row_insert(r, a);
    return r;
}

StandardTableau schutzenberger(const StandardTableau& t) {
    auto e = tableau_entries(t);
    int n = static_cast<int>(e.size());
    for (int i = 0; i < n; ++i)
        if (e[i] != i + 1)
            throw std::invalid_argument("schutzenberger: entries must be 1..n");
    StandardTableau cur = t;
    StandardTableau out;
    out.rows.assign(t.rows.size(), {});
    for (size_t i = 0; i < t.rows.size(); ++i)
        out.rows[i].assign(t.rows[i].size(), 0);
    for (int step = 1; step <= n; ++step) {
        // remove the front entry and slide the hole to an outer corner
        int r = 0, c = 0;
        while (true) {
            bool has_right = c + 1 < static_cast<int>(cur.rows[r].size());
            bool has_down = r + 1 < static_cast<int>(cur.rows.size()) &&
                            c < static_cast<int>(cur.rows[r + 1].size());
            if (!has_right && !has_down) break;
            if (!has_down || (has_right && cur.rows[r][c + 1] < cur.rows[r + 1][c])) {
                cur.rows[r][c] = cur.rows[r][c + 1];
                ++c;
            } else {
                cur.rows[r][c] = cur.rows[r + 1][c];
                ++r;
            }
        }
        out.rows[r][c] = n + 1 - step;
        cur.rows[r].pop_back();
        if (cur.rows[r].empty()) cur.rows.pop_back();
    }
    return out;
}

static bool signed_row_before(const SignedRow& a, const SignedRow& b) {
    if (a.len != b.len) return a.len > b.len;
    return a.sign == '+' && b.sign == '-';
}

SignedYoungDiagram make_signed_diagram(std::vector<SignedRow> rows) {
    for (const auto& r : rows) {
        if (r.len <= 0) throw std::invalid_argument("signed row length must be positive");
        if (r.sign != '+' && r.sign != '-')
            throw std::invalid_argument("signed row sign must be + or -");
    }
    std::sort(rows.begin(), rows.end(), signed_row_before);
    return SignedYoungDiagram{std::move(rows)};
}

bool operator<(const SignedYoungDiagram& a, const SignedYoungDiagram& b) {
    auto key = [](const SignedYoungDiagram& d) {
        std::vector<std::pair<int, char>> k;
        for (const auto& r : d.rows) k.push_back({r.len, r.sign});
        return k;
    };
    return key(a) < key(b);
}

static char sign_at(const SignedRow& r, int c) {
    // column c (1-based) of a row with alternating signs
    bool lead = (c % 2) == 1;
    if (r.sign == '+') return lead ? '+' : '-';
    return lead ? '-' : '+';
}

std::pair<int, int> signed_signature(const SignedYoungDiagram& d) {
    int plus = 0, minus = 0;
    for (const auto& r : d.rows)
        for (int c = 1; c <= r.len; ++c)
            (sign_at(r, c) == '+' ? plus : minus)++;
    return {plus, minus};
}

Partition signed_shape(const SignedYoungDiagram& d) {
    Partition p;
    for (const auto& r : d.rows) p.push_back(r.len);
    std::sort(p.rbegin(), p.rend());
    return p;
}

std::pair<std::vector<int>, std::vector<int>> signed_column_counts(const SignedYoungDiagram& d) {
    int cmax = 0;
    for (const auto& r : d.rows) cmax = std::max(cmax, r.len);
    std::vector<int> np(cmax, 0), nm(cmax, 0);
    for (const auto& r : d.rows)
        for (int c = 1; c <= r.len; ++c)
            (sign_at(r, c) == '+' ? np : nm)[c - 1]++;
    for (int c = 1; c < cmax; ++c) {
        np[c] += np[c - 1];
        nm[c] += nm[c - 1];
    }
    return {np, nm};
}

SignedYoungDiagram signed_diagram_from_column_counts(std::vector<int> nplus,
                                                     std::vector<int> nminus) {
    size_t cmax = std::max(nplus.size(), nminus.size());
    while (nplus.size() < cmax) nplus.push_back(nplus.empty() ? 0 : nplus.back());
    while (nminus.size() < cmax) nminus.push_back(nminus.empty() ? 0 : nminus.back());
    // per-column increments; rows of length >= c starting with + contribute
    // to the + increment when c is odd and to the - increment when c is even
    std::vector<int> lead_plus(cmax + 2, 0), lead_minus(cmax + 2, 0);
    for (size_t c = 1; c <= cmax; ++c) {
        int dp = nplus[c - 1] - (c >= 2 ? nplus[c - 2] : 0);
        int dm = nminus[c - 1] - (c >= 2 ? nminus[c - 2] : 0);
        if (dp < 0 || dm < 0)
            throw std::invalid_argument("signed diagram counts: decreasing increment");
        lead_plus[c] = (c % 2 == 1) ? dp : dm;
        lead_minus[c] = (c % 2 == 1) ? dm : dp;
    }
    std::vector<SignedRow> rows;
    for (size_t c = 1; c <= cmax; ++c) {
        if (lead_plus[c] < lead_plus[c + 1] || lead_minus[c] < lead_minus[c + 1])
            throw std::invalid_argument("signed diagram counts: inconsistent");
        for (int i = 0; i < lead_plus[c] - lead_plus[c + 1]; ++i)
            rows.push_back({static_cast<int>(c), '+'});
        for (int i = 0; i < lead_minus[c] - lead_minus[c + 1]; ++i)
            rows.push_back({static_cast<int>(c), '-'});
    }
    SignedYoungDiagram d = make_signed_diagram(std::move(rows));
    auto [np, nm] = signed_column_counts(d);
    np.resize(cmax, np.empty() ? 0 : np.back());
    nm.resize(cmax, nm.empty() ? 0 : nm.back());
    if (np != nplus || nm != nminus)
        throw std::invalid_argument("signed diagram counts: no diagram matches");
    return d;
}

bool signed_dominates(const SignedYoungDiagram& a, const SignedYoungDiagram& b) {
    auto [ap, am] = signed_column_counts(a);
    auto [bp, bm] = signed_column_counts(b);
    size_t cmax = std::max(ap.size(), bp.size());
    auto at = [](const std::vector<int>& v, size_t c) {
        if (v.empty()) return 0;
        return c < v.size() ? v[c] : v.back();
    };
    for (size_t c = 0; c < cmax; ++c) {
        if (at(ap, c) > at(bp, c)) return false;
        if (at(am, c) > at(bm, c)) return false;
    }
    return true;
}

std::vector<SignedYoungDiagram> signed_diagrams(int p, int q) {
    std::vector<SignedYoungDiagram> out;
    std::vector<SignedRow> cur;
    auto rec = [&](auto&& self, int restp, int restq, int maxlen) -> void {
        if (restp == 0 && restq == 0) {
            out.push_back(make_signed_diagram(cur));
            return;
        }
        for (int len = std::min(maxlen, restp + restq); len >= 1; --len) {
            for (char sign : {'+', '-'}) {
                if (!cur.empty() && cur.back().len == len && cur.back().sign == '-' &&
                    sign == '+')
                    continue;  // keep rows in canonical order to avoid duplicates
                SignedRow r{len, sign};
                int np = 0, nm = 0;
                for (int c = 1; c <= len; ++c) (sign_at(r, c) == '+' ? np : nm)++;
                if (np > restp || nm > restq) continue;
                cur.push_back(r);
                self(self, restp - np, restq - nm, len);
                cur.pop_back();
            }
        }
    };
    rec(rec, p, q, p + q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string signed_diagram_to_string(const SignedYoungDiagram& d) {
    std::string s;
    for (size_t i = 0; i < d.rows.size(); ++i) {
        if (i) s += ' ';
        for (int c = 1; c <= d.rows[i].len; ++c) s += sign_at(d.rows[i], c);
    }
    return s;
}

}  // namespace dfv
