#include "dfv/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfv {

uint64_t Splitmix::next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int Splitmix::uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

RationalMatrix stacked_matrix(const StackedPartialPermutation& w) {
    int n = w.p + w.q;
    RationalMatrix m(n, w.r);
    for (int j = 0; j < w.r; ++j) {
        if (w.columns[j].plus) m(w.columns[j].plus - 1, j) = 1;
        if (w.columns[j].minus) m(w.p + w.columns[j].minus - 1, j) = 1;
    }
    return m;
}

RationalMatrix theta_part(const RationalMatrix& y, int p, int q) {
    if (y.rows != p + q || y.cols != p + q)
        throw std::invalid_argument("theta_part: size mismatch");
    RationalMatrix r(y.rows, y.cols);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) r(i, j) = y(i, j);
    for (int i = p; i < p + q; ++i)
        for (int j = p; j < p + q; ++j) r(i, j) = y(i, j);
    return r;
}

RationalMatrix minus_theta_part(const RationalMatrix& y, int p, int q) {
    return y - theta_part(y, p, q);
}

bool is_nilpotent(const RationalMatrix& x) {
    if (x.rows != x.cols) throw std::invalid_argument("is_nilpotent: not square");
    return x.power(x.rows).is_zero();
}

std::vector<RationalMatrix> conormal_basis(const StackedPartialPermutation& w) {
    int n = w.p + w.q;
    RationalMatrix W = stacked_matrix(w);
    RationalMatrix C = nullspace(W.transposed());  // rows annihilate [omega]
    auto var = [n](int i, int j) { return i * n + j; };
    std::vector<std::vector<Rational>> constraints;
    // Im y in [omega]: C y = 0
    for (int c = 0; c < C.rows; ++c)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> row(n * n);
            for (int k = 0; k < n; ++k) row[var(k, j)] = C(c, k);
            constraints.push_back(std::move(row));
        }
    // [omega] in ker y: y W = 0
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < W.cols; ++m) {
            std::vector<Rational> row(n * n);
            for (int k = 0; k < n; ++k) row[var(i, k)] = W(k, m);
            constraints.push_back(std::move(row));
        }
    // diagonal blocks strictly upper triangular
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            bool plus_block = i < w.p && j < w.p;
            bool minus_block = i >= w.p && j >= w.p;
            if (!plus_block && !minus_block) continue;
            std::vector<Rational> row(n * n);
            row[var(i, j)] = 1;
            constraints.push_back(std::move(row));
        }
    RationalMatrix M(static_cast<int>(constraints.size()), n * n);
    for (size_t i = 0; i < constraints.size(); ++i)
        for (int j = 0; j < n * n; ++j) M(static_cast<int>(i), j) = constraints[i][j];
    RationalMatrix basis = nullspace(M);
    std::vector<RationalMatrix> out;
    for (int b = 0; b < basis.rows; ++b) {
        RationalMatrix y(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) y(i, j) = basis(b, var(i, j));
        out.push_back(std::move(y));
    }
    return out;
}

Partition jordan_type(const RationalMatrix& x) {
    if (!is_nilpotent(x)) throw std::invalid_argument("jordan_type: not nilpotent");
    int n = x.rows;
    // conjugate-partition columns from kernel growth
    std::vector<int> ker(n + 1, 0);
    RationalMatrix pw = RationalMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * x;
        ker[k] = n - rank(pw);
        if (ker[k] == n) {
            for (int m = k + 1; m <= n; ++m) ker[m] = n;
            break;
        }
    }
    Partition conj_cols;
    for (int k = 1; k <= n; ++k) {
        int d = ker[k] - ker[k - 1];
        if (d == 0) break;
        conj_cols.push_back(d);
    }
    return conjugate(conj_cols);
}

SignedYoungDiagram signed_jordan_type(const RationalMatrix& x, int p, int q) {
    int n = p + q;
    if (x.rows != n || x.cols != n)
        throw std::invalid_argument("signed_jordan_type: size mismatch");
    if (!theta_part(x, p, q).is_zero())
        throw std::invalid_argument("signed_jordan_type: not block anti-diagonal");
    if (!is_nilpotent(x))
        throw std::invalid_argument("signed_jordan_type: not nilpotent");
    std::vector<int> nplus, nminus;
    RationalMatrix pw = RationalMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * x;
        // dim ker x^k cap V^{+/-} from the rank of the restricted columns
        RationalMatrix rp(n, p), rm(n, q);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < p; ++j) rp(i, j) = pw(i, j);
            for (int j = 0; j < q; ++j) rm(i, j) = pw(i, p + j);
        }
        nplus.push_back(p - rank(rp));
        nminus.push_back(q - rank(rm));
    }
    return signed_diagram_from_column_counts(nplus, nminus);
}

namespace {

RationalMatrix sample_conormal(const std::vector<RationalMatrix>& basis, int n,
                               Splitmix& rng, int bound) {
    RationalMatrix y(n, n);
    for (const auto& b : basis) {
        int c = rng.uniform(-bound, bound);
        if (c != 0) y = y + b.scaled(c);
    }
    return y;
}

}  // namespace

std::pair<Partition, Partition> oracle_phi_k(const StackedPartialPermutation& w,
                                             uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("oracle_phi_k: trials < 1");
    int n = w.p + w.q;
    auto basis = conormal_basis(w);
    for (int bound : {20, 200}) {
        std::vector<std::pair<Partition, Partition>> results;
        for (int t = 0; t < trials; ++t) {
            Splitmix rng(seed * 0x51ull + static_cast<uint64_t>(t) * 0x9e37ull +
                         static_cast<uint64_t>(bound));
            RationalMatrix y = sample_conormal(basis, n, rng, bound);
            if (!(y * y).is_zero())
                throw std::logic_error("oracle_phi_k: sampled y with y^2 != 0");
            RationalMatrix th = theta_part(y, w.p, w.q);
            RationalMatrix a(w.p, w.p), d(w.q, w.q);
            for (int i = 0; i < w.p; ++i)
                for (int j = 0; j < w.p; ++j) a(i, j) = th(i, j);
            for (int i = 0; i < w.q; ++i)
                for (int j = 0; j < w.q; ++j) d(i, j) = th(w.p + i, w.p + j);
            results.push_back({jordan_type(a), jordan_type(d)});
        }
        // the generic (dense-orbit) value dominates every sampled value
        for (const auto& cand : results) {
            bool top = true;
            int hits = 0;
            for (const auto& other : results) {
                if (cand == other) ++hits;
                if (!dominates(cand.first, other.first) ||
                    !dominates(cand.second, other.second))
                    top = false;
            }
            if (top && 2 * hits >= trials) return cand;
        }
    }
    throw std::runtime_error("oracle_phi_k: no dominant sample found");
}

SignedYoungDiagram oracle_phi_s(const StackedPartialPermutation& w, uint64_t seed,
                                int trials) {
    if (trials < 1) throw std::invalid_argument("oracle_phi_s: trials < 1");
    int n = w.p + w.q;
    auto basis = conormal_basis(w);
    for (int bound : {20, 200}) {
        std::vector<SignedYoungDiagram> results;
        for (int t = 0; t < trials; ++t) {
            Splitmix rng(seed * 0x51ull + static_cast<uint64_t>(t) * 0x9e37ull +
                         static_cast<uint64_t>(bound) + 0xabcdull);
            RationalMatrix y = sample_conormal(basis, n, rng, bound);
            RationalMatrix mth = minus_theta_part(y, w.p, w.q);
            if (!is_nilpotent(mth))
                throw std::logic_error("oracle_phi_s: anti-diagonal part not nilpotent");
            results.push_back(signed_jordan_type(mth, w.p, w.q));
        }
        for (const auto& cand : results) {
            bool top = true;
            int hits = 0;
            for (const auto& other : results) {
                if (cand == other) ++hits;
                if (!signed_dominates(cand, other)) top = false;
            }
            if (top && 2 * hits >= trials) return cand;
        }
    }
    throw std::runtime_error("oracle_phi_s: no dominant sample found");
}

int hom_dim(const StackedPartialPermutation& w) {
    RationalMatrix W = stacked_matrix(w);
    RationalMatrix C = nullspace(W.transposed());
    // variables: upper triangular (with diagonal) entries of A and D
    std::vector<std::pair<int, int>> vars;  // global (i, j) in p+q coordinates
    for (int i = 0; i < w.p; ++i)
        for (int j = i; j < w.p; ++j) vars.push_back({i, j});
    for (int i = 0; i < w.q; ++i)
        for (int j = i; j < w.q; ++j) vars.push_back({w.p + i, w.p + j});
    RationalMatrix M(C.rows * W.cols, static_cast<int>(vars.size()));
    int row = 0;
    for (int c = 0; c < C.rows; ++c)
        for (int m = 0; m < W.cols; ++m, ++row)
            for (size_t v = 0; v < vars.size(); ++v) {
                auto [i, j] = vars[v];
                M(row, static_cast<int>(v)) = C(c, i) * W(j, m);
            }
    return static_cast<int>(vars.size()) - rank(M);
}

int hom_with_indec(const StackedPartialPermutation& w, const Indecomposable& ind) {
    using K = Indecomposable::Kind;
    if (ind.kind == K::plus_free) return ind.i;
    if (ind.kind == K::minus_free) return ind.j;
    int n = w.p + w.q;
    RationalMatrix W = stacked_matrix(w);
    int fdim = 0;
    RationalMatrix F(n, n);  // columns spanning F_i^+ (+ F_j^-)
    if (ind.kind == K::plus_marked || ind.kind == K::edge)
        for (int i = 0; i < ind.i; ++i) F(i, fdim++) = 1;
    if (ind.kind == K::minus_marked || ind.kind == K::edge)
        for (int j = 0; j < ind.j; ++j) F(w.p + j, fdim++) = 1;
    RationalMatrix Fc(n, fdim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < fdim; ++j) Fc(i, j) = F(i, j);
    // dim(F cap W) = dim F + dim W - dim(F + W)
    return fdim + w.r - rank(hstack(Fc, W));
}

RationalMatrix standard_form(bool symplectic, int n) {
    if (symplectic && n % 2 != 0)
        throw std::invalid_argument("standard_form: symplectic size must be even");
    RationalMatrix S(n, n);
    for (int i = 0; i < n; ++i)
        S(i, n - 1 - i) = (symplectic && i >= n / 2) ? -1 : 1;
    return S;
}

RationalMatrix form_adjoint(const RationalMatrix& y, const RationalMatrix& form) {
    return inverse_matrix(form) * y.transposed() * form;
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool nilpotency_case_check(NilCase c, const RationalMatrix& y, int p, int q) {
    int n = p + q;
    require(y.rows == n && y.cols == n, "nilpotency case: size mismatch");
    if (c == NilCase::Symplectic || c == NilCase::Orthogonal) {
        RationalMatrix S = standard_form(c == NilCase::Symplectic, n);
        RationalMatrix ys = form_adjoint(y, S);
        require((y * y).is_zero(), "form case: y^2 != 0");
        RationalMatrix v = (y - ys).scaled(Rational(1, 2));
        require(is_nilpotent(v), "form case: skew part not nilpotent");
        RationalMatrix wpart = (y + ys).scaled(Rational(1, 2));
        return is_nilpotent(wpart);
    }
    require(is_nilpotent(y), "nilpotency case: y not nilpotent");
    RationalMatrix v = theta_part(y, p, q);
    require(is_nilpotent(v), "nilpotency case: diagonal part not nilpotent");
    RationalMatrix a(p, p), d(q, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) a(i, j) = y(i, j);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) d(i, j) = y(p + i, p + j);
    switch (c) {
        case NilCase::A:
            require((y * y).is_zero(), "case A: y^2 != 0");
            break;
        case NilCase::B:
            require((y * y * y).is_zero(), "case B: y^3 != 0");
            require(rank(y) == 2, "case B: rank != 2");
            break;
        case NilCase::C:
            require((y * y * y).is_zero(), "case C: y^3 != 0");
            require((a * a).is_zero(), "case C: a^2 != 0");
            require((d * d).is_zero(), "case C: d^2 != 0");
            break;
        case NilCase::D:
            require((y * y * y).is_zero(), "case D: y^3 != 0");
            require(q == 2, "case D: q != 2");
            break;
        case NilCase::E:
            require(rank(a) <= 1, "case E: rank a > 1");
            require(d.is_zero(), "case E: d != 0");
            break;
        case NilCase::F:
            require(q == 2, "case F: q != 2");
            require((a * a).is_zero(), "case F: a^2 != 0");
            require(d.is_zero(), "case F: d != 0");
            break;
        case NilCase::G:
            require(q == 1, "case G: q != 1");
            break;
        default:
            break;
    }
    return is_nilpotent(minus_theta_part(y, p, q));
}

namespace {

std::vector<int> random_permutation(int n, Splitmix& rng) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform(0, i)]);
    return perm;
}

RationalMatrix permuted(const RationalMatrix& nmat, const std::vector<int>& perm) {
    int n = nmat.rows;
    RationalMatrix y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y(perm[i], perm[j]) = nmat(i, j);
    return y;
}

int nonzero_entry(Splitmix& rng) {
    int v = rng.uniform(1, 6);
    return v <= 3 ? v : 3 - v;  // 1..3 or -1..-3
}

// random upper unitriangular conjugation keeps strict upper triangularity
RationalMatrix unitriangular_twist(const RationalMatrix& nmat, Splitmix& rng) {
    int n = nmat.rows;
    RationalMatrix u = RationalMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform(0, 1)) u(i, j) = rng.uniform(-2, 2);
    return u * nmat * inverse_matrix(u);
}

}  // namespace

NilInstance random_nil_instance(NilCase c, uint64_t seed) {
    Splitmix rng(seed ^ 0xd1f4ull);
    if (c == NilCase::Symplectic || c == NilCase::Orthogonal) {
        bool symp = c == NilCase::Symplectic;
        int n = symp ? 2 * rng.uniform(1, 3) : rng.uniform(2, 6);
        RationalMatrix S = standard_form(symp, n);
        // split strictly upper matrix: y^2 = 0
        int m = rng.uniform(1, n - 1);
        RationalMatrix y(n, n);
        for (int i = 0; i < m; ++i)
            for (int j = m; j < n; ++j)
                if (rng.uniform(0, 1)) y(i, j) = nonzero_entry(rng);
        // randomize by form-preserving conjugations g = 1 + h, h* = -h, h^2 = 0
        for (int rep = 0; rep < 4; ++rep) {
            int i = rng.uniform(0, n - 2);
            int j = rng.uniform(i + 1, n - 1);
            RationalMatrix h(n, n);
            h(i, j) = nonzero_entry(rng);
            h = h - form_adjoint(h, S);
            if (!(h * h).is_zero()) continue;
            RationalMatrix g = RationalMatrix::identity(n) + h;
            RationalMatrix ginv = RationalMatrix::identity(n) - h;
            if (!(g.transposed() * S * g == S))
                throw std::logic_error("form instance: g does not preserve the form");
            y = g * y * ginv;
        }
        if (!(y * y).is_zero())
            throw std::logic_error("form instance: y^2 != 0 after conjugation");
        return {y, n, 0};
    }
    int p = 0, q = 0;
    RationalMatrix nmat;
    switch (c) {
        case NilCase::A: {
            p = rng.uniform(1, 4);
            q = rng.uniform(1, 4);
            int n = p + q;
            int m = rng.uniform(1, n - 1);
            nmat = RationalMatrix(n, n);
            for (int i = 0; i < m; ++i)
                for (int j = m; j < n; ++j)
                    if (rng.uniform(0, 1)) nmat(i, j) = nonzero_entry(rng);
            break;
        }
        case NilCase::B: {
            p = rng.uniform(1, 3);
            q = rng.uniform(1, 3);
            int n = p + q;
            while (n < 3) n = ++p + q;
            nmat = RationalMatrix(n, n);
            if (n >= 4 && rng.uniform(0, 1)) {
                nmat(0, 1) = 1;  // J2 + J2
                nmat(2, 3) = 1;
            } else {
                nmat(0, 1) = 1;  // J3
                nmat(1, 2) = 1;
            }
            nmat = unitriangular_twist(nmat, rng);
            break;
        }
        case NilCase::C: {
            p = q = 2;
            nmat = RationalMatrix(4, 4);
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (rng.uniform(0, 1)) nmat(i, j) = nonzero_entry(rng);
            nmat(1, 2) = 0;  // kills the only length-3 path: n^3 = 0
            break;
        }
        case NilCase::D: {
            p = rng.uniform(1, 4);
            q = 2;
            int n = p + q;
            nmat = RationalMatrix(n, n);
            int at = 0;
            while (at < n) {  // Jordan blocks of size <= 3
                int blk = std::min(rng.uniform(1, 3), n - at);
                for (int i = 0; i + 1 < blk; ++i) nmat(at + i, at + i + 1) = 1;
                at += blk;
            }
            nmat = unitriangular_twist(nmat, rng);
            break;
        }
        case NilCase::E:
        case NilCase::F: {
            p = rng.uniform(2, 4);
            q = c == NilCase::F ? 2 : rng.uniform(1, 3);
            int n = p + q;
            nmat = RationalMatrix(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.uniform(0, 1)) nmat(i, j) = nonzero_entry(rng);
            break;
        }
        case NilCase::G: {
            p = rng.uniform(1, 5);
            q = 1;
            int n = p + q;
            nmat = RationalMatrix(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng.uniform(0, 1)) nmat(i, j) = nonzero_entry(rng);
            break;
        }
        default:
            break;
    }
    int n = p + q;
    std::vector<int> perm = random_permutation(n, rng);
    if (c == NilCase::E || c == NilCase::F) {
        // positions mapping into the - block carry no d entries; the + block
        // keeps rank <= 1 (case E) or a split pattern with a^2 = 0 (case F)
        std::vector<int> plus_positions;
        for (int i = 0; i < n; ++i)
            if (perm[i] < p) plus_positions.push_back(i);
        int keep_row = -1, keep_col = -1;
        int split = rng.uniform(1, std::max(1, p - 1));
        if (c == NilCase::E && !plus_positions.empty()) {
            keep_row = rng.uniform(0, p - 1);
            keep_col = rng.uniform(0, p - 1);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                bool ip = perm[i] < p, jp = perm[j] < p;
                if (!ip && !jp) nmat(i, j) = 0;  // d = 0
                if (ip && jp) {
                    int ii = static_cast<int>(std::lower_bound(plus_positions.begin(),
                                                               plus_positions.end(), i) -
                                              plus_positions.begin());
                    int jj = static_cast<int>(std::lower_bound(plus_positions.begin(),
                                                               plus_positions.end(), j) -
                                              plus_positions.begin());
                    if (c == NilCase::E) {
                        if (ii != keep_row || jj != keep_col) nmat(i, j) = 0;
                    } else {
                        if (!(ii < split && jj >= split)) nmat(i, j) = 0;
                    }
                }
            }
    }
    return {permuted(nmat, perm), p, q};
}

RationalMatrix counterexample_6x6() {
    std::vector<std::vector<int>> a = {{0, 1, 0}, {0, 0, -1}, {0, 0, 0}};
    std::vector<std::vector<int>> b = {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
    RationalMatrix y(6, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            y(i, j) = a[i][j];
            y(3 + i, 3 + j) = -a[i][j];
            y(3 + i, j) = b[i][j];
        }
    for (int i = 0; i < 3; ++i) y(i, 3 + i) = 1;
    return y;
}

}  // namespace dfv
