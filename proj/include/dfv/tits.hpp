#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfv/rational.hpp"

namespace dfv {

/**
 * Tits-form engine for star quivers and the finite-type deciders: the
 * summand criterion and forbidden-pattern rule for the double flag setting,
 * the parabolic-shape classification table, and the (FT) condition for
 * multiple flags in type A.
 */

using Composition = std::vector<int>;

int composition_sum(const Composition& c);

// (a, b, c): compositions of a common n with sum(a') + sum(b') = sum(c),
// where a' and b' drop the last part.  Houses p = sum(a'), q = sum(b').
struct JointTriple {
    Composition a, b, c;

    bool operator==(const JointTriple&) const = default;
    auto operator<=>(const JointTriple&) const = default;

    int n() const;
    int p() const;  // sum of a without its last part
    int q() const;  // sum of b without its last part
};

bool in_lambda_j(const JointTriple& t);
// all triples in Lambda^J with total n; every non-last part positive
// (last parts may be zero -- they are determined by the flag data)
std::vector<JointTriple> enumerate_lambda_j(int n);

// dimension vector of the star quiver attached to a tuple of flags: the
// central value n plus one branch of proper partial sums per factor
struct DimensionVector {
    int n = 0;
    std::vector<std::vector<int>> branches;
};

DimensionVector dimension_vector(const std::vector<Composition>& factors);
// (d|d) = (sum_j |a_j|^2 - (N - 2) n^2) / 2 for N factors with common total n
Rational tits_form(const std::vector<Composition>& factors);

// summand criterion: finite iff every nonzero summand mu in Lambda^J with
// t - mu in Lambda^J has Tits value >= 1; minimized by dynamic programming
// over componentwise-bounded sub-compositions
bool is_finite_bruteforce(const JointTriple& t);

// forbidden-pattern criterion: finite iff no summand matches one of the six
// excluded (a0'+, b0'+, c0) patterns, up to swapping the first two
bool is_finite_fast(const JointTriple& t);
// a concrete infinite-type summand exhibiting the matched pattern, if any
std::optional<JointTriple> forbidden_witness(const JointTriple& t);

// shape descriptor of one parabolic factor: nonzero blocks only
struct FactorShape {
    int blocks = 0;     // number of nonzero blocks
    int min_block = 0;  // smallest nonzero block (0 when there is none)
    int total = 0;      // sum of blocks

    bool full() const { return blocks <= 1; }                      // whole GL
    bool maximal() const { return blocks == 2; }
    bool mirabolic() const { return blocks == 2 && min_block == 1; }
    bool gl1() const { return total <= 1; }  // trivial flag (includes GL_0)
    bool gl2_full() const { return total == 2 && blocks == 1; }
};

struct ParabolicShape {
    FactorShape p, q1, q2;  // P from c, Q1 from a', Q2 from b'
};

FactorShape factor_shape(const Composition& blocks);
ParabolicShape shape_of(const JointTriple& t);
// classification-table rule engine over (|P|, |Q1|, |Q2|) descriptors,
// up to switching Q1 and Q2
bool classify_table(const ParabolicShape& shape);

// (FT) decider for tuples of flags in type A: finite iff every nonzero
// componentwise summand with equal totals across factors has Tits value >= 1
bool is_finite_multi_flag_A(const std::vector<Composition>& factors);
bool is_finite_triple_flag_A(const Composition& a1, const Composition& a2,
                             const Composition& a3);

}  // namespace dfv
