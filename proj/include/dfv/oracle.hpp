#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dfv/orbit.hpp"
#include "dfv/rational.hpp"
#include "dfv/young.hpp"

namespace dfv {

/**
 * Exact linear-algebra realizations of the geometric definitions:
 * conormal directions, generic sampling, (signed) Jordan types, hom-space
 * dimensions and the nilpotency-case harness.  This module is the ground
 * truth for the combinatorial maps.
 */

// deterministic 64-bit PRNG (splitmix64)
struct Splitmix {
    uint64_t state;
    explicit Splitmix(uint64_t seed) : state(seed) {}
    uint64_t next();
    int uniform(int lo, int hi);  // inclusive bounds
};

// the n x r stacked matrix of omega (V+ coordinates first)
RationalMatrix stacked_matrix(const StackedPartialPermutation& w);
// block-diagonal part (a, d) of y
RationalMatrix theta_part(const RationalMatrix& y, int p, int q);
// block-anti-diagonal part (b, c) of y
RationalMatrix minus_theta_part(const RationalMatrix& y, int p, int q);
bool is_nilpotent(const RationalMatrix& x);

// basis of {y : Im y in [omega], [omega] in ker y, diagonal blocks
// strictly upper triangular}
std::vector<RationalMatrix> conormal_basis(const StackedPartialPermutation& w);

Partition jordan_type(const RationalMatrix& x);
SignedYoungDiagram signed_jordan_type(const RationalMatrix& x, int p, int q);

std::pair<Partition, Partition> oracle_phi_k(const StackedPartialPermutation& w,
                                             uint64_t seed, int trials = 5);
SignedYoungDiagram oracle_phi_s(const StackedPartialPermutation& w, uint64_t seed,
                                int trials = 5);

// dimension of {(A, D) upper triangular with (A + D)[omega] in [omega]}
int hom_dim(const StackedPartialPermutation& w);
int hom_with_indec(const StackedPartialPermutation& w, const Indecomposable& ind);

enum class NilCase { A, B, C, D, E, F, G, Symplectic, Orthogonal };

struct NilInstance {
    RationalMatrix y;
    int p = 0, q = 0;  // for the form cases p + q is the ambient size
};

// verify the case hypotheses (throws std::invalid_argument when violated)
// and report whether the anti-diagonal part -- for the form cases, the
// self-adjoint part (y + y*)/2 -- is nilpotent
bool nilpotency_case_check(NilCase c, const RationalMatrix& y, int p, int q);
NilInstance random_nil_instance(NilCase c, uint64_t seed);
// the standard antidiagonal bilinear form used by the form cases
RationalMatrix standard_form(bool symplectic, int n);
// adjoint with respect to the given form
RationalMatrix form_adjoint(const RationalMatrix& y, const RationalMatrix& form);

// the 6x6 element whose anti-diagonal part is not nilpotent even though
// y^4 = 0 and the diagonal part cubes to zero
RationalMatrix counterexample_6x6();

}  // namespace dfv
