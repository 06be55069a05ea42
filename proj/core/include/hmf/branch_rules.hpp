#pragma once

#include "hmf/decompose.hpp"
#include "hmf/weight.hpp"

#include <cstdint>

namespace hmf {

// Closed-form branching rules. All weights use doubled coordinates. GL
// weights may carry a global half-integer shift (every coordinate odd); the
// shift is carried through to every factor.

// GL(n) -> GL(1) x GL(n-1). Keys are (c, nu) with c = |mu| - |nu| first.
BranchingMultiset gl_interlace_step(const Weight& mu);

// GL(r+b) -> GL(1)^r x GL(b). Keys are (e_1, ..., e_r, w_1, ..., w_b).
BranchingMultiset gl_branch_levi(const Weight& mu, int r, int b);

// B_k -> D_k when source_is_b, keys of length k; D_k -> B_{k-1} otherwise,
// keys of length k - 1 (the last coordinate is dropped).
BranchingMultiset so_branch_step(const Weight& mu, bool source_is_b);

// GL(p+q) -> GL(p) x GL(q). Keys are (mu, nu) concatenated, multiplicities
// are Littlewood-Richardson coefficients.
BranchingMultiset lr_restrict(const Weight& lambda, int p, int q);

// Littlewood-Richardson coefficient for partitions given in plain integers.
std::int64_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu,
                            const std::vector<int>& nu);

// S^m(C^{2r}) over SU(2)^r; keys are (i_1, -i_1, ..., i_r, -i_r).
BranchingMultiset su2_blocks_symmetric(int m, int r);

// (l1 + l2 repeated j times, l2 repeated n - j times), doubled.
Weight one_gap_family(int j, int l1, int l2, int n);

}  // namespace hmf
