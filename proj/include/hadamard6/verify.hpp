#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hadamard6/mat_core.hpp"

namespace hadamard6 {

struct HadamardReport {
    double unimodular_error = 0.0;  // max | |h_ij| - 1 |
    double unitarity_error = 0.0;   // max Frobenius residual of HH^dag, H^dag H vs 6E
    bool is_hadamard = false;       // both errors below their tolerances
};

using Perm6 = std::array<int, 6>;

/// Witnessed equivalence verdict. When equivalent, permuting h1 by
/// (row_perm, col_perm) and dephasing reproduces dephase(h2):
///   dephase(i,j -> h1[row_perm[i]][col_perm[j]]) == dephase(h2).
struct EquivalenceReport {
    bool equivalent = false;
    std::optional<Perm6> row_perm;
    std::optional<Perm6> col_perm;
    double max_entry_error = 0.0;
};

struct EquivalenceOptions {
    bool use_fingerprint = true;  // pre-filter; mismatch short-circuits to "not equivalent"
    double entry_tol = 1e-8;      // dephased entrywise comparison tolerance
};

/// Equivalence-invariant multiset of quartic-product phases, folded to
/// [0, pi] and quantized in units of 1e-6 rad. Equality is necessary (not
/// sufficient) for matrix equivalence.
struct Fingerprint {
    std::vector<std::int64_t> keys;  // sorted

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

HadamardReport is_hadamard(const Mat6& h, const Tolerance& tol = {});

/// Divide out the first row and column phases; first row/column of the result
/// are exactly 1. Equivalent to the input, idempotent, and invariant under
/// unitary diagonal actions on either side.
Mat6 dephase(const Mat6& h);

/// True iff the 2x2 submatrix on rows (i,l), columns (j,k) has unimodular
/// entries and orthogonal rows within tolerance.
bool submatrix_is_hadamard(const Mat6& h, int i, int l, int j, int k, const Tolerance& tol = {});

/// Existence scan over all 15 x 15 row/column pairs for a Hadamard 2x2
/// submatrix. Requires a Hadamard input.
bool h2_reducible(const Mat6& h, const Tolerance& tol = {});

/// Cross-check route for the same predicate: some entry of dephase(h) lies
/// within eps_unimodular of -1. Agrees with the scan for Hadamard matrices.
bool dephased_has_minus_one(const Mat6& h, const Tolerance& tol = {});

Fingerprint fingerprint(const Mat6& h, const Tolerance& tol = {});

/// Exhaustive decision over all 720 x 720 permutation pairs, comparing
/// dephased forms entrywise; first witness in lexicographic order.
EquivalenceReport are_equivalent(const Mat6& h1, const Mat6& h2, const Tolerance& tol = {},
                                 const EquivalenceOptions& opts = {});

}  // namespace hadamard6
