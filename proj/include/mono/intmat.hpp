#pragma once

#include "mono/common.hpp"

namespace mono {

// Dense integer matrix, row major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMat identity(int n);
    bool operator==(const IntMat& o) const = default;
};

// Canonical row Hermite normal form of the row lattice: row echelon, pivots
// positive, entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so the result has rank-many rows.
IntMat hnf(const IntMat& m);

// Like hnf but requires full column rank and a square result.
IntMat hnf_full_rank(const IntMat& m);

// Basis of the left integer kernel {u : u m = 0}, as rows.
IntMat left_kernel(const IntMat& m);

// Intersection of the row lattices of two full-rank n x n integer matrices.
IntMat lattice_intersect(const IntMat& a, const IntMat& b);

// Exact determinant (Bareiss).
Int intmat_det(IntMat m);

}  // namespace mono
