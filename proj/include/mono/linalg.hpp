#pragma once

#include "mono/common.hpp"

namespace mono {

// Small dense rational matrices; enough exact linear algebra for the
// coordinate systems that come up here (n <= 8 everywhere).
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static QMat identity(int n);
    QMat transposed() const;
    QMat operator*(const QMat& o) const;
};

Rat qmat_det(QMat m);
// inverse of a nonsingular square matrix
QMat qmat_inverse(const QMat& m);
// basis of the right kernel {x : m x = 0}, as columns stacked into a QMat
std::vector<std::vector<Rat>> qmat_right_kernel(QMat m);
// solve m x = b for square nonsingular m
std::vector<Rat> qmat_solve(const QMat& m, const std::vector<Rat>& b);
int qmat_rank(QMat m);

}  // namespace mono
