#include "mono/linalg.hpp"

namespace mono {

QMat QMat::identity(int n)
{
    QMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

QMat QMat::transposed() const
{
    QMat t(cols, rows);
    for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++) t.at(c, r) = at(r, c);
    return t;
}

QMat QMat::operator*(const QMat& o) const
{
    if (cols != o.rows) throw Error("matrix shape mismatch");
    QMat m(rows, o.cols);
    for (int r = 0; r < rows; r++)
        for (int k = 0; k < cols; k++) {
            const Rat& v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols; c++) m.at(r, c) += v * o.at(k, c);
        }
    return m;
}

// Gaussian elimination to row echelon; returns (rank, det-so-far, pivots).
static int echelon(QMat& m, Rat* det, std::vector<int>* pivots)
{
    int rank = 0;
    if (det) *det = 1;
    for (int col = 0; col < m.cols && rank < m.rows; col++) {
        int piv = -1;
        for (int r = rank; r < m.rows; r++)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int c = 0; c < m.cols; c++) std::swap(m.at(piv, c), m.at(rank, c));
            if (det) *det = -*det;
        }
        if (det) *det *= m.at(rank, col);
        Rat inv = Rat(1) / m.at(rank, col);
        for (int c = col; c < m.cols; c++) m.at(rank, c) *= inv;
        for (int r = 0; r < m.rows; r++) {
            if (r == rank) continue;
            Rat f = m.at(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; c++) m.at(r, c) -= f * m.at(rank, c);
        }
        if (pivots) pivots->push_back(col);
        rank++;
    }
    return rank;
}

Rat qmat_det(QMat m)
{
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    Rat det;
    int rank = echelon(m, &det, nullptr);
    if (rank < m.rows) return Rat(0);
    return det;
}

QMat qmat_inverse(const QMat& m)
{
    if (m.rows != m.cols) throw Error("inverse of non-square matrix");
    int n = m.rows;
    QMat aug(n, 2 * n);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    int rank = echelon(aug, nullptr, nullptr);
    if (rank < n) throw Error("singular matrix");
    QMat inv(n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

std::vector<std::vector<Rat>> qmat_right_kernel(QMat m)
{
    std::vector<int> pivots;
    echelon(m, nullptr, &pivots);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<Rat>> basis;
    for (int free = 0; free < m.cols; free++) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(m.cols), Rat(0));
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t i = 0; i < pivots.size(); i++)
            v[static_cast<std::size_t>(pivots[i])] = -m.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> qmat_solve(const QMat& m, const std::vector<Rat>& b)
{
    if (m.rows != m.cols || static_cast<int>(b.size()) != m.rows)
        throw Error("solve shape mismatch");
    int n = m.rows;
    QMat aug(n, n + 1);
    for (int r = 0; r < n; r++) {
        for (int c = 0; c < n; c++) aug.at(r, c) = m.at(r, c);
        aug.at(r, n) = b[static_cast<std::size_t>(r)];
    }
    int rank = echelon(aug, nullptr, nullptr);
    if (rank < n) throw Error("singular matrix");
    std::vector<Rat> x(static_cast<std::size_t>(n));
    for (int r = 0; r < n; r++) x[static_cast<std::size_t>(r)] = aug.at(r, n);
    return x;
}

int qmat_rank(QMat m) { return echelon(m, nullptr, nullptr); }

}  // namespace mono
