#include "mono/intmat.hpp"

namespace mono {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

// Row HNF by integer row operations; optionally tracks the unimodular
// transform U with U * input = result-padded-with-zero-rows.
static IntMat hnf_impl(IntMat m, IntMat* transform)
{
    int R = m.rows, C = m.cols;
    IntMat U = IntMat::identity(R);
    int rank = 0;
    for (int col = 0; col < C && rank < R; col++) {
        // gcd-reduce all entries below the working row into the working row
        while (true) {
            int piv = -1;
            for (int r = rank; r < R; r++)
                if (m.at(r, col) != 0) {
                    if (piv < 0 || abs_int(m.at(r, col)) < abs_int(m.at(piv, col))) piv = r;
                }
            if (piv < 0) break;
            if (piv != rank) {
                for (int c = 0; c < C; c++) std::swap(m.at(piv, c), m.at(rank, c));
                if (transform)
                    for (int c = 0; c < R; c++) std::swap(U.at(piv, c), U.at(rank, c));
            }
            bool anyother = false;
            for (int r = rank + 1; r < R; r++) {
                if (m.at(r, col) == 0) continue;
                Int q = m.at(r, col) / m.at(rank, col);  // truncated division is fine here
                if (q != 0) {
                    for (int c = 0; c < C; c++) m.at(r, c) -= q * m.at(rank, c);
                    if (transform)
                        for (int c = 0; c < R; c++) U.at(r, c) -= q * U.at(rank, c);
                }
                if (m.at(r, col) != 0) anyother = true;
            }
            if (!anyother) break;
        }
        if (m.at(rank, col) == 0) continue;
        if (m.at(rank, col) < 0) {
            for (int c = 0; c < C; c++) m.at(rank, c) = -m.at(rank, c);
            if (transform)
                for (int c = 0; c < R; c++) U.at(rank, c) = -U.at(rank, c);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < rank; r++) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m.at(r, col).get_mpz_t(), m.at(rank, col).get_mpz_t());
            if (q != 0) {
                for (int c = 0; c < C; c++) m.at(r, c) -= q * m.at(rank, c);
                if (transform)
                    for (int c = 0; c < R; c++) U.at(r, c) -= q * U.at(rank, c);
            }
        }
        rank++;
    }
    if (transform) *transform = U;
    IntMat out(rank, C);
    for (int r = 0; r < rank; r++)
        for (int c = 0; c < C; c++) out.at(r, c) = m.at(r, c);
    return out;
}

IntMat hnf(const IntMat& m) { return hnf_impl(m, nullptr); }

IntMat hnf_full_rank(const IntMat& m)
{
    if (m.rows < m.cols) throw Error("not full rank");
    IntMat h = hnf(m);
    if (h.rows != m.cols) throw Error("not full rank");
    return h;
}

IntMat left_kernel(const IntMat& m)
{
    IntMat U;
    IntMat h = hnf_impl(m, &U);
    int rank = h.rows;
    IntMat ker(m.rows - rank, m.rows);
    for (int r = rank; r < m.rows; r++)
        for (int c = 0; c < m.rows; c++) ker.at(r - rank, c) = U.at(r, c);
    return ker;
}

IntMat lattice_intersect(const IntMat& a, const IntMat& b)
{
    if (a.rows != a.cols || b.rows != b.cols || a.cols != b.cols)
        throw Error("lattice_intersect wants square matrices");
    int n = a.cols;
    // (u, v) with u a - v b = 0; the intersection is spanned by the u a
    IntMat stacked(2 * n, n);
    for (int r = 0; r < n; r++)
        for (int c = 0; c < n; c++) {
            stacked.at(r, c) = a.at(r, c);
            stacked.at(n + r, c) = -b.at(r, c);
        }
    IntMat ker = left_kernel(stacked);
    IntMat gen(ker.rows, n);
    for (int r = 0; r < ker.rows; r++)
        for (int c = 0; c < n; c++) {
            Int s(0);
            for (int k = 0; k < n; k++) s += ker.at(r, k) * a.at(k, c);
            gen.at(r, c) = s;
        }
    return hnf_full_rank(gen);
}

Int intmat_det(IntMat m)
{
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return Int(1);
    // Bareiss fraction-free elimination
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; r++)
                if (m.at(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Int(0);
            for (int c = 0; c < n; c++) std::swap(m.at(piv, c), m.at(k, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

}  // namespace mono
