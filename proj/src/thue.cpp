#include "mono/thue.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mono {

namespace {

using i128 = __int128;

bool fits_int128(const BinaryForm& F, long bound)
{
    // sum |a_k| * bound^n < 2^126, and every coefficient fits a long
    if (bound <= 0) return false;
    Int budget(0);
    Int bn(1);
    for (int i = 0; i < F.form_degree(); i++) bn *= bound;
    for (const Int& a : F.a) {
        if (!mpz_fits_slong_p(a.get_mpz_t())) return false;
        budget += abs_int(a) * bn;
    }
    Int cap(1);
    mpz_mul_2exp(cap.get_mpz_t(), cap.get_mpz_t(), 126);
    return budget < cap;
}

// scan one x-column over all y; int128 path
void scan_column_i128(const std::vector<i128>& a, int n, long x, long bound,
                      std::vector<ThueHit>& out)
{
    // coefficients of y -> F(x, y): c_k = a_k x^{n-k}
    std::vector<i128> c(static_cast<std::size_t>(n) + 1);
    i128 xp = 1;
    for (int k = n; k >= 0; k--) {
        c[static_cast<std::size_t>(k)] = a[static_cast<std::size_t>(k)] * xp;
        xp *= x;
    }
    for (long y = -bound; y <= bound; y++) {
        if (x == 0 && y == 0) continue;
        i128 acc = c[static_cast<std::size_t>(n)];
        for (int k = n - 1; k >= 0; k--) acc = acc * y + c[static_cast<std::size_t>(k)];
        if (acc == 1)
            out.push_back({x, y, 1});
        else if (acc == -1)
            out.push_back({x, y, -1});
    }
}

void scan_column_mpz(const BinaryForm& F, long x, long bound, std::vector<ThueHit>& out)
{
    for (long y = -bound; y <= bound; y++) {
        if (x == 0 && y == 0) continue;
        Int v = F.eval(Int(x), Int(y));
        if (v == 1)
            out.push_back({x, y, 1});
        else if (v == -1)
            out.push_back({x, y, -1});
    }
}

}  // namespace

std::vector<ThueHit> thue_scan_serial(const BinaryForm& F, long bound)
{
    std::vector<ThueHit> hits;
    int n = F.form_degree();
    if (fits_int128(F, bound)) {
        std::vector<i128> a;
        for (const Int& v : F.a) a.push_back(static_cast<i128>(v.get_si()));
        for (long x = -bound; x <= bound; x++) scan_column_i128(a, n, x, bound, hits);
    } else {
        for (long x = -bound; x <= bound; x++) scan_column_mpz(F, x, bound, hits);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<ThueHit> thue_scan_parallel(const BinaryForm& F, long bound)
{
    std::vector<ThueHit> hits;
    int n = F.form_degree();
    bool fast = fits_int128(F, bound);
    std::vector<i128> a;
    if (fast)
        for (const Int& v : F.a) a.push_back(static_cast<i128>(v.get_si()));
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        std::vector<ThueHit> local;
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
        for (long x = -bound; x <= bound; x++) {
            if (fast)
                scan_column_i128(a, n, x, bound, local);
            else
                scan_column_mpz(F, x, bound, local);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<ThueHit> thue_scan(const BinaryForm& F, long bound, int jobs)
{
#ifdef _OPENMP
    if (jobs == 1) return thue_scan_serial(F, bound);
    if (jobs > 1) omp_set_num_threads(jobs);
    return thue_scan_parallel(F, bound);
#else
    (void)jobs;
    return thue_scan_serial(F, bound);
#endif
}

}  // namespace mono
