// Benchmark: serial reference vs OpenMP kernels (Thue box scan, epsilon
// table construction). The two implementations must agree; this compares
// wall time.

#include <chrono>
#include <iostream>

#include "mono/embeddings.hpp"
#include "mono/families.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace mono;
using clk = std::chrono::steady_clock;

static double seconds_since(clk::time_point t0)
{
    return std::chrono::duration<double>(clk::now() - t0).count();
}

int main(int argc, char** argv)
{
    long bound = argc > 1 ? std::atol(argv[1]) : 4000;
#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif
    std::cout << "threads available: " << threads << "\n\n";

    BinaryForm F = BinaryForm::homogenize(parse_polynomial("x^3-x-1"));
    std::cout << "thue scan of x^3 - x y^2 - y^3 = +-1, box " << bound << "\n";
    auto t0 = clk::now();
    auto serial = thue_scan_serial(F, bound);
    double ts = seconds_since(t0);
    t0 = clk::now();
    auto parallel = thue_scan_parallel(F, bound);
    double tp = seconds_since(t0);
    std::cout << "  serial:   " << ts << " s, " << serial.size() << " hits\n";
    std::cout << "  parallel: " << tp << " s, " << parallel.size() << " hits\n";
    std::cout << "  identical results: " << (serial == parallel ? "yes" : "NO") << "\n";
    if (tp > 0) std::cout << "  speedup: " << ts / tp << "x\n";

    std::cout << "\nepsilon tables for (theta, theta^2) of x^5-x-1 at 512 bits, 40 rounds\n";
    NumberField K(parse_polynomial("x^5-x-1"));
    EmbeddingSet E(K, 512);
    FieldElement t = K.theta();
    t0 = clk::now();
    for (int i = 0; i < 40; i++) {
        auto T = epsilon_table(t, t * t, E);
        if (T.eps.size() != 120) return 1;
    }
    double te = seconds_since(t0);
    std::cout << "  " << te << " s total (" << te / 40 << " s per table)\n";
    return serial == parallel ? 0 : 1;
}
