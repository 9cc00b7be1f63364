// Compares the serial product kernel against the OpenMP one on inputs big
// enough to cross the parallel dispatch cutoff, checking agreement as it goes.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cohomcheck/polyring.hpp"

using namespace cohomcheck;

namespace {

double best_of(int runs, const Polynomial& a, const Polynomial& b,
               Polynomial (*fn)(const Polynomial&, const Polynomial&),
               Polynomial& out) {
    double best = 1e300;
    for (int i = 0; i < runs; ++i) {
        auto start = std::chrono::steady_clock::now();
        out = fn(a, b);
        auto stop = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (ms < best) best = ms;
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const long degree = argc > 1 ? std::atol(argv[1]) : 10;
    auto ctx = make_context({"u", "v", "w", "x", "y", "z"});
    Polynomial dense = Polynomial::constant(ctx, 1);
    for (std::size_t i = 0; i < 6; ++i)
        dense = dense + Polynomial::variable(ctx, i) * Int(static_cast<long>(i) + 1);
    Polynomial a = pow(dense, degree);
    Polynomial b = pow(dense + Polynomial::constant(ctx, 2), degree / 2 + 1);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled at build time\n");
#endif
    std::printf("factors: %zu x %zu terms\n", a.term_count(), b.term_count());

    Polynomial serial = Polynomial::zero(ctx), parallel = Polynomial::zero(ctx);
    double t_serial = best_of(3, a, b, mul_serial, serial);
    double t_parallel = best_of(3, a, b, mul_parallel, parallel);

    if (!(serial == parallel)) {
        std::printf("MISMATCH between kernels\n");
        return 1;
    }
    std::printf("product: %zu terms\n", serial.term_count());
    std::printf("serial:   %10.2f ms\n", t_serial);
    std::printf("parallel: %10.2f ms (speedup %.2fx)\n", t_parallel,
                t_serial / t_parallel);
    return 0;
}
