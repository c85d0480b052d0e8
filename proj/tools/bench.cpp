// Timing harness comparing the single-thread reference paths against the
// OpenMP ones: GPB level advancement, oracle enumeration, scaling grids,
// and the two polynomial multiplication routes.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "cvpk/oracle.hpp"
#include "cvpk/scaling.hpp"
#include "cvpk/threading.hpp"

using namespace cvpk;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
    int threads = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--threads" && i + 1 < argc) threads = std::atoi(argv[++i]);
    }
    const int nt = resolve_threads(threads);
    std::printf("comparing 1 thread vs %d threads\n", nt);
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const double s = time_ms([&] { gpb(7, 1); });
        const double p = time_ms([&] { gpb(7, nt); });
        report("gpb recursion to n=128", s, p);
    }
    {
        const Kernel k = cvpk::cvpk(16);
        OracleOptions one, many;
        one.threads = 1;
        many.threads = nt;
        const double s = time_ms([&] { pb_oracle(k, one); });
        const double p = time_ms([&] { pb_oracle(k, many); });
        report("oracle pb at n=16", s, p);
    }
    {
        const Pb pb = pb_cvpk_pair(6).plain;
        ScalingConfig one, many;
        one.threads = 1;
        many.threads = nt;
        const double s = time_ms([&] { scaling_exponent(pb, one); });
        const double p = time_ms([&] { scaling_exponent(pb, many); });
        report("scaling exponent at n=64", s, p);
    }
    {
        std::mt19937 rng(5);
        gmp_randclass gr(gmp_randinit_default);
        gr.seed(17);
        std::vector<mpz_class> ca(513), cb(513);
        for (auto& v : ca) v = gr.get_z_bits(512);
        for (auto& v : cb) v = gr.get_z_bits(512);
        const WeightEnum a{std::move(ca)}, b{std::move(cb)};
        const double s = time_ms([&] { WeightEnum::mul_schoolbook(a, b); });
        const double p = time_ms([&] { WeightEnum::mul_kronecker(a, b); });
        report("poly mul deg 512 x 512 bit", s, p);
    }
    return 0;
}
