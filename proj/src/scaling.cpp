#include "cvpk/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cvpk/threading.hpp"

namespace cvpk {

namespace {

// Fritsch-Carlson slopes on a uniform grid: monotone on every interval,
// so iterates interpolated from nonnegative samples stay nonnegative.
void monotone_slopes(const std::vector<double>& g, double h, std::vector<double>& m) {
    const std::size_t G = g.size() - 1;
    m.resize(G + 1);
    std::vector<double> secant(G);
    for (std::size_t k = 0; k < G; ++k) secant[k] = (g[k + 1] - g[k]) / h;
    m[0] = secant[0];
    m[G] = secant[G - 1];
    for (std::size_t k = 1; k < G; ++k) {
        if (secant[k - 1] * secant[k] <= 0.0) m[k] = 0.0;
        else m[k] = 0.5 * (secant[k - 1] + secant[k]);
    }
    for (std::size_t k = 0; k < G; ++k) {
        if (secant[k] == 0.0) {
            m[k] = m[k + 1] = 0.0;
            continue;
        }
        const double a = m[k] / secant[k];
        const double b = m[k + 1] / secant[k];
        const double s = a * a + b * b;
        if (s > 9.0) {
            const double tau = 3.0 / std::sqrt(s);
            m[k] = tau * a * secant[k];
            m[k + 1] = tau * b * secant[k];
        }
    }
}

double interp_linear(const std::vector<double>& g, int G, double t) {
    const double x = t * G;
    int k = int(x);
    if (k >= G) k = G - 1;
    const double s = x - k;
    return g[std::size_t(k)] * (1.0 - s) + g[std::size_t(k) + 1] * s;
}

double interp_cubic(const std::vector<double>& g, const std::vector<double>& m, int G, double t) {
    const double h = 1.0 / G;
    const double x = t * G;
    int k = int(x);
    if (k >= G) k = G - 1;
    const double s = x - k;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2 * s3 - 3 * s2 + 1;
    const double h10 = s3 - 2 * s2 + s;
    const double h01 = -2 * s3 + 3 * s2;
    const double h11 = s3 - s2;
    return h00 * g[std::size_t(k)] + h10 * h * m[std::size_t(k)] +
           h01 * g[std::size_t(k) + 1] + h11 * h * m[std::size_t(k) + 1];
}

}  // namespace

SubchannelFamily::SubchannelFamily(const Pb& pb) : n_(pb.n) {
    if (pb.n < 2 || pb.polys.size() != std::size_t(pb.n))
        throw std::invalid_argument("SubchannelFamily: malformed PB");
    fs_.reserve(std::size_t(pb.n));
    for (const WeightEnum& p : pb.polys) fs_.emplace_back(p, pb.n);
}

ScalingResult scaling_exponent(const Pb& pb, const ScalingConfig& cfg) {
    if (cfg.grid_size < 256) throw std::invalid_argument("scaling_exponent: grid_size must be >= 256");
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("scaling_exponent: tol must be positive");
    if (pb.n < 2) throw std::invalid_argument("scaling_exponent: kernel size must be >= 2");

    const int n = pb.n;
    const int G = cfg.grid_size;
    const int nt = resolve_threads(cfg.threads);
    const SubchannelFamily fam(pb);

    // f_i sampled once on the grid; the iteration never re-evaluates them.
    std::vector<double> F(std::size_t(n) * (std::size_t(G) + 1));
#pragma omp parallel for schedule(dynamic) num_threads(nt)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= G; ++j) {
            const double v = fam.eval(i, double(j) / G);
            F[std::size_t(i) * (std::size_t(G) + 1) + std::size_t(j)] =
                std::clamp(v, 0.0, 1.0);
        }

    std::vector<double> g(std::size_t(G) + 1), h(std::size_t(G) + 1), slopes;
    for (int j = 0; j <= G; ++j) {
        const double z = double(j) / G;
        g[std::size_t(j)] = z * (1.0 - z);
    }
    const double g0max = *std::max_element(g.begin(), g.end());
    for (double& v : g) v /= g0max;

    ScalingResult res;
    double lam_prev = 0.0;
    const bool cubic = cfg.interpolation == Interp::cubic;
    for (int it = 1; it <= cfg.max_iters; ++it) {
        if (cubic) monotone_slopes(g, 1.0 / G, slopes);
#pragma omp parallel for schedule(static) num_threads(nt)
        for (int j = 0; j <= G; ++j) {
            double acc = 0.0;
            const double* fj = F.data() + std::size_t(j);
            for (int i = 0; i < n; ++i) {
                const double t = fj[std::size_t(i) * (std::size_t(G) + 1)];
                acc += cubic ? interp_cubic(g, slopes, G, t) : interp_linear(g, G, t);
            }
            h[std::size_t(j)] = acc / n;
        }
        h[0] = h[std::size_t(G)] = 0.0;  // pin the trivial eigenfunctions down

        double lam = 0.0, num = 0.0, den = 0.0;
        for (int j = 0; j <= G; ++j) {
            lam = std::max(lam, h[std::size_t(j)]);
            num += h[std::size_t(j)] * g[std::size_t(j)];
            den += g[std::size_t(j)] * g[std::size_t(j)];
        }
        res.lambda = lam;
        res.lambda_rayleigh = num / den;
        res.iters_used = it;
        for (int j = 0; j <= G; ++j) g[std::size_t(j)] = h[std::size_t(j)] / lam;
        if (std::abs(lam - lam_prev) < cfg.tol &&
            std::abs(lam - res.lambda_rayleigh) < cfg.tol) {
            res.converged = true;
            break;
        }
        lam_prev = lam;
    }
    res.mu = std::log(double(n)) / std::log(1.0 / res.lambda);
    return res;
}

}  // namespace cvpk
