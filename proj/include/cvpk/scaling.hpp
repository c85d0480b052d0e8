// BEC scaling exponent from a polarization behaviour: power iteration for
// the dominant eigenvalue of the averaged substitution operator
// (Tg)(z) = (1/n) sum_i g(f_i(z)) over functions vanishing at 0 and 1.
#pragma once

#include <vector>

#include "cvpk/pb.hpp"
#include "cvpk/weight_enum.hpp"

namespace cvpk {

enum class Interp { linear, cubic };

struct ScalingConfig {
    int grid_size = 4096;   // number of grid intervals on [0,1]
    int max_iters = 10000;
    double tol = 1e-9;
    Interp interpolation = Interp::cubic;
    int threads = 0;
};

struct ScalingResult {
    double mu = 0.0;
    double lambda = 0.0;         // sup-norm growth factor at convergence
    double lambda_rayleigh = 0.0;  // independent read-out, agrees at convergence
    int iters_used = 0;
    bool converged = false;
};

// The subchannel erasure probabilities f_0..f_{n-1} on [0,1], one per
// phase, ready for repeated evaluation.
class SubchannelFamily {
public:
    explicit SubchannelFamily(const Pb& pb);
    int n() const { return n_; }
    double eval(int i, double z) const { return fs_[std::size_t(i)](z); }

private:
    int n_;
    std::vector<ErasureEvaluator> fs_;
};

ScalingResult scaling_exponent(const Pb& pb, const ScalingConfig& cfg = {});

}  // namespace cvpk
