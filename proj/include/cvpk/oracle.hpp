// Exhaustive ground truth: walks all 2^n erasure configurations of a
// kernel and assembles GPB/PB straight from the definitions, independent
// of the recursion it validates. Works for arbitrary invertible kernels.
#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>

#include "cvpk/gpb.hpp"
#include "cvpk/kernels.hpp"
#include "cvpk/pb.hpp"
#include "cvpk/subspaces.hpp"

namespace cvpk {

inline constexpr int kOracleGuard = 20;  // 2^20 configurations by default
inline constexpr int kOracleHardCap = 32;

struct ErasureConfig {
    int n = 0;
    std::uint64_t mask = 0;  // bit j set = position j erased
    int weight() const;
};

struct OracleOptions {
    int guard = kOracleGuard;
    bool force = false;  // required to enumerate beyond the guard
    int threads = 0;
    // Called after each finished phase with (done, total).
    std::function<void(int, int)> progress;
};

// Raised when the requested size exceeds the enumeration guard and force
// was not given.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// chi_phi(E): the subspace of p in F_2^3 with (p, 0^(n-phi-3)) in the
// column space of K restricted to rows >= phi and unerased columns.
Subspace3 chi(const Kernel& k, int phase, const ErasureConfig& e);

Gpb gpb_oracle(const Kernel& k, const OracleOptions& opt = {});
Pb pb_oracle(const Kernel& k, const OracleOptions& opt = {});

}  // namespace cvpk
