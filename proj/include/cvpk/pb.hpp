// GPB-to-PB conversion (plain and row-swapped variants), partial
// distances, and the polarization rate.
#pragma once

#include <string>
#include <vector>

#include "cvpk/gpb.hpp"
#include "cvpk/kernels.hpp"
#include "cvpk/weight_enum.hpp"

namespace cvpk {

struct Pb {
    int n = 0;
    std::vector<WeightEnum> polys;  // one enumerator per phase, phases [0, n)
    Family family = Family::cvpk;
    std::string source = "gpb";     // "gpb" or "oracle"
};

// PB of the kernel the GPB describes. Phases up to n-3 sum the 11 boxes
// whose subspace lacks 100; the last two phases come from phase n-3's row.
Pb pb_from_gpb(const Gpb& g, Family family = Family::cvpk, std::string source = "gpb");

// PB of the swapped kernel Q~(n), read off the *unswapped* kernel's GPB.
Pb pb_swapped_from_gpb(const Gpb& g, std::string source = "gpb");

struct PartialDistanceProfile {
    std::vector<int> d;  // d_0..d_{n-1}
    double E = 0.0;      // polarization rate (1/n) * sum log_n d_i
};

PartialDistanceProfile partial_distances(const Pb& p);

// Remark-3 precondition: d_{2i} >= d_{2i+1} for i = 2..n/2-3.
bool check_swap_precondition(const PartialDistanceProfile& profile);

struct PbPair {
    Pb plain;
    Pb swapped;
};

// PB of Q^(2^m) and Q~(2^m) in one pass. Streams the top GPB level so the
// peak footprint is one level of GPB plus the PB arrays; this is the route
// for n in the hundreds and above.
PbPair pb_cvpk_pair(int m, int threads = 0);

}  // namespace cvpk
