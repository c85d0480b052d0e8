// Construction of the convolutional polarizing transformation Q^(n), its
// row-permuted variants, and the Arikan kernel power used as a baseline.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvpk/gf2.hpp"

namespace cvpk {

enum class Family { cvpk, cvpk_swapped, cvpk_sorted, arikan_power };

std::string family_name(Family f);
// Accepts the canonical names plus the short alias "arikan".
Family family_from_name(std::string_view name);

struct Kernel {
    int n = 0;
    gf2::BitMatrix matrix;
    Family family = Family::cvpk;
    // Row permutation applied to the cvpk base, when any.
    std::optional<std::vector<int>> permutation;
};

// Transition matrices X^(l), Z^(l) (size l x l/2); l must be even.
std::pair<gf2::BitMatrix, gf2::BitMatrix> xz_matrices(int l);

// Q^(n) built bottom-up from Q^(1) = (1); n must be a power of two.
Kernel cvpk(int n);

// Q~(n): Q^(n) with rows 2i and 2i+1 exchanged for i = 2..n/2-3. The swap
// range is empty below n = 16, so the matrix equals Q^(n) there.
Kernel swapped_cvpk(int n);

// Q-bar(n): rows of Q^(n) in partial-distance order. Only the published
// permutations for n = 16 and n = 32 are supported.
Kernel sorted_cvpk(int n);

// F^{otimes m}, the Arikan transform of size 2^m; m >= 1.
Kernel arikan_power(int m);

inline constexpr std::array<int, 16> kPi16 = {0, 1, 2,  3, 5,  4, 7,  6,
                                              10, 8, 11, 9, 12, 13, 14, 15};
inline constexpr std::array<int, 32> kPi32 = {
    0,  1,  2,  3,  6,  4,  9,  7,  13, 5,  20, 8,  14, 11, 18, 15,
    16, 10, 23, 19, 24, 12, 26, 17, 25, 21, 27, 22, 28, 29, 30, 31};

}  // namespace cvpk
