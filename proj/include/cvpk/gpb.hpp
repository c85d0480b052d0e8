// Recursive computation of the generalized polarization behaviour of
// Q^(2^m): the four subspace transform tables, the n = 4 base case, and
// the level-doubling recursion built on 16x16 polynomial products.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cvpk/subspaces.hpp"
#include "cvpk/weight_enum.hpp"

namespace cvpk {

using Table16 = std::array<std::array<std::uint8_t, 16>, 16>;

// Slot k maps the phase kinds phi = 0, phi = 2*psi+1, phi = 2*psi+2 and
// phi = n-3 in that order.
struct TransformTables {
    std::array<Table16, 4> slot;
};

TransformTables build_transform_tables();

using GpbRow = std::array<WeightEnum, 16>;

struct Gpb {
    int n = 0;
    std::vector<GpbRow> rows;  // one row per phase, phases [0, n-2)
};

// The GPB of Q^(4), the recursion's seed.
Gpb gpb_base();

// One application of the inverse-image sum: out[l] accumulates
// row[i]*row[j] over every ordered pair with table[i][j] = l.
GpbRow combine(const GpbRow& row, const Table16& table);

// GPB of Q^(2^m); m >= 2. Deterministic for any thread count.
Gpb gpb(int m, int threads = 0);

// Runs the recursion and hands every level (n = 4 up to 2^m) to the
// callback; only two levels are ever held at once.
void run_levels(int m, const std::function<void(const Gpb&)>& on_level, int threads = 0);

// Streams the rows of the top level in phase order while holding only the
// previous level in full. Intended for sizes where a whole-level Gpb would
// be a memory burden.
void gpb_stream(int m, const std::function<void(int phase, GpbRow&& row)>& sink,
                int threads = 0);

}  // namespace cvpk
