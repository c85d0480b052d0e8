#include "cvpk/pb.hpp"

#include <cmath>
#include <stdexcept>

#include "cvpk/subspaces.hpp"

namespace cvpk {

namespace {

// Vector codes: 100 = 4, 010 = 2, 110 = 6; odd codes have last bit 1.
WeightEnum sum_selected(const GpbRow& row, std::uint16_t selector) {
    WeightEnum out;
    for (int i = 0; i < 16; ++i)
        if ((selector >> i) & 1u) out += row[i];
    return out;
}

std::uint16_t sel_erases_head() { return selector_excluding({4}); }
std::uint16_t sel_erases_second() { return selector_excluding({2, 6}); }
std::uint16_t sel_erases_last() { return selector_excluding({1, 3, 5, 7}); }
std::uint16_t sel_swapped_even() { return selector_excluding({2}); }
std::uint16_t sel_swapped_odd() { return selector_excluding({4, 6}); }

}  // namespace

Pb pb_from_gpb(const Gpb& g, Family family, std::string source) {
    if (g.n < 4 || g.rows.size() != std::size_t(g.n) - 2)
        throw std::invalid_argument("pb_from_gpb: malformed GPB");
    Pb p;
    p.n = g.n;
    p.family = family;
    p.source = std::move(source);
    p.polys.resize(std::size_t(g.n));
    const std::uint16_t head = sel_erases_head();
    for (int phase = 0; phase <= g.n - 3; ++phase)
        p.polys[std::size_t(phase)] = sum_selected(g.rows[std::size_t(phase)], head);
    p.polys[std::size_t(g.n) - 2] = sum_selected(g.rows[std::size_t(g.n) - 3], sel_erases_second());
    p.polys[std::size_t(g.n) - 1] = sum_selected(g.rows[std::size_t(g.n) - 3], sel_erases_last());
    return p;
}

Pb pb_swapped_from_gpb(const Gpb& g, std::string source) {
    Pb p = pb_from_gpb(g, Family::cvpk_swapped, std::move(source));
    const std::uint16_t even = sel_swapped_even();
    const std::uint16_t odd = sel_swapped_odd();
    for (int i = 2; i <= g.n / 2 - 3; ++i) {
        p.polys[std::size_t(2 * i)] = sum_selected(g.rows[std::size_t(2 * i)], even);
        p.polys[std::size_t(2 * i + 1)] = sum_selected(g.rows[std::size_t(2 * i)], odd);
    }
    return p;
}

PartialDistanceProfile partial_distances(const Pb& p) {
    PartialDistanceProfile out;
    out.d.reserve(p.polys.size());
    mpz_class product = 1;
    for (const WeightEnum& poly : p.polys) {
        if (poly.is_zero())
            throw std::logic_error("partial_distances: zero phase polynomial");
        const int d = poly.min_weight();
        out.d.push_back(d);
        product *= d;
    }
    // E = log_n(prod d_i) / n, taken through one big-integer log so the
    // result does not depend on summation order.
    long e;
    const double mant = mpz_get_d_2exp(&e, product.get_mpz_t());
    const double log2_prod = std::log2(mant) + double(e);
    out.E = log2_prod / (double(p.n) * std::log2(double(p.n)));
    return out;
}

bool check_swap_precondition(const PartialDistanceProfile& profile) {
    const int n = int(profile.d.size());
    for (int i = 2; i <= n / 2 - 3; ++i)
        if (profile.d[std::size_t(2 * i)] < profile.d[std::size_t(2 * i + 1)]) return false;
    return true;
}

PbPair pb_cvpk_pair(int m, int threads) {
    if (m < 2) throw std::invalid_argument("pb_cvpk_pair: m must be >= 2");
    const int n = 1 << m;
    PbPair out;
    out.plain.n = out.swapped.n = n;
    out.plain.family = Family::cvpk;
    out.swapped.family = Family::cvpk_swapped;
    out.plain.source = out.swapped.source = "gpb";
    out.plain.polys.resize(std::size_t(n));
    out.swapped.polys.resize(std::size_t(n));

    const std::uint16_t head = sel_erases_head();
    const std::uint16_t even = sel_swapped_even();
    const std::uint16_t odd = sel_swapped_odd();
    gpb_stream(
        m,
        [&](int phase, GpbRow&& row) {
            out.plain.polys[std::size_t(phase)] = sum_selected(row, head);
            const bool in_swap_range =
                phase >= 4 && phase <= n - 5 && phase % 2 == 0 && (phase / 2) <= n / 2 - 3;
            if (in_swap_range) {
                out.swapped.polys[std::size_t(phase)] = sum_selected(row, even);
                out.swapped.polys[std::size_t(phase) + 1] = sum_selected(row, odd);
            }
            if (phase == n - 3) {
                out.plain.polys[std::size_t(n) - 2] = sum_selected(row, sel_erases_second());
                out.plain.polys[std::size_t(n) - 1] = sum_selected(row, sel_erases_last());
            }
        },
        threads);

    // Phases outside the swap range coincide with the plain kernel.
    for (int phase = 0; phase < n; ++phase) {
        const bool swapped_even = phase >= 4 && phase <= n - 6 && phase % 2 == 0;
        const bool swapped_odd = phase >= 5 && phase <= n - 5 && phase % 2 == 1;
        if (!swapped_even && !swapped_odd)
            out.swapped.polys[std::size_t(phase)] = out.plain.polys[std::size_t(phase)];
    }
    return out;
}

}  // namespace cvpk
