#include "cvpk/gpb.hpp"

#include <stdexcept>
#include <utility>

#include "cvpk/threading.hpp"

namespace cvpk {

namespace {

// A0/B0 as 6-bit row images, bit k of the value = component r_k.
constexpr std::array<std::uint8_t, 3> kA0 = {0x07, 0x1c, 0x30};  // 111000, 001110, 000011
constexpr std::array<std::uint8_t, 3> kB0 = {0x06, 0x18, 0x20};  // 011000, 000110, 000001

std::uint8_t row_image(int p, const std::array<std::uint8_t, 3>& m) {
    std::uint8_t r = 0;
    if (p & 4) r ^= m[0];
    if (p & 2) r ^= m[1];
    if (p & 1) r ^= m[2];
    return r;
}

int code_from_bits(int b0, int b1, int b2) { return b0 * 4 + b1 * 2 + b2; }

// Upper-triangle products row[i]*row[j] (i <= j) of one GPB row, shared by
// all slots that consume the row.
struct RowProducts {
    std::array<WeightEnum, 136> p;
    static constexpr std::size_t at(int i, int j) {  // requires i <= j
        return std::size_t(i) * 16 - std::size_t(i) * (i + 1) / 2 + std::size_t(j);
    }
};

RowProducts multiply_row(const GpbRow& row) {
    RowProducts out;
    for (int i = 0; i < 16; ++i) {
        if (row[i].is_zero()) continue;
        for (int j = i; j < 16; ++j) {
            if (row[j].is_zero()) continue;
            out.p[RowProducts::at(i, j)] = row[i] * row[j];
        }
    }
    return out;
}

void bin_products(const RowProducts& prods, const Table16& table, GpbRow& out) {
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            const WeightEnum& prod = prods.p[RowProducts::at(std::min(i, j), std::max(i, j))];
            if (!prod.is_zero()) out[table[i][j]] += prod;
        }
}

// One level step: GPB of Q^(big) from GPB of Q^(big/2). Each psi owns the
// output phases it writes, so the parallel loop is race-free and the
// result is identical for any thread count.
Gpb advance_level(const Gpb& r, const TransformTables& tables, int threads) {
    const int big = 2 * r.n;
    Gpb p;
    p.n = big;
    p.rows.resize(std::size_t(big) - 2);
    const int num_psi = big / 2 - 2;  // psi = 0..big/2-3
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int psi = 0; psi < num_psi; ++psi) {
        const RowProducts prods = multiply_row(r.rows[std::size_t(psi)]);
        if (psi == 0) bin_products(prods, tables.slot[0], p.rows[0]);
        bin_products(prods, tables.slot[1], p.rows[std::size_t(2 * psi + 1)]);
        bin_products(prods, tables.slot[2], p.rows[std::size_t(2 * psi + 2)]);
        if (psi == num_psi - 1) bin_products(prods, tables.slot[3], p.rows[std::size_t(big) - 3]);
    }
    return p;
}

}  // namespace

TransformTables build_transform_tables() {
    std::array<std::array<std::uint8_t, 6>, 8> ra{}, rb{};
    for (int v = 0; v < 8; ++v)
        for (int k = 0; k < 6; ++k) {
            ra[v][k] = (row_image(v, kA0) >> k) & 1u;
            rb[v][k] = (row_image(v, kB0) >> k) & 1u;
        }

    TransformTables t;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            std::array<std::uint8_t, 4> masks{};
            for (int p = 0; p < 8; ++p) {
                if (!((kSubspaceMasks[i] >> p) & 1u)) continue;
                for (int q = 0; q < 8; ++q) {
                    if (!((kSubspaceMasks[j] >> q) & 1u)) continue;
                    std::array<int, 6> r;
                    for (int k = 0; k < 6; ++k) r[k] = ra[p][k] ^ rb[q][k];
                    masks[3] |= std::uint8_t(1u << code_from_bits(r[3], r[4], r[5]));
                    if (r[5] == 0) masks[2] |= std::uint8_t(1u << code_from_bits(r[2], r[3], r[4]));
                    if (r[4] == 0 && r[5] == 0)
                        masks[1] |= std::uint8_t(1u << code_from_bits(r[1], r[2], r[3]));
                    if (r[3] == 0 && r[4] == 0 && r[5] == 0)
                        masks[0] |= std::uint8_t(1u << code_from_bits(r[0], r[1], r[2]));
                }
            }
            for (int k = 0; k < 4; ++k) {
                if (!is_subspace_mask(masks[k]))
                    throw std::logic_error("transform table entry is not a subspace");
                t.slot[k][i][j] = std::uint8_t(Subspace3::from_mask(masks[k]).index());
            }
        }
    return t;
}

Gpb gpb_base() {
    auto x = [](int w, int c = 1) { return WeightEnum::monomial(w, c); };
    Gpb g;
    g.n = 4;
    g.rows.resize(2);
    GpbRow& p0 = g.rows[0];
    p0[0] = x(4) + x(3, 4);
    for (int i : {2, 3, 4, 5, 6, 7}) p0[i] = x(2);
    for (int i : {10, 11, 13, 14}) p0[i] = x(1);
    p0[15] = x(0);
    GpbRow& p1 = g.rows[1];
    p1[0] = x(4);
    for (int i : {3, 5, 6, 7}) p1[i] = x(3);
    for (int i : {9, 10, 11, 12, 13, 14}) p1[i] = x(2);
    p1[15] = x(1, 4) + x(0);
    return g;
}

GpbRow combine(const GpbRow& row, const Table16& table) {
    GpbRow out;
    bin_products(multiply_row(row), table, out);
    return out;
}

Gpb gpb(int m, int threads) {
    if (m < 2) throw std::invalid_argument("gpb: m must be >= 2");
    const int nt = resolve_threads(threads);
    const TransformTables tables = build_transform_tables();
    Gpb p = gpb_base();
    for (int level = 3; level <= m; ++level) {
        Gpb r = std::move(p);
        p = advance_level(r, tables, nt);
    }
    return p;
}

void run_levels(int m, const std::function<void(const Gpb&)>& on_level, int threads) {
    if (m < 2) throw std::invalid_argument("run_levels: m must be >= 2");
    const int nt = resolve_threads(threads);
    const TransformTables tables = build_transform_tables();
    Gpb p = gpb_base();
    on_level(p);
    for (int level = 3; level <= m; ++level) {
        Gpb r = std::move(p);
        p = advance_level(r, tables, nt);
        on_level(p);
    }
}

void gpb_stream(int m, const std::function<void(int phase, GpbRow&& row)>& sink, int threads) {
    if (m < 2) throw std::invalid_argument("gpb_stream: m must be >= 2");
    if (m == 2) {
        Gpb base = gpb_base();
        sink(0, std::move(base.rows[0]));
        sink(1, std::move(base.rows[1]));
        return;
    }
    const int nt = resolve_threads(threads);
    const TransformTables tables = build_transform_tables();
    const Gpb r = gpb(m - 1, threads);
    const int big = 2 * r.n;
    const int num_psi = big / 2 - 2;
    const int block = std::max(1, nt) * 2;

    for (int base_psi = 0; base_psi < num_psi; base_psi += block) {
        const int end_psi = std::min(num_psi, base_psi + block);
        // phases 2*psi+1, 2*psi+2 per psi, plus 0 and big-3 at the ends
        std::vector<std::array<GpbRow, 2>> mid(std::size_t(end_psi - base_psi));
        GpbRow first, last;
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (int psi = base_psi; psi < end_psi; ++psi) {
            const RowProducts prods = multiply_row(r.rows[std::size_t(psi)]);
            if (psi == 0) bin_products(prods, tables.slot[0], first);
            bin_products(prods, tables.slot[1], mid[std::size_t(psi - base_psi)][0]);
            bin_products(prods, tables.slot[2], mid[std::size_t(psi - base_psi)][1]);
            if (psi == num_psi - 1) bin_products(prods, tables.slot[3], last);
        }
        if (base_psi == 0) sink(0, std::move(first));
        for (int psi = base_psi; psi < end_psi; ++psi) {
            sink(2 * psi + 1, std::move(mid[std::size_t(psi - base_psi)][0]));
            sink(2 * psi + 2, std::move(mid[std::size_t(psi - base_psi)][1]));
        }
        if (end_psi == num_psi) sink(big - 3, std::move(last));
    }
}

}  // namespace cvpk
