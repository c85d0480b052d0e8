#include "cvpk/oracle.hpp"

#include <bit>
#include <vector>

#include "cvpk/threading.hpp"

namespace cvpk {

namespace {

// Column echelon over single-word vectors, pivot = lowest set bit. No
// allocation: one of these lives per worker inside the mask loop.
struct SmallEchelon {
    std::array<std::uint64_t, 64> basis;
    std::uint64_t have = 0;

    void add(std::uint64_t v) {
        while (v) {
            const int b = std::countr_zero(v);
            if ((have >> b) & 1u) v ^= basis[std::size_t(b)];
            else {
                basis[std::size_t(b)] = v;
                have |= std::uint64_t(1) << b;
                return;
            }
        }
    }
    bool contains(std::uint64_t v) const {
        while (v) {
            const int b = std::countr_zero(v);
            if (!((have >> b) & 1u)) return false;
            v ^= basis[std::size_t(b)];
        }
        return true;
    }
};

std::vector<std::uint64_t> column_words(const Kernel& k) {
    std::vector<std::uint64_t> cols(std::size_t(k.n), 0);
    for (int c = 0; c < k.n; ++c)
        for (int r = 0; r < k.n; ++r)
            if (k.matrix.get(std::size_t(r), std::size_t(c)))
                cols[std::size_t(c)] |= std::uint64_t(1) << r;
    return cols;
}

void check_enumerable(const Kernel& k, const OracleOptions& opt) {
    if (k.n > kOracleHardCap)
        throw std::invalid_argument("oracle: kernel size exceeds the 32-bit enumeration cap");
    if (k.n > opt.guard && !opt.force)
        throw GuardError("oracle: size " + std::to_string(k.n) + " exceeds guard " +
                         std::to_string(opt.guard) + " (pass force to enumerate anyway)");
}

// (p0,p1,p2) as the low three bits of a column vector over rows phi..n-1.
std::uint64_t target_word(int code) {
    return std::uint64_t((code >> 2) & 1) | (std::uint64_t((code >> 1) & 1) << 1) |
           (std::uint64_t(code & 1) << 2);
}

std::array<int, 256> make_mask_to_index() {
    std::array<int, 256> t;
    t.fill(-1);
    for (int i = 0; i < 16; ++i) t[kSubspaceMasks[std::size_t(i)]] = i;
    return t;
}

}  // namespace

int ErasureConfig::weight() const { return std::popcount(mask); }

Subspace3 chi(const Kernel& k, int phase, const ErasureConfig& e) {
    if (phase < 0 || phase > k.n - 3) throw std::invalid_argument("chi: phase out of range");
    if (e.n != k.n) throw std::invalid_argument("chi: configuration size mismatch");
    if (k.n > 64) throw std::invalid_argument("chi: kernel size exceeds 64");
    const std::vector<std::uint64_t> cols = column_words(k);
    SmallEchelon ech{};
    for (int c = 0; c < k.n; ++c)
        if (!((e.mask >> c) & 1u)) ech.add(cols[std::size_t(c)] >> phase);
    std::uint8_t members = 1;
    for (int code = 1; code < 8; ++code)
        if (ech.contains(target_word(code))) members |= std::uint8_t(1u << code);
    return Subspace3::from_mask(members);
}

Gpb gpb_oracle(const Kernel& k, const OracleOptions& opt) {
    if (k.n < 4) throw std::invalid_argument("gpb_oracle: kernel size must be >= 4");
    check_enumerable(k, opt);
    const int n = k.n;
    const int phases = n - 2;
    const int nt = resolve_threads(opt.threads);
    const std::vector<std::uint64_t> cols = column_words(k);
    static const std::array<int, 256> mask_to_index = make_mask_to_index();

    // counts[phase][subspace][weight], merged from per-chunk tallies; the
    // merge is exact integer addition, so chunking cannot change results.
    std::vector<std::uint64_t> counts(std::size_t(phases) * 16 * (std::size_t(n) + 1), 0);
    const std::uint64_t total = std::uint64_t(1) << n;

    for (int phase = 0; phase < phases; ++phase) {
        std::vector<std::uint64_t> shifted(cols);
        for (auto& c : shifted) c >>= phase;
        std::uint64_t* base = counts.data() + std::size_t(phase) * 16 * (std::size_t(n) + 1);
#pragma omp parallel num_threads(nt)
        {
            std::vector<std::uint64_t> local(16 * (std::size_t(n) + 1), 0);
#pragma omp for schedule(static)
            for (std::int64_t m = 0; m < std::int64_t(total); ++m) {
                const std::uint64_t mask = std::uint64_t(m);
                SmallEchelon ech{};
                for (int c = 0; c < n; ++c)
                    if (!((mask >> c) & 1u)) ech.add(shifted[std::size_t(c)]);
                std::uint8_t members = 1;
                for (int code = 1; code < 8; ++code)
                    if (ech.contains(target_word(code))) members |= std::uint8_t(1u << code);
                const int idx = mask_to_index[members];
                ++local[std::size_t(idx) * (std::size_t(n) + 1) + std::size_t(std::popcount(mask))];
            }
#pragma omp critical
            for (std::size_t i = 0; i < local.size(); ++i) base[i] += local[i];
        }
        if (opt.progress) opt.progress(phase + 1, phases);
    }

    Gpb g;
    g.n = n;
    g.rows.resize(std::size_t(phases));
    for (int phase = 0; phase < phases; ++phase)
        for (int s = 0; s < 16; ++s) {
            std::vector<mpz_class> c(std::size_t(n) + 1);
            for (int w = 0; w <= n; ++w)
                c[std::size_t(w)] = mpz_class(static_cast<unsigned long>(
                    counts[(std::size_t(phase) * 16 + std::size_t(s)) * (std::size_t(n) + 1) +
                           std::size_t(w)]));
            g.rows[std::size_t(phase)][std::size_t(s)] = WeightEnum(std::move(c));
        }
    return g;
}

Pb pb_oracle(const Kernel& k, const OracleOptions& opt) {
    if (k.n < 2) throw std::invalid_argument("pb_oracle: kernel size must be >= 2");
    check_enumerable(k, opt);
    const int n = k.n;
    const int nt = resolve_threads(opt.threads);
    const std::vector<std::uint64_t> cols = column_words(k);

    std::vector<std::uint64_t> counts(std::size_t(n) * (std::size_t(n) + 1), 0);
    const std::uint64_t total = std::uint64_t(1) << n;

    for (int phase = 0; phase < n; ++phase) {
        std::vector<std::uint64_t> shifted(cols);
        for (auto& c : shifted) c >>= phase;
        std::uint64_t* base = counts.data() + std::size_t(phase) * (std::size_t(n) + 1);
#pragma omp parallel num_threads(nt)
        {
            std::vector<std::uint64_t> local(std::size_t(n) + 1, 0);
#pragma omp for schedule(static)
            for (std::int64_t m = 0; m < std::int64_t(total); ++m) {
                const std::uint64_t mask = std::uint64_t(m);
                SmallEchelon ech{};
                for (int c = 0; c < n; ++c)
                    if (!((mask >> c) & 1u)) ech.add(shifted[std::size_t(c)]);
                if (!ech.contains(1u))  // (1, 0^{n-phase-1}) unreachable = erased
                    ++local[std::size_t(std::popcount(mask))];
            }
#pragma omp critical
            for (std::size_t i = 0; i < local.size(); ++i) base[i] += local[i];
        }
        if (opt.progress) opt.progress(phase + 1, n);
    }

    Pb p;
    p.n = n;
    p.family = k.family;
    p.source = "oracle";
    p.polys.resize(std::size_t(n));
    for (int phase = 0; phase < n; ++phase) {
        std::vector<mpz_class> c(std::size_t(n) + 1);
        for (int w = 0; w <= n; ++w)
            c[std::size_t(w)] = mpz_class(static_cast<unsigned long>(
                counts[std::size_t(phase) * (std::size_t(n) + 1) + std::size_t(w)]));
        p.polys[std::size_t(phase)] = WeightEnum(std::move(c));
    }
    return p;
}

}  // namespace cvpk
