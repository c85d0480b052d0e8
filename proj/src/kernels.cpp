#include "cvpk/kernels.hpp"

#include <bit>
#include <stdexcept>

namespace cvpk {

namespace {

bool is_pow2(int n) { return n >= 1 && (n & (n - 1)) == 0; }

gf2::BitMatrix apply_row_permutation(const gf2::BitMatrix& m, const std::vector<int>& perm) {
    gf2::BitMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(std::size_t(perm[r]), c)) out.set(r, c, true);
    return out;
}

gf2::BitMatrix kron(const gf2::BitMatrix& a, const gf2::BitMatrix& b) {
    gf2::BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j)) continue;
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    if (b.get(r, c)) out.set(i * b.rows() + r, j * b.cols() + c, true);
        }
    return out;
}

void check_invertible(const Kernel& k) {
    if (gf2::rank(k.matrix) != std::size_t(k.n))
        throw std::logic_error("kernel construction produced a singular matrix");
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::cvpk: return "cvpk";
        case Family::cvpk_swapped: return "cvpk-swapped";
        case Family::cvpk_sorted: return "cvpk-sorted";
        case Family::arikan_power: return "arikan-power";
    }
    throw std::logic_error("family_name: bad enum");
}

Family family_from_name(std::string_view name) {
    if (name == "cvpk") return Family::cvpk;
    if (name == "cvpk-swapped") return Family::cvpk_swapped;
    if (name == "cvpk-sorted") return Family::cvpk_sorted;
    if (name == "arikan" || name == "arikan-power") return Family::arikan_power;
    throw std::invalid_argument("unknown kernel family: " + std::string(name));
}

std::pair<gf2::BitMatrix, gf2::BitMatrix> xz_matrices(int l) {
    if (l < 2 || l % 2 != 0) throw std::invalid_argument("xz_matrices: l must be even and >= 2");
    const auto rows = std::size_t(l);
    gf2::BitMatrix x{rows, rows / 2}, z{rows, rows / 2};
    for (int j = 0; j < l / 2; ++j)
        for (int i = 2 * j; i <= 2 * j + 2 && i < l; ++i) {
            x.set(std::size_t(i), std::size_t(j), true);
            if (i > 2 * j) z.set(std::size_t(i), std::size_t(j), true);
        }
    return {std::move(x), std::move(z)};
}

Kernel cvpk(int n) {
    if (!is_pow2(n)) throw std::invalid_argument("cvpk: size must be a power of two");
    gf2::BitMatrix q(1, 1);
    q.set(0, 0, true);
    for (int l = 2; l <= n; l *= 2) {
        auto [x, z] = xz_matrices(l);
        const gf2::BitMatrix left = gf2::mul(x, q);
        const gf2::BitMatrix right = gf2::mul(z, q);
        const auto half = std::size_t(l) / 2;
        gf2::BitMatrix next{half * 2, half * 2};
        for (std::size_t r = 0; r < half * 2; ++r)
            for (std::size_t c = 0; c < half; ++c) {
                if (left.get(r, c)) next.set(r, c, true);
                if (right.get(r, c)) next.set(r, half + c, true);
            }
        q = std::move(next);
    }
    Kernel k{n, std::move(q), Family::cvpk, std::nullopt};
    check_invertible(k);
    return k;
}

Kernel swapped_cvpk(int n) {
    Kernel base = cvpk(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[std::size_t(i)] = i;
    for (int i = 2; i <= n / 2 - 3; ++i) std::swap(perm[std::size_t(2 * i)], perm[std::size_t(2 * i + 1)]);
    Kernel k{n, apply_row_permutation(base.matrix, perm), Family::cvpk_swapped, std::move(perm)};
    check_invertible(k);
    return k;
}

Kernel sorted_cvpk(int n) {
    std::vector<int> perm;
    if (n == 16) perm.assign(kPi16.begin(), kPi16.end());
    else if (n == 32) perm.assign(kPi32.begin(), kPi32.end());
    else throw std::invalid_argument("sorted_cvpk: only n = 16 and n = 32 are supported");
    Kernel base = cvpk(n);
    Kernel k{n, apply_row_permutation(base.matrix, perm), Family::cvpk_sorted, std::move(perm)};
    check_invertible(k);
    return k;
}

Kernel arikan_power(int m) {
    if (m < 1) throw std::invalid_argument("arikan_power: m must be >= 1");
    const gf2::BitMatrix f = gf2::BitMatrix::from_rows({"10", "11"});
    gf2::BitMatrix acc = f;
    for (int i = 1; i < m; ++i) acc = kron(acc, f);
    Kernel k{1 << m, std::move(acc), Family::arikan_power, std::nullopt};
    check_invertible(k);
    return k;
}

}  // namespace cvpk
