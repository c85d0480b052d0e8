#include "cvpk/weight_enum.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace cvpk {

namespace {

std::size_t bits_of(const mpz_class& v) {
    return v == 0 ? 1 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace

WeightEnum::WeightEnum(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    for (const mpz_class& a : c_)
        if (a < 0) throw std::invalid_argument("WeightEnum: negative coefficient");
    trim();
}

void WeightEnum::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

WeightEnum WeightEnum::monomial(int weight, mpz_class count) {
    if (weight < 0) throw std::invalid_argument("WeightEnum: negative weight");
    if (count < 0) throw std::invalid_argument("WeightEnum: negative coefficient");
    WeightEnum p;
    if (count != 0) {
        p.c_.assign(std::size_t(weight) + 1, 0);
        p.c_.back() = std::move(count);
    }
    return p;
}

WeightEnum WeightEnum::all_configurations(int n) {
    if (n < 0) throw std::invalid_argument("WeightEnum: negative size");
    std::vector<mpz_class> c(std::size_t(n) + 1);
    for (int w = 0; w <= n; ++w)
        mpz_bin_uiui(c[w].get_mpz_t(), n, w);
    return WeightEnum(std::move(c));
}

const mpz_class& WeightEnum::coeff(int w) const {
    static const mpz_class zero = 0;
    if (w < 0 || std::size_t(w) >= c_.size()) return zero;
    return c_[w];
}

int WeightEnum::min_weight() const {
    for (std::size_t w = 0; w < c_.size(); ++w)
        if (c_[w] != 0) return int(w);
    throw std::logic_error("WeightEnum: min_weight of zero polynomial");
}

WeightEnum& WeightEnum::operator+=(const WeightEnum& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t w = 0; w < rhs.c_.size(); ++w) c_[w] += rhs.c_[w];
    return *this;
}

WeightEnum WeightEnum::mul_schoolbook(const WeightEnum& a, const WeightEnum& b) {
    if (a.is_zero() || b.is_zero()) return {};
    WeightEnum p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

WeightEnum WeightEnum::mul_kronecker(const WeightEnum& a, const WeightEnum& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t na = a.c_.size(), nb = b.c_.size();

    std::size_t ba = 1, bb = 1;
    for (const mpz_class& v : a.c_) ba = std::max(ba, bits_of(v));
    for (const mpz_class& v : b.c_) bb = std::max(bb, bits_of(v));
    // Any product coefficient is a sum of at most min(na,nb) terms, each
    // below 2^(ba+bb); slots this wide cannot overflow into each other.
    const std::size_t slot_bits = ba + bb + std::bit_width(std::min(na, nb)) + 1;
    const std::size_t L = (slot_bits + 63) / 64;

    auto pack = [L](const std::vector<mpz_class>& c) {
        std::vector<std::uint64_t> buf(c.size() * L, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            std::size_t cnt = 0;
            mpz_export(buf.data() + i * L, &cnt, -1, 8, 0, 0, c[i].get_mpz_t());
        }
        mpz_class packed;
        mpz_import(packed.get_mpz_t(), buf.size(), -1, 8, 0, 0, buf.data());
        return packed;
    };

    const mpz_class prod = pack(a.c_) * pack(b.c_);

    const std::size_t nw = na + nb - 1;
    std::vector<std::uint64_t> buf(nw * L + 1, 0);
    std::size_t cnt = 0;
    mpz_export(buf.data(), &cnt, -1, 8, 0, 0, prod.get_mpz_t());

    WeightEnum p;
    p.c_.resize(nw);
    for (std::size_t w = 0; w < nw; ++w)
        mpz_import(p.c_[w].get_mpz_t(), L, -1, 8, 0, 0, buf.data() + w * L);
    p.trim();
    return p;
}

WeightEnum WeightEnum::mul(const WeightEnum& a, const WeightEnum& b) {
    if (a.c_.size() < 16 || b.c_.size() < 16) return mul_schoolbook(a, b);
    return mul_kronecker(a, b);
}

std::vector<std::string> WeightEnum::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const mpz_class& v : c_) out.push_back(v.get_str());
    return out;
}

std::string WeightEnum::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int w = degree(); w >= 0; --w) {
        if (c_[w] == 0) continue;
        if (!s.empty()) s += " + ";
        if (c_[w] != 1 || w == 0) s += c_[w].get_str();
        if (w > 0) s += w == 1 ? "x" : "x^" + std::to_string(w);
    }
    return s;
}

ErasureEvaluator::ErasureEvaluator(const WeightEnum& p, int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("ErasureEvaluator: negative size");
    if (p.degree() > n) throw std::invalid_argument("ErasureEvaluator: degree exceeds size");
    lg_.assign(std::size_t(n) + 1, -std::numeric_limits<long double>::infinity());
    for (int w = 0; w <= p.degree(); ++w) {
        const mpz_class& a = p.coeff(w);
        if (a == 0) continue;
        long e;
        const double d = mpz_get_d_2exp(&e, a.get_mpz_t());
        lg_[w] = std::log2(static_cast<long double>(d)) + static_cast<long double>(e);
    }
    at_zero_ = p.coeff(0).get_d();
    at_one_ = p.coeff(n).get_d();
}

double ErasureEvaluator::operator()(double z) const {
    if (!(z >= 0.0 && z <= 1.0)) throw std::invalid_argument("eval_erasure: z outside [0,1]");
    if (z == 0.0) return at_zero_;
    if (z == 1.0) return at_one_;

    const long double lz = std::log2(static_cast<long double>(z));
    const long double l1z = std::log2(static_cast<long double>(1.0 - z));
    long double best = -std::numeric_limits<long double>::infinity();
    for (int w = 0; w <= n_; ++w) {
        const long double t = lg_[w] + w * lz + (n_ - w) * l1z;
        if (t > best) best = t;
    }
    if (best == -std::numeric_limits<long double>::infinity()) return 0.0;

    // Terms 80+ binary orders below the peak cannot move the 16th digit.
    long double sum = 0.0L;
    for (int w = 0; w <= n_; ++w) {
        const long double t = lg_[w] + w * lz + (n_ - w) * l1z - best;
        if (t >= -80.0L) sum += std::exp2(t);
    }
    return static_cast<double>(std::exp2(best + std::log2(sum)));
}

double eval_erasure(const WeightEnum& p, int n, double z) {
    return ErasureEvaluator(p, n)(z);
}

}  // namespace cvpk
