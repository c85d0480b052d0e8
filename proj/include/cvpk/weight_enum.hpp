// Weight-enumerator polynomials with arbitrary-precision nonnegative
// integer coefficients, plus Bernstein-weighted evaluation that turns an
// enumerator into a BEC erasure probability.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cvpk {

class WeightEnum {
public:
    WeightEnum() = default;  // the zero polynomial
    explicit WeightEnum(std::vector<mpz_class> coeffs);

    static WeightEnum one() { return monomial(0); }
    static WeightEnum monomial(int weight, mpz_class count = 1);
    // (1+x)^n: the enumerator of all erasure configurations of [n].
    static WeightEnum all_configurations(int n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for zero
    const mpz_class& coeff(int w) const;
    // Least weight with a positive count; the polynomial must be nonzero.
    int min_weight() const;

    WeightEnum& operator+=(const WeightEnum& rhs);
    friend WeightEnum operator+(WeightEnum lhs, const WeightEnum& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend WeightEnum operator*(const WeightEnum& a, const WeightEnum& b) {
        return mul(a, b);
    }

    static WeightEnum mul(const WeightEnum& a, const WeightEnum& b);
    // Plain coefficient-by-coefficient product; the serial reference that
    // mul_kronecker is checked against.
    static WeightEnum mul_schoolbook(const WeightEnum& a, const WeightEnum& b);
    // Packs both polynomials into single big integers so one mpz_mul does
    // the whole product; coefficients are sliced back out afterwards.
    static WeightEnum mul_kronecker(const WeightEnum& a, const WeightEnum& b);

    std::vector<std::string> coeff_strings() const;
    std::string to_string() const;  // e.g. "x^4 + 4x^3"

    friend bool operator==(const WeightEnum&, const WeightEnum&) = default;

private:
    std::vector<mpz_class> c_;  // c_[w] = A_w, trailing zeros trimmed
    void trim();
};

// Prepared evaluator for sum_w A_w z^w (1-z)^(n-w). Terms are combined in
// the log2 domain in long double, anchored at the dominant term, so the
// result keeps ~16 significant digits even when coefficients reach 2^1000.
class ErasureEvaluator {
public:
    ErasureEvaluator(const WeightEnum& p, int n);
    double operator()(double z) const;
    int ambient_size() const { return n_; }

private:
    int n_;
    std::vector<long double> lg_;  // log2 of each coefficient, -inf when zero
    double at_zero_, at_one_;
};

double eval_erasure(const WeightEnum& p, int n, double z);

}  // namespace cvpk
