#pragma once

#include <gmpxx.h>

#include <vector>

namespace planarlam {

// Truncated power series with exact rational coefficients. The truncation
// order is explicit; mixed-order arithmetic truncates to the minimum.
class RationalSeries {
public:
    explicit RationalSeries(int order);
    static RationalSeries constant(const mpq_class& value, int order);
    static RationalSeries monomial(const mpq_class& value, int power, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpq_class& coeff(int k) const;
    void set_coeff(int k, const mpq_class& v);

    RationalSeries operator+(const RationalSeries& other) const;
    RationalSeries operator-(const RationalSeries& other) const;
    RationalSeries operator*(const RationalSeries& other) const;
    RationalSeries scaled(const mpq_class& factor) const;

    // Divides by z^k; the low k coefficients must vanish.
    RationalSeries shifted_down(int k) const;

    // (this)^alpha by the generalized binomial series; requires constant
    // term 1.
    RationalSeries binomial_power(const mpq_class& alpha) const;

private:
    std::vector<mpq_class> coeffs_;  // index = power of z
};

}  // namespace planarlam
