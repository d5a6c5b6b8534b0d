#include "planarlam/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace planarlam {

RationalSeries::RationalSeries(int order) {
    if (order < 0) throw std::invalid_argument("RationalSeries: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, mpq_class(0));
}

RationalSeries RationalSeries::constant(const mpq_class& value, int order) {
    RationalSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

RationalSeries RationalSeries::monomial(const mpq_class& value, int power, int order) {
    RationalSeries s(order);
    if (power < 0) throw std::invalid_argument("RationalSeries: negative power");
    if (power <= order) s.coeffs_[static_cast<size_t>(power)] = value;
    return s;
}

const mpq_class& RationalSeries::coeff(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("RationalSeries::coeff");
    return coeffs_[static_cast<size_t>(k)];
}

void RationalSeries::set_coeff(int k, const mpq_class& v) {
    if (k < 0 || k > order()) throw std::out_of_range("RationalSeries::set_coeff");
    coeffs_[static_cast<size_t>(k)] = v;
}

RationalSeries RationalSeries::operator+(const RationalSeries& other) const {
    RationalSeries out(std::min(order(), other.order()));
    for (int k = 0; k <= out.order(); ++k)
        out.coeffs_[k] = coeffs_[k] + other.coeffs_[k];
    return out;
}

RationalSeries RationalSeries::operator-(const RationalSeries& other) const {
    RationalSeries out(std::min(order(), other.order()));
    for (int k = 0; k <= out.order(); ++k)
        out.coeffs_[k] = coeffs_[k] - other.coeffs_[k];
    return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& other) const {
    RationalSeries out(std::min(order(), other.order()));
    for (int k = 0; k <= out.order(); ++k) {
        mpq_class acc(0);
        for (int j = 0; j <= k; ++j) acc += coeffs_[j] * other.coeffs_[k - j];
        out.coeffs_[k] = acc;
    }
    return out;
}

RationalSeries RationalSeries::scaled(const mpq_class& factor) const {
    RationalSeries out(order());
    for (int k = 0; k <= order(); ++k) out.coeffs_[k] = coeffs_[k] * factor;
    return out;
}

RationalSeries RationalSeries::shifted_down(int k) const {
    if (k < 0 || k > order()) throw std::invalid_argument("shifted_down: bad shift");
    for (int j = 0; j < k; ++j)
        if (coeffs_[j] != 0)
            throw std::invalid_argument("shifted_down: low coefficient is nonzero");
    RationalSeries out(order() - k);
    for (int j = 0; j <= out.order(); ++j) out.coeffs_[j] = coeffs_[j + k];
    return out;
}

RationalSeries RationalSeries::binomial_power(const mpq_class& alpha) const {
    if (coeffs_[0] != 1)
        throw std::invalid_argument("binomial_power: constant term must be 1");
    int n = order();
    RationalSeries u = *this - RationalSeries::constant(1, n);
    RationalSeries out = RationalSeries::constant(1, n);
    RationalSeries u_pow = RationalSeries::constant(1, n);
    mpq_class binom(1);  // C(alpha, 0)
    // u has no constant term, so u^k contributes nothing below z^k
    for (int k = 1; k <= n; ++k) {
        binom *= (alpha - (k - 1));
        binom /= k;
        u_pow = u_pow * u;
        out = out + u_pow.scaled(binom);
    }
    return out;
}

}  // namespace planarlam
