#include "planarlam/counting.hpp"

#include <stdexcept>

#include "planarlam/series.hpp"

namespace planarlam {

namespace {
const mpz_class kZero = 0;
}

const mpz_class& CountTable::neutral(int n, int i) const {
    if (n < 0 || n >= static_cast<int>(neutral_rows.size())) return kZero;
    const auto& row = neutral_rows[n];
    if (i < 0 || i >= static_cast<int>(row.size())) return kZero;
    return row[i];
}

const mpz_class& CountTable::normal(int n, int i) const {
    if (n < 0 || n >= static_cast<int>(normal_rows.size())) return kZero;
    const auto& row = normal_rows[n];
    if (i < 0 || i >= static_cast<int>(row.size())) return kZero;
    return row[i];
}

CountTable count_tables(int max_n, int max_i) {
    if (max_n < 0) throw std::invalid_argument("count_tables: negative size");
    (void)max_i;  // tables are computed over the full triangle
    CountTable t;
    t.max_size = max_n;
    t.neutral_rows.resize(max_n + 1);
    t.normal_rows.resize(max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        // F[n] depends only on N[n-1]
        auto& fn = t.normal_rows[n];
        fn.assign(n + 1, 0);
        if (n >= 1) {
            const auto& prev = t.neutral_rows[n - 1];
            // F[n][i] = sum over j >= i, running the suffix sums inward
            mpz_class acc = 0;
            for (int j = static_cast<int>(prev.size()) - 1; j >= 0; --j) {
                acc += prev[j];
                if (j <= n) fn[j] = acc;
            }
        }
        auto& nn = t.neutral_rows[n];
        nn.assign(n + 2, 0);
        if (n == 0) nn[1] = 1;
        for (int i = 0; i <= n + 1; ++i) {
            mpz_class acc = (n == 0 && i == 1) ? 1 : 0;
            for (int a = 0; a <= n; ++a) {
                int b = n - a;
                const auto& na = t.neutral_rows[a];
                const auto& fb = t.normal_rows[b];
                for (int j = 1; j <= i && j < static_cast<int>(na.size()); ++j) {
                    int k = i - j;
                    if (k >= static_cast<int>(fb.size())) continue;
                    if (na[j] == 0 || fb[k] == 0) continue;
                    acc += na[j] * fb[k];
                }
            }
            nn[i] = acc;
        }
    }
    return t;
}

std::vector<mpz_class> closed_form_r0(int max_n) {
    if (max_n < 1) return {};
    int order = max_n + 1;
    RationalSeries one = RationalSeries::constant(1, order);
    RationalSeries base = one - RationalSeries::monomial(12, 1, order);
    RationalSeries root = base.binomial_power(mpq_class(1, 2));
    RationalSeries three_halves = base * root;
    RationalSeries numerator =
        one - RationalSeries::monomial(18, 1, order) - three_halves;
    // numerator is divisible by z; -(1/54) of the quotient is the series
    RationalSeries r0 = numerator.shifted_down(1).scaled(mpq_class(-1, 54));
    std::vector<mpz_class> out;
    out.reserve(max_n);
    for (int n = 1; n <= max_n; ++n) {
        mpq_class c = r0.coeff(n);
        c.canonicalize();
        if (c.get_den() != 1)
            throw std::logic_error("closed_form_r0: non-integral coefficient at z^" +
                                   std::to_string(n));
        out.push_back(c.get_num());
    }
    return out;
}

mpz_class tutte_count(int n) {
    if (n < 0) throw std::invalid_argument("tutte_count: negative n");
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), 2 * static_cast<unsigned long>(n));
    mpz_class pow3;
    mpz_ui_pow_ui(pow3.get_mpz_t(), 3, static_cast<unsigned long>(n));
    num *= 2;
    num *= pow3;
    mpz_class d1, d2;
    mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(n) + 2);
    mpz_class den = d1 * d2;
    if (num % den != 0)
        throw std::logic_error("tutte_count: formula did not divide exactly");
    return num / den;
}

IdentityReport check_identities(int max_n) {
    IdentityReport report;
    CountTable t = count_tables(max_n, max_n + 1);
    for (int n = 0; n <= max_n; ++n) {
        mpz_class column_sum = 0;
        if (n >= 1)
            for (const auto& v : t.neutral_rows[n - 1]) column_sum += v;
        if (t.normal(n, 0) != column_sum) {
            report.ok = false;
            report.violations.push_back(
                "F[" + std::to_string(n) + "][0] != sum_i N[" + std::to_string(n - 1) + "][i]");
        }
        if (t.normal(n, 1) != t.normal(n, 0)) {
            report.ok = false;
            report.violations.push_back(
                "F[" + std::to_string(n) + "][1] != F[" + std::to_string(n) + "][0]");
        }
    }
    return report;
}

}  // namespace planarlam
