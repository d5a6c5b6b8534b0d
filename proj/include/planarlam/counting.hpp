#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace planarlam {

// Exact counts of neutral and normal planar terms by size n and number of
// free variables i, from the recurrences
//   N[n][i] = [i=1][n=0] + sum_{j+k=i, a+b=n} N[a][j] * F[b][k]
//   F[n][i] = sum_{j>=i} N[n-1][j]
struct CountTable {
    int max_size;

    // zero outside the triangle: N[n][i] = 0 for i > n+1, F[n][i] = 0 for i > n
    const mpz_class& neutral(int n, int i) const;
    const mpz_class& normal(int n, int i) const;

    std::vector<std::vector<mpz_class>> neutral_rows;  // [n][i], i <= n+1
    std::vector<std::vector<mpz_class>> normal_rows;   // [n][i], i <= n
};

CountTable count_tables(int max_n, int max_i);

// Coefficients z^1..z^max_n of -(1/54z)(1 - 18z - (1-12z)^{3/2}), computed
// by exact binomial expansion. Throws std::logic_error if any coefficient
// fails to be an integer.
std::vector<mpz_class> closed_form_r0(int max_n);

// 2 * (2n)! * 3^n / (n! * (n+2)!)
mpz_class tutte_count(int n);

struct IdentityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks F[n][0] = sum_i N[n-1][i] and F[n][1] = F[n][0] for n <= max_n.
IdentityReport check_identities(int max_n);

}  // namespace planarlam
