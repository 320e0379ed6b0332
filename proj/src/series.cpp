#include "parsep/series.hpp"

#include <algorithm>

#include "parsep/error.hpp"

namespace parsep {

Series::Series(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

Series::Series(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("series needs at least one coefficient");
}

Series Series::one(int order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::binomial(int order, int k) {
    Series s = one(order);
    if (k == 0) {
        s.coeffs_[0] = 0;
    } else if (k <= order) {
        s.coeffs_[k] = -1;
    }
    return s;
}

Series Series::truncated(int order) const {
    if (order < 0 || order > this->order()) throw DomainError("cannot truncate to a larger order");
    return Series(std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series operator+(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return out;
}

Series operator-(const Series& a, const Series& b) {
    Series out(std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return out;
}

Series operator*(const Series& a, const Series& b) {
    const int order = std::min(a.order(), b.order());
    Series out(order);
    for (int i = 0; i <= order; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

void Series::mul_one_minus_qk(int k) {
    if (k <= 0) throw DomainError("binomial exponent must be positive");
    for (int m = order(); m >= k; --m) coeffs_[m] -= coeffs_[m - k];
}

Series series_mul(const Series& a, const Series& b) { return a * b; }

Series series_invert(const Series& a) {
    const mpz_class& c0 = a[0];
    if (c0 != 1 && c0 != -1) {
        throw DomainError("constant term " + c0.get_str() + " is not invertible over the integers");
    }
    // b[0] = 1/c0 = c0; b[k] = -c0 * sum_{i=1..k} a[i] b[k-i]
    const int order = a.order();
    Series b(order);
    b[0] = c0;
    mpz_class acc;
    for (int k = 1; k <= order; ++k) {
        acc = 0;
        for (int i = 1; i <= k; ++i) {
            if (sgn(a[i]) == 0) continue;
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        }
        b[k] = c0 == 1 ? mpz_class(-acc) : acc;
    }
    return b;
}

Series euler_product_even(int order) {
    Series s = Series::one(order);
    for (int k = 2; k <= order; k += 2) s.mul_one_minus_qk(k);
    return s;
}

Series euler_inverse_even(int order) { return series_invert(euler_product_even(order)); }

Series theta_squares(int order) {
    Series s(order);
    for (long n = 0; n * n <= order; ++n) s[static_cast<std::size_t>(n * n)] = 1;
    return s;
}

Series series_p_eu_od(int order) { return euler_inverse_even(order) * theta_squares(order); }

Series series_p_od_eu(int order) {
    // Right-hand side: (1 - inner) / (q^2;q^2)_inf, where
    //   inner = sum_{n>=1} sum_{j=1..n} (-1)^(n+j) (1 - q^(2n+1)) q^(n(3n+1)/2 - j^2).
    // Over j the smallest exponent is n(n+1)/2 (at j = n), so the outer sum
    // stops once that exceeds the order.
    Series inner(order);
    for (long n = 1; n * (n + 1) / 2 <= order; ++n) {
        for (long j = 1; j <= n; ++j) {
            const long e = n * (3 * n + 1) / 2 - j * j;
            const int sign = (n + j) % 2 == 0 ? 1 : -1;
            if (e <= order) inner[static_cast<std::size_t>(e)] += sign;
            const long e2 = e + 2 * n + 1;
            if (e2 <= order) inner[static_cast<std::size_t>(e2)] -= sign;
        }
    }
    Series signed_counts = euler_inverse_even(order) * (Series::one(order) - inner);
    // The left-hand side carries (-1)^k on coefficient k.
    for (int k = 1; k <= order; k += 2) signed_counts[k] = -signed_counts[k];
    return signed_counts;
}

Series diff_series(int order) { return series_p_eu_od(order) - series_p_od_eu(order); }

void write_series_csv(std::ostream& out, const Series& s) {
    out << "k,coefficient\n";
    for (int k = 0; k <= s.order(); ++k) out << k << ',' << s[k].get_str() << '\n';
}

}  // namespace parsep
