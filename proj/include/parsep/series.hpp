#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <ostream>
#include <vector>

namespace parsep {

/// Truncated formal power series in q with exact integer coefficients.
///
/// Holds the coefficients of q^0 .. q^order. Binary operations truncate to
/// the smaller of the two operand orders.
class Series {
public:
    /// The zero series of the given order.
    explicit Series(int order);
    explicit Series(std::vector<mpz_class> coeffs);

    static Series one(int order);
    /// 1 - q^k, or the zero-order-truncated version when k > order.
    static Series binomial(int order, int k);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& operator[](std::size_t k) const { return coeffs_.at(k); }
    mpz_class& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    Series truncated(int order) const;

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend bool operator==(const Series&, const Series&) = default;

    /// In-place multiplication by (1 - q^k): c[m] -= c[m-k], descending.
    void mul_one_minus_qk(int k);

private:
    std::vector<mpz_class> coeffs_;
};

Series series_mul(const Series& a, const Series& b);

/// Multiplicative inverse; the constant term must be +1 or -1.
/// Throws DomainError otherwise.
Series series_invert(const Series& a);

/// (q^2;q^2)_inf truncated at `order`.
Series euler_product_even(int order);

/// 1/(q^2;q^2)_inf: partitions into even parts.
Series euler_inverse_even(int order);

/// Sum over n >= 0 of q^(n^2).
Series theta_squares(int order);

/// Generating function of p_eu^od.
Series series_p_eu_od(int order);

/// Generating function of p_od^eu, with the alternating sign already removed.
Series series_p_od_eu(int order);

/// series_p_eu_od - series_p_od_eu.
Series diff_series(int order);

/// "k,coefficient" header followed by one row per coefficient.
void write_series_csv(std::ostream& out, const Series& s);

}  // namespace parsep
