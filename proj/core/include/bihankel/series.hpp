#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace bihankel {

using cplx = std::complex<double>;

/// A power series truncated at a fixed order: index k holds the coefficient
/// of z^k. Every arithmetic operation discards powers above the stored order
/// exactly, so order-N values form a closed algebra. Instances are immutable
/// after construction and safe to share across threads.
class TruncatedSeries {
public:
    /// All-zero series of the given order (order >= 0).
    explicit TruncatedSeries(int order);

    /// Takes the coefficients verbatim; the order is coeffs.size() - 1.
    explicit TruncatedSeries(std::vector<cplx> coeffs);
    TruncatedSeries(std::initializer_list<cplx> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of z^k, bounds-checked.
    cplx operator[](int k) const;

    const std::vector<cplx>& coeffs() const { return coeffs_; }

    /// The constant series c + 0z + ... at the given order.
    static TruncatedSeries constant(cplx value, int order);

    /// The series z at the given order (order >= 1).
    static TruncatedSeries identity(int order);

private:
    std::vector<cplx> coeffs_;
};

/// Cauchy product truncated at the common order. Both operands must have the
/// same order.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Coefficients of outer(inner(z)) at the common order. The inner series must
/// have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// First three coefficients {A2, A3, A4} of the compositional inverse of
/// f(z) = z + a2 z^2 + a3 z^3 + a4 z^4 + ...:
///   A2 = -a2,  A3 = 2 a2^2 - a3,  A4 = -(5 a2^3 - 5 a2 a3 + a4).
std::array<cplx, 3> invert_coefficients(cplx a2, cplx a3, cplx a4);

/// q-th order Hankel determinant of a coefficient sequence: the determinant
/// of the q x q matrix whose (i, j) entry is a_{n+i+j-2} (1-based i, j).
/// `coeffs` supplies a_1 .. a_{n+2q-2} in order, a_1 = 1 by convention.
/// hankel(a, 2, 2) = a2 a4 - a3^2 and hankel(a, 2, 1) = a3 - a2^2.
cplx hankel(std::span<const cplx> coeffs, int q, int n);

/// The functional a3 - mu * a2^2 with real weight mu.
cplx fekete_szego(cplx a2, cplx a3, double fs_mu);

}  // namespace bihankel
