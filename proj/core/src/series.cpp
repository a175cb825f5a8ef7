#include "bihankel/series.hpp"

#include <stdexcept>
#include <string>

namespace bihankel {

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) {
        throw std::invalid_argument("TruncatedSeries: order must be >= 0");
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, cplx(0.0, 0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("TruncatedSeries: need at least the constant coefficient");
    }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<cplx> coeffs)
    : TruncatedSeries(std::vector<cplx>(coeffs)) {}

cplx TruncatedSeries::operator[](int k) const {
    if (k < 0 || k > order()) {
        throw std::out_of_range("TruncatedSeries: coefficient index " + std::to_string(k) +
                                " outside order " + std::to_string(order()));
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::identity(int order) {
    if (order < 1) {
        throw std::invalid_argument("TruncatedSeries::identity: order must be >= 1");
    }
    TruncatedSeries s(order);
    s.coeffs_[1] = cplx(1.0, 0.0);
    return s;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("multiply: series orders differ");
    }
    const int n = a.order();
    std::vector<cplx> out(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
    for (int k = 0; k <= n; ++k) {
        cplx acc(0.0, 0.0);
        for (int i = 0; i <= k; ++i) {
            acc += a[i] * b[k - i];
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (outer.order() != inner.order()) {
        throw std::invalid_argument("compose: series orders differ");
    }
    if (inner[0] != cplx(0.0, 0.0)) {
        throw std::domain_error("compose: inner series must have zero constant term");
    }
    const int n = outer.order();
    std::vector<cplx> out(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
    out[0] = outer[0];
    // Accumulate outer[k] * inner^k; inner^k has no terms below z^k, so the
    // loop over powers terminates at the order.
    TruncatedSeries power = inner;
    for (int k = 1; k <= n; ++k) {
        const cplx w = outer[k];
        for (int j = k; j <= n; ++j) {
            out[static_cast<std::size_t>(j)] += w * power[j];
        }
        if (k < n) {
            power = multiply(power, inner);
        }
    }
    return TruncatedSeries(std::move(out));
}

std::array<cplx, 3> invert_coefficients(cplx a2, cplx a3, cplx a4) {
    const cplx inv2 = -a2;
    const cplx inv3 = 2.0 * a2 * a2 - a3;
    const cplx inv4 = -(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4);
    return {inv2, inv3, inv4};
}

namespace {

// Laplace expansion along the first row. The matrices here are tiny (q is 2
// or 3 in practice), and the expansion reproduces the textbook 2x2 formula
// exactly, with no pivoting noise.
cplx det_laplace(const std::vector<cplx>& m, int n) {
    if (n == 1) return m[0];
    if (n == 2) return m[0] * m[3] - m[1] * m[2];
    cplx acc(0.0, 0.0);
    std::vector<cplx> minor(static_cast<std::size_t>(n - 1) * (n - 1));
    double sign = 1.0;
    for (int col = 0; col < n; ++col) {
        std::size_t w = 0;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[w++] = m[static_cast<std::size_t>(i) * n + j];
            }
        }
        acc += sign * m[static_cast<std::size_t>(col)] * det_laplace(minor, n - 1);
        sign = -sign;
    }
    return acc;
}

}  // namespace

cplx hankel(std::span<const cplx> coeffs, int q, int n) {
    if (q < 1 || n < 1) {
        throw std::invalid_argument("hankel: q and n must be positive");
    }
    const int needed = n + 2 * q - 2;
    if (static_cast<int>(coeffs.size()) < needed) {
        throw std::invalid_argument("hankel: need coefficients a_1..a_" + std::to_string(needed) +
                                    ", got " + std::to_string(coeffs.size()));
    }
    std::vector<cplx> m(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            // a_{n+i+j} with 0-based i, j lives at index n+i+j-1.
            m[static_cast<std::size_t>(i) * q + j] = coeffs[static_cast<std::size_t>(n + i + j - 1)];
        }
    }
    return det_laplace(m, q);
}

cplx fekete_szego(cplx a2, cplx a3, double fs_mu) {
    return a3 - fs_mu * a2 * a2;
}

}  // namespace bihankel
