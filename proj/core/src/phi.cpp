#include "bihankel/phi.hpp"

#include <cmath>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace bihankel {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string("PhiSpec: ") + what + " must be finite");
    }
}

}  // namespace

PhiSpec::PhiSpec(PhiFamily family, double p0, double p1, double b1, double b2, double b3)
    : family_(family), params_{p0, p1}, b1_(b1), b2_(b2), b3_(b3) {
    require_finite(b1_, "B1");
    require_finite(b2_, "B2");
    require_finite(b3_, "B3");
    if (!(b1_ > 0.0)) {
        throw std::invalid_argument("PhiSpec: resolved B1 must be > 0");
    }
}

PhiSpec PhiSpec::caratheodory() {
    return PhiSpec(PhiFamily::caratheodory, 0.0, 0.0, 2.0, 2.0, 2.0);
}

PhiSpec PhiSpec::janowski(double a, double b) {
    require_finite(a, "janowski A");
    require_finite(b, "janowski B");
    if (!(-1.0 <= b && b < a && a <= 1.0)) {
        throw std::invalid_argument("PhiSpec: janowski requires -1 <= B < A <= 1");
    }
    const double b1 = a - b;
    return PhiSpec(PhiFamily::janowski, a, b, b1, -b * b1, b * b * b1);
}

PhiSpec PhiSpec::order_beta(double beta) {
    require_finite(beta, "order beta");
    if (!(0.0 <= beta && beta < 1.0)) {
        throw std::invalid_argument("PhiSpec: order_beta requires 0 <= beta < 1");
    }
    // The order-beta target is the Janowski pair (1-2beta, -1); resolving it
    // through the same arithmetic keeps the two families bit-identical.
    PhiSpec j = janowski(1.0 - 2.0 * beta, -1.0);
    return PhiSpec(PhiFamily::order_beta, beta, 0.0, j.b1_, j.b2_, j.b3_);
}

PhiSpec PhiSpec::power_alpha(double alpha) {
    require_finite(alpha, "power alpha");
    if (!(0.0 < alpha && alpha <= 1.0)) {
        throw std::invalid_argument("PhiSpec: power_alpha requires 0 < alpha <= 1");
    }
    const double b1 = 2.0 * alpha;
    const double b2 = 2.0 * alpha * alpha;
    const double b3 = 2.0 * alpha * (2.0 * alpha * alpha + 1.0) / 3.0;
    return PhiSpec(PhiFamily::power_alpha, alpha, 0.0, b1, b2, b3);
}

PhiSpec PhiSpec::custom(double b1, double b2, double b3) {
    return PhiSpec(PhiFamily::custom, 0.0, 0.0, b1, b2, b3);
}

namespace {

std::vector<double> parse_number_list(std::string_view text, std::size_t expected,
                                      std::string_view family) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("PhiSpec: bad number '" + std::string(tok) + "' in '" +
                                        std::string(family) + "' parameters");
        }
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (out.size() != expected) {
        throw std::invalid_argument("PhiSpec: family '" + std::string(family) + "' takes " +
                                    std::to_string(expected) + " parameter(s)");
    }
    return out;
}

}  // namespace

PhiSpec PhiSpec::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view args =
        colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (name == "caratheodory") {
        if (colon != std::string_view::npos) {
            throw std::invalid_argument("PhiSpec: caratheodory takes no parameters");
        }
        return caratheodory();
    }
    if (name == "order_beta") {
        return order_beta(parse_number_list(args, 1, name)[0]);
    }
    if (name == "janowski") {
        auto v = parse_number_list(args, 2, name);
        return janowski(v[0], v[1]);
    }
    if (name == "power") {
        return power_alpha(parse_number_list(args, 1, name)[0]);
    }
    if (name == "custom") {
        auto v = parse_number_list(args, 3, name);
        return custom(v[0], v[1], v[2]);
    }
    throw std::invalid_argument("PhiSpec: unknown family '" + std::string(name) + "'");
}

double PhiSpec::family_param(int i) const {
    if (i < 0 || i > 1) {
        throw std::out_of_range("PhiSpec: family_param index must be 0 or 1");
    }
    return params_[i];
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string PhiSpec::to_string() const {
    switch (family_) {
        case PhiFamily::caratheodory:
            return "caratheodory";
        case PhiFamily::order_beta:
            return "order_beta:" + fmt(params_[0]);
        case PhiFamily::janowski:
            return "janowski:" + fmt(params_[0]) + "," + fmt(params_[1]);
        case PhiFamily::power_alpha:
            return "power:" + fmt(params_[0]);
        case PhiFamily::custom:
            return "custom:" + fmt(b1_) + "," + fmt(b2_) + "," + fmt(b3_);
    }
    throw std::logic_error("PhiSpec: unreachable family");
}

TruncatedSeries PhiSpec::series(int order) const {
    if (order < 0) {
        throw std::invalid_argument("PhiSpec::series: order must be >= 0");
    }
    std::vector<cplx> coeffs(static_cast<std::size_t>(order) + 1, cplx(0.0, 0.0));
    const double all[4] = {1.0, b1_, b2_, b3_};
    for (int k = 0; k <= order && k < 4; ++k) {
        coeffs[static_cast<std::size_t>(k)] = cplx(all[k], 0.0);
    }
    return TruncatedSeries(std::move(coeffs));
}

ClassParams::ClassParams(cplx tau, double lambda, double delta)
    : tau_(tau), lambda_(lambda), delta_(delta) {
    if (!(std::abs(tau_) > 0.0) || !std::isfinite(tau_.real()) || !std::isfinite(tau_.imag())) {
        throw std::invalid_argument("ClassParams: tau must be finite and nonzero");
    }
    if (!(lambda_ >= 1.0) || !std::isfinite(lambda_)) {
        throw std::invalid_argument("ClassParams: lambda must be >= 1");
    }
    if (!(0.0 <= delta_ && delta_ <= 1.0)) {
        throw std::invalid_argument("ClassParams: delta must lie in [0, 1]");
    }
}

double ClassParams::weight(int n) const {
    if (n < 2) {
        throw std::invalid_argument("ClassParams::weight: n must be >= 2");
    }
    return 1.0 + (n - 1) * (lambda_ + n * delta_);
}

cplx operator_weight(const ClassParams& params, int n) {
    return params.weight(n) / params.tau();
}

TruncatedSeries apply_operator(const ClassParams& params, const TruncatedSeries& f) {
    const int n = f.order();
    if (n < 1) {
        throw std::domain_error("apply_operator: series must contain a linear term");
    }
    constexpr double tol = 1e-12;
    if (std::abs(f[0]) > tol || std::abs(f[1] - cplx(1.0, 0.0)) > tol) {
        throw std::domain_error("apply_operator: series must be normalized (f(0)=0, f'(0)=1)");
    }
    std::vector<cplx> out(static_cast<std::size_t>(n), cplx(0.0, 0.0));
    out[0] = cplx(1.0, 0.0);
    for (int k = 2; k <= n; ++k) {
        out[static_cast<std::size_t>(k - 1)] = operator_weight(params, k) * f[k];
    }
    return TruncatedSeries(std::move(out));
}

}  // namespace bihankel
