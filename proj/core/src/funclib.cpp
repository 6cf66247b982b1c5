#include "sinrc/funclib.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sinrc {

namespace {

double parse_param(const std::string& kv, char key, double fallback, bool* seen = nullptr) {
    // kv like "e=0.5"
    if (kv.size() < 3 || kv[0] != key || kv[1] != '=') return fallback;
    if (seen) *seen = true;
    return std::stod(kv.substr(2));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.emplace_back(s.substr(pos));
            break;
        }
        out.emplace_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

} // namespace

SublinearFn SublinearFn::constant(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("constant function needs gamma > 0");
    SublinearFn f;
    f.family_ = Family::Constant;
    f.scale_ = gamma;
    return f;
}

SublinearFn SublinearFn::tlog(double scale, double alpha, double m) {
    if (!(scale > 0.0)) throw std::invalid_argument("tlog needs a positive scale");
    if (!(alpha > m)) throw std::invalid_argument("tlog requires alpha > m");
    SublinearFn f;
    f.family_ = Family::TLog;
    f.scale_ = scale;
    f.exponent_ = 2.0 / (alpha - m);
    f.alpha_ = alpha;
    f.m_ = m;
    return f;
}

SublinearFn SublinearFn::log2fn(double scale, double base) {
    if (!(scale > 0.0) || !(base > 1.0)) throw std::invalid_argument("bad log parameters");
    SublinearFn f;
    f.family_ = Family::Log;
    f.scale_ = scale;
    f.base_ = base;
    return f;
}

SublinearFn SublinearFn::power(double exponent, double scale) {
    if (!(exponent > 0.0 && exponent < 1.0))
        throw std::invalid_argument("power exponent must lie in (0, 1)");
    if (!(scale > 0.0)) throw std::invalid_argument("power needs a positive scale");
    SublinearFn f;
    f.family_ = Family::Power;
    f.scale_ = scale;
    f.exponent_ = exponent;
    return f;
}

SublinearFn SublinearFn::parse(std::string_view spec, double alpha, double m) {
    const auto head = split(spec, ':');
    const std::string& name = head[0];
    std::vector<std::string> params;
    if (head.size() > 1) params = split(head[1], ',');
    if (head.size() > 2) throw std::invalid_argument("bad function spec: " + std::string(spec));

    auto get = [&](char key, double fallback) {
        double v = fallback;
        for (const auto& kv : params) v = parse_param(kv, key, v);
        return v;
    };

    if (name == "const") {
        if (params.size() == 1 && params[0].find('=') == std::string::npos)
            return constant(std::stod(params[0]));
        return constant(get('g', 1.0));
    }
    if (name == "tlog") {
        if (!(alpha > m)) throw std::invalid_argument("tlog spec needs instance alpha > m");
        return tlog(get('g', 1.0), alpha, m);
    }
    if (name == "log") return log2fn(get('s', 1.0), get('b', 2.0));
    if (name == "pow") return power(get('e', 0.5), get('s', 1.0));
    throw std::invalid_argument("unknown function family: " + name);
}

SublinearFn SublinearFn::scaled(double c) const {
    if (!(c > 0.0)) throw std::invalid_argument("scale factor must be positive");
    SublinearFn f = *this;
    f.scale_ *= c;
    return f;
}

double SublinearFn::operator()(double x) const {
    if (!(x >= 1.0)) throw std::invalid_argument("sub-linear functions are evaluated on [1, inf)");
    switch (family_) {
    case Family::Constant:
        return scale_;
    case Family::TLog:
        return scale_ * std::max(std::pow(std::log2(x), exponent_), 1.0);
    case Family::Log:
        return scale_ * std::log2(x) / std::log2(base_);
    case Family::Power:
        return scale_ * std::pow(x, exponent_);
    }
    throw std::logic_error("unreachable");
}

double SublinearFn::iterate(double x, int c) const {
    if (c < 1) throw std::invalid_argument("iterate needs c >= 1");
    double y = x;
    for (int k = 0; k < c; ++k) {
        if (y < 1.0) return 1.0;
        y = (*this)(y);
    }
    return y;
}

double SublinearFn::fixed_point() const {
    switch (family_) {
    case Family::Constant:
        return scale_ + 1.0;
    case Family::Power:
        return std::max(std::pow(scale_, 1.0 / (1.0 - exponent_)), 1.0) + 1.0;
    default:
        break;
    }
    if (family_ == Family::Log && scale_ == 1.0 && base_ == 2.0) return 2.0;
    // Doubling then bisection for the first x with f(x) < x.
    if ((*this)(1.0) < 1.0) return 2.0;
    double lo = 1.0, hi = 2.0;
    while ((*this)(hi) >= hi) {
        lo = hi;
        hi *= 2.0;
        if (hi > 0x1p60)
            throw std::domain_error("function does not drop below the identity on [1, 2^60]");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((*this)(mid) < mid)
            hi = mid;
        else
            lo = mid;
    }
    return hi + 1.0;
}

int SublinearFn::star(double x) const {
    if (!(x >= 1.0)) throw std::invalid_argument("f* is defined on [1, inf)");
    const double x0 = fixed_point();
    if (x <= x0) return 1;
    double y = x;
    for (int c = 1; c <= 200; ++c) {
        const double prev = y;
        y = (*this)(std::max(y, 1.0));
        if (y <= x0) return c;
        if (y >= prev) throw std::domain_error("divergent iteration in f*");
    }
    throw std::domain_error("f* iteration exceeded 200 compositions");
}

int SublinearFn::star_of_pow2(double exponent) const {
    if (family_ != Family::Log || scale_ != 1.0 || base_ != 2.0)
        throw std::invalid_argument("star_of_pow2 is only defined for plain log2");
    if (!(exponent >= 0.0)) throw std::invalid_argument("exponent must be nonnegative");
    if (exponent <= 60.0) return star(std::exp2(exponent));
    // log2(2^e) = e exactly: one composition, then iterate normally.
    return 1 + star(exponent);
}

std::string SublinearFn::spec_string() const {
    std::ostringstream out;
    switch (family_) {
    case Family::Constant:
        out << "const:" << scale_;
        break;
    case Family::TLog:
        out << "tlog:g=" << scale_;
        break;
    case Family::Log:
        out << "log:s=" << scale_ << ",b=" << base_;
        break;
    case Family::Power:
        out << "pow:e=" << exponent_ << ",s=" << scale_;
        break;
    }
    return out.str();
}

SublinearProbe strong_sublinearity_probe(const std::function<double(double)>& f, double c,
                                         double x_max, int grid_points) {
    // Grid starts at 2 so that f(y)/y is positive for the log family.
    std::vector<double> grid;
    const double lo = std::log2(2.0), hi = std::log2(x_max);
    for (int k = 0; k < grid_points; ++k)
        grid.push_back(std::exp2(lo + (hi - lo) * k / (grid_points - 1)));

    std::pair<double, double> last_bad{0.0, 0.0};
    for (int e = 0; e <= 20; ++e) {
        const double cprime = std::exp2(e);
        bool ok = true;
        for (double y : grid) {
            for (double x : grid) {
                if (x < cprime * y) continue;
                if (c * f(x) / x > f(y) / y) {
                    ok = false;
                    last_bad = {x, y};
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return SublinearProbe{cprime, std::nullopt};
    }
    return SublinearProbe{std::nullopt, last_bad};
}

} // namespace sinrc
