#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace sinrc {

/// The sub-linear function family used to parameterize conflict graphs:
/// constant gamma, tlog (max(log2^{2/(alpha-m)} x, 1), scaled), plain
/// logarithm, and powers x^e with e in (0,1). All logarithms are base 2.
class SublinearFn {
public:
    enum class Family { Constant, TLog, Log, Power };

    static SublinearFn constant(double gamma);
    static SublinearFn tlog(double scale, double alpha, double m);
    static SublinearFn log2fn(double scale = 1.0, double base = 2.0);
    static SublinearFn power(double exponent, double scale = 1.0);

    /// Parses a CLI spec string: "const:1.5", "tlog:g=2", "log",
    /// "log:s=2,b=4", "pow:e=0.5,s=3". tlog inherits alpha and m from the
    /// caller (typically the instance).
    static SublinearFn parse(std::string_view spec, double alpha = 0.0, double m = 0.0);

    Family family() const { return family_; }
    double scale() const { return scale_; }

    /// c * f, same family.
    SublinearFn scaled(double c) const;

    /// Evaluation; throws for x < 1.
    double operator()(double x) const;

    /// f^(c)(x): c-fold composition. Intermediate values below 1 are
    /// clamped to 1 and iteration stops there.
    double iterate(double x, int c) const;

    /// x0 = inf{x >= 1 : f(x) < x} + 1, by closed form where available and
    /// doubling + bisection otherwise. Throws if f never drops below the
    /// identity on the probed range [1, 2^60].
    double fixed_point() const;

    /// f*(x): 1 when x <= x0, otherwise the least c with f^(c)(x) <= x0.
    /// Iteration is capped at 200 compositions; exceeding the cap (a
    /// divergent iteration) is an error.
    int star(double x) const;

    /// f* of 2^exponent for the plain log2 family, usable when 2^exponent
    /// overflows double: one composition maps 2^e to e exactly.
    int star_of_pow2(double exponent) const;

    /// Canonical spec string (round-trips through parse for the same
    /// alpha/m context).
    std::string spec_string() const;

    /// True for families with f(x)/x non-increasing on [1, inf):
    /// constant, tlog, log and power with exponent < 1 all qualify.
    bool ratio_nonincreasing() const { return true; }

    bool operator==(const SublinearFn& o) const = default;

private:
    SublinearFn() = default;

    Family family_ = Family::Constant;
    double scale_ = 1.0;
    double exponent_ = 0.0; // power: e; tlog: 2/(alpha-m)
    double base_ = 2.0;     // log family
    double alpha_ = 0.0;    // tlog provenance
    double m_ = 0.0;
};

/// Result of the numeric strong-sublinearity probe: either a witness
/// constant c' that is consistent with the whole grid, or a violating
/// pair (x, y). A heuristic diagnostic, not a decision procedure.
struct SublinearProbe {
    std::optional<double> witness;
    std::optional<std::pair<double, double>> counterexample;
};

/// Probes c*f(x)/x <= f(y)/y over a log-spaced grid of pairs with
/// x >= c'*y, for candidate c' in powers of two up to 2^20.
SublinearProbe strong_sublinearity_probe(const std::function<double(double)>& f, double c,
                                         double x_max = 0x1p40, int grid_points = 48);

} // namespace sinrc
