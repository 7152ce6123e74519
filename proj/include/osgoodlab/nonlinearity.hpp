#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace osgoodlab {

/// Monotone scalar nonlinearity f: [0, domain_cap] -> [0, inf) with
/// f(0) = 0 and f > 0 on (0, domain_cap]. Construction validates
/// monotonicity; invalid parameter sets throw std::invalid_argument.
class Nonlinearity {
public:
    enum class Kind { PowerLaw, LogPerturbedPower, LogOsgood, Tabulated };

    /// f(u) = u^p, p > 0.
    static Nonlinearity power_law(double p, double domain_cap = 4.0);

    /// f(u) = u^p * (2 + amplitude * sin(rate * ln u)) for u > 0, f(0) = 0.
    /// Monotone whenever |amplitude| * sqrt(1 + (rate/p)^2) < 2; the
    /// constructor enforces this sufficient condition.
    static Nonlinearity log_perturbed_power(double p, double amplitude, double rate,
                                            double domain_cap = 4.0);

    /// f(u) = u * (1 + ln(1/u)) on (0, 1], constant 1 above 1.
    static Nonlinearity log_osgood(double domain_cap = 4.0);

    /// Piecewise-linear interpolant of sorted (u, f(u)) nodes. Nodes must
    /// start at (0, 0), be non-decreasing in both coordinates, have f > 0
    /// past the origin, and cover [0, domain_cap].
    static Nonlinearity tabulated(std::vector<std::pair<double, double>> nodes,
                                  double domain_cap);

    double operator()(double u) const;
    double domain_cap() const { return domain_cap_; }
    Kind kind() const { return kind_; }
    double shift() const { return shift_; }

    /// Parameters of the parametric kinds (power exponent etc.).
    double power() const { return p_; }
    double amplitude() const { return amplitude_; }
    double rate() const { return rate_; }

    std::string describe() const;

private:
    Nonlinearity() = default;
    double eval_base(double u) const;
    void validate() const;

    Kind kind_ = Kind::PowerLaw;
    double p_ = 1.0;
    double amplitude_ = 0.0;
    double rate_ = 0.0;
    double shift_ = 0.0;  // additive sigma*u term, see shift_nonlinearity
    double domain_cap_ = 4.0;
    std::vector<std::pair<double, double>> nodes_;

    friend Nonlinearity shift_nonlinearity(const Nonlinearity& f, double sigma);
};

/// f_tilde(u) = f(u) + sigma*u with sigma >= 0. Preserves monotonicity and
/// a convergent Osgood integral (1/f_tilde <= 1/f).
Nonlinearity shift_nonlinearity(const Nonlinearity& f, double sigma);

enum class OsgoodClass { Divergent, Convergent, Inconclusive };

std::string to_string(OsgoodClass c);

/// Result of probing int_delta^epsilon du/f(u) over geometrically
/// shrinking delta. `integral_estimate` is the partial integral at the
/// finest probed delta for Convergent/Inconclusive and +infinity for
/// Divergent. Partial integrals are non-decreasing as delta shrinks.
struct OsgoodVerdict {
    OsgoodClass classification = OsgoodClass::Inconclusive;
    double integral_estimate = 0.0;
    std::vector<std::pair<double, double>> probe_trace;  // (delta, partial integral)
    double fitted_floor = 0.0;   // lower bound on per-shell increments over the fit window
    int shells_probed = 0;
};

struct OsgoodOptions {
    int max_shells = 512;        // dyadic shells delta = eps*2^-k
    int simpson_intervals = 64;  // per shell, in s = ln u
    double runaway_factor = 1e12;
};

/// Classifies the Osgood condition for f on (0, epsilon]. Convergent when
/// per-shell increments fall below tol (relative to max(1, partial));
/// Divergent when the trailing window of >= 8 shells stays above that
/// floor and decays no faster than the harmonic family; Inconclusive
/// otherwise. Throws on epsilon > domain_cap or non-finite f evaluations.
OsgoodVerdict check_osgood(const Nonlinearity& f, double epsilon, double tol,
                           const OsgoodOptions& opts = {});

/// Blow-up profile mu solving mu' = rate * f(mu), mu(0) = 0, obtained by
/// inverting F(mu) = int_0^mu du/f(u) = rate * t. Exists only when the
/// Osgood integral converges.
struct OdeProfile {
    double rate = 1.0;
    std::vector<std::pair<double, double>> F_table;  // (mu, F(mu)), strictly increasing
    double horizon = 0.0;                            // T* with mu(T*) = domain_cap
    std::vector<double> t_grid;
    std::vector<double> mu;  // mu(t_i), non-decreasing, mu(0) = 0

    double mu_at(double t) const;  // monotone interpolation via F-inversion
};

/// Raised when classification is Divergent and so the profile does not exist.
struct OsgoodHoldsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OsgoodInconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Solves F(mu) = rate * t for each t in the increasing grid; relative
/// accuracy per value 1e-8 or better. Fails if F(domain_cap) <
/// rate * max(t_grid) (horizon exceeded) or if f is classified Divergent.
OdeProfile solve_mu(const Nonlinearity& f, double rate, const std::vector<double>& t_grid);

}  // namespace osgoodlab
