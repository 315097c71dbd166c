#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "bicalo/expr.hpp"

namespace bicalo::testing {

// Expressions exercised across the numeric suites; the same set the
// gallery ships.
inline const std::vector<std::string>& catalog() {
    static const std::vector<std::string> c = {"tau^2", "log(tau)", "exp(tau)", "tau^3+tau"};
    return c;
}

// Random tau in an annulus, keeping away from the negative real axis (the
// log/sqrt branch cut) and from zeros of f' of the catalog functions.
class TauSampler {
  public:
    explicit TauSampler(unsigned seed, double r_lo = 0.6, double r_hi = 1.8)
        : rng_(seed), r_(r_lo, r_hi), th_(-2.9, 2.9) {}

    Complex operator()() { return std::polar(r_(rng_), th_(rng_)); }

    // Resample until |f'(tau)| clears the floor (tau^3+tau has f' zeros at
    // +-i/sqrt(3)).
    Complex away_from_critical(const HoloExpr& e, double floor = 0.25) {
        for (;;) {
            const Complex t = (*this)();
            try {
                if (std::abs(eval_jet(e, t).d1) > floor) return t;
            } catch (const DomainError&) {
            }
        }
    }

  private:
    std::mt19937 rng_;
    std::uniform_real_distribution<double> r_;
    std::uniform_real_distribution<double> th_;
};

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace bicalo::testing
