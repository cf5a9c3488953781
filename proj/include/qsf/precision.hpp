#ifndef QSF_PRECISION_HPP
#define QSF_PRECISION_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace qsf {

// Variable-precision real backed by MPFR. The working precision is the
// thread-local MPFR default at the moment a value is created; use
// PrecisionGuard to scope it.
using Real = boost::multiprecision::mpfr_float;
using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal cross-check (series vs product form, Pade residual)
// disagrees beyond tolerance.
struct AccuracyError : std::runtime_error {
    explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

// Working precision in decimal digits plus the truncation/quadrature
// tolerances threaded through every numeric operation.
struct PrecisionContext {
    int digits = 40;           // decimal digits, >= 30
    double tail_tol = 1e-30;   // relative tolerance for product/series tails
    double quad_tol = 1e-25;   // relative quadrature target

    static PrecisionContext make(int digits, double tail_tol, double quad_tol) {
        PrecisionContext ctx{digits, tail_tol, quad_tol};
        ctx.validate();
        return ctx;
    }
    static PrecisionContext with_digits(int digits) {
        // Tolerances a few digits above the working precision floor.
        PrecisionContext ctx;
        ctx.digits = digits;
        ctx.tail_tol = std::pow(10.0, -(digits - 8));
        ctx.quad_tol = std::pow(10.0, -(digits - 10));
        ctx.validate();
        return ctx;
    }

    void validate() const {
        if (digits < 30) throw DomainError("PrecisionContext: digits must be >= 30");
        if (!(tail_tol > 0 && tail_tol < 1e-5))
            throw DomainError("PrecisionContext: tail_tol must lie in (0, 1e-5)");
        if (!(quad_tol > 0 && quad_tol < 1e-5))
            throw DomainError("PrecisionContext: quad_tol must lie in (0, 1e-5)");
    }
};

inline constexpr int kGuardDigits = 15;

// Scoped MPFR default precision. Internal evaluations carry guard digits on
// top of the requested working precision.
class PrecisionGuard {
  public:
    explicit PrecisionGuard(int digits, int extra_guard = kGuardDigits)
        : saved_(Real::thread_default_precision()) {
        Real::thread_default_precision(static_cast<unsigned>(digits + extra_guard));
    }
    explicit PrecisionGuard(const PrecisionContext& ctx, int extra_guard = kGuardDigits)
        : PrecisionGuard(ctx.digits, extra_guard) {}
    ~PrecisionGuard() { Real::thread_default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

  private:
    unsigned saved_;
};

inline Real real_pi() { return boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>(); }

inline Real pow10(long e) { return boost::multiprecision::pow(Real(10), e); }

} // namespace qsf

#endif
