#ifndef HOPFORE_SCALAR_HPP
#define HOPFORE_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "hopfore/error.hpp"

namespace hopfore {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

/// Description of the ground field: Q, F_p (p prime), or Q(var) with a single
/// transcendental variable (rational functions with rational coefficients).
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long p = 0;            ///< modulus, PrimeField only
    std::string var = "q"; ///< variable name, RationalFunctions only

    static FieldSpec Q();
    static FieldSpec Fp(long p);
    static FieldSpec Qt(const std::string& var = "q");

    long characteristic() const { return kind == FieldKind::PrimeField ? p : 0; }
    bool operator==(const FieldSpec& o) const;
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;
};

/// Dense univariate polynomial over Q; coefficient vector has no trailing
/// zeros (the zero polynomial is the empty vector).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const mpq_class& c);
    explicit QPoly(std::vector<mpq_class> coeffs); // trims trailing zeros
    static QPoly variable();                       // the monomial x

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for 0
    const mpq_class& coeff(int i) const;
    const mpq_class& lead() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    /// Euclidean division: *this = q*d + r with deg r < deg d. Errors on d=0.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;
    QPoly monic() const;
    static QPoly gcd(QPoly a, QPoly b); // monic gcd, gcd(0,0)=0

    mpq_class eval(const mpq_class& x) const;
    std::string str(const std::string& var) const;

private:
    std::vector<mpq_class> c_;
    void trim();
};

/// Reduced fraction of polynomials over Q: gcd(num,den)=1 and den is monic.
struct RatFun {
    QPoly num;
    QPoly den = QPoly(mpq_class(1));

    RatFun() = default;
    RatFun(QPoly n, QPoly d); // reduces; errors on d=0
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

/// Element of the ground field. Every scalar knows its field; mixing fields
/// in arithmetic raises Error("FieldMismatch").
class Scalar {
public:
    Scalar() : Scalar(zero(FieldSpec::Q())) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long n);
    static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);
    static Scalar variable(const FieldSpec& f); // Qt only
    static Scalar from_ratfun(const FieldSpec& f, RatFun r);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inv() const;         // Error("DivisionByZero") on zero
    Scalar pow(long long e) const; // negative e allowed on nonzero scalars

    /// For Q scalars, the underlying rational; for F_p the residue as a
    /// rational; errors for Q(q) unless constant.
    mpq_class to_mpq() const;
    const RatFun& ratfun() const; // Qt only

    /// Map Q(q) -> Q by q := q0 (Error("DivisionByZero") if the denominator
    /// vanishes at q0). Identity on Q; error on F_p.
    Scalar specialize_q(const mpq_class& q0) const;

    std::string str() const; // canonical printing

private:
    FieldSpec f_;
    mpq_class q_{0};   // Rationals payload
    long long r_ = 0;  // PrimeField payload, in [0,p)
    RatFun rf_;        // RationalFunctions payload

    explicit Scalar(const FieldSpec& f) : f_(f) {}
    void check_same(const Scalar& o) const;
};

struct LinearSolution {
    std::vector<Scalar> particular;          ///< one solution, size = #columns
    std::vector<std::vector<Scalar>> kernel; ///< basis of the nullspace
};

/// Exact Gaussian elimination for A x = b over any supported field.
/// Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const std::vector<std::vector<Scalar>>& a,
                                           const std::vector<Scalar>& b,
                                           const FieldSpec& f);

} // namespace hopfore

#endif
