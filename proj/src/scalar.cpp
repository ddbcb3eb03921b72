#include "hopfore/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace hopfore {

// ---------------------------------------------------------------- FieldSpec

FieldSpec FieldSpec::Q() { return FieldSpec{FieldKind::Rationals, 0, "q"}; }

FieldSpec FieldSpec::Fp(long p) {
    if (p < 2) throw Error("BadParameters", "field modulus must be a prime >= 2");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw Error("BadParameters", "field modulus must be prime");
    return FieldSpec{FieldKind::PrimeField, p, "q"};
}

FieldSpec FieldSpec::Qt(const std::string& var) {
    if (var.empty()) throw Error("BadParameters", "empty variable name");
    return FieldSpec{FieldKind::RationalFunctions, 0, var};
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    if (kind != o.kind) return false;
    if (kind == FieldKind::PrimeField) return p == o.p;
    if (kind == FieldKind::RationalFunctions) return var == o.var;
    return true;
}

std::string FieldSpec::str() const {
    switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F" + std::to_string(p);
    case FieldKind::RationalFunctions: return "Q(" + var + ")";
    }
    return "?";
}

// -------------------------------------------------------------------- QPoly

QPoly::QPoly(const mpq_class& c) {
    if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::variable() { return QPoly(std::vector<mpq_class>{mpq_class(0), mpq_class(1)}); }

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpq_class& QPoly::coeff(int i) const {
    static const mpq_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

const mpq_class& QPoly::lead() const {
    if (c_.empty()) throw Error("InvariantViolation", "lead coefficient of zero polynomial");
    return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<mpq_class> r(c_);
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    std::vector<mpq_class> rem(c_);
    std::vector<mpq_class> quo;
    int dd = d.degree();
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd >= dd) quo.assign(static_cast<size_t>(rd - dd + 1), mpq_class(0));
    while (rd >= dd) {
        while (rd >= 0 && rem[static_cast<size_t>(rd)] == 0) --rd;
        if (rd < dd) break;
        mpq_class f = rem[static_cast<size_t>(rd)] / d.lead();
        quo[static_cast<size_t>(rd - dd)] = f;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<size_t>(rd - dd + i)] -= f * d.coeff(i);
        --rd;
    }
    return {QPoly(std::move(quo)), QPoly(std::move(rem))};
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    mpq_class l = lead();
    std::vector<mpq_class> r(c_);
    for (auto& x : r) x /= l;
    return QPoly(std::move(r));
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class v(0);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& c = coeff(i);
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            os << a.get_str();
        } else {
            if (!unit) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// ------------------------------------------------------------------- RatFun

RatFun::RatFun(QPoly n, QPoly d) {
    if (d.is_zero()) throw Error("DivisionByZero", "rational function with zero denominator");
    if (n.is_zero()) {
        num = QPoly();
        den = QPoly(mpq_class(1));
        return;
    }
    QPoly g = QPoly::gcd(n, d);
    n = n.divmod(g).first;
    d = d.divmod(g).first;
    mpq_class l = d.lead();
    // make the denominator monic without changing the fraction
    std::pair<QPoly, QPoly> dn = d.divmod(QPoly(l));
    std::pair<QPoly, QPoly> nn = n.divmod(QPoly(l));
    num = nn.first;
    den = dn.first;
}

// ------------------------------------------------------------------- Scalar

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

namespace {
long long mod_reduce(long long n, long p) {
    long long r = n % p;
    if (r < 0) r += p;
    return r;
}

long long mod_inv(long long a, long p) {
    // extended Euclid
    long long t = 0, nt = 1, r = p, nr = mod_reduce(a, p);
    while (nr != 0) {
        long long qq = r / nr;
        long long tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = r - qq * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error("DivisionByZero", "no inverse modulo p");
    return mod_reduce(t, p);
}

long long mpz_mod_p(const mpz_class& z, long p) {
    mpz_class r = z % p;
    long long v = r.get_si();
    if (v < 0) v += p;
    return v;
}
} // namespace

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
    Scalar s(f);
    switch (f.kind) {
    case FieldKind::Rationals: s.q_ = mpq_class(static_cast<long>(n)); break;
    case FieldKind::PrimeField: s.r_ = mod_reduce(n, f.p); break;
    case FieldKind::RationalFunctions:
        s.rf_ = RatFun(QPoly(mpq_class(static_cast<long>(n))), QPoly(mpq_class(1)));
        break;
    }
    return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
    Scalar s(f);
    switch (f.kind) {
    case FieldKind::Rationals: s.q_ = q; s.q_.canonicalize(); break;
    case FieldKind::PrimeField: {
        long long den = mpz_mod_p(q.get_den(), f.p);
        if (den == 0) throw Error("DivisionByZero", "rational with denominator divisible by p");
        long long num = mpz_mod_p(q.get_num(), f.p);
        s.r_ = mod_reduce(num * mod_inv(den, f.p), f.p);
        break;
    }
    case FieldKind::RationalFunctions:
        s.rf_ = RatFun(QPoly(q), QPoly(mpq_class(1)));
        break;
    }
    return s;
}

Scalar Scalar::variable(const FieldSpec& f) {
    if (f.kind != FieldKind::RationalFunctions)
        throw Error("FieldMismatch", "field " + f.str() + " has no transcendental variable");
    Scalar s(f);
    s.rf_ = RatFun(QPoly::variable(), QPoly(mpq_class(1)));
    return s;
}

Scalar Scalar::from_ratfun(const FieldSpec& f, RatFun r) {
    if (f.kind != FieldKind::RationalFunctions)
        throw Error("FieldMismatch", "rational-function payload in field " + f.str());
    Scalar s(f);
    s.rf_ = std::move(r);
    return s;
}

bool Scalar::is_zero() const {
    switch (f_.kind) {
    case FieldKind::Rationals: return q_ == 0;
    case FieldKind::PrimeField: return r_ == 0;
    case FieldKind::RationalFunctions: return rf_.is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(f_); }

void Scalar::check_same(const Scalar& o) const {
    if (f_ != o.f_)
        throw Error("FieldMismatch", f_.str() + " vs " + o.f_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s(f_);
    switch (f_.kind) {
    case FieldKind::Rationals: s.q_ = q_ + o.q_; break;
    case FieldKind::PrimeField: s.r_ = mod_reduce(r_ + o.r_, f_.p); break;
    case FieldKind::RationalFunctions:
        s.rf_ = RatFun(rf_.num * o.rf_.den + o.rf_.num * rf_.den, rf_.den * o.rf_.den);
        break;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s(f_);
    switch (f_.kind) {
    case FieldKind::Rationals: s.q_ = -q_; break;
    case FieldKind::PrimeField: s.r_ = mod_reduce(-r_, f_.p); break;
    case FieldKind::RationalFunctions: s.rf_ = RatFun(-rf_.num, rf_.den); break;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s(f_);
    switch (f_.kind) {
    case FieldKind::Rationals: s.q_ = q_ * o.q_; break;
    case FieldKind::PrimeField: s.r_ = mod_reduce(r_ * o.r_, f_.p); break;
    case FieldKind::RationalFunctions:
        s.rf_ = RatFun(rf_.num * o.rf_.num, rf_.den * o.rf_.den);
        break;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero in " + f_.str());
    Scalar s(f_);
    switch (f_.kind) {
    case FieldKind::Rationals: s.q_ = mpq_class(1) / q_; break;
    case FieldKind::PrimeField: s.r_ = mod_inv(r_, f_.p); break;
    case FieldKind::RationalFunctions: s.rf_ = RatFun(rf_.den, rf_.num); break;
    }
    return s;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = one(f_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_) return false;
    switch (f_.kind) {
    case FieldKind::Rationals: return q_ == o.q_;
    case FieldKind::PrimeField: return r_ == o.r_;
    case FieldKind::RationalFunctions: return rf_ == o.rf_;
    }
    return false;
}

mpq_class Scalar::to_mpq() const {
    switch (f_.kind) {
    case FieldKind::Rationals: return q_;
    case FieldKind::PrimeField: return mpq_class(static_cast<long>(r_));
    case FieldKind::RationalFunctions:
        if (rf_.num.degree() <= 0 && rf_.den.degree() == 0)
            return rf_.num.coeff(0) / rf_.den.coeff(0);
        throw Error("FieldMismatch", "non-constant rational function has no rational value");
    }
    return mpq_class(0);
}

const RatFun& Scalar::ratfun() const {
    if (f_.kind != FieldKind::RationalFunctions)
        throw Error("FieldMismatch", "scalar is not a rational function");
    return rf_;
}

Scalar Scalar::specialize_q(const mpq_class& q0) const {
    if (f_.kind == FieldKind::Rationals) return *this;
    if (f_.kind != FieldKind::RationalFunctions)
        throw Error("FieldMismatch", "cannot specialize scalar over " + f_.str());
    mpq_class d = rf_.den.eval(q0);
    if (d == 0) throw Error("DivisionByZero", "denominator vanishes at the specialization point");
    return Scalar::from_mpq(FieldSpec::Q(), rf_.num.eval(q0) / d);
}

std::string Scalar::str() const {
    switch (f_.kind) {
    case FieldKind::Rationals: return q_.get_str();
    case FieldKind::PrimeField: return std::to_string(r_);
    case FieldKind::RationalFunctions: {
        std::string n = rf_.num.str(f_.var);
        if (rf_.den.degree() == 0 && rf_.den.coeff(0) == 1) {
            // single-term numerators print bare, sums get parenthesized by callers
            return n;
        }
        return "(" + n + ")/(" + rf_.den.str(f_.var) + ")";
    }
    }
    return "?";
}

// ------------------------------------------------------------- solve_linear

std::optional<LinearSolution> solve_linear(const std::vector<std::vector<Scalar>>& a,
                                           const std::vector<Scalar>& b,
                                           const FieldSpec& f) {
    const size_t rows = a.size();
    if (b.size() != rows) throw Error("BadParameters", "matrix/rhs row count mismatch");
    const size_t cols = rows == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw Error("BadParameters", "ragged matrix");

    // augmented working copy
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols + 1, Scalar::zero(f)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            if (a[i][j].field() != f) throw Error("FieldMismatch", "matrix entry field mismatch");
            m[i][j] = a[i][j];
        }
        if (b[i].field() != f) throw Error("FieldMismatch", "rhs entry field mismatch");
        m[i][cols] = b[i];
    }

    std::vector<long> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pr = row;
        while (pr < rows && m[pr][col].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[row], m[pr]);
        Scalar piv = m[row][col].inv();
        for (size_t j = col; j <= cols; ++j) m[row][j] = m[row][j] * piv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Scalar factor = m[i][col];
            for (size_t j = col; j <= cols; ++j)
                m[i][j] = m[i][j] - factor * m[row][j];
        }
        pivot_col_of_row.push_back(static_cast<long>(col));
        is_pivot_col[col] = true;
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (!m[i][cols].is_zero()) return std::nullopt; // inconsistent

    LinearSolution sol;
    sol.particular.assign(cols, Scalar::zero(f));
    for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2)
        sol.particular[static_cast<size_t>(pivot_col_of_row[r2])] = m[r2][cols];

    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[free_col]) continue;
        std::vector<Scalar> v(cols, Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2)
            v[static_cast<size_t>(pivot_col_of_row[r2])] = -m[r2][free_col];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

} // namespace hopfore
