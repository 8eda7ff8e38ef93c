#include "parhox/scalar.hpp"


namespace parhox {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::SizeLimit: return "SizeLimit";
        case ErrorKind::NotNormalized: return "NotNormalized";
        case ErrorKind::NotIdempotent: return "NotIdempotent";
        case ErrorKind::NotCommuting: return "NotCommuting";
        case ErrorKind::PreconditionFailed: return "PreconditionFailed";
        case ErrorKind::ActionMismatch: return "ActionMismatch";
        case ErrorKind::AssociativityFailure: return "AssociativityFailure";
        case ErrorKind::CompletionDiverged: return "CompletionDiverged";
        case ErrorKind::NotARepresentation: return "NotARepresentation";
        case ErrorKind::NotCovariant: return "NotCovariant";
        case ErrorKind::IsomorphismFailure: return "IsomorphismFailure";
        case ErrorKind::EquivarianceFailure: return "EquivarianceFailure";
        case ErrorKind::PropertyFailure: return "PropertyFailure";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::IOError: return "IOError";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 reduce_mpz(const mpz_class& z, u64 p) {
    mpz_class m = z % mpz_class(std::to_string(p));
    if (m < 0) m += mpz_class(std::to_string(p));
    return std::stoull(m.get_str());
}

// Tonelli-Shanks; a must be a nonzero quadratic residue.
u64 sqrt_mod(u64 a, u64 p) {
    if (p == 2) return a;
    u64 q = p - 1, s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        u64 b = c;
        for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    u64 d = n - 1, s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (u64 r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorKind::InvalidInput, "characteristic " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.p_ = p;
    return f;
}

std::string FieldSpec::to_string() const {
    return is_rational() ? std::string("Q") : "F" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& f, long n) : p_(f.characteristic()) {
    if (p_ == 0) {
        value_ = mpq_class(n);
    } else {
        long m = n % static_cast<long>(p_);
        if (m < 0) m += static_cast<long>(p_);
        value_ = static_cast<u64>(m);
    }
}

Scalar::Scalar(const FieldSpec& f, const mpq_class& q) : p_(f.characteristic()) {
    if (p_ == 0) {
        mpq_class c = q;
        c.canonicalize();
        value_ = c;
    } else {
        u64 den = reduce_mpz(q.get_den(), p_);
        if (den == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p_));
        u64 num = reduce_mpz(q.get_num(), p_);
        value_ = mulmod(num, powmod(den, p_ - 2, p_), p_);
    }
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    mpq_class q;
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            q = mpq_class(mpz_class(text), 1);
        } else {
            mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
            if (den == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
            q = mpq_class(num, den);
            q.canonicalize();
        }
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::InvalidInput, "not a scalar: '" + text + "'");
    }
    return Scalar(f, q);
}

FieldSpec Scalar::field() const {
    FieldSpec f;
    f.p_ = p_;
    return f;
}

bool Scalar::is_zero() const {
    if (p_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
    return std::get<u64>(value_) == 0;
}

bool Scalar::is_one() const {
    if (p_ == 0) return std::get<mpq_class>(value_) == 1;
    return std::get<u64>(value_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (p_ != o.p_) fail(ErrorKind::FieldMismatch, "scalars from different fields");
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    r += o;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    r -= o;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r = *this;
    r *= o;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
    } else {
        u64 s = std::get<u64>(value_) + std::get<u64>(o.value_);
        std::get<u64>(value_) = s >= p_ ? s - p_ : s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
    } else {
        u64 a = std::get<u64>(value_), b = std::get<u64>(o.value_);
        std::get<u64>(value_) = a >= b ? a - b : a + (p_ - b);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (p_ == 0) {
        std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
    } else {
        std::get<u64>(value_) = mulmod(std::get<u64>(value_), std::get<u64>(o.value_), p_);
    }
    return *this;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (p_ == 0) {
        std::get<mpq_class>(r.value_) = -std::get<mpq_class>(value_);
    } else {
        u64 a = std::get<u64>(value_);
        std::get<u64>(r.value_) = a == 0 ? 0 : p_ - a;
    }
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar r = *this;
    if (p_ == 0) {
        std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
    } else {
        std::get<u64>(r.value_) = powmod(std::get<u64>(value_), p_ - 2, p_);
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    if (p_ == 0) return std::get<mpq_class>(value_) == std::get<mpq_class>(o.value_);
    return std::get<u64>(value_) == std::get<u64>(o.value_);
}

std::string Scalar::to_string() const {
    if (p_ == 0) return std::get<mpq_class>(value_).get_str();
    return std::to_string(std::get<u64>(value_));
}

Scalar power(const Scalar& a, std::uint64_t e) {
    Scalar r = Scalar::one(a.field()), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::optional<Scalar> square_root(const Scalar& a) {
    FieldSpec f = a.field();
    if (a.is_zero()) return Scalar::zero(f);
    if (f.is_rational()) {
        const mpq_class& q = a.rational();
        if (q < 0) return std::nullopt;
        mpz_class num = q.get_num(), den = q.get_den();
        if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Scalar(f, mpq_class(rn, rd));
    }
    u64 p = f.characteristic(), v = a.residue();
    if (p != 2 && powmod(v, (p - 1) / 2, p) != 1) return std::nullopt;
    u64 x = sqrt_mod(v, p);
    if (p - x < x) x = p - x;
    return Scalar(f, static_cast<long>(x));
}

}  // namespace parhox
