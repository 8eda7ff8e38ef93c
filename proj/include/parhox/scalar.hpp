#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "parhox/error.hpp"

namespace parhox {

// Characteristic 0 means the rationals.
class FieldSpec {
public:
    FieldSpec() = default;
    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string to_string() const;

    bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

private:
    friend class Scalar;
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    explicit Scalar(const FieldSpec& f) : Scalar(f, 0) {}
    Scalar(const FieldSpec& f, long n);
    Scalar(const FieldSpec& f, const mpq_class& q);

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    // Accepts "n", "p/q" for either field kind.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    FieldSpec field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    const mpq_class& rational() const { return std::get<mpq_class>(value_); }
    std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }

    // Rationals print as "n" or "p/q"; residues as decimal integers.
    std::string to_string() const;

private:
    void check_same(const Scalar& o) const;

    std::uint64_t p_ = 0;
    std::variant<mpq_class, std::uint64_t> value_;
};

// Square root in the field; canonical choice min(x, p-x) in F_p, positive root in Q.
std::optional<Scalar> square_root(const Scalar& a);

Scalar power(const Scalar& a, std::uint64_t e);

}  // namespace parhox
