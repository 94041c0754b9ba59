#pragma once

#include <cstdint>
#include <string>

#include "toda/error.hpp"

namespace toda {

using Scalar = std::int64_t;

/// Coefficient ring: the integers or a prime field F_p.
class Ring {
public:
    enum class Kind { Integers, PrimeField };

    static Ring integers() { return Ring(Kind::Integers, 0); }
    static Ring prime_field(Scalar p);

    Kind kind() const noexcept { return kind_; }
    Scalar characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ == Kind::PrimeField; }

    Scalar reduce(Scalar a) const noexcept {
        if (kind_ == Kind::Integers) return a;
        Scalar r = a % p_;
        return r < 0 ? r + p_ : r;
    }
    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    /// Multiplicative inverse; over Z only +-1 are invertible.
    Scalar inverse(Scalar a) const;
    bool is_unit(Scalar a) const noexcept;

    std::string name() const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    Ring(Kind k, Scalar p) : kind_(k), p_(p) {}
    Kind kind_;
    Scalar p_;
};

bool is_prime(Scalar p) noexcept;

}  // namespace toda
