#include "toda/ring.hpp"

namespace toda {

bool is_prime(Scalar p) noexcept {
    if (p < 2) return false;
    for (Scalar q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

Ring Ring::prime_field(Scalar p) {
    if (p >= (Scalar(1) << 31) || !is_prime(p))
        throw InvalidInput("prime field characteristic must be a prime below 2^31, got " +
                           std::to_string(p));
    return Ring(Kind::PrimeField, p);
}

Scalar Ring::add(Scalar a, Scalar b) const {
    if (kind_ == Kind::PrimeField) return reduce(a + b);
    Scalar r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Scalar Ring::sub(Scalar a, Scalar b) const {
    if (kind_ == Kind::PrimeField) return reduce(a - b);
    Scalar r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Scalar Ring::mul(Scalar a, Scalar b) const {
    if (kind_ == Kind::PrimeField) return reduce(a * b);
    Scalar r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in product");
    return r;
}

Scalar Ring::neg(Scalar a) const {
    if (kind_ == Kind::PrimeField) return reduce(-a);
    if (a == INT64_MIN) throw OverflowError("integer overflow in negation");
    return -a;
}

bool Ring::is_unit(Scalar a) const noexcept {
    if (kind_ == Kind::PrimeField) return reduce(a) != 0;
    return a == 1 || a == -1;
}

Scalar Ring::inverse(Scalar a) const {
    if (!is_unit(a)) throw InvalidInput("element is not invertible in " + name());
    if (kind_ == Kind::Integers) return a;
    // extended Euclid on (a, p)
    Scalar t = 0, nt = 1, r = p_, nr = reduce(a);
    while (nr != 0) {
        Scalar q = r / nr;
        Scalar tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return reduce(t);
}

std::string Ring::name() const {
    return kind_ == Kind::Integers ? "Z" : "F_" + std::to_string(p_);
}

}  // namespace toda
