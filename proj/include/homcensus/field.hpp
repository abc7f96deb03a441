#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "homcensus/errors.hpp"

namespace homcensus {

// Element of F_q in polynomial-basis representation, packed as a base-p
// integer: code = c_0 + c_1*p + ... + c_{e-1}*p^{e-1} with every c_i reduced
// mod p. Elements are always stored reduced, so equality is bitwise and the
// packed code doubles as the canonical enumeration index.
struct FieldElement {
    std::uint32_t code = 0;

    friend constexpr bool operator==(FieldElement, FieldElement) noexcept = default;
    friend constexpr bool operator<(FieldElement a, FieldElement b) noexcept {
        return a.code < b.code;
    }
};

// The finite field F_q, q = p^e. Immutable; copies share state and are cheap.
//
// For e > 1 the field is F_p[x]/(modulus), where modulus is the
// lexicographically smallest monic irreducible polynomial of degree e over
// F_p (coefficients compared constant term first). Irreducibility is
// established by exhaustive trial division by every monic polynomial of
// degree <= e/2.
class Field {
public:
    static constexpr std::uint32_t max_degree = 8;
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 20;

    // Builds F_{p^e}. Throws ValidationError (NotPrime, DegreeOutOfRange).
    static Field make(std::uint32_t p, std::uint32_t e);

    // Builds F_q from the order alone. Throws ValidationError (NotPrimePower).
    static Field from_order(std::uint64_t q);

    std::uint32_t p() const noexcept { return impl_->p; }
    std::uint32_t e() const noexcept { return impl_->e; }
    std::uint64_t q() const noexcept { return impl_->q; }

    // Coefficients c_0..c_e of the modulus, constant term first, monic
    // (c_e = 1). Empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return impl_->modulus; }

    FieldElement zero() const noexcept { return {0}; }
    FieldElement one() const noexcept { return {1}; }

    // Element with the given canonical code. Throws ValidationError if
    // code >= q.
    FieldElement element(std::uint64_t code) const;

    // Element from e coefficients (constant term first); values are reduced
    // mod p. Shorter spans are zero-padded.
    FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coeffs(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    // Multiplicative inverse via the extended Euclidean algorithm (on
    // integers for e = 1, on polynomials otherwise). Throws ValidationError
    // (DivisionByZero) for a = 0.
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t k) const;

    // All q elements in canonical code order: 0, 1, ...
    std::vector<FieldElement> enumerate() const;

    // Same field: same p, e and modulus.
    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.impl_ == b.impl_ ||
               (a.p() == b.p() && a.e() == b.e() && a.modulus() == b.modulus());
    }

private:
    struct Impl {
        std::uint32_t p;
        std::uint32_t e;
        std::uint64_t q;
        std::vector<std::uint32_t> modulus;
    };

    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;
};

// Trial-division primality test (used to validate field characteristics).
bool is_prime(std::uint64_t n);

} // namespace homcensus
