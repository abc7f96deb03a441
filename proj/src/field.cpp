#include "homcensus/field.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace homcensus {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficients, constant term first

std::size_t poly_degree(const Poly& f) {
    std::size_t d = f.size();
    while (d > 0 && f[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

// Remainder of f modulo the monic polynomial g, both over F_p.
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
    const std::size_t dg = poly_degree(g);
    for (std::size_t d = f.size(); d-- > dg;) {
        std::uint64_t c = f[d];
        if (c == 0) continue;
        f[d] = 0;
        for (std::size_t i = 0; i < dg; ++i) {
            std::uint64_t sub = (c * g[i]) % p;
            f[d - dg + i] = static_cast<std::uint32_t>((f[d - dg + i] + p - sub) % p);
        }
    }
    return f;
}

bool poly_is_zero(const Poly& f) {
    return std::all_of(f.begin(), f.end(), [](std::uint32_t c) { return c == 0; });
}

// Exhaustive reducibility check: does any monic polynomial of degree
// 1..deg(f)/2 divide f?
bool poly_is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t e = poly_degree(f);
    for (std::size_t d = 1; 2 * d <= e; ++d) {
        std::uint64_t tuples = 1;
        for (std::size_t i = 0; i < d; ++i) tuples *= p;
        for (std::uint64_t t = 0; t < tuples; ++t) {
            Poly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t rest = t;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

// Smallest monic irreducible polynomial of degree e over F_p, where
// candidates are ordered lexicographically by (c_0, c_1, ..., c_{e-1}).
Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
    std::uint64_t tuples = 1;
    for (std::uint32_t i = 0; i < e; ++i) tuples *= p;
    for (std::uint64_t idx = 0; idx < tuples; ++idx) {
        Poly f(e + 1, 0);
        f[e] = 1;
        std::uint64_t rest = idx;
        for (std::uint32_t i = e; i-- > 0;) { // c_0 is the most significant digit
            f[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (poly_is_irreducible(f, p)) return f;
    }
    throw InternalError("NoIrreducible",
                        "no irreducible polynomial of degree " + std::to_string(e) +
                            " over F_" + std::to_string(p));
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p))
        throw ValidationError("NotPrime", std::to_string(p) + " is not prime");
    if (e < 1 || e > max_degree)
        throw ValidationError("DegreeOutOfRange",
                              "extension degree " + std::to_string(e) + " outside [1, " +
                                  std::to_string(max_degree) + "]");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > max_order)
            throw ValidationError("DegreeOutOfRange",
                                  "field order " + std::to_string(p) + "^" + std::to_string(e) +
                                      " exceeds " + std::to_string(max_order));
    }
    Impl impl{p, e, q, {}};
    if (e > 1) impl.modulus = smallest_irreducible(p, e);
    return Field(std::make_shared<const Impl>(std::move(impl)));
}

Field Field::from_order(std::uint64_t q) {
    if (q < 2) throw ValidationError("NotPrimePower", std::to_string(q) + " is not a prime power");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1)
        throw ValidationError("NotPrimePower", std::to_string(q) + " is not a prime power");
    if (p > max_order)
        throw ValidationError("DegreeOutOfRange",
                              "field order " + std::to_string(q) + " exceeds " +
                                  std::to_string(max_order));
    return make(static_cast<std::uint32_t>(p), e);
}

FieldElement Field::element(std::uint64_t code) const {
    if (code >= q())
        throw ValidationError("ElementOutOfRange", "element code " + std::to_string(code) +
                                                       " >= field order " + std::to_string(q()));
    return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > e())
        throw ValidationError("ElementOutOfRange",
                              "coefficient list longer than extension degree");
    std::uint64_t code = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p() + coeffs[i] % p();
    return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
    std::vector<std::uint32_t> out(e());
    std::uint32_t rest = a.code;
    for (std::uint32_t i = 0; i < e(); ++i) {
        out[i] = rest % p();
        rest /= p();
    }
    return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    const std::uint32_t pp = p();
    if (e() == 1) return {(a.code + b.code) % pp};
    std::uint32_t code = 0, mul = 1;
    std::uint32_t x = a.code, y = b.code;
    for (std::uint32_t i = 0; i < e(); ++i) {
        code += ((x % pp + y % pp) % pp) * mul;
        x /= pp;
        y /= pp;
        mul *= pp;
    }
    return {code};
}

FieldElement Field::neg(FieldElement a) const {
    const std::uint32_t pp = p();
    if (e() == 1) return {(pp - a.code) % pp};
    std::uint32_t code = 0, mul = 1;
    std::uint32_t x = a.code;
    for (std::uint32_t i = 0; i < e(); ++i) {
        code += ((pp - x % pp) % pp) * mul;
        x /= pp;
        mul *= pp;
    }
    return {code};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    const std::uint64_t pp = p();
    if (e() == 1) return {static_cast<std::uint32_t>((std::uint64_t{a.code} * b.code) % pp)};

    std::array<std::uint64_t, max_degree> xa{}, xb{};
    std::uint32_t x = a.code, y = b.code;
    for (std::uint32_t i = 0; i < e(); ++i) {
        xa[i] = x % pp;
        xb[i] = y % pp;
        x /= static_cast<std::uint32_t>(pp);
        y /= static_cast<std::uint32_t>(pp);
    }

    std::array<std::uint64_t, 2 * max_degree - 1> prod{};
    for (std::uint32_t i = 0; i < e(); ++i) {
        if (xa[i] == 0) continue;
        for (std::uint32_t j = 0; j < e(); ++j) prod[i + j] += xa[i] * xb[j];
    }

    // reduce modulo the monic modulus: x^e == -(m_0 + ... + m_{e-1} x^{e-1})
    const auto& m = modulus();
    for (std::uint32_t d = 2 * e() - 2; d + 1 > e(); --d) {
        std::uint64_t c = prod[d] % pp;
        prod[d] = 0;
        if (c == 0) continue;
        for (std::uint32_t i = 0; i < e(); ++i) prod[d - e() + i] += c * (pp - m[i]);
    }

    std::uint32_t code = 0, mul = 1;
    for (std::uint32_t i = 0; i < e(); ++i) {
        code += static_cast<std::uint32_t>(prod[i] % pp) * mul;
        mul *= static_cast<std::uint32_t>(pp);
    }
    return {code};
}

FieldElement Field::inv(FieldElement a) const {
    if (a.code == 0) throw ValidationError("DivisionByZero", "inverse of zero");
    const std::uint64_t pp = p();
    if (e() == 1) {
        // extended Euclid on integers
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(pp), new_r = a.code;
        while (new_r != 0) {
            std::int64_t quo = r / new_r;
            t = std::exchange(new_t, t - quo * new_t);
            r = std::exchange(new_r, r - quo * new_r);
        }
        std::int64_t v = t % static_cast<std::int64_t>(pp);
        if (v < 0) v += static_cast<std::int64_t>(pp);
        return {static_cast<std::uint32_t>(v)};
    }

    // extended Euclid on polynomials over F_p: r = modulus, new_r = a
    auto inv_mod_p = [&](std::uint64_t c) {
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(pp), new_r = static_cast<std::int64_t>(c);
        while (new_r != 0) {
            std::int64_t quo = r / new_r;
            t = std::exchange(new_t, t - quo * new_t);
            r = std::exchange(new_r, r - quo * new_r);
        }
        std::int64_t v = t % static_cast<std::int64_t>(pp);
        if (v < 0) v += static_cast<std::int64_t>(pp);
        return static_cast<std::uint64_t>(v);
    };

    Poly r(modulus().begin(), modulus().end());
    Poly new_r(e(), 0);
    {
        std::uint32_t x = a.code;
        for (std::uint32_t i = 0; i < e(); ++i) {
            new_r[i] = x % static_cast<std::uint32_t>(pp);
            x /= static_cast<std::uint32_t>(pp);
        }
    }
    Poly t(2 * e() + 1, 0), new_t(2 * e() + 1, 0);
    new_t[0] = 1;

    while (!poly_is_zero(new_r)) {
        const std::size_t dr = poly_degree(r), dn = poly_degree(new_r);
        if (dr < dn || (poly_is_zero(r))) {
            std::swap(r, new_r);
            std::swap(t, new_t);
            continue;
        }
        // cancel the top coefficient of r with a monomial multiple of new_r
        std::uint64_t factor =
            (r[dr] * inv_mod_p(new_r[dn])) % pp;
        std::size_t shift = dr - dn;
        for (std::size_t i = 0; i <= dn; ++i) {
            std::uint64_t sub = (factor * new_r[i]) % pp;
            r[i + shift] = static_cast<std::uint32_t>((r[i + shift] + pp - sub) % pp);
        }
        const std::size_t dnt = poly_degree(new_t);
        for (std::size_t i = 0; i <= dnt && i + shift < t.size(); ++i) {
            std::uint64_t sub = (factor * new_t[i]) % pp;
            t[i + shift] = static_cast<std::uint32_t>((t[i + shift] + pp - sub) % pp);
        }
    }

    // r is now gcd(a, modulus) = nonzero constant; t / r[0] is the inverse
    std::uint64_t scale = inv_mod_p(r[0]);
    Poly res = poly_rem(t, Poly(modulus().begin(), modulus().end()), pp);
    std::uint32_t code = 0, mul = 1;
    for (std::uint32_t i = 0; i < e(); ++i) {
        code += static_cast<std::uint32_t>((res[i] * scale) % pp) * mul;
        mul *= static_cast<std::uint32_t>(pp);
    }
    FieldElement result{code};
    if (!(this->mul(result, a) == one()))
        throw InternalError("InverseFailed", "polynomial inverse verification failed");
    return result;
}

FieldElement Field::pow(FieldElement a, std::uint64_t k) const {
    FieldElement acc = one(), base = a;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

std::vector<FieldElement> Field::enumerate() const {
    std::vector<FieldElement> out;
    out.reserve(q());
    for (std::uint64_t c = 0; c < q(); ++c) out.push_back({static_cast<std::uint32_t>(c)});
    return out;
}

} // namespace homcensus
