#include "jellyfish/field.hpp"

#include <algorithm>
#include <string>

namespace jf {

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---- polynomial arithmetic over Z/p, only used during construction ----
namespace {

using Poly = std::vector<uint32_t>;  // little-endian coefficients

Poly& normalize(Poly& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
    // p prime, a != 0
    uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return uint32_t(r);
}

Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
    normalize(a);
    while (a.size() >= f.size() && !(a.size() == 1 && a[0] == 0)) {
        size_t d = a.size() - f.size();
        uint64_t lead = uint64_t(a.back()) * inv_mod_p(f.back(), p) % p;
        for (size_t i = 0; i < f.size(); ++i) {
            uint64_t v = a[d + i] + uint64_t(p) * p - lead * f[i] % p;
            a[d + i] = uint32_t(v % p);
        }
        normalize(a);
        if (a.size() < f.size()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = uint32_t((out[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(out), f, p);
}

Poly poly_pow_x(uint64_t e, const Poly& f, uint32_t p) {
    Poly r{1};
    Poly b = poly_mod(Poly{0, 1}, f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, f, p);
        b = poly_mulmod(b, b, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
    normalize(a);
    normalize(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

uint64_t ipow_checked(uint32_t p, uint32_t m) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        if (q > Field::kMaxQ) return 0;
        q *= p;
    }
    return (q <= Field::kMaxQ) ? q : 0;
}

} // namespace

bool is_irreducible_mod_p(const std::vector<uint32_t>& poly, uint32_t p) {
    Poly f = poly;
    normalize(f);
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    // Rabin: x^{p^m} = x mod f, and gcd(x^{p^{m/l}} - x, f) = 1 for prime l | m
    uint64_t pm = 1;
    for (size_t i = 0; i < m; ++i) pm *= p;
    Poly xq = poly_pow_x(pm, f, p);
    if (!(xq.size() == 2 && xq[0] == 0 && xq[1] == 1)) return false;
    for (uint64_t l : prime_factors(m)) {
        uint64_t pe = 1;
        for (size_t i = 0; i < m / l; ++i) pe *= p;
        Poly diff = poly_pow_x(pe, f, p);
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        Poly g = poly_gcd(f, diff, p);
        normalize(g);
        if (g.size() != 1 || g[0] == 0) return false;
    }
    return true;
}

std::vector<uint32_t> deterministic_modulus(uint32_t p, uint32_t m) {
    if (m == 1) return {0, 1};  // x; arithmetic never consults it
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t e = 0; e < count; ++e) {
        std::vector<uint32_t> f(m + 1, 0);
        uint64_t t = e;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = uint32_t(t % p);
            t /= p;
        }
        f[m] = 1;
        if (is_irreducible_mod_p(f, p)) return f;
    }
    throw InternalError("no irreducible polynomial found");  // unreachable for prime p
}

// ---- Field ----

FieldPtr Field::make(uint32_t p, uint32_t m) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidInputError("m must be >= 1");
    uint64_t q = ipow_checked(p, m);
    if (q == 0) throw TooLargeError("p^m exceeds maximum " + std::to_string(kMaxQ));
    if (q % 4 != 3)
        throw WrongResidueError("q = " + std::to_string(q) + " is " + std::to_string(q % 4) + " mod 4, need 3");
    return FieldPtr(new Field(p, m, deterministic_modulus(p, m)));
}

FieldPtr Field::make_with_modulus(uint32_t p, uint32_t m, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw NotPrimeError("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw InvalidInputError("m must be >= 1");
    uint64_t q = ipow_checked(p, m);
    if (q == 0) throw TooLargeError("p^m exceeds maximum " + std::to_string(kMaxQ));
    if (q % 4 != 3)
        throw WrongResidueError("q = " + std::to_string(q) + " is " + std::to_string(q % 4) + " mod 4, need 3");
    if (modulus.size() != size_t(m) + 1 || modulus[m] != 1)
        throw InvalidInputError("modulus must be monic of degree m");
    for (uint32_t c : modulus)
        if (c >= p) throw InvalidInputError("modulus coefficients must lie in [0, p)");
    if (m > 1 && !is_irreducible_mod_p(modulus, p))
        throw InvalidInputError("modulus is reducible over Z/p");
    return FieldPtr(new Field(p, m, std::move(modulus)));
}

FieldPtr Field::from_q(uint64_t q) {
    if (q < 3) throw InvalidInputError("q must be >= 3");
    if (q > kMaxQ) throw TooLargeError("q exceeds maximum " + std::to_string(kMaxQ));
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t m = 0;
    uint64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++m;
    }
    if (t != 1) throw NotPrimeError("q = " + std::to_string(q) + " is not a prime power");
    return make(uint32_t(p), m);
}

Field::Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
    : p_(p), m_(m), prime_field_(m == 1), modulus_(std::move(modulus)) {
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) q *= p;
    q_ = uint32_t(q);

    // smallest-encoding primitive root, found with the raw polynomial path
    auto factors = prime_factors(q_ - 1);
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (uint64_t l : factors) {
            if (pow_raw(g, (q_ - 1) / l) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0) throw InternalError("no primitive root found");

    exp_.resize(q_ - 1);
    dlog_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t k = 0; k < q_ - 1; ++k) {
        exp_[k] = x;
        dlog_[x] = k;
        x = mul_raw(x, gen_);
    }
    if (x != 1) throw InternalError("primitive root order mismatch");

    inv2_ = inv(add(one(), one()));
    if (phi(neg(one())) != -1) throw InternalError("phi(-1) != -1");  // guaranteed by q = 3 mod 4
}

Element Field::element(uint64_t enc) const {
    if (enc >= q_) throw InvalidInputError("encoding out of range");
    return {uint32_t(enc)};
}

Element Field::from_int(int64_t n) const {
    int64_t r = n % int64_t(p_);
    if (r < 0) r += p_;
    return {uint32_t(r)};
}

Element Field::add(Element a, Element b) const {
    if (prime_field_) return {uint32_t((uint64_t(a.enc) + b.enc) % p_)};
    uint32_t out = 0, mult = 1, x = a.enc, y = b.enc;
    for (uint32_t i = 0; i < m_; ++i) {
        out += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return {out};
}

Element Field::neg(Element a) const {
    if (prime_field_) return {a.enc == 0 ? 0 : p_ - a.enc};
    uint32_t out = 0, mult = 1, x = a.enc;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t c = x % p_;
        out += (c == 0 ? 0 : p_ - c) * mult;
        x /= p_;
        mult *= p_;
    }
    return {out};
}

Element Field::sub(Element a, Element b) const { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const {
    if (a.enc == 0 || b.enc == 0) return {0};
    uint64_t k = uint64_t(dlog_[a.enc]) + dlog_[b.enc];
    if (k >= q_ - 1) k -= q_ - 1;
    return {exp_[k]};
}

Element Field::inv(Element a) const {
    if (a.enc == 0) throw DivisionByZeroError();
    uint32_t k = dlog_[a.enc];
    return {exp_[k == 0 ? 0 : q_ - 1 - k]};
}

Element Field::div(Element a, Element b) const { return mul(a, inv(b)); }

Element Field::pow(Element a, uint64_t e) const {
    if (a.enc == 0) return e == 0 ? one() : zero();
    uint64_t k = uint64_t(dlog_[a.enc]) * (e % (q_ - 1)) % (q_ - 1);
    return {exp_[k]};
}

Element Field::canonical_sqrt(Element a) const {
    if (a.enc == 0) return {0};
    uint32_t k = dlog_[a.enc];
    if (k & 1) throw NotASquareError();
    // dlog of x^{(q+1)/4} is k*(q+1)/4 mod (q-1)
    uint64_t e = uint64_t(k) * ((q_ + 1) / 4) % (q_ - 1);
    return {exp_[e]};
}

uint32_t Field::absolute_trace(Element a) const {
    if (prime_field_) return a.enc;
    Element t = zero();
    Element x = a;
    for (uint32_t i = 0; i < m_; ++i) {
        t = add(t, x);
        x = pow(x, p_);
    }
    if (t.enc >= p_) throw InternalError("trace left the prime subfield");
    return t.enc;
}

uint32_t Field::dlog(Element a) const {
    if (a.enc == 0) throw DivisionByZeroError("dlog of zero");
    return dlog_[a.enc];
}

std::vector<uint32_t> Field::coeffs(Element a) const {
    std::vector<uint32_t> c(m_);
    uint32_t x = a.enc;
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

uint32_t Field::mul_raw(uint32_t a, uint32_t b) const {
    if (prime_field_) return uint32_t(uint64_t(a) * b % p_);
    uint32_t ca[16], cb[16];
    uint64_t prod[31] = {0};
    for (uint32_t i = 0; i < m_; ++i) {
        ca[i] = a % p_;
        a /= p_;
        cb[i] = b % p_;
        b /= p_;
    }
    for (uint32_t i = 0; i < m_; ++i) {
        if (!ca[i]) continue;
        for (uint32_t j = 0; j < m_; ++j) prod[i + j] += uint64_t(ca[i]) * cb[j];
    }
    // reduce by x^m = -(c0 + ... + c_{m-1} x^{m-1})
    for (int d = 2 * int(m_) - 2; d >= int(m_); --d) {
        uint64_t v = prod[d] % p_;
        prod[d] = 0;
        if (!v) continue;
        for (uint32_t i = 0; i < m_; ++i)
            prod[d - m_ + i] += v * ((p_ - modulus_[i]) % p_);
    }
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        out += uint32_t(prod[i] % p_) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::pow_raw(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul_raw(r, a);
        a = mul_raw(a, a);
        e >>= 1;
    }
    return r;
}

std::vector<Element> enumerate_elements(const Field& field) {
    std::vector<Element> out;
    out.reserve(field.q());
    for (uint32_t e = 0; e < field.q(); ++e) out.push_back({e});
    return out;
}

} // namespace jf
