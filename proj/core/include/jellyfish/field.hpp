#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

#include "jellyfish/errors.hpp"

namespace jf {

// An element of F_q, identified by its canonical integer encoding
// enc = sum coeffs[i] * p^i in [0, q). All arithmetic goes through Field.
struct Element {
    uint32_t enc = 0;
    friend constexpr auto operator<=>(const Element&, const Element&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// The finite field F_q with q = p^m = 3 (mod 4).
//
// Extension fields are F_p[x]/(f) for the deterministic modulus f: the first
// monic irreducible polynomial of degree m in ascending integer encoding of
// its coefficient vector. Multiplicative structure is table-driven (exp/dlog
// from the smallest-encoding primitive root), so mul/inv/pow/phi/sqrt are
// O(1) after construction. Immutable and shareable across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    static constexpr uint64_t kMaxQ = uint64_t(1) << 20;

    // Throws NotPrimeError, WrongResidueError (q != 3 mod 4), TooLargeError.
    static FieldPtr make(uint32_t p, uint32_t m);
    // Same, with an explicit monic irreducible modulus (c0..cm).
    static FieldPtr make_with_modulus(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);
    // Factors q = p^m. Throws NotPrimeError when q is not a prime power.
    static FieldPtr from_q(uint64_t q);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Element zero() const { return {0}; }
    Element one() const { return {1}; }
    Element element(uint64_t enc) const;   // bounds-checked
    Element from_int(int64_t n) const;     // n mod p, embedded in the prime subfield

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element inv(Element a) const;          // throws DivisionByZeroError
    Element div(Element a, Element b) const;
    Element pow(Element a, uint64_t e) const;
    Element half(Element a) const { return mul(a, inv2_); }

    // Quadratic character: 0 at 0, else +-1 by parity of the discrete log.
    int phi(Element a) const {
        if (a.enc == 0) return 0;
        return (dlog_[a.enc] & 1) ? -1 : +1;
    }
    // x^{(q+1)/4}; the two roots of a square x are {r, -r}.
    // Throws NotASquareError when phi(x) = -1. canonical_sqrt(0) = 0.
    Element canonical_sqrt(Element a) const;
    // Tr(x) = x + x^p + ... + x^{p^{m-1}}, reported as an integer in [0, p).
    uint32_t absolute_trace(Element a) const;
    // Generator of F_q^x with the smallest integer encoding.
    Element primitive_root() const { return {gen_}; }

    uint32_t dlog(Element a) const;        // a != 0
    Element exp(uint64_t k) const { return {exp_[k % (q_ - 1)]}; }

    std::vector<uint32_t> coeffs(Element a) const;  // little-endian, length m

private:
    Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus);

    uint32_t mul_raw(uint32_t a, uint32_t b) const;  // polynomial path, used to seed tables
    uint32_t pow_raw(uint32_t a, uint64_t e) const;

    uint32_t p_ = 0, m_ = 0, q_ = 0;
    bool prime_field_ = false;
    std::vector<uint32_t> modulus_;  // c0..cm, monic
    uint32_t gen_ = 0;
    Element inv2_{};
    std::vector<uint32_t> exp_;      // exp_[k] = enc(g^k), size q-1
    std::vector<uint32_t> dlog_;     // dlog_[enc(g^k)] = k, size q (slot 0 unused)
};

// All q elements in ascending integer encoding.
std::vector<Element> enumerate_elements(const Field& field);

bool is_prime(uint64_t n);
std::vector<uint64_t> prime_factors(uint64_t n);  // distinct primes, ascending

// First monic irreducible degree-m polynomial over Z/p in encoding order (c0..cm).
std::vector<uint32_t> deterministic_modulus(uint32_t p, uint32_t m);
bool is_irreducible_mod_p(const std::vector<uint32_t>& poly, uint32_t p);

} // namespace jf
