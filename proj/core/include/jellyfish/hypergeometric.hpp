#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "jellyfish/field.hpp"

namespace jf {

class CharTable;

// chi_j with chi_j(g^k) = zeta^{jk}, zeta = exp(2 pi i / (q-1)), g the
// smallest-encoding primitive root. Convention chi(0) = 0. Characters borrow
// their table and must not outlive it.
class MultiplicativeCharacter {
public:
    std::complex<double> operator()(Element x) const;
    MultiplicativeCharacter bar() const;  // conjugate = inverse character
    MultiplicativeCharacter operator*(MultiplicativeCharacter other) const;
    bool is_trivial() const { return index_ == 0; }
    uint32_t index() const { return index_; }
    const CharTable& table() const { return *table_; }

private:
    friend class CharTable;
    MultiplicativeCharacter(const CharTable* t, uint32_t index) : table_(t), index_(index) {}
    const CharTable* table_;
    uint32_t index_;
};

// Cached complex character data for one field: the (q-1)-th roots of unity
// indexed by discrete log, and the additive character psi(x) = e^{2 pi i Tr(x)/p}.
// Immutable after construction; shareable.
class CharTable {
public:
    explicit CharTable(FieldPtr field);
    const Field& field() const { return *field_; }
    FieldPtr field_ptr() const { return field_; }

    std::complex<double> unit_root(uint64_t k) const { return roots_[k % roots_.size()]; }
    std::complex<double> psi(Element x) const { return psi_[x.enc]; }

    MultiplicativeCharacter character(uint32_t index) const {
        return {this, index % (field_->q() - 1)};
    }
    MultiplicativeCharacter trivial() const { return character(0); }
    MultiplicativeCharacter quadratic() const { return character((field_->q() - 1) / 2); }

private:
    FieldPtr field_;
    std::vector<std::complex<double>> roots_;  // zeta^k, k in [0, q-1)
    std::vector<std::complex<double>> psi_;    // additive character per element
};

inline constexpr double kComplexTolerance = 1e-8;

// G(chi) = sum_{x != 0} chi(x) psi(x)
std::complex<double> gauss_sum(MultiplicativeCharacter chi);

// J(A, B) = sum_t A(t) B(1-t); equals G(A)G(B)/G(AB) when AB is nontrivial.
std::complex<double> jacobi_sum(MultiplicativeCharacter a, MultiplicativeCharacter b);

// Greene's normalized binomial (A choose B) = B(-1)/q * J(A, Bbar).
std::complex<double> greene_binomial(MultiplicativeCharacter a, MultiplicativeCharacter b);

// Greene's 2F1(A, B; C | t) by the full character-sum definition:
//   q/(q-1) * sum_chi binom(A chi, chi) binom(B chi, C chi) chi(t)
std::complex<double> greene_2f1_full(MultiplicativeCharacter a, MultiplicativeCharacter b,
                                     MultiplicativeCharacter c, Element t);

// Exact integer form of 2F1(phi, phi; eps | lambda):
//   S = sum_x phi(x(x-1)(x-lambda)),  value = phi(-1) * S / q.
// (phi(-1) = -1 for every field here, so value = -S/q.)
struct PhiSum2F1 {
    int64_t S = 0;
    uint32_t q = 0;
    int64_t value_num() const { return -S; }  // numerator of phi(-1)*S/q
    uint32_t value_den() const { return q; }
};
PhiSum2F1 greene_2f1_phi(const Field& f, Element lambda);

// I(a,b) = sum_x phi(x) phi(x-1) phi(x - (1 - b^2/a^2)), exact.
// Satisfies I(a,b) = phi(-1) * q * 2F1(1 - b^2/a^2).
int64_t i_fq(const Field& f, Element a, Element b);

// |LHS - RHS| of the quadratic transformation
//   2F1(A, B; A^2 | 4t/(1+t)^2) =
//     Abar(4) (phi B)(-1) G(A^2 Bbar) G(phi Abar B) / (G(phi) G(A))
//     * B^2(1+t) * 2F1(phi Abar B, B; phi A | t^2).
// Requires A, A^2 Bbar, phi A Bbar nontrivial and t != -1 (PreconditionError).
double evans_greene_residual(MultiplicativeCharacter a, MultiplicativeCharacter b, Element t);

} // namespace jf
