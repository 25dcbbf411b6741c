#include "jellyfish/hypergeometric.hpp"

#include <cmath>
#include <numbers>

namespace jf {

CharTable::CharTable(FieldPtr field) : field_(std::move(field)) {
    const Field& f = *field_;
    uint32_t q = f.q();
    roots_.resize(q - 1);
    for (uint32_t k = 0; k < q - 1; ++k) {
        double t = 2.0 * std::numbers::pi * k / (q - 1);
        roots_[k] = {std::cos(t), std::sin(t)};
    }
    psi_.resize(q);
    std::vector<std::complex<double>> proots(f.p());
    for (uint32_t k = 0; k < f.p(); ++k) {
        double t = 2.0 * std::numbers::pi * k / f.p();
        proots[k] = {std::cos(t), std::sin(t)};
    }
    for (uint32_t e = 0; e < q; ++e) psi_[e] = proots[f.absolute_trace({e})];
}

std::complex<double> MultiplicativeCharacter::operator()(Element x) const {
    if (x.enc == 0) return {0.0, 0.0};
    const Field& f = table_->field();
    return table_->unit_root(uint64_t(index_) * f.dlog(x));
}

MultiplicativeCharacter MultiplicativeCharacter::bar() const {
    uint32_t n = table_->field().q() - 1;
    return {table_, index_ == 0 ? 0 : n - index_};
}

MultiplicativeCharacter MultiplicativeCharacter::operator*(MultiplicativeCharacter other) const {
    uint32_t n = table_->field().q() - 1;
    return {table_, (index_ + other.index_) % n};
}

std::complex<double> gauss_sum(MultiplicativeCharacter chi) {
    const CharTable& t = chi.table();
    const Field& f = t.field();
    std::complex<double> s = 0;
    for (uint32_t x = 1; x < f.q(); ++x) s += chi(Element{x}) * t.psi({x});
    return s;
}

std::complex<double> jacobi_sum(MultiplicativeCharacter a, MultiplicativeCharacter b) {
    const Field& f = a.table().field();
    std::complex<double> s = 0;
    for (uint32_t x = 0; x < f.q(); ++x)
        s += a(Element{x}) * b(f.sub(f.one(), {x}));
    return s;
}

std::complex<double> greene_binomial(MultiplicativeCharacter a, MultiplicativeCharacter b) {
    const Field& f = a.table().field();
    Element minus_one = f.neg(f.one());
    return b(minus_one) / double(f.q()) * jacobi_sum(a, b.bar());
}

std::complex<double> greene_2f1_full(MultiplicativeCharacter a, MultiplicativeCharacter b,
                                     MultiplicativeCharacter c, Element t) {
    const CharTable& tab = a.table();
    const Field& f = tab.field();
    uint32_t n = f.q() - 1;
    std::complex<double> s = 0;
    for (uint32_t j = 0; j < n; ++j) {
        MultiplicativeCharacter chi = tab.character(j);
        s += greene_binomial(a * chi, chi) * greene_binomial(b * chi, c * chi) * chi(t);
    }
    return s * (double(f.q()) / n);
}

PhiSum2F1 greene_2f1_phi(const Field& f, Element lambda) {
    int64_t s = 0;
    for (uint32_t x = 0; x < f.q(); ++x) {
        Element v = f.mul(f.mul(Element{x}, f.sub({x}, f.one())), f.sub({x}, lambda));
        s += f.phi(v);
    }
    return {s, f.q()};
}

int64_t i_fq(const Field& f, Element a, Element b) {
    if (a.enc == 0 || b.enc == 0 || a == b || f.add(a, b).enc == 0)
        throw InvalidInputError("i_fq requires a, b nonzero with a != +-b");
    Element lam = f.sub(f.one(), f.div(f.mul(b, b), f.mul(a, a)));
    int64_t s = 0;
    for (uint32_t x = 0; x < f.q(); ++x)
        s += f.phi(Element{x}) * f.phi(f.sub({x}, f.one())) * f.phi(f.sub({x}, lam));
    return s;
}

double evans_greene_residual(MultiplicativeCharacter a, MultiplicativeCharacter b, Element t) {
    const CharTable& tab = a.table();
    const Field& f = tab.field();
    MultiplicativeCharacter phi = tab.quadratic();
    MultiplicativeCharacter a2_bbar = a * a * b.bar();
    MultiplicativeCharacter phi_a_bbar = phi * a * b.bar();
    if (a.is_trivial() || a2_bbar.is_trivial() || phi_a_bbar.is_trivial())
        throw PreconditionError("Evans-Greene requires A, A^2 Bbar, phi A Bbar nontrivial");
    Element one = f.one();
    if (f.add(t, one).enc == 0) throw PreconditionError("Evans-Greene requires t != -1");

    Element one_plus_t = f.add(one, t);
    Element arg = f.div(f.mul(f.from_int(4), t), f.mul(one_plus_t, one_plus_t));
    std::complex<double> lhs = greene_2f1_full(a, b, a * a, arg);

    MultiplicativeCharacter phi_abar_b = phi * a.bar() * b;
    std::complex<double> coef = a.bar()(f.from_int(4)) * (phi * b)(f.neg(one)) *
                                gauss_sum(a2_bbar) * gauss_sum(phi_abar_b) /
                                (gauss_sum(phi) * gauss_sum(a));
    std::complex<double> rhs = coef * (b * b)(one_plus_t) *
                               greene_2f1_full(phi_abar_b, b, phi * a, f.mul(t, t));
    return std::abs(lhs - rhs);
}

} // namespace jf
