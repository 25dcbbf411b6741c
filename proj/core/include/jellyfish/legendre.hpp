#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jellyfish/swarm.hpp"

namespace jf {

// E_lambda: y^2 = x(x-1)(x-lambda) over F_q, lambda not in {0, 1}.
// This module requires characteristic p >= 7.
struct LegendreCurve {
    FieldPtr field;
    Element lambda;
};

// Throws PreconditionError (p < 7) or InvalidInputError (lambda in {0,1}).
LegendreCurve legendre_curve(FieldPtr field, Element lambda);

struct CurvePoint {
    bool infinity = true;
    Element x{}, y{};
    static CurvePoint O() { return {}; }
    static CurvePoint affine(Element x, Element y) { return {false, x, y}; }
    friend constexpr auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(const LegendreCurve& curve, CurvePoint pt);

// |E_lambda(F_q)| = q + 1 + S with S = sum_x phi(x(x-1)(x-lambda)).
uint64_t point_count(const LegendreCurve& curve);

// All rational points, identity first, affine points by ascending (x, y).
std::vector<CurvePoint> enumerate_points(const LegendreCurve& curve);

// chord-tangent group law
CurvePoint add_points(const LegendreCurve& curve, CurvePoint p, CurvePoint q);
CurvePoint negate_point(const LegendreCurve& curve, CurvePoint p);
CurvePoint scalar_mul(const LegendreCurve& curve, uint64_t k, CurvePoint p);

// Invariant factors by point enumeration; q bounded by kGroupEnumerationMaxQ.
inline constexpr uint32_t kGroupEnumerationMaxQ = 20000;
GroupStructure group_structure(const LegendreCurve& curve);

// 2-Sylow of E_{alpha^2}(F_q): (2, 2^{2+b}) with b >= 0.
// Throws NotASquareError when lambda is not a nonzero square != 1.
std::pair<uint32_t, uint32_t> two_sylow_shape(const LegendreCurve& curve);

// 2-descent: P = 2Q is solvable iff x0, x0-1, x0-lambda are all squares
// (zero counts as a square). P must not be the identity.
bool halvable(const LegendreCurve& curve, CurvePoint p);

// j(E_lambda) = 2^8 (lambda^2-lambda+1)^3 / (lambda^2 (lambda-1)^2)
Element j_invariant(const LegendreCurve& curve);

// Node -> curve map: Psi(a, b) = E_{b^2/a^2}.
LegendreCurve psi(FieldPtr field, AdmissiblePair v);

// The degree-2 isogeny attached to the edge v -> agm_step(v):
//   (x, y) -> ((ax+b)^2 / (x(a+b)^2), -ay(ax-b)(ax+b) / (x^2(a+b)^3))
// with O -> O and (0,0) -> O; kernel is exactly {O, (0,0)}.
CurvePoint isogeny_apply(const Field& f, AdmissiblePair v, CurvePoint p);

// Fills trace and group for every jellyfish (p >= 7), verifying that all
// nodes of a jellyfish share one point count and that the Psi image over the
// swarm is exactly {E_{alpha^2} : alpha != 0, +-1}.
void annotate_swarm(Swarm& swarm);

// Distinct lambda values of the Psi image of one jellyfish, ascending.
std::vector<Element> psi_image_lambdas(const Field& f, const Jellyfish& jelly);

} // namespace jf
