#include "jellyfish/legendre.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace jf {

namespace {

Element cubic(const Field& f, Element lambda, Element x) {
    // x(x-1)(x-lambda)
    return f.mul(f.mul(x, f.sub(x, f.one())), f.sub(x, lambda));
}

void require_curve_field(const Field& f) {
    if (f.p() < 7)
        throw PreconditionError("Legendre-curve operations require characteristic p >= 7, got p = " +
                                std::to_string(f.p()));
}

} // namespace

LegendreCurve legendre_curve(FieldPtr field, Element lambda) {
    require_curve_field(*field);
    if (lambda.enc == 0 || lambda == field->one())
        throw InvalidInputError("lambda must avoid {0, 1}");
    return {std::move(field), lambda};
}

bool on_curve(const LegendreCurve& curve, CurvePoint pt) {
    if (pt.infinity) return true;
    const Field& f = *curve.field;
    return f.mul(pt.y, pt.y) == cubic(f, curve.lambda, pt.x);
}

uint64_t point_count(const LegendreCurve& curve) {
    const Field& f = *curve.field;
    int64_t s = 0;
    for (uint32_t x = 0; x < f.q(); ++x) s += f.phi(cubic(f, curve.lambda, {x}));
    return uint64_t(int64_t(f.q()) + 1 + s);
}

std::vector<CurvePoint> enumerate_points(const LegendreCurve& curve) {
    const Field& f = *curve.field;
    std::vector<CurvePoint> pts{CurvePoint::O()};
    for (uint32_t x = 0; x < f.q(); ++x) {
        Element v = cubic(f, curve.lambda, {x});
        int ph = f.phi(v);
        if (ph == 0) {
            pts.push_back(CurvePoint::affine({x}, f.zero()));
        } else if (ph == 1) {
            Element r = f.canonical_sqrt(v);
            Element s = f.neg(r);
            if (s < r) std::swap(r, s);
            pts.push_back(CurvePoint::affine({x}, r));
            pts.push_back(CurvePoint::affine({x}, s));
        }
    }
    return pts;
}

CurvePoint negate_point(const LegendreCurve& curve, CurvePoint p) {
    if (p.infinity) return p;
    return CurvePoint::affine(p.x, curve.field->neg(p.y));
}

CurvePoint add_points(const LegendreCurve& curve, CurvePoint p, CurvePoint q) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    const Field& f = *curve.field;
    // y^2 = x^3 + A x^2 + B x with A = -(1+lambda), B = lambda
    Element A = f.neg(f.add(f.one(), curve.lambda));
    Element B = curve.lambda;
    if (p.x == q.x && f.add(p.y, q.y).enc == 0) return CurvePoint::O();
    Element slope;
    if (p == q) {
        // (3x^2 + 2Ax + B) / 2y
        Element num = f.add(f.add(f.mul(f.from_int(3), f.mul(p.x, p.x)),
                                  f.mul(f.from_int(2), f.mul(A, p.x))),
                            B);
        slope = f.div(num, f.mul(f.from_int(2), p.y));
    } else {
        slope = f.div(f.sub(q.y, p.y), f.sub(q.x, p.x));
    }
    Element x3 = f.sub(f.sub(f.sub(f.mul(slope, slope), A), p.x), q.x);
    Element y3 = f.sub(f.mul(slope, f.sub(p.x, x3)), p.y);
    return CurvePoint::affine(x3, y3);
}

CurvePoint scalar_mul(const LegendreCurve& curve, uint64_t k, CurvePoint p) {
    CurvePoint r = CurvePoint::O();
    while (k) {
        if (k & 1) r = add_points(curve, r, p);
        p = add_points(curve, p, p);
        k >>= 1;
    }
    return r;
}

GroupStructure group_structure(const LegendreCurve& curve) {
    const Field& f = *curve.field;
    if (f.q() > kGroupEnumerationMaxQ)
        throw TooLargeError("group_structure enumeration bound is q <= " +
                            std::to_string(kGroupEnumerationMaxQ));
    auto pts = enumerate_points(curve);
    uint64_t n = pts.size();

    // n1 = prod over primes l | gcd(n, q-1) of l^c, where c is the largest j
    // with #E[l^j] = l^{2j}
    uint64_t g = std::gcd(n, uint64_t(f.q() - 1));
    uint32_t n1 = 1;
    for (uint64_t l : prime_factors(g)) {
        uint64_t lj = 1;
        while (true) {
            uint64_t next = lj * l;
            uint64_t killed = 0;
            for (const CurvePoint& pt : pts)
                if (scalar_mul(curve, next, pt).infinity) ++killed;
            if (killed == next * next)
                lj = next;
            else
                break;
        }
        n1 *= uint32_t(lj);
    }
    GroupStructure gs;
    gs.order = n;
    gs.n1 = n1;
    gs.n2 = uint32_t(n / n1);
    gs.sylow1 = gs.n1 & (~gs.n1 + 1);  // largest power of two dividing n1
    gs.sylow2 = gs.n2 & (~gs.n2 + 1);
    gs.trace = int64_t(f.q()) + 1 - int64_t(n);
    return gs;
}

std::pair<uint32_t, uint32_t> two_sylow_shape(const LegendreCurve& curve) {
    const Field& f = *curve.field;
    if (f.phi(curve.lambda) != 1)
        throw NotASquareError("lambda is not a nonzero square");
    GroupStructure gs = group_structure(curve);
    if (gs.sylow1 != 2 || gs.sylow2 < 4)
        throw InternalError("2-Sylow of E_{alpha^2} is not Z/2 x Z/2^{2+b}");
    return {gs.sylow1, gs.sylow2};
}

bool halvable(const LegendreCurve& curve, CurvePoint p) {
    if (p.infinity) throw InvalidInputError("halvable is defined for affine points");
    const Field& f = *curve.field;
    for (Element v : {p.x, f.sub(p.x, f.one()), f.sub(p.x, curve.lambda)})
        if (f.phi(v) == -1) return false;
    return true;
}

Element j_invariant(const LegendreCurve& curve) {
    const Field& f = *curve.field;
    Element l = curve.lambda;
    Element l2 = f.mul(l, l);
    Element t = f.add(f.sub(l2, l), f.one());
    Element num = f.mul(f.from_int(256), f.mul(t, f.mul(t, t)));
    Element den = f.mul(l2, f.pow(f.sub(l, f.one()), 2));
    return f.div(num, den);
}

LegendreCurve psi(FieldPtr field, AdmissiblePair v) {
    const Field& f = *field;
    Element lambda = f.div(f.mul(v.b, v.b), f.mul(v.a, v.a));
    return legendre_curve(std::move(field), lambda);
}

CurvePoint isogeny_apply(const Field& f, AdmissiblePair v, CurvePoint p) {
    require_curve_field(f);
    LegendreCurve domain{nullptr, f.div(f.mul(v.b, v.b), f.mul(v.a, v.a))};
    // on_curve without a FieldPtr
    if (!p.infinity && f.mul(p.y, p.y) != cubic(f, domain.lambda, p.x))
        throw PointNotOnCurveError();
    if (p.infinity) return CurvePoint::O();
    if (p.x.enc == 0 && p.y.enc == 0) return CurvePoint::O();  // kernel generator
    Element a = v.a, b = v.b;
    Element apb = f.add(a, b);
    Element u = f.add(f.mul(a, p.x), b);
    Element w = f.sub(f.mul(a, p.x), b);
    Element xn = f.div(f.mul(u, u), f.mul(p.x, f.mul(apb, apb)));
    Element yn = f.neg(f.div(f.mul(f.mul(a, p.y), f.mul(w, u)),
                             f.mul(f.mul(p.x, p.x), f.mul(apb, f.mul(apb, apb)))));
    return CurvePoint::affine(xn, yn);
}

std::vector<Element> psi_image_lambdas(const Field& f, const Jellyfish& jelly) {
    std::vector<Element> lambdas;
    auto collect = [&](const std::vector<AdmissiblePair>& nodes) {
        for (const AdmissiblePair& v : nodes)
            lambdas.push_back(f.div(f.mul(v.b, v.b), f.mul(v.a, v.a)));
    };
    collect(jelly.cycle);
    collect(jelly.tentacles);
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());
    return lambdas;
}

void annotate_swarm(Swarm& swarm) {
    const Field& f = *swarm.field;
    require_curve_field(f);
    uint32_t q = f.q();

    // S(lambda) = sum_x phi(x(x-1)(x-lambda)) for every lambda; trace = -S
    std::vector<int64_t> s_table(q, 0);
    for (uint32_t lam = 0; lam < q; ++lam) {
        int64_t s = 0;
        for (uint32_t x = 0; x < q; ++x) s += f.phi(cubic(f, {lam}, {x}));
        s_table[lam] = s;
    }

    std::unordered_map<uint32_t, GroupStructure> group_cache;
    std::vector<uint8_t> lambda_seen(q, 0);

    for (Jellyfish& jelly : swarm.jellyfish) {
        auto lambdas = psi_image_lambdas(f, jelly);
        int64_t trace = -s_table[lambdas.front().enc];
        for (Element lam : lambdas) {
            if (-s_table[lam.enc] != trace)
                throw InternalError("point count is not constant across a jellyfish");
            lambda_seen[lam.enc] = 1;
        }
        jelly.trace = trace;
        auto [it, inserted] = group_cache.try_emplace(lambdas.front().enc);
        if (inserted) it->second = group_structure(legendre_curve(swarm.field, lambdas.front()));
        if (it->second.trace != trace) throw InternalError("trace mismatch between S-sum and enumeration");
        jelly.group = it->second;
    }

    // Psi image over the whole swarm = {alpha^2 : alpha != 0, +-1} = squares \ {0, 1}
    for (uint32_t e = 0; e < q; ++e) {
        bool expected = e > 1 && f.phi({e}) == 1;
        if (bool(lambda_seen[e]) != expected)
            throw InternalError("Psi image differs from the squares minus {0, 1}");
    }
}

} // namespace jf
