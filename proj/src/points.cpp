#include "biell/points.hpp"

#include <algorithm>
#include <sstream>

namespace biell {
namespace points {

bool CurvePoint::operator==(const CurvePoint& o) const {
    if (at_infinity != o.at_infinity) return false;
    if (at_infinity) return inf_sign == o.inf_sign;
    return x == o.x && y == o.y;
}

bool CurvePoint::operator<(const CurvePoint& o) const {
    if (at_infinity != o.at_infinity) return at_infinity;
    if (at_infinity) return inf_sign > o.inf_sign;  // +infinity first
    if (x != o.x) return x < o.x;
    return y < o.y;
}

std::string CurvePoint::str() const {
    if (at_infinity) return inf_sign >= 0 ? "inf+" : "inf-";
    return "(" + x.get_str() + ", " + y.get_str() + ")";
}

bool on_model(const HyperellipticModel& c, const CurvePoint& p) {
    if (p.at_infinity) {
        if (c.f.degree() % 2 == 1) return p.inf_sign == 0;
        return is_square(c.f.lead() / Rat(c.d));
    }
    return Rat(c.d) * p.y * p.y == c.f.eval(p.x);
}

std::vector<CurvePoint> infinity_points(const HyperellipticModel& c) {
    if (c.f.degree() % 2 == 1) return {CurvePoint::infinity(0)};
    if (is_square(c.f.lead() / Rat(c.d)))
        return {CurvePoint::infinity(+1), CurvePoint::infinity(-1)};
    return {};
}

namespace {

void sort_unique(std::vector<CurvePoint>& pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// add (x, y) candidates for both square roots of x2 when x2 is a rational
// square; the y coordinate comes from the callback
template <typename YOf>
void add_sqrt_preimages(const HyperellipticModel& c, const Rat& x2, YOf y_of,
                        std::vector<CurvePoint>& out) {
    if (sign(x2) < 0 || !is_square(x2)) return;
    Rat x = sqrt_exact(x2);
    Rat mx = -x;
    for (const Rat& xc : {x, mx}) {
        CurvePoint p = CurvePoint::affine(xc, y_of(xc));
        if (on_model(c, p)) out.push_back(p);
        if (sign(x) == 0) break;
    }
}

}  // namespace

std::vector<CurvePoint> pullback_points(const HyperellipticModel& c,
                                        const QuotientMap& phi,
                                        const std::vector<ECPoint>& targets) {
    const ShapeData& sh = phi.shape;
    if (sh.shape == MapShape::Other || sh.shape == MapShape::SquareTimesY)
        throw ParameterViolation("pullback_points: unsupported map shape");
    std::vector<CurvePoint> out;
    auto infs = infinity_points(c);

    // where do the points at infinity of the source go?
    // SquareScaled: X -> inf (the target O). InverseSquare*: X -> 0 with
    // Y -> ky * s where s^2 = lead(f)/d (rational iff infs nonempty).
    Rat lead_root(0);
    if (!infs.empty()) lead_root = sqrt_exact(c.f.lead() / Rat(c.d));

    for (const ECPoint& t : targets) {
        if (t.inf) {
            if (sh.shape == MapShape::SquareScaled) {
                for (const auto& ip : infs) out.push_back(ip);
            } else if (sh.shape == MapShape::InverseSquareScaled) {
                // preimages of O have x = 0: d y^2 = f(0)
                Rat y2 = c.f.coeff(0) / Rat(c.d);
                if (sign(y2) >= 0 && is_square(y2)) {
                    Rat y = sqrt_exact(y2);
                    out.push_back(CurvePoint::affine(Rat(0), y));
                    if (sign(y) != 0)
                        out.push_back(CurvePoint::affine(Rat(0), -y));
                }
            } else {  // InverseSquareShifted: x^2 = rho
                add_sqrt_preimages(c, sh.rho, [&](const Rat&) { return Rat(0); },
                                   out);
            }
            continue;
        }
        switch (sh.shape) {
            case MapShape::SquareScaled: {
                // X = kx x^2, Y = ky y
                add_sqrt_preimages(c, t.x / sh.kx,
                                   [&](const Rat&) { return t.y / sh.ky; }, out);
                break;
            }
            case MapShape::InverseSquareScaled: {
                // X = kx / x^2, Y = ky y / x^3
                if (sign(t.x) != 0) {
                    add_sqrt_preimages(
                        c, sh.kx / t.x,
                        [&](const Rat& xc) { return t.y * xc * xc * xc / sh.ky; },
                        out);
                } else {
                    // the image of the points at infinity is (0, +-ky*lead_root)
                    for (const auto& ip : infs) {
                        Rat yim = sh.ky * (ip.inf_sign >= 0 ? lead_root : -lead_root);
                        if (yim == t.y) out.push_back(ip);
                    }
                }
                break;
            }
            case MapShape::InverseSquareShifted: {
                // X = kx / (x^2 - rho), Y = ky y / (x^2 - rho)^2
                if (sign(t.x) != 0) {
                    Rat x2 = sh.rho + sh.kx / t.x;
                    add_sqrt_preimages(
                        c, x2,
                        [&](const Rat& xc) {
                            Rat s = xc * xc - sh.rho;
                            return t.y * s * s / sh.ky;
                        },
                        out);
                } else {
                    for (const auto& ip : infs) {
                        Rat yim = sh.ky * (ip.inf_sign >= 0 ? lead_root : -lead_root);
                        if (yim == t.y) out.push_back(ip);
                    }
                }
                break;
            }
            default: break;
        }
    }
    sort_unique(out);
    return out;
}

std::vector<CurvePoint> naive_curve_search(const HyperellipticModel& c,
                                           const Int& bound) {
    if (bound < 1)
        throw ParameterViolation("naive_curve_search: bound must be >= 1");
    const long kMaxChecks = 50'000'000;
    long checks = 0;
    std::vector<CurvePoint> out;
    Int emax = isqrt(bound);
    if (emax * emax < bound) emax += 1;
    for (Int den = 1; den <= emax; ++den) {
        for (Int m = -bound; m <= bound; ++m) {
            if (gcd(m, den) != 1) continue;
            if (++checks > kMaxChecks)
                throw BudgetExceeded("naive_curve_search: enumeration budget");
            Rat x = ratio(m, den);
            Rat y2 = c.f.eval(x) / Rat(c.d);
            if (sign(y2) < 0 || !is_square(y2)) continue;
            Rat y = sqrt_exact(y2);
            out.push_back(CurvePoint::affine(x, y));
            if (sign(y) != 0) out.push_back(CurvePoint::affine(x, -y));
        }
    }
    sort_unique(out);
    return out;
}

PointSetResult determine_points(
    const families::FamilyInstance& inst,
    const std::vector<descent2::RankCertificate>& factor_certificates,
    const Int& search_bound) {
    PointSetResult res;
    // find an elliptic factor certified to have rank 0
    for (size_t i = 0; i < inst.factors.size() && i < factor_certificates.size();
         ++i) {
        const auto& f = inst.factors[i];
        const auto& cert = factor_certificates[i];
        if (!std::holds_alternative<EllipticCurveQ>(f.model)) continue;
        if (cert.status != descent2::CertStatus::Exact || cert.exact_rank() != 0)
            continue;
        if (f.map.shape.shape == MapShape::Other ||
            f.map.shape.shape == MapShape::SquareTimesY)
            continue;
        const auto& e = std::get<EllipticCurveQ>(f.model);
        // rank 0: the Mordell-Weil group is exactly the torsion subgroup
        std::vector<ECPoint> mw = cert.torsion.points;
        res.points = pullback_points(inst.curve, f.map, mw);
        res.status = PointSetStatus::Exact;
        res.conditional_on_literature = cert.literature_flagged;
        std::ostringstream os;
        os << "factor '" << f.label << "' (" << e.str() << ") has rank 0 with "
           << cert.torsion.name() << " torsion (" << mw.size()
           << " points); the rational points are exactly the pullbacks";
        res.trace.push_back(os.str());
        if (cert.literature_flagged)
            res.trace.push_back("rank 0 upper bound is literature-tagged: " +
                                cert.literature_tag);
        break;
    }

    auto naive = naive_curve_search(inst.curve, search_bound);
    if (res.status == PointSetStatus::Exact) {
        for (const auto& p : res.points)
            if (!on_model(inst.curve, p))
                throw InconsistencyError("determine_points: pullback left the curve");
        for (const auto& p : naive) {
            if (std::find(res.points.begin(), res.points.end(), p) ==
                res.points.end())
                throw InconsistencyError(
                    "determine_points: naive search found a point outside the "
                    "exact set: " + p.str());
        }
        res.trace.push_back("naive search to " + search_bound.get_str() +
                            " found no point outside the set");
    } else {
        res.points = naive;
        res.trace.push_back(
            "no factor certifies rank 0; listing naive search results only");
    }
    return res;
}

}  // namespace points
}  // namespace biell
