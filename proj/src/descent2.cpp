#include "biell/descent2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace biell {
namespace descent2 {

namespace {

// squarefree part with sign
Int sqclass(const Int& n, const ntheory::Config& cfg) {
    return ntheory::squarefree_decompose(n, cfg).first;
}

enum class SqStatus { Square, NonSquare, Undecided };

// Square class of v on the whole residue class r mod p^k, when decidable:
// the unit part must be pinned mod p (odd p) or mod 8 (p = 2).
SqStatus square_status(const Int& v, const Int& p, int k) {
    if (v == 0) return SqStatus::Undecided;  // exact zeros handled separately
    int val = valuation(v, p);
    int need = (p == 2) ? 3 : 1;
    if (k - val < need) return SqStatus::Undecided;
    if (val % 2 != 0) return SqStatus::NonSquare;
    Int unit = v / pow_int(p, val);
    if (p == 2) return mod(unit, Int(8)) == 1 ? SqStatus::Square : SqStatus::NonSquare;
    return ntheory::jacobi(unit, p) == 1 ? SqStatus::Square : SqStatus::NonSquare;
}

Int eval_int(const Poly& f, const Int& x) {
    Rat v = f.eval(Rat(x));
    return v.get_num();
}

// Does some u in Z_p (or p Z_p when from_zero) make F(u) and G(u)
// simultaneously squares in Q_p (zero values allowed)?  Certified breadth
// first refinement of residue classes.
std::optional<LocalWitness> square_pair_zp(const Poly& F, const Poly& G,
                                           const Int& p, bool from_zero,
                                           bool inverted_tag) {
    Rat res = resultant(F, G.degree() >= 1 ? G : Poly::constant(1));
    int cap = 24;
    if (G.degree() >= 1 && sign(res) != 0) cap += valuation(res.get_num(), p);
    for (const Poly* h : {&F, &G}) {
        if (h->degree() >= 2) {
            Rat d = discriminant(*h);
            if (sign(d) != 0) cap += valuation(d.get_num(), p);
        }
    }

    struct Node {
        Int r;
        int k;
    };
    std::deque<Node> queue;
    if (from_zero) {
        queue.push_back({0, 1});
    } else {
        for (Int r = 0; r < p; ++r) queue.push_back({r, 1});
    }
    while (!queue.empty()) {
        Node n = queue.front();
        queue.pop_front();
        Int fv = eval_int(F, n.r), gv = eval_int(G, n.r);
        if (fv == 0 && ntheory::is_padic_square(Rat(gv), p)) {
            LocalWitness w{p, inverted_tag, n.r, n.k, Rat(0), true};
            return w;
        }
        if (gv == 0 && ntheory::is_padic_square(Rat(fv), p)) {
            LocalWitness w{p, inverted_tag, n.r, n.k, Rat(0), true};
            return w;
        }
        SqStatus sf = square_status(fv, p, n.k);
        SqStatus sg = square_status(gv, p, n.k);
        if (sf == SqStatus::NonSquare || sg == SqStatus::NonSquare) continue;
        if (sf == SqStatus::Square && sg == SqStatus::Square) {
            LocalWitness w{p, inverted_tag, n.r, n.k, Rat(0), false};
            return w;
        }
        if (n.k >= cap)
            throw PrecisionExceeded("descent: residue refinement exceeded its cap");
        Int pk = pow_int(p, n.k);
        for (Int t = 0; t < p; ++t) queue.push_back({n.r + t * pk, n.k + 1});
    }
    return std::nullopt;
}

// F(u) = sum f_{2i} u^{2i} of nominal even degree deg -> t^deg F(1/t).
Poly reverse_even(const Poly& F, int deg) { return F.reversed(deg); }

// Solvability over Q_p: u in Z_p directly, else u = 1/t with t in p Z_p.
std::optional<LocalWitness> square_pair_qp(const Poly& F, const Poly& G,
                                           int degF, int degG, const Int& p) {
    auto direct = square_pair_zp(F, G, p, false, false);
    if (direct) return direct;
    return square_pair_zp(reverse_even(F, degF), reverse_even(G, degG), p, true,
                          true);
}

// Real solvability of { F >= 0, G >= 0 } for even polynomials that are
// quadratics in t = u^2 with rational roots in the full-descent case, or a
// single quadratic-in-t quartic. Returns a rational sample t >= 0.
std::optional<Rat> real_pair_sample(const Poly& Ft, const Poly& Gt) {
    // Ft, Gt are polynomials in t of degree <= 2 here; feasibility of
    // {t >= 0 : Ft(t) >= 0 and Gt(t) >= 0} is decided on candidate points:
    // 0, rational roots, vertices, and a point beyond all roots.
    std::vector<Rat> cands{Rat(0)};
    for (const Poly* h : {&Ft, &Gt}) {
        if (h->degree() >= 1) {
            for (const Rat& r : rational_roots(*h))
                if (sign(r) >= 0) cands.push_back(r);
        }
        if (h->degree() == 2) {
            Rat vertex = -h->coeff(1) / (Rat(2) * h->coeff(2));
            if (sign(vertex) >= 0) cands.push_back(vertex);
        }
    }
    if (Ft.degree() == 2 && Gt.degree() == 2)
        throw InconsistencyError("real check: unsupported constraint shape");
    // a point beyond every root: 1 + sum |coeff ratios|
    Rat big(1);
    for (const Poly* h : {&Ft, &Gt}) {
        if (h->degree() < 1) continue;
        Rat lead = ::abs(h->lead());
        for (const auto& c : h->c) big += ::abs(c) / lead;
    }
    cands.push_back(big);
    for (const Rat& t : cands) {
        if (sign(Ft.eval(t)) >= 0 && sign(Gt.eval(t)) >= 0) return t;
    }
    return std::nullopt;
}

// even polynomial in u -> the same polynomial in t = u^2
Poly even_to_t(const Poly& F) {
    std::vector<Rat> c;
    for (int i = 0; i <= F.degree(); i += 2) c.push_back(F.coeff(i));
    return Poly(std::move(c));
}

struct PlaceList {
    std::vector<Int> odd_primes;
};

// Local solvability of the pair over R and over Q_p for the listed places.
// Returns witnesses, or the first failing place.
TorsorClassReport check_class(const Int& d1, const Int& d2, const Poly& F,
                              const Poly& G, int degF, int degG,
                              const PlaceList& places) {
    TorsorClassReport rep;
    rep.d1 = d1;
    rep.d2 = d2;
    auto sample = real_pair_sample(even_to_t(F), even_to_t(G));
    if (!sample) {
        rep.survives = false;
        rep.failed_place = 0;
        return rep;
    }
    LocalWitness rw;
    rw.place = 0;
    rw.real_sample = *sample;
    rep.witnesses.push_back(rw);
    std::vector<Int> ps{Int(2)};
    ps.insert(ps.end(), places.odd_primes.begin(), places.odd_primes.end());
    for (const Int& p : ps) {
        auto w = square_pair_qp(F, G, degF, degG, p);
        if (!w) {
            rep.survives = false;
            rep.failed_place = p;
            rep.witnesses.clear();
            return rep;
        }
        rep.witnesses.push_back(*w);
    }
    rep.survives = true;
    return rep;
}

// signed squarefree classes supported on the given primes, ordered by
// absolute value with + before -
std::vector<Int> signed_classes(const std::vector<Int>& primes) {
    std::vector<Int> divs = ntheory::squarefree_divisors(primes);
    std::vector<Int> out;
    for (const Int& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

bool class_in(const std::vector<std::pair<Int, Int>>& set, const Int& a,
              const Int& b) {
    return std::find(set.begin(), set.end(), std::make_pair(a, b)) != set.end();
}

void check_group_structure(const std::vector<std::pair<Int, Int>>& surv,
                           const ntheory::Config& cfg) {
    size_t n = surv.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw InconsistencyError("descent: surviving classes not a 2-group");
    for (const auto& [a1, b1] : surv)
        for (const auto& [a2, b2] : surv) {
            Int a = sqclass(a1 * a2, cfg), b = sqclass(b1 * b2, cfg);
            if (!class_in(surv, a, b))
                throw InconsistencyError("descent: surviving classes not closed "
                                         "under multiplication");
        }
}

int log2_size(size_t n) {
    int d = 0;
    while (n > 1) {
        n >>= 1;
        ++d;
    }
    return d;
}

}  // namespace

std::string method_name(DescentMethod m) {
    switch (m) {
        case DescentMethod::FullTwoDescent: return "full_two_descent";
        case DescentMethod::TwoIsogenyDescent: return "two_isogeny_descent";
        case DescentMethod::Literature: return "literature";
    }
    return "?";
}

std::pair<Poly, Poly> torsor_pair_full(const Int& d1, const Int& d2,
                                       const Int& alpha, const Int& beta) {
    Poly F({Rat(-d2 * alpha), Rat(0), Rat(d2 * d1)});
    Poly G({Rat(-d1 * d2 * beta), Rat(0), Rat(d1 * d2 * d1)});
    return {F, G};
}

Poly torsor_quartic(const Int& d, const Int& a, const Int& b) {
    return Poly({Rat(b * d), Rat(0), Rat(a * d * d), Rat(0), Rat(d * d * d)});
}

SelmerReport full_two_descent(const EllipticCurveQ& e, const ntheory::Config& cfg) {
    auto roots = integer_roots(e.rhs());
    if (roots.size() != 3)
        throw ParameterViolation(
            "full_two_descent: all three 2-torsion points must be rational");
    Int e1 = roots[0], e2 = roots[1], e3 = roots[2];
    Int alpha = e2 - e1, beta = e3 - e1, gamma = e3 - e2;

    std::vector<Int> support;
    for (const auto& [p, ex] : ntheory::factorize(2 * alpha * beta * gamma, cfg).factors) {
        (void)ex;
        support.push_back(p);
    }
    PlaceList places;
    for (const Int& p : support)
        if (p != 2) places.odd_primes.push_back(p);
    std::vector<Int> classes = signed_classes(support);

    SelmerReport rep;
    rep.method = DescentMethod::FullTwoDescent;
    for (const Int& d1 : classes) {
        for (const Int& d2 : classes) {
            auto [F, G] = torsor_pair_full(d1, d2, alpha, beta);
            TorsorClassReport cls = check_class(d1, d2, F, G, 2, 2, places);
            rep.classes.push_back(cls);
            if (cls.survives) rep.surviving.emplace_back(d1, d2);
        }
    }
    check_group_structure(rep.surviving, cfg);
    // images of O and the 2-torsion points always survive
    std::vector<std::pair<Int, Int>> images{
        {1, 1},
        {sqclass((e1 - e2) * (e1 - e3), cfg), sqclass(e1 - e2, cfg)},
        {sqclass(e2 - e1, cfg), sqclass((e2 - e1) * (e2 - e3), cfg)},
        {sqclass(e3 - e1, cfg), sqclass(e3 - e2, cfg)}};
    for (const auto& [a, b] : images)
        if (!class_in(rep.surviving, a, b))
            throw InconsistencyError("descent: a torsion image was rejected");

    int dim = log2_size(rep.surviving.size());
    rep.dimensions = {dim};
    rep.rank_upper = dim - 2;
    if (rep.rank_upper < 0)
        throw InconsistencyError("descent: negative rank bound");
    return rep;
}

namespace {

// one side of the isogeny descent: classes d with d w^2 = d^2 t^4 + a d t^2 + b
// everywhere locally solvable
std::pair<std::vector<TorsorClassReport>, std::vector<std::pair<Int, Int>>>
isogeny_side(const Int& a, const Int& b, const PlaceList& places,
             const ntheory::Config& cfg) {
    std::vector<Int> bsupport;
    for (const auto& [p, ex] : ntheory::factorize(2 * b, cfg).factors) {
        (void)ex;
        bsupport.push_back(p);
    }
    std::vector<TorsorClassReport> out;
    std::vector<std::pair<Int, Int>> surv;
    for (const Int& d : signed_classes(bsupport)) {
        Poly F = torsor_quartic(d, a, b);
        TorsorClassReport cls = check_class(d, Int(1), F, Poly::constant(1), 4, 0, places);
        out.push_back(cls);
        if (cls.survives) surv.emplace_back(d, 1);
    }
    return {out, surv};
}

}  // namespace

SelmerReport two_isogeny_descent(const EllipticCurveQ& e, const ntheory::Config& cfg) {
    if (e.c != 0 || e.b == 0)
        throw ParameterViolation(
            "two_isogeny_descent: model must be y^2 = x^3 + a x^2 + b x with b != 0");
    Int a = e.a, b = e.b;
    Int bp = a * a - 4 * b;  // dual curve: y^2 = x^3 - 2a x^2 + (a^2 - 4b) x
    if (bp == 0) throw SingularCurve("two_isogeny_descent: singular model");

    PlaceList places;
    for (const auto& [p, ex] : ntheory::factorize(2 * b * bp, cfg).factors) {
        (void)ex;
        if (p != 2) places.odd_primes.push_back(p);
    }

    SelmerReport rep;
    rep.method = DescentMethod::TwoIsogenyDescent;
    auto [cls1, surv1] = isogeny_side(a, b, places, cfg);
    auto [cls2, surv2] = isogeny_side(-2 * a, bp, places, cfg);
    rep.classes = std::move(cls1);
    rep.surviving = std::move(surv1);
    rep.classes_dual = std::move(cls2);
    rep.surviving_dual = std::move(surv2);

    check_group_structure(rep.surviving, cfg);
    check_group_structure(rep.surviving_dual, cfg);
    if (!class_in(rep.surviving, 1, 1) ||
        !class_in(rep.surviving, sqclass(b, cfg), 1))
        throw InconsistencyError("descent: a torsion image was rejected");
    if (!class_in(rep.surviving_dual, 1, 1) ||
        !class_in(rep.surviving_dual, sqclass(bp, cfg), 1))
        throw InconsistencyError("descent: a torsion image was rejected");

    int dim1 = log2_size(rep.surviving.size());
    int dim2 = log2_size(rep.surviving_dual.size());
    rep.dimensions = {dim1, dim2};
    rep.rank_upper = dim1 + dim2 - 2;
    if (rep.rank_upper < 0)
        throw InconsistencyError("descent: negative rank bound");
    return rep;
}

bool verify_witness(const Poly& F, const Poly& G, const Int& place,
                    const LocalWitness& w) {
    if (place == 0) {
        Poly Ft = even_to_t(F), Gt = even_to_t(G);
        return sign(w.real_sample) >= 0 && sign(Ft.eval(w.real_sample)) >= 0 &&
               sign(Gt.eval(w.real_sample)) >= 0;
    }
    const Poly Fb = w.inverted ? reverse_even(F, F.degree() + (F.degree() & 1))
                               : F;
    const Poly Gb = w.inverted ? reverse_even(G, G.degree() + (G.degree() & 1))
                               : G;
    Int fv = eval_int(Fb, w.residue), gv = eval_int(Gb, w.residue);
    if (w.exact_zero) {
        if (fv == 0) return ntheory::is_padic_square(Rat(gv), place);
        if (gv == 0) return ntheory::is_padic_square(Rat(fv), place);
        return false;
    }
    return square_status(fv, place, w.depth) == SqStatus::Square &&
           square_status(gv, place, w.depth) == SqStatus::Square;
}

int RankCertificate::exact_rank() const {
    if (status != CertStatus::Exact)
        throw InconsistencyError("exact_rank: certificate is not exact");
    return rank_lower;
}

RankCertificate rank_certificate(const EllipticCurveQ& e, const Int& search_height,
                                 double precision,
                                 std::optional<int> literature_hint,
                                 const std::string& literature_ref,
                                 const ntheory::Config& cfg) {
    RankCertificate cert;
    cert.curve = e;
    cert.search_height = search_height;
    cert.precision = precision;
    cert.torsion = torsion_subgroup(e, cfg);

    auto pts = search_points(e, search_height);
    cert.lower = rank_lower_bound(e, pts, precision);
    cert.rank_lower = cert.lower.rank;

    auto roots = integer_roots(e.rhs());
    if (roots.size() == 3) {
        SelmerReport full = full_two_descent(e, cfg);
        // shift the smallest root to the origin and run the isogeny route too
        Int r = roots[0];
        Int a2 = e.a + 3 * r;
        Int b2 = 3 * r * r + 2 * e.a * r + e.b;
        SelmerReport iso =
            two_isogeny_descent(curve_from_coeffs(a2, b2, Int(0)), cfg);
        if (iso.rank_upper < full.rank_upper) {
            cert.upper = iso;
            cert.upper_secondary = full;
        } else {
            cert.upper = full;
            cert.upper_secondary = iso;
        }
        cert.rank_upper = cert.upper->rank_upper;
    } else if (roots.size() == 1) {
        Int r = roots[0];
        Int a2 = e.a + 3 * r;
        Int b2 = 3 * r * r + 2 * e.a * r + e.b;
        cert.upper = two_isogeny_descent(curve_from_coeffs(a2, b2, Int(0)), cfg);
        cert.rank_upper = cert.upper->rank_upper;
    } else if (literature_hint) {
        SelmerReport lit;
        lit.method = DescentMethod::Literature;
        lit.rank_upper = *literature_hint;
        lit.literature_tag =
            literature_ref.empty() ? "user-supplied rank hint" : literature_ref;
        cert.upper = lit;
        cert.rank_upper = *literature_hint;
        cert.literature_flagged = true;
        cert.literature_tag = lit.literature_tag;
    }

    if (cert.rank_upper) {
        if (*cert.rank_upper < cert.rank_lower)
            throw InconsistencyError(
                "rank_certificate: descent bound below the searched lower bound");
        if (*cert.rank_upper == cert.rank_lower) cert.status = CertStatus::Exact;
    }
    // rigor bookkeeping: did any factored quantity rely on a probable prime
    for (const auto& [p, ex] : ntheory::factorize(e.disc(), cfg).factors) {
        (void)ex;
        if (ntheory::classify_prime(p) == ntheory::Primality::ProbablePrime)
            cert.probable_prime_used = true;
    }
    return cert;
}

}  // namespace descent2
}  // namespace biell
