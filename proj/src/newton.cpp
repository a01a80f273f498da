#include "padic/newton.hpp"

#include <algorithm>
#include <sstream>

namespace padic {

bool NewtonPolygon::all_certified() const {
    for (const auto& v : vertices)
        if (!v.certified) return false;
    return true;
}

std::vector<Segment> NewtonPolygon::segments() const {
    std::vector<Segment> segs;
    for (size_t k = 0; k + 1 < vertices.size(); ++k)
        segs.push_back(Segment{vertices[k], vertices[k + 1], slopes[k]});
    return segs;
}

namespace {

Rat make_slope(const PolygonVertex& a, const PolygonVertex& b) {
    Rat s(Int(b.val - a.val), Int(b.index - a.index));
    s.canonicalize();
    return s;
}

// cross product of (a->b) x (a->c); <= 0 means b is on or above the
// line a-c, so b is not a lower-hull vertex
long long cross(const PolygonVertex& a, const PolygonVertex& b, const PolygonVertex& c) {
    return static_cast<long long>(b.index - a.index) * (c.val - a.val) -
           static_cast<long long>(b.val - a.val) * (c.index - a.index);
}

// hull height at index i (between two vertices), as an exact rational
Rat hull_at(const PolygonVertex& a, const PolygonVertex& b, long i) {
    Rat t(Int(i - a.index), Int(b.index - a.index));
    return Rat(Int(a.val)) + t * Rat(Int(b.val - a.val));
}

}  // namespace

NewtonPolygon newton_polygon(const TruncSeries1& s) {
    if (!s.integral()) throw NonIntegralSeries("newton_polygon: series has coefficients outside O_K");
    const long full = s.config()->uk_prec();

    struct Uncertain {
        long index;
        long bound;  // true valuation >= bound
    };
    std::vector<PolygonVertex> pts;
    std::vector<Uncertain> unc;
    for (int i = 1; i <= s.degree(); ++i) {
        const KScalar& c = s.coeff(i);
        if (c.is_exact_zero()) continue;  // contributes no point
        long w = c.unit_part().is_zero() ? full : c.unit_part().stored_valuation();
        if (w >= c.abs_prec()) {
            unc.push_back({i, c.abs_prec()});
            continue;
        }
        pts.push_back({i, w, true});
        if (w == 0) break;  // nothing past the first valuation-0 point matters
    }
    NewtonPolygon np;
    if (pts.empty()) return np;

    // monotone chain lower hull
    std::vector<PolygonVertex>& hull = np.vertices;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    for (size_t k = 0; k + 1 < hull.size(); ++k) np.slopes.push_back(make_slope(hull[k], hull[k + 1]));

    // certification against precision-bounded coefficients
    for (const auto& u : unc) {
        if (u.index < hull.front().index) {
            // an undetermined leftmost coefficient could prepend vertices
            hull.front().certified = false;
            continue;
        }
        if (u.index > hull.back().index) {
            // threatens the last vertex only if the point could drop
            // below the extension of the final slope
            if (hull.size() >= 2 &&
                Rat(Int(u.bound)) < hull_at(hull[hull.size() - 2], hull.back(), u.index))
                hull.back().certified = false;
            continue;
        }
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            if (u.index < hull[k].index || u.index > hull[k + 1].index) continue;
            if (Rat(Int(u.bound)) < hull_at(hull[k], hull[k + 1], u.index)) {
                hull[k].certified = false;
                hull[k + 1].certified = false;
            }
        }
    }
    return np;
}

NewtonPolygon decreasing_part(const NewtonPolygon& np) {
    NewtonPolygon out;
    if (np.vertices.empty()) return out;
    out.vertices.push_back(np.vertices.front());
    for (size_t k = 0; k < np.slopes.size(); ++k) {
        if (np.slopes[k] >= 0) break;
        out.slopes.push_back(np.slopes[k]);
        out.vertices.push_back(np.vertices[k + 1]);
    }
    return out;
}

IterateCheck verify_iterate_polygon(const TruncSeries1& f, long n) {
    const RingConfig& cfg = *f.config();
    if (n < 1) throw Error("verify_iterate_polygon: need n >= 1");
    std::optional<int> wd = weierstrass_degree(f);
    if (!wd || Int(*wd) != cfg.p)
        throw HypothesisFailure("verify_iterate_polygon: Weierstrass degree of f is not p");
    {
        const KScalar& lin = f.coeff(1);
        if (lin.is_exact_zero()) throw HypothesisFailure("verify_iterate_polygon: f'(0) = 0");
        if (lin.is_zero_to_prec())
            throw PrecisionExhausted("verify_iterate_polygon: f'(0) is zero to working precision");
        if (lin.valuation() != cfg.e) throw HypothesisFailure("verify_iterate_polygon: v_K(f'(0)) != e");
    }
    Int pn;
    mpz_pow_ui(pn.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(n));
    if (pn > f.degree()) throw TruncationTooShallow("verify_iterate_polygon: need N >= p^n");

    IterateCheck res{true, "", {}};
    res.polygon = newton_polygon(iterate(f, n));
    NewtonPolygon dec = decreasing_part(res.polygon);
    for (const auto& v : dec.vertices)
        if (!v.certified)
            throw PrecisionExhausted("verify_iterate_polygon: polygon vertex not certified at this precision");

    std::vector<PolygonVertex> expect;
    Int pi(1);
    for (long i = 0; i <= n; ++i) {
        expect.push_back({pi.get_si(), cfg.e * (n - i), true});
        pi *= cfg.p;
    }
    bool ok = dec.vertices.size() == expect.size();
    if (ok)
        for (size_t k = 0; k < expect.size(); ++k)
            if (!(dec.vertices[k] == expect[k])) ok = false;
    if (!ok) {
        std::ostringstream os;
        os << "expected vertices";
        for (const auto& v : expect) os << " (" << v.index << "," << v.val << ")";
        os << " but got";
        for (const auto& v : dec.vertices) os << " (" << v.index << "," << v.val << ")";
        res.ok = false;
        res.mismatch = os.str();
    }
    return res;
}

NewRootData new_root_data(const TruncSeries1& f, long n) {
    IterateCheck chk = verify_iterate_polygon(f, n);
    if (!chk.ok) throw MismatchWithTheorem("new_root_data: " + chk.mismatch);
    NewtonPolygon dec = decreasing_part(chk.polygon);
    // last segment of the decreasing part carries the level-n roots
    const PolygonVertex& a = dec.vertices[dec.vertices.size() - 2];
    const PolygonVertex& b = dec.vertices.back();
    NewRootData out{Int(b.index - a.index), dec.slopes.back()};
    const RingConfig& cfg = *f.config();
    Int pn1;
    mpz_pow_ui(pn1.get_mpz_t(), cfg.p.get_mpz_t(), static_cast<unsigned long>(n - 1));
    if (out.count != pn1 * (cfg.p - 1))
        throw MismatchWithTheorem("new_root_data: segment width differs from p^n - p^{n-1}");
    return out;
}

bool segment_irreducible_certificate(const Segment& seg, const RingConfig&) {
    if (seg.slope >= 0) return false;
    return seg.slope.get_den() == seg.width();
}

bool simple_roots_criterion(const TruncSeries1& f) {
    const RingConfig& cfg = *f.config();
    if (!coprimality_hypothesis(cfg))
        throw HypothesisFailure("simple_roots_criterion: gcd(e, p^2 - p) != 1");
    NewtonPolygon dec = decreasing_part(newton_polygon(f));
    for (const auto& v : dec.vertices)
        if (!v.certified)
            throw PrecisionExhausted("simple_roots_criterion: polygon not certified at this precision");
    if (dec.vertices.size() != 2) return false;
    return dec.vertices[0] == PolygonVertex{1, cfg.e, true} &&
           dec.vertices[1].val == 0 && Int(dec.vertices[1].index) == cfg.p;
}

}  // namespace padic
