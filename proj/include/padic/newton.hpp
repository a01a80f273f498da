#ifndef PADIC_NEWTON_HPP
#define PADIC_NEWTON_HPP

#include <string>
#include <vector>

#include "padic/series.hpp"

namespace padic {

struct PolygonVertex {
    long index;      // >= 1
    long val;        // v_K units
    bool certified;  // false when a precision-bounded coefficient could push the hull lower
    bool operator==(const PolygonVertex& o) const { return index == o.index && val == o.val; }
};

struct Segment {
    PolygonVertex start;
    PolygonVertex end;
    Rat slope;  // exact rational, (end.val - start.val)/(end.index - start.index)
    long width() const { return end.index - start.index; }
};

/// Lower convex hull of the points (i, v_K(a_i)); collinear interior
/// points are not vertices, so slopes are strictly increasing.
struct NewtonPolygon {
    std::vector<PolygonVertex> vertices;
    std::vector<Rat> slopes;  // between consecutive vertices

    bool all_certified() const;
    std::vector<Segment> segments() const;
};

/// Polygon of an integral series; points past the first exact
/// valuation-0 coefficient are discarded.
NewtonPolygon newton_polygon(const TruncSeries1& s);

/// Maximal prefix of strictly negative slopes.
NewtonPolygon decreasing_part(const NewtonPolygon& np);

struct IterateCheck {
    bool ok;
    std::string mismatch;   // empty when ok
    NewtonPolygon polygon;  // polygon of f^{o n}
};

/// Does the decreasing part of the polygon of f^{o n} have exactly the
/// vertices (p^i, e(n-i)), i = 0..n?
IterateCheck verify_iterate_polygon(const TruncSeries1& f, long n);

struct NewRootData {
    Int count;  // roots of f^{o n} that are not roots of f^{o n-1}
    Rat slope;  // their polygon slope
};

/// Count and slope of the level-n roots, read off the verified polygon.
NewRootData new_root_data(const TruncSeries1& f, long n);

/// Pure-slope criterion: slope -a/b in lowest terms with b equal to the
/// segment width.  Sufficient for irreducibility of the associated
/// Weierstrass factor, not necessary.
bool segment_irreducible_certificate(const Segment& seg, const RingConfig& cfg);

/// Is the decreasing part the single segment (1,e) -> (p,0)?  Under
/// gcd(e, p^2-p) = 1 this is equivalent to all roots of all iterates
/// being simple.
bool simple_roots_criterion(const TruncSeries1& f);

}  // namespace padic

#endif
