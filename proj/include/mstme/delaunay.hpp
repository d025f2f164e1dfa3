#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mstme/point_set.hpp"

namespace mstme {

/// Tolerance on normalized orientation / incircle determinants. Inputs
/// closer to degeneracy than this may triangulate non-canonically.
inline constexpr double kPredicateTol = 1e-10;

/// Twice the signed area of (a, b, c); positive for counterclockwise.
inline double orient2d(const Point2D& a, const Point2D& b, const Point2D& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool collinear(const Point2D& a, const Point2D& b, const Point2D& c) {
    const double det = orient2d(a, b, c);
    const double scale = std::abs((b.x - a.x) * (c.y - a.y)) + std::abs((b.y - a.y) * (c.x - a.x));
    return scale == 0.0 || std::abs(det) <= kPredicateTol * scale;
}

/// Incircle determinant divided by the sum of its terms' magnitudes
/// (so the value is in [-1, 1] and the tolerance stays meaningful even
/// when the rows differ wildly in scale, as they do against the far
/// super-triangle vertices) and sign-corrected for triangle orientation:
/// positive means d is inside the circumcircle of (a, b, c).
inline double incircle_normalized(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d) {
    const double ax = a.x - d.x, ay = a.y - d.y;
    const double bx = b.x - d.x, by = b.y - d.y;
    const double cx = c.x - d.x, cy = c.y - d.y;
    const double aq = ax * ax + ay * ay;
    const double bq = bx * bx + by * by;
    const double cq = cx * cx + cy * cy;
    const double det = ax * (by * cq - bq * cy) - ay * (bx * cq - bq * cx) + aq * (bx * cy - by * cx);
    const double bound = std::abs(ax) * (std::abs(by * cq) + std::abs(bq * cy)) +
                         std::abs(ay) * (std::abs(bx * cq) + std::abs(bq * cx)) +
                         aq * (std::abs(bx * cy) + std::abs(by * cx));
    if (bound == 0.0) return 0.0;
    const double normalized = det / bound;
    const double orient = orient2d(a, b, c);
    if (orient > 0.0) return normalized;
    if (orient < 0.0) return -normalized;
    return 0.0;
}

inline bool strictly_inside_circumcircle(const Point2D& a, const Point2D& b, const Point2D& c, const Point2D& d) {
    return incircle_normalized(a, b, c, d) > kPredicateTol;
}

struct Triangulation {
    /// Vertex-index triples, each sorted ascending, list sorted; and the
    /// deduplicated canonical (u < v) edge set derived from them.
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::pair<int, int>> edges;
};

inline std::vector<std::pair<int, int>> triangulation_edges(const Triangulation& t) { return t.edges; }

/// Bowyer-Watson incremental triangulation. Points are inserted in index
/// order inside a super-triangle 1e6x the bounding-box diagonal away: far
/// enough that no realistic hull triangle's circumcircle reaches a super
/// vertex, which would otherwise leave holes along the hull. Cocircular
/// ties resolve deterministically but arbitrarily via the insertion order.
inline Triangulation delaunay_triangulate(const PointSet& ps) {
    const int n = static_cast<int>(ps.size());
    if (n < 3) throw std::invalid_argument("delaunay_triangulate: need at least 3 points");

    bool any_turn = false;
    for (int k = 2; k < n && !any_turn; ++k) any_turn = !collinear(ps[0], ps[1], ps[k]);
    if (!any_turn) throw DegenerateInput("degenerate: collinear input");

    double min_x = ps[0].x, max_x = ps[0].x, min_y = ps[0].y, max_y = ps[0].y;
    for (const Point2D& p : ps.points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double cx = 0.5 * (min_x + max_x);
    const double cy = 0.5 * (min_y + max_y);
    const double diag = std::sqrt((max_x - min_x) * (max_x - min_x) + (max_y - min_y) * (max_y - min_y));
    const double radius = 1e6 * diag;

    // Working vertex array: input points plus the three super vertices.
    std::vector<Point2D> pts(ps.points);
    const double root3_half = 0.86602540378443864676;
    pts.push_back({cx, cy + radius});
    pts.push_back({cx - radius * root3_half, cy - 0.5 * radius});
    pts.push_back({cx + radius * root3_half, cy - 0.5 * radius});

    struct Tri {
        int a, b, c;  // counterclockwise
    };
    std::vector<Tri> tris;
    tris.push_back({n, n + 1, n + 2});

    std::vector<std::size_t> bad;
    std::map<std::pair<int, int>, int> edge_uses;
    for (int p = 0; p < n; ++p) {
        bad.clear();
        for (std::size_t t = 0; t < tris.size(); ++t) {
            if (incircle_normalized(pts[tris[t].a], pts[tris[t].b], pts[tris[t].c], pts[p]) > kPredicateTol)
                bad.push_back(t);
        }
        if (bad.empty()) throw DegenerateInput("degenerate: coincident points");

        // Cavity boundary = edges used by exactly one bad triangle.
        edge_uses.clear();
        for (std::size_t t : bad) {
            const Tri& tri = tris[t];
            for (auto [u, v] : {std::pair{tri.a, tri.b}, std::pair{tri.b, tri.c}, std::pair{tri.c, tri.a}})
                ++edge_uses[{std::min(u, v), std::max(u, v)}];
        }
        for (auto it = bad.rbegin(); it != bad.rend(); ++it) tris.erase(tris.begin() + static_cast<long>(*it));
        for (const auto& [edge, uses] : edge_uses) {
            if (uses != 1) continue;
            Tri t{p, edge.first, edge.second};
            if (orient2d(pts[t.a], pts[t.b], pts[t.c]) < 0.0) std::swap(t.b, t.c);
            tris.push_back(t);
        }
    }

    Triangulation out;
    for (const Tri& t : tris) {
        if (t.a >= n || t.b >= n || t.c >= n) continue;
        std::array<int, 3> tri{t.a, t.b, t.c};
        std::sort(tri.begin(), tri.end());
        out.triangles.push_back(tri);
    }
    if (out.triangles.empty()) throw DegenerateInput("degenerate: collinear input");
    std::sort(out.triangles.begin(), out.triangles.end());

    for (const auto& tri : out.triangles) {
        out.edges.push_back({tri[0], tri[1]});
        out.edges.push_back({tri[0], tri[2]});
        out.edges.push_back({tri[1], tri[2]});
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

}  // namespace mstme
