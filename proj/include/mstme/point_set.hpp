#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mstme/rng.hpp"

namespace mstme {

/// Input could not be parsed; line() is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Geometry the algorithms are undefined on (e.g. fully collinear input).
class DegenerateInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Ordered 2-D point set; the identity of a point is its index.
struct PointSet {
    std::vector<Point2D> points;

    std::size_t size() const { return points.size(); }
    const Point2D& operator[](std::size_t i) const { return points[i]; }

    friend bool operator==(const PointSet&, const PointSet&) = default;
};

/// Undirected edge between point indices, stored with u < v.
struct WeightedEdge {
    int u = 0;
    int v = 0;
    double w = 0.0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

inline WeightedEdge make_edge(int u, int v, double w) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
    if (u > v) std::swap(u, v);
    return WeightedEdge{u, v, w};
}

inline double euclidean_distance(const Point2D& a, const Point2D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

// Locale-independent double parse; consumes one token, advances `s`.
inline bool parse_double(std::string_view& s, double& out) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    if (s.empty()) return false;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    if (res.ec != std::errc{}) return false;
    s.remove_prefix(static_cast<std::size_t>(res.ptr - s.data()));
    return true;
}

inline void format_double(std::string& out, double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    out.append(buf, res.ptr);
}

}  // namespace detail

/// Parses "x y" lines; '#' comments and blank lines are skipped.
/// Rejects non-finite coordinates, exact duplicate points and sets of
/// fewer than two points.
inline PointSet load_pointset(std::istream& in) {
    PointSet ps;
    std::vector<int> line_of_point;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        double x = 0.0, y = 0.0;
        std::string_view rest = line;
        if (!detail::parse_double(rest, x) || !detail::parse_double(rest, y))
            throw ParseError(line_no, "expected two decimal numbers, got \"" + std::string(line) + "\"");
        if (!detail::trim(rest).empty())
            throw ParseError(line_no, "trailing characters after coordinates");
        if (!std::isfinite(x) || !std::isfinite(y))
            throw ParseError(line_no, "non-finite coordinate");
        ps.points.push_back({x, y});
        line_of_point.push_back(line_no);
    }
    if (in.bad()) throw ParseError(line_no, "stream read failure");
    if (ps.size() < 2) throw ParseError(line_no, "need at least 2 points, got " + std::to_string(ps.size()));

    std::vector<std::size_t> ix(ps.size());
    std::iota(ix.begin(), ix.end(), std::size_t{0});
    std::sort(ix.begin(), ix.end(), [&](std::size_t a, std::size_t b) {
        const auto& p = ps.points[a];
        const auto& q = ps.points[b];
        return p.x != q.x ? p.x < q.x : (p.y != q.y ? p.y < q.y : a < b);
    });
    for (std::size_t k = 1; k < ix.size(); ++k) {
        if (ps.points[ix[k - 1]] == ps.points[ix[k]]) {
            const int dup = std::max(line_of_point[ix[k - 1]], line_of_point[ix[k]]);
            throw ParseError(dup, "duplicate point");
        }
    }
    return ps;
}

inline PointSet load_pointset_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open file: " + path.string());
    return load_pointset(in);
}

/// Writes one "x y" line per point, 17 significant digits (round-trip exact).
inline void serialize_pointset(const PointSet& ps, std::ostream& out) {
    std::string line;
    for (const Point2D& p : ps.points) {
        line.clear();
        detail::format_double(line, p.x);
        line.push_back(' ');
        detail::format_double(line, p.y);
        line.push_back('\n');
        out << line;
    }
}

/// All n(n-1)/2 edges of the complete graph, sorted by (w, u, v) ascending.
/// This ordering is the solvers' canonical scan order.
inline std::vector<WeightedEdge> pairwise_distances(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n < 2) throw std::invalid_argument("pairwise_distances: need at least 2 points");
    std::vector<WeightedEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v)
            edges.push_back({u, v, euclidean_distance(ps[u], ps[v])});
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    return edges;
}

/// Shortest pairwise distance (the noise unit for the perturbation protocol).
inline double min_pairwise_distance(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n < 2) throw std::invalid_argument("min_pairwise_distance: need at least 2 points");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            best = std::min(best, euclidean_distance(ps[u], ps[v]));
    return best;
}

enum class Silhouette { ring, ring_with_appendage };

inline const char* to_string(Silhouette s) {
    switch (s) {
        case Silhouette::ring: return "ring";
        case Silhouette::ring_with_appendage: return "ring_with_appendage";
    }
    throw std::invalid_argument("unknown silhouette");
}

inline Silhouette silhouette_from_string(std::string_view name) {
    if (name == "ring") return Silhouette::ring;
    if (name == "ring_with_appendage") return Silhouette::ring_with_appendage;
    throw std::invalid_argument("unknown shape: " + std::string(name));
}

namespace detail {

// Jittered angles, strictly increasing, so all ring points are distinct.
inline void sample_ring(std::vector<Point2D>& out, int count, DeterministicRng& rng) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int i = 0; i < count; ++i) {
        const double theta = two_pi * (static_cast<double>(i) + 0.5 * rng.uniform01()) / count;
        out.push_back({std::cos(theta), std::sin(theta)});
    }
}

// Thin strip protruding from the unit ring along +x; outline is traced
// top edge -> end cap -> bottom edge by a strictly increasing parameter.
inline void sample_appendage(std::vector<Point2D>& out, int count, DeterministicRng& rng) {
    constexpr double x0 = 0.95, x1 = 1.6, half_width = 0.06;
    constexpr double edge_len = x1 - x0;
    constexpr double cap_len = 2.0 * half_width;
    constexpr double perimeter = 2.0 * edge_len + cap_len;
    for (int i = 0; i < count; ++i) {
        const double s = perimeter * (static_cast<double>(i) + 0.5 * rng.uniform01()) / count;
        Point2D p;
        if (s < edge_len) {
            p = {x0 + s, half_width};
        } else if (s < edge_len + cap_len) {
            p = {x1, half_width - (s - edge_len)};
        } else {
            p = {x1 - (s - edge_len - cap_len), -half_width};
        }
        out.push_back(p);
    }
}

}  // namespace detail

/// Synthetic stand-in for object-silhouette samples; deterministic for a
/// fixed (shape, n, seed). The appendage strip is 0.12 wide against a
/// unit ring radius, thin enough to exercise unstable-degree regions.
inline PointSet generate_silhouette(Silhouette shape, int n, std::uint64_t seed) {
    if (n < 8) throw std::invalid_argument("generate_silhouette: need n >= 8");
    DeterministicRng rng(seed);
    PointSet ps;
    ps.points.reserve(static_cast<std::size_t>(n));
    switch (shape) {
        case Silhouette::ring:
            detail::sample_ring(ps.points, n, rng);
            break;
        case Silhouette::ring_with_appendage: {
            const int n_app = std::max(4, n / 5);
            detail::sample_ring(ps.points, n - n_app, rng);
            detail::sample_appendage(ps.points, n_app, rng);
            break;
        }
    }
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a + 1; b < ps.size(); ++b)
            if (ps.points[a] == ps.points[b])
                throw std::logic_error("generate_silhouette produced coincident points");
    return ps;
}

}  // namespace mstme
