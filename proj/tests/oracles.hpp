// Independent reference computations and random generators used by the tests.
// Nothing here calls into the library's hull, volume or solver code.

#ifndef SPNULL_TESTS_ORACLES_HPP
#define SPNULL_TESTS_ORACLES_HPP

#include <spnull/core.hpp>
#include <spnull/polytope.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using spnull::ExponentVector;
using spnull::Integer;
using spnull::Rational;
using spnull::Support;

using P2 = std::array<std::int64_t, 2>;

inline Rational frac(std::int64_t num, std::int64_t den)
{
    Rational r(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    r.canonicalize();
    return r;
}

inline std::int64_t cross(const P2& o, const P2& a, const P2& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain; returns the strict hull counter-clockwise.
inline std::vector<P2> hull2(std::vector<P2> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<P2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

/// Twice the area of the hull (shoelace).
inline std::int64_t twice_area2(const std::vector<P2>& pts)
{
    auto h = hull2(pts);
    if (h.size() < 3)
        return 0;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return s < 0 ? -s : s;
}

inline std::vector<P2> to_p2(const Support& a)
{
    std::vector<P2> out;
    for (const auto& p : a.points())
        out.push_back({p[0], p[1]});
    return out;
}

inline std::vector<P2> sum2(const std::vector<P2>& a, const std::vector<P2>& b)
{
    std::vector<P2> out;
    for (const auto& p : a)
        for (const auto& q : b)
            out.push_back({p[0] + q[0], p[1] + q[1]});
    return out;
}

/// MV_2(A, B) = Vol(A+B) - Vol(A) - Vol(B), so MV_2(A, A) = 2 Vol(A).
inline std::int64_t mixed_volume2(const Support& a, const Support& b)
{
    auto pa = to_p2(a);
    auto pb = to_p2(b);
    return (twice_area2(sum2(pa, pb)) - twice_area2(pa) - twice_area2(pb)) / 2;
}

/// Lattice points of a full-dimensional lattice polygon by Pick's theorem.
inline std::int64_t pick_count(const std::vector<P2>& pts)
{
    auto h = hull2(pts);
    std::int64_t boundary = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& a = h[i];
        const auto& b = h[(i + 1) % h.size()];
        boundary += std::gcd(std::abs(a[0] - b[0]), std::abs(a[1] - b[1]));
    }
    const std::int64_t twice_a = twice_area2(pts);
    // A = I + B/2 - 1, total = I + B
    return (twice_a - boundary + 2) / 2 + boundary;
}

using P3 = std::array<std::int64_t, 3>;

/**
 * Volume of the hull of 3D points by brute force: every supporting plane
 * through three points is a facet plane; the volume is the sum of pyramids
 * from the centroid, with facet areas from a coordinate projection.
 */
inline Rational volume3(std::vector<P3> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t m = pts.size();
    std::vector<std::array<std::int64_t, 4>> planes;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                P3 u{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]};
                P3 v{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1], pts[k][2] - pts[i][2]};
                std::array<std::int64_t, 3> nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                                u[0] * v[1] - u[1] * v[0]};
                if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0)
                    continue;
                std::int64_t g = std::gcd(std::gcd(std::abs(nrm[0]), std::abs(nrm[1])), std::abs(nrm[2]));
                for (auto& c : nrm)
                    c /= g;
                const std::int64_t b = nrm[0] * pts[i][0] + nrm[1] * pts[i][1] + nrm[2] * pts[i][2];
                bool le = true, ge = true;
                for (const auto& p : pts) {
                    const std::int64_t s = nrm[0] * p[0] + nrm[1] * p[1] + nrm[2] * p[2];
                    le = le && s <= b;
                    ge = ge && s >= b;
                }
                if (le)
                    planes.push_back({nrm[0], nrm[1], nrm[2], b});
                else if (ge)
                    planes.push_back({-nrm[0], -nrm[1], -nrm[2], -b});
            }
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
    if (planes.empty())
        return Rational(0);
    // all points coplanar: both orientations of one plane appear
    if (planes.size() == 2 && planes[0][0] == -planes[1][0] && planes[0][1] == -planes[1][1] &&
        planes[0][2] == -planes[1][2])
        return Rational(0);

    Rational c[3] = {0, 0, 0};
    for (const auto& p : pts)
        for (int t = 0; t < 3; ++t)
            c[t] += Rational(static_cast<long>(p[t]));
    for (auto& x : c)
        x /= Rational(static_cast<long>(m));

    Rational vol(0);
    for (const auto& pl : planes) {
        int drop = pl[2] != 0 ? 2 : (pl[1] != 0 ? 1 : 0);
        std::vector<P2> proj;
        for (const auto& p : pts)
            if (pl[0] * p[0] + pl[1] * p[1] + pl[2] * p[2] == pl[3]) {
                P2 q;
                int t = 0;
                for (int a = 0; a < 3; ++a)
                    if (a != drop)
                        q[t++] = p[a];
                proj.push_back(q);
            }
        const Rational height = Rational(static_cast<long>(pl[3])) - Rational(static_cast<long>(pl[0])) * c[0] -
                                Rational(static_cast<long>(pl[1])) * c[1] - Rational(static_cast<long>(pl[2])) * c[2];
        const Rational area_over_norm = frac(twice_area2(proj), 2 * std::abs(pl[drop]));
        vol += height * area_over_norm / 3;
    }
    return vol;
}

inline std::vector<P3> to_p3(const Support& a)
{
    std::vector<P3> out;
    for (const auto& p : a.points())
        out.push_back({p[0], p[1], p[2]});
    return out;
}

/// True when A x = b has a rational solution (dense Gauss-Jordan over Q).
inline bool consistent(std::vector<std::vector<Rational>> a, std::vector<Rational> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            const Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return false;
    return true;
}

/// Hand-rolled generators for property tests, deterministic per seed.
class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    ExponentVector point(std::size_t n, std::int64_t cmax)
    {
        std::vector<std::int64_t> c(n);
        for (auto& x : c)
            x = uniform(0, cmax);
        return ExponentVector(std::move(c));
    }

    Support support(std::size_t n, std::size_t max_points, std::int64_t cmax)
    {
        const std::size_t k = static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_points)));
        std::vector<ExponentVector> pts;
        for (std::size_t i = 0; i < k; ++i)
            pts.push_back(point(n, cmax));
        return Support(n, std::move(pts));
    }

    /// A support whose hull is full-dimensional (retries until it is).
    Support full_support(std::size_t n, std::size_t max_points, std::int64_t cmax)
    {
        while (true) {
            Support s = support(n, std::max<std::size_t>(max_points, n + 1), cmax);
            if (spnull::convex_hull(s).full_dimensional())
                return s;
        }
    }

    Rational coefficient()
    {
        std::int64_t num = 0;
        while (num == 0)
            num = uniform(-5, 5);
        return frac(num, uniform(1, 3));
    }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

} // namespace oracle

#endif // SPNULL_TESTS_ORACLES_HPP
