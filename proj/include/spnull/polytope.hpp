#ifndef SPNULL_POLYTOPE_HPP
#define SPNULL_POLYTOPE_HPP

#include <spnull/core.hpp>
#include <spnull/detail/beneath_beyond.hpp>
#include <spnull/detail/integer_ops.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace spnull {

/**
 * A monomial exponent: a lattice point of the nonnegative orthant.
 */
class ExponentVector
{
  public:
    ExponentVector() = default;

    explicit ExponentVector(std::vector<std::int64_t> coords) : coords_(std::move(coords))
    {
        for (std::int64_t c : coords_)
            if (c < 0)
                throw InvalidInput("exponent vectors must have nonnegative coordinates");
    }

    ExponentVector(std::initializer_list<std::int64_t> coords)
        : ExponentVector(std::vector<std::int64_t>(coords))
    {
    }

    /// The origin of Z^n.
    static ExponentVector zero(std::size_t dim) { return ExponentVector(std::vector<std::int64_t>(dim, 0)); }

    /// The i-th canonical basis vector of Z^n.
    static ExponentVector unit(std::size_t dim, std::size_t i)
    {
        std::vector<std::int64_t> c(dim, 0);
        c.at(i) = 1;
        return ExponentVector(std::move(c));
    }

    std::size_t size() const { return coords_.size(); }
    std::int64_t operator[](std::size_t i) const { return coords_[i]; }
    std::span<const std::int64_t> coords() const { return coords_; }

    /// Coordinate sum, i.e. the total degree of the monomial.
    std::int64_t total_degree() const
    {
        std::int64_t s = 0;
        for (std::int64_t c : coords_)
            s += c;
        return s;
    }

    ExponentVector operator+(const ExponentVector& other) const
    {
        if (other.size() != size())
            throw InvalidInput("exponent vector dimension mismatch");
        std::vector<std::int64_t> c(coords_);
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += other.coords_[i];
        return ExponentVector(std::move(c));
    }

    ExponentVector scaled(std::int64_t m) const
    {
        std::vector<std::int64_t> c(coords_);
        for (auto& v : c)
            v *= m;
        return ExponentVector(std::move(c));
    }

    auto operator<=>(const ExponentVector&) const = default;
    bool operator==(const ExponentVector&) const = default;

  private:
    std::vector<std::int64_t> coords_;
};

/// Graded lexicographic order: total degree first, then lexicographic.
inline bool graded_lex_less(const ExponentVector& a, const ExponentVector& b)
{
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db)
        return da < db;
    return a < b;
}

inline std::string to_string(const ExponentVector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

/**
 * A finite nonempty set of exponent vectors in a fixed ambient dimension.
 * Points are kept sorted and deduplicated.
 */
class Support
{
  public:
    Support(std::size_t dim, std::vector<ExponentVector> points) : dim_(dim), points_(std::move(points))
    {
        if (dim_ == 0)
            throw InvalidInput("support dimension must be positive");
        if (points_.empty())
            throw InvalidInput("support must be nonempty");
        for (const auto& p : points_)
            if (p.size() != dim_)
                throw InvalidInput("exponent vector " + to_string(p) + " does not have length " +
                                   std::to_string(dim_));
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<ExponentVector>& points() const { return points_; }

    bool contains(const ExponentVector& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

    bool includes(const Support& other) const
    {
        return other.dim_ == dim_ &&
               std::includes(points_.begin(), points_.end(), other.points_.begin(), other.points_.end());
    }

    Support unite(const Support& other) const
    {
        if (other.dim_ != dim_)
            throw InvalidInput("cannot unite supports of different dimensions");
        std::vector<ExponentVector> pts(points_);
        pts.insert(pts.end(), other.points_.begin(), other.points_.end());
        return Support(dim_, std::move(pts));
    }

    Support translated(const ExponentVector& shift) const
    {
        std::vector<ExponentVector> pts;
        for (const auto& p : points_)
            pts.push_back(p + shift);
        return Support(dim_, std::move(pts));
    }

    /// Pointwise scaling; conv of the result is m * conv(A).
    Support scaled(std::int64_t m) const
    {
        if (m < 1)
            throw InvalidInput("support scaling factor must be positive");
        std::vector<ExponentVector> pts;
        for (const auto& p : points_)
            pts.push_back(p.scaled(m));
        return Support(dim_, std::move(pts));
    }

    bool operator==(const Support&) const = default;

  private:
    std::size_t dim_;
    std::vector<ExponentVector> points_;
};

inline std::string to_string(const Support& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? ", " : "") + to_string(s.points()[i]);
    return out + "}";
}

using RationalPoint = std::vector<Rational>;

inline RationalPoint to_rational_point(const ExponentVector& v)
{
    RationalPoint p;
    p.reserve(v.size());
    for (std::int64_t c : v.coords())
        p.emplace_back(static_cast<long>(c));
    return p;
}

inline std::string to_string(const RationalPoint& p)
{
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "," : "") + p[i].get_str();
    return out + ")";
}

inline bool lex_less(const RationalPoint& a, const RationalPoint& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

class RationalPolytope;
RationalPolytope convex_hull(std::vector<RationalPoint> points, std::size_t dim);

/**
 * Convex polytope in V-representation with exact rational vertices.
 *
 * Instances only come out of convex_hull(), so the vertex list always holds
 * exactly the extreme points, sorted lexicographically. The facet description
 * used for membership tests is kept alongside but is not part of the value.
 */
class RationalPolytope
{
  public:
    std::size_t dim() const { return dim_; }
    std::size_t affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == dim_; }
    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    const Rational& volume() const { return volume_; }

    bool contains(const RationalPoint& x) const
    {
        if (x.size() != dim_)
            throw InvalidInput("point dimension mismatch");
        for (const auto& e : equalities_)
            if (cmp(eval(e.normal, x), e.offset) != 0)
                return false;
        for (const auto& h : inequalities_)
            if (cmp(eval(h.normal, x), h.offset) > 0)
                return false;
        return true;
    }

    bool operator==(const RationalPolytope& other) const
    {
        return dim_ == other.dim_ && vertices_ == other.vertices_;
    }

  private:
    struct Halfspace
    {
        std::vector<Integer> normal;
        Rational offset;
    };

    static Rational eval(const std::vector<Integer>& normal, const RationalPoint& x)
    {
        Rational s(0);
        for (std::size_t i = 0; i < normal.size(); ++i)
            if (normal[i] != 0)
                s += normal[i] * x[i];
        return s;
    }

    friend RationalPolytope convex_hull(std::vector<RationalPoint> points, std::size_t dim);

    std::size_t dim_ = 0;
    std::size_t affine_dim_ = 0;
    std::vector<RationalPoint> vertices_;
    Rational volume_{0};
    std::vector<Halfspace> inequalities_; // normal . x <= offset
    std::vector<Halfspace> equalities_;   // normal . x == offset
};

inline std::string to_string(const RationalPolytope& p)
{
    std::string out = "conv{";
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        out += (i ? ", " : "") + to_string(p.vertices()[i]);
    return out + "}";
}

namespace detail {

struct AffineFrame
{
    std::vector<std::size_t> chosen;     // affinely independent point indices, chosen[0] is the base
    std::vector<std::size_t> pivots;     // coordinates on which projection is injective
    std::vector<std::vector<Rational>> rows; // direction basis in echelon form
};

inline AffineFrame affine_frame(const std::vector<std::vector<Integer>>& pts)
{
    AffineFrame fr;
    fr.chosen.push_back(0);
    const std::size_t n = pts[0].size();
    for (std::size_t i = 1; i < pts.size() && fr.rows.size() < n; ++i) {
        std::vector<Rational> d(n);
        for (std::size_t j = 0; j < n; ++j)
            d[j] = pts[i][j] - pts[0][j];
        for (std::size_t r = 0; r < fr.rows.size(); ++r) {
            const std::size_t pc = fr.pivots[r];
            if (d[pc] == 0)
                continue;
            Rational f = d[pc] / fr.rows[r][pc];
            for (std::size_t j = 0; j < n; ++j)
                d[j] -= f * fr.rows[r][j];
        }
        std::size_t pc = 0;
        while (pc < n && d[pc] == 0)
            ++pc;
        if (pc == n)
            continue;
        fr.chosen.push_back(i);
        fr.pivots.push_back(pc);
        fr.rows.push_back(std::move(d));
    }
    return fr;
}

/// Integer basis of the orthogonal complement of the span of `rows`.
inline std::vector<std::vector<Integer>> orthogonal_complement(std::vector<std::vector<Rational>> rows, std::size_t n)
{
    // reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[r], rows[p]);
        Rational inv = 1 / rows[r][c];
        for (auto& v : rows[r])
            v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<std::vector<Integer>> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
            continue;
        std::vector<Rational> w(n, Rational(0));
        w[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            w[pivots[i]] = -rows[i][f];
        Integer l(1);
        for (const auto& v : w)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        std::vector<Integer> wi(n);
        Integer g(0);
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = w[j] * l;
            wi[j] = s.get_num();
            g = int_gcd(g, int_abs(wi[j]));
        }
        for (auto& v : wi)
            v /= g;
        out.push_back(std::move(wi));
    }
    return out;
}

/// True when the machine-integer kernel cannot overflow on these points.
inline bool fits_machine_kernel(const std::vector<std::vector<Integer>>& pts, std::size_t k)
{
    Integer cmax(0);
    for (const auto& p : pts)
        for (const auto& c : p)
            if (abs(c) > cmax)
                cmax = abs(c);
    if (!cmax.fits_slong_p())
        return false;
    const long double c = static_cast<long double>(cmax.get_si()) + 1.0L;
    long double normal_bound = 1.0L;
    for (std::size_t i = 1; i < k; ++i)
        normal_bound *= static_cast<long double>(i) * 2.0L * c;
    const long double worst = normal_bound * c * static_cast<long double>((k + 2) * k) * 4.0L;
    return worst < std::ldexp(1.0L, 62);
}

template <class Int>
HullBoundary<Int> run_beneath_beyond(const std::vector<std::vector<Integer>>& proj, const std::vector<std::size_t>& initial)
{
    std::vector<std::vector<Int>> pts;
    pts.reserve(proj.size());
    for (const auto& p : proj) {
        std::vector<Int> q;
        q.reserve(p.size());
        for (const auto& c : p)
            q.push_back(from_integer<Int>(c));
        pts.push_back(std::move(q));
    }
    return BeneathBeyond<Int>(pts, initial).result();
}

template <class Int>
std::vector<Integer> to_integer_vector(const std::vector<Int>& v)
{
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& c : v)
        out.push_back(to_integer(c));
    return out;
}

} // namespace detail

/**
 * Convex hull of a finite rational point set in Q^dim.
 *
 * Handles lower-dimensional inputs by projecting onto coordinates that are
 * injective on the affine hull; the volume is the dim-dimensional one and is
 * therefore zero unless the hull is full-dimensional.
 */
inline RationalPolytope convex_hull(std::vector<RationalPoint> points, std::size_t dim)
{
    if (dim == 0)
        throw InvalidInput("invalid dimension 0");
    if (points.empty())
        throw InvalidInput("convex hull of an empty point set");
    for (const auto& p : points)
        if (p.size() != dim)
            throw InvalidInput("point " + to_string(p) + " does not have dimension " + std::to_string(dim));
    std::sort(points.begin(), points.end(), lex_less);
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // clear denominators: the hull of L*P is L times the hull of P
    Integer scale(1);
    for (const auto& p : points)
        for (const auto& c : p)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.get_den_mpz_t());
    std::vector<std::vector<Integer>> ipts(points.size(), std::vector<Integer>(dim));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Rational s = points[i][j] * scale;
            ipts[i][j] = s.get_num();
        }

    RationalPolytope out;
    out.dim_ = dim;
    const detail::AffineFrame frame = detail::affine_frame(ipts);
    const std::size_t k = frame.rows.size();
    out.affine_dim_ = k;

    for (auto& w : detail::orthogonal_complement(frame.rows, dim)) {
        Rational off(0);
        for (std::size_t j = 0; j < dim; ++j)
            off += w[j] * points[0][j];
        out.equalities_.push_back({std::move(w), off});
    }

    auto lift_normal = [&](const std::vector<Integer>& projected) {
        std::vector<Integer> full(dim, Integer(0));
        for (std::size_t i = 0; i < k; ++i)
            full[frame.pivots[i]] = projected[i];
        return full;
    };

    std::vector<std::size_t> extreme;
    if (k == 0) {
        extreme.push_back(0);
    }
    else if (k == 1) {
        const std::size_t c = frame.pivots[0];
        std::size_t lo = 0;
        std::size_t hi = 0;
        for (std::size_t i = 1; i < ipts.size(); ++i) {
            if (ipts[i][c] < ipts[lo][c])
                lo = i;
            if (ipts[i][c] > ipts[hi][c])
                hi = i;
        }
        extreme = {lo, hi};
        std::vector<Integer> up(dim, Integer(0));
        std::vector<Integer> down(dim, Integer(0));
        up[c] = 1;
        down[c] = -1;
        out.inequalities_.push_back({std::move(up), points[hi][c]});
        out.inequalities_.push_back({std::move(down), Rational(-points[lo][c])});
        if (dim == 1)
            out.volume_ = points[hi][0] - points[lo][0];
    }
    else {
        std::vector<std::vector<Integer>> proj(ipts.size(), std::vector<Integer>(k));
        for (std::size_t i = 0; i < ipts.size(); ++i)
            for (std::size_t j = 0; j < k; ++j)
                proj[i][j] = ipts[i][frame.pivots[j]];

        std::vector<std::vector<std::size_t>> simplices;
        auto absorb = [&](const auto& boundary) {
            extreme = boundary.extreme;
            simplices = boundary.simplices;
            for (const auto& plane : boundary.planes) {
                Rational off(detail::to_integer(plane.offset));
                off /= scale;
                out.inequalities_.push_back({lift_normal(detail::to_integer_vector(plane.normal)), off});
            }
        };
        if (detail::fits_machine_kernel(proj, k))
            absorb(detail::run_beneath_beyond<long long>(proj, frame.chosen));
        else
            absorb(detail::run_beneath_beyond<Integer>(proj, frame.chosen));

        if (k == dim) {
            // fan from the lexicographically smallest vertex over the boundary simplices
            const std::size_t apex = *std::min_element(extreme.begin(), extreme.end());
            Integer twice(0);
            for (const auto& s : simplices) {
                if (std::find(s.begin(), s.end(), apex) != s.end())
                    continue;
                std::vector<std::vector<Integer>> m(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        m[i][j] = proj[s[i]][j] - proj[apex][j];
                twice += abs(detail::determinant(std::move(m)));
            }
            Integer denom = factorial(static_cast<unsigned>(dim)) * ipow(scale, dim);
            out.volume_ = Rational(twice, denom);
            out.volume_.canonicalize();
        }
    }

    for (std::size_t i : extreme)
        out.vertices_.push_back(points[i]);
    std::sort(out.vertices_.begin(), out.vertices_.end(), lex_less);
    out.vertices_.erase(std::unique(out.vertices_.begin(), out.vertices_.end()), out.vertices_.end());
    return out;
}

inline RationalPolytope convex_hull(const Support& s)
{
    std::vector<RationalPoint> pts;
    pts.reserve(s.size());
    for (const auto& p : s.points())
        pts.push_back(to_rational_point(p));
    return convex_hull(std::move(pts), s.dim());
}

/// The vertex set {0, e_1, ..., e_n} of the standard unit simplex.
inline Support standard_simplex(std::size_t n)
{
    if (n == 0)
        throw InvalidInput("invalid dimension 0 for the standard simplex");
    std::vector<ExponentVector> pts{ExponentVector::zero(n)};
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(ExponentVector::unit(n, i));
    return Support(n, std::move(pts));
}

/// {0} x A: embeds A at height zero of a new leading coordinate.
inline Support lift(const Support& a)
{
    std::vector<ExponentVector> pts;
    pts.reserve(a.size());
    for (const auto& p : a.points()) {
        std::vector<std::int64_t> c{0};
        c.insert(c.end(), p.coords().begin(), p.coords().end());
        pts.emplace_back(std::move(c));
    }
    return Support(a.dim() + 1, std::move(pts));
}

inline RationalPolytope minkowski_sum(const RationalPolytope& p, const RationalPolytope& q)
{
    if (p.dim() != q.dim())
        throw InvalidInput("Minkowski sum of polytopes of different dimensions");
    std::vector<RationalPoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& u : p.vertices())
        for (const auto& v : q.vertices()) {
            RationalPoint w(u.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = u[i] + v[i];
            sums.push_back(std::move(w));
        }
    return convex_hull(std::move(sums), p.dim());
}

inline RationalPolytope dilate(const RationalPolytope& p, std::int64_t m)
{
    if (m < 1)
        throw InvalidInput("dilation factor must be a positive integer");
    std::vector<RationalPoint> pts = p.vertices();
    for (auto& v : pts)
        for (auto& c : v)
            c *= static_cast<long>(m);
    return convex_hull(std::move(pts), p.dim());
}

inline RationalPolytope dilate(const Support& a, std::int64_t m)
{
    return dilate(convex_hull(a), m);
}

inline Rational volume(const RationalPolytope& p) { return p.volume(); }

/// Maximal total degree over the support.
inline std::int64_t degree(const Support& a)
{
    std::int64_t d = 0;
    for (const auto& p : a.points())
        d = std::max(d, p.total_degree());
    return d;
}

/**
 * All integer points of a polytope in the nonnegative orthant, sorted
 * lexicographically: bounding-box scan filtered by the facet inequalities.
 */
inline std::vector<ExponentVector> lattice_points(const RationalPolytope& p)
{
    const std::size_t n = p.dim();
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational mn = p.vertices()[0][j];
        Rational mx = mn;
        for (const auto& v : p.vertices()) {
            if (v[j] < 0)
                throw InvalidInput("lattice_points requires a polytope in the nonnegative orthant, vertex " +
                                   to_string(v));
            if (v[j] < mn)
                mn = v[j];
            if (v[j] > mx)
                mx = v[j];
        }
        Integer c, f;
        mpz_cdiv_q(c.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_fdiv_q(f.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
        lo[j] = c.get_si();
        hi[j] = f.get_si();
    }
    std::vector<ExponentVector> out;
    for (std::size_t j = 0; j < n; ++j)
        if (lo[j] > hi[j])
            return out;
    std::vector<std::int64_t> cur(lo);
    RationalPoint x(n);
    while (true) {
        for (std::size_t j = 0; j < n; ++j)
            x[j] = static_cast<long>(cur[j]);
        if (p.contains(x))
            out.emplace_back(cur);
        std::size_t j = n;
        while (j > 0) {
            --j;
            if (cur[j] < hi[j]) {
                ++cur[j];
                break;
            }
            cur[j] = lo[j];
            if (j == 0)
                return out;
        }
    }
}

} // namespace spnull

#endif // SPNULL_POLYTOPE_HPP
