#ifndef SPNULL_MIXED_VOLUME_HPP
#define SPNULL_MIXED_VOLUME_HPP

#include <spnull/core.hpp>
#include <spnull/detail/integer_ops.hpp>
#include <spnull/parallel.hpp>
#include <spnull/polytope.hpp>

#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace spnull {

/// Largest dimension accepted by the inclusion-exclusion evaluator.
inline constexpr std::size_t kMaxInclusionExclusionDim = 10;

/// Default number of random lifts tried by the subdivision oracle.
inline constexpr unsigned kDefaultOracleLifts = 32;

/**
 * Exactly n supports of dimension n: the argument list of MV_n, with any
 * repeated entries already expanded.
 */
class SupportTuple
{
  public:
    SupportTuple(std::size_t dim, std::vector<Support> entries) : dim_(dim), entries_(std::move(entries))
    {
        if (dim_ == 0)
            throw InvalidInput("invalid dimension 0");
        if (entries_.size() != dim_)
            throw InvalidInput("a mixed volume in dimension " + std::to_string(dim_) + " takes exactly " +
                               std::to_string(dim_) + " supports, got " + std::to_string(entries_.size()));
        for (const auto& e : entries_)
            if (e.dim() != dim_)
                throw InvalidInput("support of dimension " + std::to_string(e.dim()) +
                                   " in a tuple of dimension " + std::to_string(dim_));
    }

    std::size_t dim() const { return dim_; }
    const std::vector<Support>& entries() const { return entries_; }
    const Support& operator[](std::size_t i) const { return entries_[i]; }

  private:
    std::size_t dim_;
    std::vector<Support> entries_;
};

/// Appends r copies of `a` to `out` (the family A^(r)).
inline void append_repeated(std::vector<Support>& out, const Support& a, std::size_t r)
{
    for (std::size_t i = 0; i < r; ++i)
        out.push_back(a);
}

/**
 * MV_n by inclusion-exclusion over Minkowski sums,
 *
 *   MV(P_1..P_n) = sum_{S nonempty} (-1)^(n-|S|) Vol_n(sum_{i in S} P_i),
 *
 * normalized so that MV(A,...,A) = n! Vol_n(A). Sums are built incrementally,
 * one level of |S| at a time, so each level can be evaluated concurrently.
 */
inline Integer mixed_volume(const SupportTuple& t, const ComputeOptions& opts = {})
{
    const std::size_t n = t.dim();
    if (n > kMaxInclusionExclusionDim)
        throw LimitExceeded("inclusion-exclusion mixed volume refuses dimension " + std::to_string(n) + " > " +
                            std::to_string(kMaxInclusionExclusionDim) + "; use the subdivision oracle instead");
    for (const auto& s : t.entries())
        if (s.size() == 1)
            return Integer(0);

    const std::size_t full = std::size_t{1} << n;
    std::vector<std::optional<RationalPolytope>> sums(full);
    std::vector<Rational> vols(full);
    std::vector<std::vector<std::size_t>> levels(n + 1);
    for (std::size_t mask = 1; mask < full; ++mask)
        levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    for (std::size_t level = 1; level <= n; ++level) {
        const auto& masks = levels[level];
        parallel_for(masks.size(), opts.jobs, [&](std::size_t idx) {
            const std::size_t mask = masks[idx];
            const std::size_t top = std::bit_width(mask) - 1;
            const std::size_t rest = mask & ~(std::size_t{1} << top);
            RationalPolytope p = rest == 0 ? convex_hull(t[top]) : minkowski_sum(*sums[rest], *sums[std::size_t{1} << top]);
            vols[mask] = p.volume();
            sums[mask] = std::move(p);
        });
        // singletons stay alive; other sums are only needed one level up
        if (level > 2)
            for (std::size_t mask : levels[level - 1])
                sums[mask].reset();
    }

    Rational mv(0);
    for (std::size_t mask = 1; mask < full; ++mask) {
        const bool negative = (n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 1;
        if (negative)
            mv -= vols[mask];
        else
            mv += vols[mask];
    }
    if (mv.get_den() != 1 || mv < 0)
        throw InternalError("mixed volume of lattice polytopes is not a nonnegative integer: " + mv.get_str());
    return mv.get_num();
}

/// n! Vol_n(conv(A)), which equals MV_n(A, ..., A).
inline Integer normalized_volume(const Support& a)
{
    Rational v = convex_hull(a).volume() * factorial(static_cast<unsigned>(a.dim()));
    if (v.get_den() != 1)
        throw InternalError("normalized volume of a lattice polytope is not an integer");
    return v.get_num();
}

namespace detail {

/// Mixed-cell enumeration for one fixed lifting. Returns nullopt when the
/// lifting is detected not to induce a fine mixed subdivision.
template <class Int>
std::optional<Integer> mixed_cells_volume(const std::vector<std::vector<std::vector<Int>>>& pts,
                                          const std::vector<std::vector<Int>>& lifts)
{
    const std::size_t n = pts.size();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < pts[i].size(); ++a)
            for (std::size_t b = a + 1; b < pts[i].size(); ++b)
                pairs[i].emplace_back(a, b);

    std::vector<std::size_t> choice(n, 0);
    std::vector<std::vector<Int>> edges(n, std::vector<Int>(n));
    std::vector<Int> rhs(n);
    std::vector<Int> num(n);
    Integer total(0);

    while (true) {
        for (std::size_t i = 0; i < n; ++i) {
            auto [a, b] = pairs[i][choice[i]];
            for (std::size_t j = 0; j < n; ++j)
                edges[i][j] = pts[i][b][j] - pts[i][a][j];
            rhs[i] = lifts[i][a] - lifts[i][b];
        }
        const Int det = determinant(edges);
        if (det != 0) {
            // Cramer: the inner normal (alpha, 1) of the candidate cell is num / det
            for (std::size_t j = 0; j < n; ++j) {
                auto m = edges;
                for (std::size_t i = 0; i < n; ++i)
                    m[i][j] = rhs[i];
                num[j] = determinant(std::move(m));
            }
            const int dsign = int_sign(det);
            bool lower = true;
            bool tie = false;
            for (std::size_t i = 0; i < n && lower; ++i) {
                auto [a, b] = pairs[i][choice[i]];
                const Int base = dot(num, pts[i][a]) + lifts[i][a] * det;
                for (std::size_t c = 0; c < pts[i].size(); ++c) {
                    if (c == a || c == b)
                        continue;
                    const Int diff = dot(num, pts[i][c]) + lifts[i][c] * det - base;
                    const int s = int_sign(diff) * dsign;
                    if (s < 0) {
                        lower = false;
                        break;
                    }
                    if (s == 0)
                        tie = true;
                }
            }
            if (lower) {
                if (tie)
                    return std::nullopt;
                total += to_integer(int_abs(det));
            }
        }
        std::size_t i = 0;
        while (i < n && ++choice[i] == pairs[i].size()) {
            choice[i] = 0;
            ++i;
        }
        if (i == n)
            break;
    }
    return total;
}

template <class Int>
std::optional<Integer> run_mixed_cells(const SupportTuple& t, const std::vector<std::vector<std::int64_t>>& lifts)
{
    std::vector<std::vector<std::vector<Int>>> pts(t.dim());
    std::vector<std::vector<Int>> w(t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i) {
        for (const auto& p : t[i].points()) {
            std::vector<Int> q;
            for (std::int64_t c : p.coords())
                q.push_back(Int(static_cast<long>(c)));
            pts[i].push_back(std::move(q));
        }
        for (std::int64_t v : lifts[i])
            w[i].push_back(Int(static_cast<long>(v)));
    }
    return mixed_cells_volume<Int>(pts, w);
}

} // namespace detail

/**
 * Independent evaluation of MV_n through a random integer lifting: the sum
 * of |det| over the mixed cells of the induced mixed subdivision. Lifts are
 * drawn uniformly from [0, 2^16) by a generator seeded with `seed`; a lift
 * that produces ties on a lower cell is discarded and redrawn.
 */
inline Integer mixed_volume_oracle(const SupportTuple& t, std::uint64_t seed, unsigned max_lifts = kDefaultOracleLifts)
{
    const std::size_t n = t.dim();
    for (const auto& s : t.entries())
        if (s.size() == 1)
            return Integer(0);

    std::int64_t cmax = 0;
    for (const auto& s : t.entries())
        for (const auto& p : s.points())
            for (std::int64_t c : p.coords())
                cmax = std::max(cmax, c);
    // magnitude of the largest intermediate: n * C * (Cramer minor) + H * det
    const long double c = static_cast<long double>(cmax) + 1.0L;
    long double minor = 1.0L;
    for (std::size_t i = 1; i < n; ++i)
        minor *= static_cast<long double>(i) * 2.0L * c;
    const long double h = 65536.0L;
    const long double worst = static_cast<long double>(n) * (c * minor * h * static_cast<long double>(n) +
                                                             h * minor * 2.0L * c * static_cast<long double>(n));
    const bool machine = worst * 8.0L < std::ldexp(1.0L, 62);

    std::mt19937_64 rng(seed);
    for (unsigned attempt = 0; attempt < max_lifts; ++attempt) {
        std::vector<std::vector<std::int64_t>> lifts(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < t[i].size(); ++a)
                lifts[i].push_back(static_cast<std::int64_t>(rng() & 0xffffu));
        auto result = machine ? detail::run_mixed_cells<long long>(t, lifts)
                              : detail::run_mixed_cells<Integer>(t, lifts);
        if (result)
            return *result;
    }
    throw GenericityFailure("no generic lifting found in " + std::to_string(max_lifts) + " attempts");
}

} // namespace spnull

#endif // SPNULL_MIXED_VOLUME_HPP
