#ifndef SPNULL_BOUNDS_HPP
#define SPNULL_BOUNDS_HPP

#include <spnull/core.hpp>
#include <spnull/mixed_volume.hpp>
#include <spnull/parallel.hpp>
#include <spnull/polytope.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spnull {

/// Largest number of subsets a minimization over index subsets may visit.
inline constexpr unsigned long kMaxSubsetEnumeration = 1000000;

/**
 * Supports A_1..A_s of a polynomial system in n variables together with the
 * degrees d_i. Degrees default to the support degree; an explicit override may
 * raise a degree but never lower it below the support's.
 */
class SystemSpec
{
  public:
    SystemSpec(std::size_t dim, std::vector<Support> supports, std::vector<std::int64_t> degrees = {})
        : dim_(dim), supports_(std::move(supports)), degrees_(std::move(degrees))
    {
        if (dim_ == 0)
            throw InvalidInput("invalid dimension 0");
        if (supports_.empty())
            throw InvalidInput("a system needs at least one support");
        for (const auto& a : supports_)
            if (a.dim() != dim_)
                throw InvalidInput("support of dimension " + std::to_string(a.dim()) + " in a system of dimension " +
                                   std::to_string(dim_));
        if (degrees_.empty()) {
            for (const auto& a : supports_)
                degrees_.push_back(degree(a));
        }
        else {
            if (degrees_.size() != supports_.size())
                throw InvalidInput("expected " + std::to_string(supports_.size()) + " degrees, got " +
                                   std::to_string(degrees_.size()));
            for (std::size_t i = 0; i < degrees_.size(); ++i)
                if (degrees_[i] < degree(supports_[i]))
                    throw InvalidInput("degree override " + std::to_string(degrees_[i]) + " for polynomial " +
                                       std::to_string(i + 1) + " is below its support degree " +
                                       std::to_string(degree(supports_[i])));
        }
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return supports_.size(); }
    const std::vector<Support>& supports() const { return supports_; }
    const std::vector<std::int64_t>& degrees() const { return degrees_; }
    std::int64_t max_degree() const { return *std::max_element(degrees_.begin(), degrees_.end()); }

    Support union_support() const
    {
        Support u = supports_[0];
        for (std::size_t i = 1; i < supports_.size(); ++i)
            u = u.unite(supports_[i]);
        return u;
    }

  private:
    std::size_t dim_;
    std::vector<Support> supports_;
    std::vector<std::int64_t> degrees_;
};

// ---------------------------------------------------------------- unmixed

/// Noether exponent bound for any system with supports inside A: n! Vol_n(A u Delta_n).
inline Integer unmixed_noether_bound(const Support& a)
{
    return normalized_volume(a.unite(standard_simplex(a.dim())));
}

struct UnmixedNssBound
{
    Integer degree_bound;      // caps deg(g_i f_i)
    Integer newton_multiplier; // Newton polytope of g_i lies in multiplier * newton_base
    RationalPolytope newton_base; // conv(A u Delta_n)
};

inline UnmixedNssBound unmixed_nss_bound(const Support& a, std::int64_t d)
{
    if (d < degree(a))
        throw InvalidInput("degree " + std::to_string(d) + " is below the support degree " + std::to_string(degree(a)));
    Support base = a.unite(standard_simplex(a.dim()));
    Integer nv = normalized_volume(base);
    return {Integer(static_cast<long>(d)) * nv, nv - 1, convex_hull(base)};
}

// ---------------------------------------------------------------- mixed NSS

struct MixedNssBound
{
    std::int64_t d = 0;
    std::vector<std::int64_t> d_j;
    std::vector<std::optional<std::int64_t>> delta_j; // undefined when s = 1
    Integer M;
    std::vector<Integer> M_j;
    Integer N;
    bool argmin_is_dM = true;
    std::size_t argmin_j = 0; // 1-based, meaningful when !argmin_is_dM
};

namespace detail {

inline Support with_simplex(const Support& a) { return a.unite(standard_simplex(a.dim())); }

inline std::vector<std::int64_t> delta_values(const std::vector<std::int64_t>& d, std::size_t j)
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (i != j)
            out.push_back(d[i]);
    return out;
}

/// Lexicographic k-subsets of {0..s-1}, in order.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t s, std::size_t k)
{
    if (binomial(s, k) > kMaxSubsetEnumeration)
        throw LimitExceeded("C(" + std::to_string(s) + "," + std::to_string(k) + ") subsets exceed the enumeration cap of " +
                            std::to_string(kMaxSubsetEnumeration));
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == s - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/// A_{J,i} = A_{j_i} united with every A_k, k not in J; degrees likewise maxed.
inline SystemSpec subset_union_system(const SystemSpec& spec, const std::vector<std::size_t>& J)
{
    std::vector<char> in_j(spec.size(), 0);
    for (std::size_t j : J)
        in_j[j] = 1;
    std::optional<Support> rest;
    std::int64_t rest_degree = 0;
    for (std::size_t k = 0; k < spec.size(); ++k) {
        if (in_j[k])
            continue;
        rest = rest ? rest->unite(spec.supports()[k]) : spec.supports()[k];
        rest_degree = std::max(rest_degree, spec.degrees()[k]);
    }
    std::vector<Support> supports;
    std::vector<std::int64_t> degrees;
    for (std::size_t j : J) {
        supports.push_back(rest ? spec.supports()[j].unite(*rest) : spec.supports()[j]);
        degrees.push_back(std::max(spec.degrees()[j], rest_degree));
    }
    return SystemSpec(spec.dim(), std::move(supports), std::move(degrees));
}

inline std::vector<std::size_t> one_based(const std::vector<std::size_t>& v)
{
    std::vector<std::size_t> out(v);
    for (auto& x : out)
        ++x;
    return out;
}

} // namespace detail

/**
 * N(A_1..A_s; n) = min{ d M ; d_j delta_j M_j } for 1 <= s <= n+1, with
 *   M   = MV_{n+1}(~A_1 u D_{n+1}, ..., ~A_s u D_{n+1}, D_{n+1}^(n+1-s))
 *   M_j = MV_n(A_i u D_n for i != j, D_n^(n+1-s)).
 * For s = 1 the per-polynomial candidates are undefined and N = d M.
 * Ties go to d M, then to the smallest j.
 */
inline MixedNssBound mixed_nss_bound(const SystemSpec& spec, const ComputeOptions& opts = {})
{
    const std::size_t n = spec.dim();
    const std::size_t s = spec.size();
    if (s > n + 1)
        throw InvalidInput("mixed_nss_bound takes at most n+1 = " + std::to_string(n + 1) + " polynomials, got " +
                           std::to_string(s) + "; use mixed_nss_bound_many");
    MixedNssBound r;
    r.d = spec.max_degree();
    r.d_j = spec.degrees();

    const Support big_simplex = standard_simplex(n + 1);
    const Support simplex = standard_simplex(n);
    std::vector<Support> lifted;
    for (const auto& a : spec.supports())
        lifted.push_back(lift(a).unite(big_simplex));
    append_repeated(lifted, big_simplex, n + 1 - s);

    std::vector<SupportTuple> tuples{SupportTuple(n + 1, std::move(lifted))};
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Support> e;
        for (std::size_t i = 0; i < s; ++i)
            if (i != j)
                e.push_back(detail::with_simplex(spec.supports()[i]));
        append_repeated(e, simplex, n + 1 - s);
        tuples.emplace_back(n, std::move(e));
    }
    std::vector<Integer> mv(tuples.size());
    parallel_for(tuples.size(), opts.jobs, [&](std::size_t i) { mv[i] = mixed_volume(tuples[i]); });
    r.M = mv[0];
    r.M_j.assign(mv.begin() + 1, mv.end());

    r.N = Integer(static_cast<long>(r.d)) * r.M;
    for (std::size_t j = 0; j < s; ++j) {
        auto others = detail::delta_values(spec.degrees(), j);
        if (others.empty()) {
            r.delta_j.push_back(std::nullopt);
            continue;
        }
        const std::int64_t delta = *std::max_element(others.begin(), others.end());
        r.delta_j.push_back(delta);
        Integer candidate = Integer(static_cast<long>(r.d_j[j])) * Integer(static_cast<long>(delta)) * r.M_j[j];
        if (candidate < r.N) {
            r.N = candidate;
            r.argmin_is_dM = false;
            r.argmin_j = j + 1;
        }
    }
    return r;
}

struct ManyNssBound
{
    Integer N;                     // caps deg(g_i), not deg(g_i f_i)
    std::vector<std::size_t> subset; // 1-based, first minimizer in lexicographic order
    MixedNssBound at_subset;       // evaluation on the union supports of `subset`
};

/// Bound for s > n+1: minimum of N(A_{J,1}..A_{J,n+1}; n) over (n+1)-subsets J.
inline ManyNssBound mixed_nss_bound_many(const SystemSpec& spec, const ComputeOptions& opts = {})
{
    const std::size_t n = spec.dim();
    if (spec.size() <= n + 1)
        throw InvalidInput("mixed_nss_bound_many needs more than n+1 = " + std::to_string(n + 1) +
                           " polynomials; use mixed_nss_bound");
    const auto js = detail::subsets(spec.size(), n + 1);
    std::vector<MixedNssBound> values(js.size());
    parallel_for(js.size(), opts.jobs,
                 [&](std::size_t i) { values[i] = mixed_nss_bound(detail::subset_union_system(spec, js[i])); });
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].N < values[best].N)
            best = i;
    return {values[best].N, detail::one_based(js[best]), values[best]};
}

// ---------------------------------------------------------------- Noether

struct MixedNoetherBound
{
    Integer value;
    Integer mixed_volume;
    std::optional<std::vector<std::size_t>> subset; // 1-based, only when s >= n+1
};

/**
 * Noether exponent bound:
 *   s <= n:  d MV_n(A_1 u D_n, ..., A_s u D_n, D_n^(n-s))
 *   s >  n:  d min_J MV_n(A_{J,1} u D_n, ..., A_{J,n} u D_n) over n-subsets J.
 */
inline MixedNoetherBound mixed_noether_bound(const SystemSpec& spec, const ComputeOptions& opts = {})
{
    const std::size_t n = spec.dim();
    const std::size_t s = spec.size();
    const Integer d(static_cast<long>(spec.max_degree()));
    if (s <= n) {
        std::vector<Support> e;
        for (const auto& a : spec.supports())
            e.push_back(detail::with_simplex(a));
        append_repeated(e, standard_simplex(n), n - s);
        Integer mv = mixed_volume(SupportTuple(n, std::move(e)), opts);
        return {d * mv, mv, std::nullopt};
    }
    const auto js = detail::subsets(s, n);
    std::vector<Integer> mvs(js.size());
    parallel_for(js.size(), opts.jobs, [&](std::size_t i) {
        SystemSpec sub = detail::subset_union_system(spec, js[i]);
        std::vector<Support> e;
        for (const auto& a : sub.supports())
            e.push_back(detail::with_simplex(a));
        mvs[i] = mixed_volume(SupportTuple(n, std::move(e)));
    });
    std::size_t best = 0;
    for (std::size_t i = 1; i < mvs.size(); ++i)
        if (mvs[i] < mvs[best])
            best = i;
    return {d * mvs[best], mvs[best], detail::one_based(js[best])};
}

/**
 * Degree bound for an implicit equation W of (h_0..h_n) after t_0 -> t_0^D:
 *   MV_{n+1}(~A_0 u {D e_0}, ~A_1 u {0, e_0}, ..., ~A_n u {0, e_0}).
 */
inline Integer implicitization_degree_bound(const std::vector<Support>& h_supports, std::int64_t D)
{
    if (h_supports.empty())
        throw InvalidInput("implicitization bound needs n+1 supports");
    const std::size_t n = h_supports[0].dim();
    if (h_supports.size() != n + 1)
        throw InvalidInput("implicitization bound needs exactly n+1 = " + std::to_string(n + 1) + " supports, got " +
                           std::to_string(h_supports.size()));
    if (D < 1)
        throw InvalidInput("D must be a positive integer");
    const ExponentVector e0 = ExponentVector::unit(n + 1, 0);
    const ExponentVector origin = ExponentVector::zero(n + 1);
    std::vector<Support> e;
    for (std::size_t i = 0; i <= n; ++i) {
        if (h_supports[i].dim() != n)
            throw InvalidInput("all supports must have dimension " + std::to_string(n));
        Support l = lift(h_supports[i]);
        if (i == 0)
            e.push_back(l.unite(Support(n + 1, {e0.scaled(D)})));
        else
            e.push_back(l.unite(Support(n + 1, {origin, e0})));
    }
    return mixed_volume(SupportTuple(n + 1, std::move(e)));
}

/// deg(G) d MV_n(A_1 u D_n, ..., A_s u D_n, D_n^(n-s)) for s <= n.
inline Integer elimination_degree_bound(const SystemSpec& spec, std::int64_t degG)
{
    if (spec.size() > spec.dim())
        throw InvalidInput("elimination bound requires s <= n");
    if (degG < 1)
        throw InvalidInput("deg(G) must be a positive integer");
    return Integer(static_cast<long>(degG)) * mixed_noether_bound(spec).value;
}

// ---------------------------------------------------------------- comparators

/// Instance shapes for which published comparator values are instantiated.
enum class SystemFamily
{
    none,
    diagonal_unmixed,    // A = D_n u {k(1,..,1) : k <= delta}, s >= 2
    linear_plus_simplex, // n copies of D_n u {2e_1..de_1}, plus d D_n
    dilated_diagonal,    // A_i = D_i (D_n u {k(1,..,1) : k <= D}), s = n
};

struct FamilyMatch
{
    SystemFamily family = SystemFamily::none;
    std::int64_t delta = 0;           // diagonal_unmixed
    std::int64_t d = 0;               // linear_plus_simplex
    std::int64_t D = 0;               // dilated_diagonal
    std::vector<std::int64_t> D_i;    // dilated_diagonal, as given
};

namespace detail {

inline Support diagonal_support(std::size_t n, std::int64_t delta)
{
    std::vector<ExponentVector> pts = standard_simplex(n).points();
    for (std::int64_t k = 1; k <= delta; ++k)
        pts.emplace_back(std::vector<std::int64_t>(n, k));
    return Support(n, std::move(pts));
}

inline Support axis_support(std::size_t n, std::int64_t d)
{
    std::vector<ExponentVector> pts = standard_simplex(n).points();
    for (std::int64_t k = 2; k <= d; ++k) {
        std::vector<std::int64_t> c(n, 0);
        c[0] = k;
        pts.emplace_back(std::move(c));
    }
    return Support(n, std::move(pts));
}

inline std::int64_t max_coordinate(const Support& a)
{
    std::int64_t m = 0;
    for (const auto& p : a.points())
        for (std::int64_t c : p.coords())
            m = std::max(m, c);
    return m;
}

inline std::int64_t max_min_coordinate(const Support& a)
{
    std::int64_t m = 0;
    for (const auto& p : a.points())
        m = std::max(m, *std::min_element(p.coords().begin(), p.coords().end()));
    return m;
}

inline bool same_hull(const Support& a, const Support& b) { return convex_hull(a) == convex_hull(b); }

} // namespace detail

inline FamilyMatch detect_family(const SystemSpec& spec)
{
    const std::size_t n = spec.dim();
    const std::size_t s = spec.size();
    FamilyMatch m;
    if (n < 2)
        return m;

    if (s >= 2) {
        const std::int64_t delta = detail::max_coordinate(spec.supports()[0]);
        const Support ref = detail::diagonal_support(n, delta);
        bool ok = delta >= 2;
        for (std::size_t i = 0; ok && i < s; ++i)
            ok = detail::same_hull(spec.supports()[i], ref) &&
                 spec.degrees()[i] == static_cast<std::int64_t>(n) * delta;
        if (ok) {
            m.family = SystemFamily::diagonal_unmixed;
            m.delta = delta;
            return m;
        }
    }
    if (s == n + 1) {
        const std::int64_t d = detail::max_coordinate(spec.supports()[n]);
        bool ok = d >= 2 && detail::same_hull(spec.supports()[n], standard_simplex(n).scaled(d));
        const Support ref = detail::axis_support(n, d);
        for (std::size_t i = 0; ok && i < n; ++i)
            ok = detail::same_hull(spec.supports()[i], ref);
        for (std::size_t i = 0; ok && i < s; ++i)
            ok = spec.degrees()[i] == d;
        if (ok) {
            m.family = SystemFamily::linear_plus_simplex;
            m.d = d;
            return m;
        }
    }
    if (s == n) {
        std::int64_t common_D = 0;
        std::vector<std::int64_t> Ds;
        for (std::size_t i = 0; i < s; ++i) {
            const Support& a = spec.supports()[i];
            const std::int64_t diag = detail::max_min_coordinate(a);
            std::int64_t found = 0;
            for (std::int64_t Di = 1; Di <= diag && !found; ++Di) {
                if (diag % Di != 0)
                    continue;
                const std::int64_t D = diag / Di;
                if ((common_D == 0 || D == common_D) && detail::same_hull(a, detail::diagonal_support(n, D).scaled(Di)) &&
                    spec.degrees()[i] == static_cast<std::int64_t>(n) * D * Di) {
                    found = Di;
                    common_D = D;
                }
            }
            if (!found)
                return m;
            Ds.push_back(found);
        }
        m.family = SystemFamily::dilated_diagonal;
        m.D = common_D;
        m.D_i = Ds;
    }
    return m;
}

struct Comparator
{
    Integer value;
    bool valid = true;
    std::string caps; // which quantity the value bounds
    std::string note;
};

/**
 * Classical degree-only and earlier sparse bounds, evaluated in the generic
 * forms used by the original authors. KPS is only reported on
 * the recognised instance families, whose two shapes differ.
 */
inline std::map<std::string, Comparator> classical_bounds(const SystemSpec& spec)
{
    const std::size_t n = spec.dim();
    const std::size_t s = spec.size();
    const Integer d(static_cast<long>(spec.max_degree()));
    const std::size_t m = std::min(n, s);
    const Integer q(static_cast<long>(std::min(n + 1, s)));
    const Integer nv_union = unmixed_noether_bound(spec.union_support());
    const FamilyMatch fam = detect_family(spec);

    std::map<std::string, Comparator> out;
    out["kollar_nss"] = {ipow(d, m), d >= 3, "deg(g_i f_i)", "Kollar d^min{n,s}; stated for d >= 3"};
    if (s <= n)
        out["jelonek_nss"] = {ipow(d, s), true, "deg(g_i f_i)", "Jelonek d^s for s <= n"};
    else
        out["jelonek_nss"] = {2 * ipow(d, n) - 1, true, "deg(g_i f_i)", "Jelonek 2d^n - 1 for s > n"};
    if (fam.family == SystemFamily::linear_plus_simplex)
        out["sombra_nss"] = {2 * ipow(d, n), true, "deg(g_i f_i)", "Sombra 2d^n, instantiated on the linear-plus-simplex family"};
    else
        out["sombra_nss"] = {q * q * d * nv_union, true, "deg(g_i f_i)",
                             "Sombra min{n+1,s}^2 d n!Vol(A u D_n) on the union support A"};
    if (fam.family == SystemFamily::diagonal_unmixed) {
        const Integer nn(static_cast<long>(n));
        const Integer delta(static_cast<long>(fam.delta));
        out["kps_nss"] = {2 * ipow(nn, 4) * delta * delta, true, "deg(g_i)",
                          "Krick-Pardo-Sombra 2n^4 delta^2, instantiated on the diagonal family"};
    }
    else if (fam.family == SystemFamily::linear_plus_simplex) {
        const Integer nn(static_cast<long>(n));
        out["kps_nss"] = {2 * nn * nn * ipow(d, n), true, "deg(g_i)",
                          "Krick-Pardo-Sombra 2n^2 d^n, instantiated on the linear-plus-simplex family"};
    }

    std::vector<std::int64_t> degs = spec.degrees();
    std::sort(degs.rbegin(), degs.rend());
    Integer prod(1);
    for (std::size_t i = 0; i < m; ++i)
        prod *= Integer(static_cast<long>(degs[i]));
    out["kollar_noether"] = {ipow(d, m), true, "mu", "Kollar d^min{n,s}"};
    out["jelonek_noether"] = {prod, true, "mu", "Jelonek, product of the min{n,s} largest degrees"};
    out["sombra_noether"] = {q * q * nv_union, true, "mu", "Sombra min{n+1,s}^2 n!Vol(A u D_n) on the union support A"};
    return out;
}

// ---------------------------------------------------------------- report

struct BoundReport
{
    std::size_t n = 0;
    std::size_t s = 0;
    std::int64_t d = 0;
    std::vector<std::int64_t> d_j;
    std::vector<std::optional<std::int64_t>> delta_j;

    Integer unmixed_noether;
    Integer unmixed_nss_degree;
    Integer newton_multiplier;
    std::optional<RationalPolytope> newton_base;

    bool mixed_evaluated = false;
    Integer M;
    std::vector<Integer> M_j;
    Integer mixed_nss;
    std::string mixed_nss_caps;
    bool argmin_is_dM = true;
    std::size_t argmin_j = 0;
    std::optional<std::vector<std::size_t>> nss_subset;

    Integer noether_mixed;
    std::optional<std::vector<std::size_t>> noether_subset;

    std::map<std::string, Comparator> comparators;
    std::vector<std::string> notes;
};

struct ReportOptions
{
    bool comparators = false;
    bool unmixed_only = false; // skip the mixed-volume bounds
};

inline BoundReport bound_report(const SystemSpec& spec, const ReportOptions& what = {}, const ComputeOptions& opts = {})
{
    BoundReport r;
    r.n = spec.dim();
    r.s = spec.size();
    r.d = spec.max_degree();

    const Support u = spec.union_support();
    UnmixedNssBound un = unmixed_nss_bound(u, r.d);
    r.unmixed_noether = un.newton_multiplier + 1;
    r.unmixed_nss_degree = un.degree_bound;
    r.newton_multiplier = un.newton_multiplier;
    r.newton_base = un.newton_base;
    if (what.comparators)
        r.comparators = classical_bounds(spec);
    if (what.unmixed_only) {
        r.notes.push_back("unmixed bounds only, on the union of the supports");
        return r;
    }

    r.mixed_evaluated = true;
    MixedNssBound nss;
    if (r.s <= r.n + 1) {
        nss = mixed_nss_bound(spec, opts);
        r.mixed_nss_caps = "deg(g_i f_i)";
    }
    else {
        ManyNssBound many = mixed_nss_bound_many(spec, opts);
        nss = many.at_subset;
        r.nss_subset = many.subset;
        r.mixed_nss_caps = "deg(g_i)";
        r.notes.push_back("s > n+1: M, M_j, d_j, delta_j and argmin refer to the union system of subset_argmin.nss");
    }
    r.d_j = nss.d_j;
    r.delta_j = nss.delta_j;
    r.M = nss.M;
    r.M_j = nss.M_j;
    r.mixed_nss = nss.N;
    r.argmin_is_dM = nss.argmin_is_dM;
    r.argmin_j = nss.argmin_j;
    if (r.s == 1)
        r.notes.push_back("s = 1: delta_1 is undefined, so mixed_nss = d * M");

    MixedNoetherBound noether = mixed_noether_bound(spec, opts);
    r.noether_mixed = noether.value;
    r.noether_subset = noether.subset;
    return r;
}

/// A total-degree cap at which a certificate must exist whenever the variety is empty.
struct DegreeCap
{
    Integer cap;
    std::string basis;
};

inline DegreeCap certificate_degree_cap(const SystemSpec& spec, const ComputeOptions& opts = {})
{
    const std::size_t n = spec.dim();
    const Integer d(static_cast<long>(spec.max_degree()));
    DegreeCap mixed;
    if (spec.size() <= n + 1) {
        mixed = {mixed_nss_bound(spec, opts).N, "mixed sparse Nullstellensatz bound N = min{d M, d_j delta_j M_j}"};
    }
    else {
        mixed = {mixed_nss_bound_many(spec, opts).N + d,
                 "subset-union sparse Nullstellensatz bound on deg(g_i), plus d for deg(g_i f_i)"};
    }
    Integer unmixed = unmixed_nss_bound(spec.union_support(), spec.max_degree()).degree_bound;
    if (unmixed < mixed.cap)
        return {unmixed, "unmixed sparse Nullstellensatz bound d n!Vol_n(A u D_n) on the union support"};
    return mixed;
}

} // namespace spnull

#endif // SPNULL_BOUNDS_HPP
