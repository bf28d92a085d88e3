#ifndef SPNULL_CERTIFICATE_HPP
#define SPNULL_CERTIFICATE_HPP

#include <spnull/core.hpp>
#include <spnull/polytope.hpp>
#include <spnull/mixed_volume.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spnull {

/// Largest number of unknown coefficients a certificate search will set up.
inline constexpr std::size_t kMaxCertificateUnknowns = 200000;

/**
 * A polynomial with exact rational coefficients, stored as a map from
 * exponent vectors to nonzero coefficients.
 */
class SparsePolynomial
{
  public:
    using Terms = std::map<ExponentVector, Rational>;

    explicit SparsePolynomial(std::size_t dim) : dim_(dim)
    {
        if (dim_ == 0)
            throw InvalidInput("polynomial dimension must be positive");
    }

    SparsePolynomial(std::size_t dim, const std::vector<std::pair<ExponentVector, Rational>>& terms)
        : SparsePolynomial(dim)
    {
        for (const auto& [e, c] : terms)
            add_term(e, c);
    }

    static SparsePolynomial constant(std::size_t dim, const Rational& c)
    {
        SparsePolynomial p(dim);
        p.add_term(ExponentVector::zero(dim), c);
        return p;
    }

    void add_term(const ExponentVector& e, const Rational& c)
    {
        if (e.size() != dim_)
            throw InvalidInput("exponent vector " + to_string(e) + " does not have length " + std::to_string(dim_));
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::size_t dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const ExponentVector& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    std::int64_t degree() const
    {
        std::int64_t d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e.total_degree());
        return d;
    }

    Support support() const
    {
        if (is_zero())
            throw InvalidInput("the zero polynomial has empty support");
        std::vector<ExponentVector> pts;
        for (const auto& [e, c] : terms_)
            pts.push_back(e);
        return Support(dim_, std::move(pts));
    }

    SparsePolynomial operator+(const SparsePolynomial& other) const
    {
        check_dim(other);
        SparsePolynomial r(*this);
        for (const auto& [e, c] : other.terms_)
            r.add_term(e, c);
        return r;
    }

    SparsePolynomial operator-(const SparsePolynomial& other) const { return *this + other.scaled(Rational(-1)); }

    SparsePolynomial operator*(const SparsePolynomial& other) const
    {
        check_dim(other);
        SparsePolynomial r(dim_);
        for (const auto& [e, c] : terms_)
            for (const auto& [f, d] : other.terms_)
                r.add_term(e + f, c * d);
        return r;
    }

    SparsePolynomial scaled(const Rational& k) const
    {
        SparsePolynomial r(dim_);
        if (k == 0)
            return r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, c * k);
        return r;
    }

    bool operator==(const SparsePolynomial& other) const
    {
        return dim_ == other.dim_ && terms_ == other.terms_;
    }

  private:
    void check_dim(const SparsePolynomial& other) const
    {
        if (other.dim_ != dim_)
            throw InvalidInput("polynomial dimension mismatch");
    }

    std::size_t dim_;
    Terms terms_;
};

inline SparsePolynomial multiply(const SparsePolynomial& f, const SparsePolynomial& g) { return f * g; }

/// Readable form such as "3/2*x1^2*x2 - x1 + 1", highest graded-lex term first.
inline std::string to_string(const SparsePolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::vector<std::pair<ExponentVector, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return graded_lex_less(b.first, a.first); });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

struct Certificate
{
    std::vector<SparsePolynomial> cofactors;
    std::int64_t cap_used = 0;
    std::int64_t max_product_degree = 0;
};

/// True when sum g_i f_i expands exactly to the constant 1.
inline bool verify_certificate(const std::vector<SparsePolynomial>& fs, const Certificate& cert)
{
    if (fs.empty() || cert.cofactors.size() != fs.size())
        return false;
    SparsePolynomial sum(fs[0].dim());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].dim() != sum.dim() || cert.cofactors[i].dim() != sum.dim())
            return false;
        sum = sum + fs[i] * cert.cofactors[i];
    }
    return sum == SparsePolynomial::constant(sum.dim(), Rational(1));
}

enum class SearchMode
{
    total_degree,
    newton,
};

inline std::string to_string(SearchMode m) { return m == SearchMode::newton ? "newton" : "total-degree"; }

struct SearchResult
{
    std::optional<Certificate> certificate; // empty: infeasible at this cap
    SearchMode mode = SearchMode::total_degree;
    std::int64_t cap_used = 0;              // the Newton multiplier in newton mode
    std::size_t unknowns = 0;
    std::size_t equations = 0;
};

namespace detail {

/// Sparse linear system over Z, one row per monomial.
struct SparseSystem
{
    std::vector<std::map<std::size_t, Integer>> rows;
    std::vector<Integer> rhs;
    std::size_t cols = 0;
};

inline void normalize_content(std::map<std::size_t, Integer>& row, Integer& rhs)
{
    Integer g = rhs;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            return;
    }
    if (g == 0 || g == 1)
        return;
    for (auto& [c, v] : row)
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(rhs.get_mpz_t(), rhs.get_mpz_t(), g.get_mpz_t());
}

/**
 * Column-ordered fraction-free elimination. Each column is pivoted on the
 * active row with the fewest nonzeros (ties: lowest row index); rows are
 * divided by their content after every update to keep entries small.
 * Free variables are set to zero. Returns nullopt if inconsistent.
 */
inline std::optional<std::vector<Rational>> solve_sparse(SparseSystem sys)
{
    const std::size_t m = sys.rows.size();
    std::vector<std::set<std::size_t>> col_rows(sys.cols);
    for (std::size_t r = 0; r < m; ++r)
        for (const auto& [c, v] : sys.rows[r])
            col_rows[c].insert(r);

    std::vector<std::pair<std::size_t, std::size_t>> pivots; // (column, row)
    for (std::size_t c = 0; c < sys.cols; ++c) {
        if (col_rows[c].empty())
            continue;
        std::size_t p = *col_rows[c].begin();
        for (std::size_t r : col_rows[c])
            if (sys.rows[r].size() < sys.rows[p].size())
                p = r;
        for (const auto& [cc, v] : sys.rows[p])
            col_rows[cc].erase(p);
        pivots.emplace_back(c, p);

        const auto& prow = sys.rows[p];
        const Integer a = prow.at(c);
        const std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
        for (std::size_t r : targets) {
            auto& row = sys.rows[r];
            const Integer b = row.at(c);
            for (auto& [cc, v] : row)
                v *= a;
            sys.rhs[r] = a * sys.rhs[r] - b * sys.rhs[p];
            for (const auto& [cc, pv] : prow) {
                auto [it, inserted] = row.try_emplace(cc, 0);
                it->second -= b * pv;
                if (it->second == 0) {
                    row.erase(it);
                    col_rows[cc].erase(r);
                }
                else if (inserted) {
                    col_rows[cc].insert(r);
                }
            }
            normalize_content(row, sys.rhs[r]);
        }
    }

    std::vector<char> is_pivot(m, 0);
    for (const auto& [c, r] : pivots)
        is_pivot[r] = 1;
    for (std::size_t r = 0; r < m; ++r)
        if (!is_pivot[r] && sys.rows[r].empty() && sys.rhs[r] != 0)
            return std::nullopt;

    std::vector<Rational> x(sys.cols, Rational(0));
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& [c, r] = *it;
        Rational acc(sys.rhs[r]);
        for (const auto& [cc, v] : sys.rows[r])
            if (cc != c)
                acc -= Rational(v) * x[cc];
        x[c] = acc / Rational(sys.rows[r].at(c));
    }
    return x;
}

/// Ordering of the input polynomials that does not depend on their order or on
/// a common rescaling: compare monic forms (by the graded-lex leading term).
inline std::vector<std::size_t> canonical_order(const std::vector<SparsePolynomial>& fs)
{
    std::vector<std::vector<std::pair<ExponentVector, Rational>>> keys;
    std::vector<Rational> leads;
    for (const auto& f : fs) {
        std::vector<std::pair<ExponentVector, Rational>> k(f.terms().begin(), f.terms().end());
        std::sort(k.begin(), k.end(), [](const auto& a, const auto& b) { return graded_lex_less(b.first, a.first); });
        const Rational lead = k.front().second;
        for (auto& [e, c] : k)
            c /= lead;
        keys.push_back(std::move(k));
        leads.push_back(lead);
    }
    std::vector<std::size_t> order(fs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ka = keys[a];
        const auto& kb = keys[b];
        for (std::size_t i = 0; i < std::min(ka.size(), kb.size()); ++i) {
            if (ka[i].first != kb[i].first)
                return graded_lex_less(kb[i].first, ka[i].first);
            if (ka[i].second != kb[i].second)
                return ka[i].second < kb[i].second;
        }
        if (ka.size() != kb.size())
            return ka.size() < kb.size();
        return leads[a] < leads[b];
    });
    return order;
}

inline std::vector<ExponentVector> monomials_up_to(std::size_t n, std::int64_t deg)
{
    std::vector<ExponentVector> out;
    if (deg < 0)
        return out;
    std::vector<std::int64_t> e(n, 0);
    // enumerate by recursion over coordinates
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
        if (i == n) {
            out.emplace_back(e);
            return;
        }
        for (std::int64_t k = 0; k <= left; ++k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

inline void check_inputs(const std::vector<SparsePolynomial>& fs)
{
    if (fs.empty())
        throw InvalidInput("certificate search needs at least one polynomial");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].is_zero())
            throw InvalidInput("polynomial " + std::to_string(i + 1) + " is zero");
        if (fs[i].dim() != fs[0].dim())
            throw InvalidInput("polynomials have different dimensions");
    }
}

/// Solves sum g_i f_i = 1 with g_i supported on allowed[i].
inline SearchResult solve_certificate(const std::vector<SparsePolynomial>& fs,
                                      const std::vector<std::vector<ExponentVector>>& allowed)
{
    const std::size_t n = fs[0].dim();
    const std::vector<std::size_t> order = canonical_order(fs);
    SearchResult res;

    // integer copies L_i f_i; the solved g'_i are scaled back by L_i
    std::vector<Integer> scale(fs.size());
    std::vector<std::vector<std::pair<ExponentVector, Integer>>> ints(fs.size());
    for (std::size_t i = 0; i < fs.size(); ++i) {
        Integer l(1);
        for (const auto& [e, c] : fs[i].terms())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        scale[i] = l;
        for (const auto& [e, c] : fs[i].terms())
            ints[i].emplace_back(e, Integer(c * l));
    }

    std::vector<std::pair<std::size_t, const ExponentVector*>> columns;
    for (std::size_t i : order)
        for (const auto& b : allowed[i])
            columns.emplace_back(i, &b);
    res.unknowns = columns.size();
    if (columns.size() > kMaxCertificateUnknowns)
        throw LimitExceeded("certificate search would need " + std::to_string(columns.size()) +
                            " unknowns, above the limit of " + std::to_string(kMaxCertificateUnknowns));

    std::map<ExponentVector, std::size_t, decltype(&graded_lex_less)> row_of(&graded_lex_less);
    row_of.emplace(ExponentVector::zero(n), 0);
    for (const auto& [i, b] : columns)
        for (const auto& [e, c] : ints[i])
            row_of.emplace(*b + e, 0);
    std::size_t next = 0;
    for (auto& [e, r] : row_of)
        r = next++;

    SparseSystem sys;
    sys.cols = columns.size();
    sys.rows.resize(row_of.size());
    sys.rhs.assign(row_of.size(), Integer(0));
    sys.rhs[row_of.at(ExponentVector::zero(n))] = 1;
    for (std::size_t col = 0; col < columns.size(); ++col) {
        const auto& [i, b] = columns[col];
        for (const auto& [e, c] : ints[i])
            sys.rows[row_of.at(*b + e)].emplace(col, c);
    }
    res.equations = sys.rows.size();

    auto x = solve_sparse(std::move(sys));
    if (!x)
        return res;

    Certificate cert;
    for (const auto& f : fs)
        cert.cofactors.emplace_back(f.dim());
    for (std::size_t col = 0; col < columns.size(); ++col) {
        const auto& [i, b] = columns[col];
        cert.cofactors[i].add_term(*b, (*x)[col] * Rational(scale[i]));
    }
    cert.max_product_degree = 0;
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (!cert.cofactors[i].is_zero())
            cert.max_product_degree =
                std::max(cert.max_product_degree, cert.cofactors[i].degree() + fs[i].degree());
    if (!verify_certificate(fs, cert))
        throw InternalError("solver returned a certificate that does not expand to 1");
    res.certificate = std::move(cert);
    return res;
}

} // namespace detail

/**
 * Looks for cofactors g_i with 1 = sum g_i f_i.
 *
 * total-degree: g_i ranges over all monomials with |b| <= cap - deg(f_i).
 * newton: g_i ranges over the lattice points of (n!Vol(A u D_n) - 1) conv(A u D_n),
 *   A being `common_support` (or the union of the supports); `cap` is ignored
 *   and the multiplier is reported as cap_used.
 *
 * An empty result means only that no certificate exists within the cap.
 */
inline SearchResult certificate_search(const std::vector<SparsePolynomial>& fs, SearchMode mode, std::int64_t cap,
                                       const std::optional<Support>& common_support = std::nullopt)
{
    detail::check_inputs(fs);
    const std::size_t n = fs[0].dim();
    std::vector<std::vector<ExponentVector>> allowed(fs.size());
    SearchResult res;

    if (mode == SearchMode::total_degree) {
        if (cap < 0)
            throw InvalidInput("degree cap must be nonnegative");
        std::int64_t min_deg = fs[0].degree();
        for (const auto& f : fs)
            min_deg = std::min(min_deg, f.degree());
        if (cap < min_deg) {
            res.cap_used = cap;
            return res;
        }
        for (std::size_t i = 0; i < fs.size(); ++i)
            allowed[i] = detail::monomials_up_to(n, cap - fs[i].degree());
        res = detail::solve_certificate(fs, allowed);
        res.cap_used = cap;
    }
    else {
        Support a = fs[0].support();
        for (const auto& f : fs)
            a = a.unite(f.support());
        if (common_support) {
            if (common_support->dim() != n)
                throw InvalidInput("common support has the wrong dimension");
            if (!common_support->includes(a))
                throw InvalidInput("newton mode needs every polynomial supported in the common support");
            a = *common_support;
        }
        Support base = a.unite(standard_simplex(n));
        const Integer mult = normalized_volume(base) - 1;
        if (!mult.fits_slong_p())
            throw LimitExceeded("Newton multiplier " + mult.get_str() + " is too large");
        const std::int64_t m = mult.get_si();
        std::vector<ExponentVector> pts =
            m == 0 ? std::vector<ExponentVector>{ExponentVector::zero(n)} : lattice_points(dilate(base, m));
        std::sort(pts.begin(), pts.end(), graded_lex_less);
        for (auto& al : allowed)
            al = pts;
        res = detail::solve_certificate(fs, allowed);
        res.cap_used = m;
    }
    res.mode = mode;
    if (res.certificate)
        res.certificate->cap_used = res.cap_used;
    return res;
}

struct MinimalResult
{
    std::optional<std::int64_t> cap;        // empty: not found up to max_cap
    std::optional<Certificate> certificate; // at `cap`
    std::int64_t max_cap = 0;
};

/**
 * Smallest total-degree cap in [0, max_cap] admitting a certificate. Caps
 * 1, 2, 4, ... are probed first, then the bracketing interval is bisected;
 * this relies on feasibility being monotone in the cap.
 */
inline MinimalResult minimal_certificate_degree(const std::vector<SparsePolynomial>& fs, std::int64_t max_cap)
{
    detail::check_inputs(fs);
    if (max_cap < 0)
        throw InvalidInput("max_cap must be nonnegative");
    MinimalResult out;
    out.max_cap = max_cap;
    auto attempt = [&](std::int64_t c) { return certificate_search(fs, SearchMode::total_degree, c); };

    SearchResult r0 = attempt(0);
    if (r0.certificate) {
        out.cap = 0;
        out.certificate = std::move(r0.certificate);
        return out;
    }
    std::int64_t lo = 0; // infeasible
    std::int64_t hi = -1;
    std::optional<Certificate> best;
    for (std::int64_t c = 1;; c = c > max_cap / 2 ? max_cap : 2 * c) {
        c = std::min(c, max_cap);
        if (c <= lo)
            break;
        SearchResult r = attempt(c);
        if (r.certificate) {
            hi = c;
            best = std::move(r.certificate);
            break;
        }
        lo = c;
        if (c == max_cap)
            break;
    }
    if (hi < 0)
        return out;
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        SearchResult r = attempt(mid);
        if (r.certificate) {
            hi = mid;
            best = std::move(r.certificate);
        }
        else {
            lo = mid;
        }
    }
    out.cap = hi;
    out.certificate = std::move(best);
    return out;
}

} // namespace spnull

#endif // SPNULL_CERTIFICATE_HPP
