#ifndef SPNULL_DETAIL_INTEGER_OPS_HPP
#define SPNULL_DETAIL_INTEGER_OPS_HPP

#include <spnull/core.hpp>

#include <numeric>
#include <utility>
#include <vector>

// Small overload set so the exact kernels can be instantiated either on
// machine integers (fast path, magnitudes checked by the caller) or on GMP
// integers.
namespace spnull::detail {

inline long long int_abs(long long v) { return v < 0 ? -v : v; }
inline Integer int_abs(const Integer& v) { return abs(v); }

inline long long int_gcd(long long a, long long b) { return std::gcd(a, b); }
inline Integer int_gcd(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline int int_sign(long long v) { return (v > 0) - (v < 0); }
inline int int_sign(const Integer& v) { return sgn(v); }

inline Integer to_integer(long long v) { return Integer(static_cast<long>(v)); }
inline const Integer& to_integer(const Integer& v) { return v; }

template <class Int>
Int from_integer(const Integer& v);

template <>
inline long long from_integer<long long>(const Integer& v)
{
    return static_cast<long long>(v.get_si());
}

template <>
inline Integer from_integer<Integer>(const Integer& v)
{
    return v;
}

/// (a*b - c*d) / e where the division is known to be exact.
inline long long mul_sub_div(long long a, long long b, long long c, long long d, long long e)
{
    __int128 t = static_cast<__int128>(a) * b - static_cast<__int128>(c) * d;
    return static_cast<long long>(t / e);
}

inline Integer mul_sub_div(const Integer& a, const Integer& b, const Integer& c, const Integer& d,
                           const Integer& e)
{
    Integer t = a * b - c * d;
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), e.get_mpz_t());
    return t;
}

/// Fraction-free (Bareiss) determinant of a square matrix.
template <class Int>
Int determinant(std::vector<std::vector<Int>> m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return Int(1);
    Int prev(1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0)
                ++r;
            if (r == n)
                return Int(0);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = mul_sub_div(m[i][j], m[k][k], m[i][k], m[k][j], prev);
        }
        prev = m[k][k];
    }
    Int det = m[n - 1][n - 1];
    return negate ? Int(-det) : det;
}

/// Rank of a rectangular integer matrix via fraction-free echelon reduction.
inline std::size_t rank(std::vector<std::vector<Integer>> m)
{
    const std::size_t rows = m.size();
    if (rows == 0)
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    Integer prev(1);
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = mul_sub_div(m[i][j], m[r][c], m[i][c], m[r][j], prev);
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

/// Outward-agnostic normal of the hyperplane through k points in Z^k
/// (cofactor expansion of the edge matrix), reduced to a primitive vector.
template <class Int>
std::vector<Int> hyperplane_normal(const std::vector<const std::vector<Int>*>& pts)
{
    const std::size_t k = pts.size();
    std::vector<std::vector<Int>> edges(k - 1, std::vector<Int>(k));
    for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            edges[i - 1][j] = (*pts[i])[j] - (*pts[0])[j];
    std::vector<Int> normal(k);
    Int g(0);
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<std::vector<Int>> minor(k - 1, std::vector<Int>(k - 1));
        for (std::size_t i = 0; i + 1 < k; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == col)
                    continue;
                minor[i][jj++] = edges[i][j];
            }
        }
        Int det = determinant(std::move(minor));
        normal[col] = (col % 2 == 0) ? det : Int(-det);
        g = int_gcd(g, int_abs(normal[col]));
    }
    if (g > 1)
        for (auto& v : normal)
            v /= g;
    return normal;
}

template <class Int>
Int dot(const std::vector<Int>& a, const std::vector<Int>& b)
{
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace spnull::detail

#endif // SPNULL_DETAIL_INTEGER_OPS_HPP
