#include "oracles.hpp"

#include <spnull/bounds.hpp>
#include <spnull/certificate.hpp>

#include <gtest/gtest.h>

using namespace spnull;

namespace {

using Terms = std::vector<std::pair<ExponentVector, Rational>>;

SparsePolynomial poly(std::size_t n, Terms t) { return SparsePolynomial(n, t); }

Rational q(long v) { return Rational(v); }

SystemSpec spec_of(const std::vector<SparsePolynomial>& fs)
{
    std::vector<Support> s;
    for (const auto& f : fs)
        s.push_back(f.support());
    return SystemSpec(fs[0].dim(), s);
}

std::int64_t auto_cap(const std::vector<SparsePolynomial>& fs)
{
    return certificate_degree_cap(spec_of(fs)).cap.get_si();
}

SparsePolynomial random_poly(oracle::Gen& g, std::size_t n, std::size_t terms, std::int64_t cmax)
{
    SparsePolynomial f(n);
    while (f.is_zero())
        for (std::size_t t = 0; t < terms; ++t)
            f.add_term(g.point(n, cmax), g.coefficient());
    return f;
}

/// f_1..f_k random, plus f_{k+1} = 1 - sum h_i f_i: the variety is empty.
std::vector<SparsePolynomial> random_empty_system(oracle::Gen& g, std::size_t n, std::size_t k)
{
    std::vector<SparsePolynomial> fs;
    SparsePolynomial last = SparsePolynomial::constant(n, q(1));
    for (std::size_t i = 0; i < k; ++i) {
        SparsePolynomial f = random_poly(g, n, 2, 1);
        SparsePolynomial h = random_poly(g, n, 1, 1);
        last = last - h * f;
        fs.push_back(f);
    }
    if (last.is_zero())
        last = SparsePolynomial::constant(n, q(1));
    fs.push_back(last);
    return fs;
}

/// Dense restatement of the certificate system for an independent solve.
bool dense_feasible(const std::vector<SparsePolynomial>& fs, std::int64_t cap)
{
    const std::size_t n = fs[0].dim();
    std::vector<std::pair<std::size_t, ExponentVector>> cols;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::int64_t room = cap - fs[i].degree();
        if (room < 0)
            continue;
        // every exponent with total degree <= room
        std::vector<std::int64_t> e(n, 0);
        while (true) {
            std::int64_t tot = 0;
            for (auto x : e)
                tot += x;
            if (tot <= room)
                cols.emplace_back(i, ExponentVector(e));
            std::size_t j = 0;
            while (j < n && ++e[j] > room) {
                e[j] = 0;
                ++j;
            }
            if (j == n)
                break;
        }
    }
    std::map<ExponentVector, std::size_t> rows;
    rows.emplace(ExponentVector::zero(n), 0);
    for (const auto& [i, b] : cols)
        for (const auto& [e, c] : fs[i].terms())
            rows.emplace(b + e, 0);
    std::size_t r = 0;
    for (auto& [e, idx] : rows)
        idx = r++;
    std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
    std::vector<Rational> rhs(rows.size(), Rational(0));
    rhs[rows.at(ExponentVector::zero(n))] = 1;
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [e, v] : fs[cols[c].first].terms())
            a[rows.at(cols[c].second + e)][c] += v;
    return oracle::consistent(a, rhs);
}

} // namespace

TEST(SparsePolynomial, StoresNoZeros)
{
    SparsePolynomial f = poly(2, {{{1, 0}, q(1)}, {{1, 0}, q(-1)}, {{0, 1}, q(0)}});
    EXPECT_TRUE(f.is_zero());
    EXPECT_EQ(f.degree(), -1);
    EXPECT_THROW(f.support(), InvalidInput);
}

TEST(SparsePolynomial, MultiplyExamples)
{
    SparsePolynomial x1m1 = poly(1, {{{1}, q(1)}, {{0}, q(-1)}});
    SparsePolynomial x1p1 = poly(1, {{{1}, q(1)}, {{0}, q(1)}});
    EXPECT_EQ(multiply(x1m1, SparsePolynomial::constant(1, q(1))), x1m1);
    EXPECT_EQ(multiply(x1m1, x1p1), poly(1, {{{2}, q(1)}, {{0}, q(-1)}}));
    SparsePolynomial s = poly(2, {{{1, 0}, q(1)}, {{0, 1}, q(1)}});
    SparsePolynomial d = poly(2, {{{1, 0}, q(1)}, {{0, 1}, q(-1)}});
    EXPECT_EQ(multiply(s, d), poly(2, {{{2, 0}, q(1)}, {{0, 2}, q(-1)}}));
}

TEST(SparsePolynomial, DimensionMismatchThrows)
{
    EXPECT_THROW(SparsePolynomial::constant(1, q(1)) * SparsePolynomial::constant(2, q(1)), InvalidInput);
}

TEST(SparsePolynomial, ReadableForm)
{
    SparsePolynomial f = poly(2, {{{2, 1}, make_rational(3, 2)}, {{1, 0}, q(-1)}, {{0, 0}, q(1)}});
    EXPECT_EQ(to_string(f), "3/2*x1^2*x2 - x1 + 1");
}

TEST(CertificateSearch, TelescopingIdentity)
{
    std::vector<SparsePolynomial> fs{poly(1, {{{1}, q(1)}}), poly(1, {{{1}, q(1)}, {{0}, q(-1)}})};
    SearchResult r = certificate_search(fs, SearchMode::total_degree, 1);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.certificate->cofactors[0], SparsePolynomial::constant(1, q(1)));
    EXPECT_EQ(r.certificate->cofactors[1], SparsePolynomial::constant(1, q(-1)));
    EXPECT_EQ(r.certificate->cap_used, 1);
    EXPECT_EQ(r.certificate->max_product_degree, 1);
}

TEST(CertificateSearch, DirectIdentity)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 0}, q(1)}}), poly(2, {{{0, 0}, q(1)}, {{1, 1}, q(-1)}})};
    SearchResult r = certificate_search(fs, SearchMode::total_degree, 2);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.certificate->cofactors[0], poly(2, {{{0, 1}, q(1)}}));
    EXPECT_EQ(r.certificate->cofactors[1], SparsePolynomial::constant(2, q(1)));
}

TEST(CertificateSearch, CapBelowMinimumDegreeIsInfeasible)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 1}, q(1)}}), poly(2, {{{2, 0}, q(1)}, {{0, 0}, q(1)}})};
    SearchResult r = certificate_search(fs, SearchMode::total_degree, 1);
    EXPECT_FALSE(r.certificate);
    EXPECT_EQ(r.unknowns, 0u);
}

TEST(CertificateSearch, RejectsZeroPolynomial)
{
    std::vector<SparsePolynomial> fs{SparsePolynomial(2), poly(2, {{{1, 0}, q(1)}})};
    EXPECT_THROW(certificate_search(fs, SearchMode::total_degree, 3), InvalidInput);
}

TEST(CertificateSearch, SystemWithCommonZeroHasNoCertificate)
{
    // x1 - 2 and x1 x2 - 1 vanish together at (2, 1/2)
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 0}, q(1)}, {{0, 0}, q(-2)}}),
                                     poly(2, {{{1, 1}, q(1)}, {{0, 0}, q(-1)}})};
    for (const auto& f : fs) {
        Rational v(0);
        for (const auto& [e, c] : f.terms())
            v += c * make_rational(ipow(Integer(2), static_cast<unsigned long>(e[0])),
                                   ipow(Integer(2), static_cast<unsigned long>(e[1])));
        EXPECT_EQ(v, 0);
    }
    for (std::int64_t cap = 0; cap <= 8; ++cap)
        EXPECT_FALSE(certificate_search(fs, SearchMode::total_degree, cap).certificate) << cap;
    EXPECT_FALSE(minimal_certificate_degree(fs, 8).cap);
}

TEST(CertificateSearch, CommonZeroControl)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 0}, q(1)}}), poly(2, {{{1, 0}, q(1)}})};
    const std::int64_t bound = auto_cap(fs);
    for (std::int64_t cap = 0; cap <= bound; ++cap)
        EXPECT_FALSE(certificate_search(fs, SearchMode::total_degree, cap).certificate);
}

TEST(CertificateSearch, NewtonModeOnDiagonalSupports)
{
    // f1 = 1 + x1 + x2 + x1 x2 + x1^2 x2^2, f2 = f1 + 1
    SparsePolynomial f1 = poly(2, {{{0, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}, {{1, 1}, q(1)}, {{2, 2}, q(1)}});
    std::vector<SparsePolynomial> fs{f1, f1 + SparsePolynomial::constant(2, q(1))};
    SearchResult r = certificate_search(fs, SearchMode::newton, 0);
    ASSERT_TRUE(r.certificate);
    EXPECT_EQ(r.mode, SearchMode::newton);
    EXPECT_EQ(r.cap_used, 3); // n! Vol(A u D_2) - 1 = 4 - 1
    EXPECT_TRUE(verify_certificate(fs, *r.certificate));
}

TEST(CertificateSearch, NewtonModeChecksCommonSupport)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{2, 0}, q(1)}}), poly(2, {{{0, 0}, q(1)}})};
    EXPECT_THROW(certificate_search(fs, SearchMode::newton, 0, standard_simplex(2)), InvalidInput);
    SearchResult r = certificate_search(fs, SearchMode::newton, 0, standard_simplex(2).scaled(2));
    EXPECT_TRUE(r.certificate);
}

TEST(CertificateSearch, ConstantPolynomialNeedsDegreeZero)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 0}, q(1)}}), SparsePolynomial::constant(2, q(3))};
    MinimalResult m = minimal_certificate_degree(fs, 5);
    ASSERT_TRUE(m.cap);
    EXPECT_EQ(*m.cap, 0);
    EXPECT_EQ(m.certificate->cofactors[1], SparsePolynomial::constant(2, make_rational(1, 3)));
}

TEST(MinimalDegree, DirectIdentityNeedsTwo)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 0}, q(1)}}), poly(2, {{{0, 0}, q(1)}, {{1, 1}, q(-1)}})};
    MinimalResult m = minimal_certificate_degree(fs, 10);
    ASSERT_TRUE(m.cap);
    EXPECT_EQ(*m.cap, 2);
}

TEST(MinimalDegree, LinearPlusSimplexShapeWithinBound)
{
    std::vector<SparsePolynomial> fs{
        poly(2, {{{2, 0}, q(1)}, {{1, 0}, q(1)}, {{0, 1}, q(1)}, {{0, 0}, q(1)}}),
        poly(2, {{{2, 0}, q(1)}, {{1, 0}, q(2)}, {{0, 1}, q(1)}, {{0, 0}, q(1)}}),
        poly(2, {{{0, 0}, q(1)}, {{2, 0}, q(1)}, {{0, 2}, q(1)}}),
    };
    const std::int64_t bound = auto_cap(fs);
    EXPECT_EQ(bound, 8);
    MinimalResult m = minimal_certificate_degree(fs, bound);
    ASSERT_TRUE(m.cap);
    EXPECT_LE(*m.cap, 8);
    EXPECT_TRUE(verify_certificate(fs, *m.certificate));
}

TEST(MinimalDegree, AgreesWithLinearScan)
{
    oracle::Gen g(51);
    for (int trial = 0; trial < 10; ++trial) {
        auto fs = random_empty_system(g, 2, 2);
        MinimalResult m = minimal_certificate_degree(fs, 8);
        std::optional<std::int64_t> scan;
        for (std::int64_t c = 0; c <= 8 && !scan; ++c)
            if (certificate_search(fs, SearchMode::total_degree, c).certificate)
                scan = c;
        EXPECT_EQ(m.cap, scan);
    }
}

TEST(VerifyCertificate, DetectsPerturbation)
{
    std::vector<SparsePolynomial> fs{poly(2, {{{1, 0}, q(1)}}), poly(2, {{{0, 0}, q(1)}, {{1, 1}, q(-1)}})};
    Certificate c = *certificate_search(fs, SearchMode::total_degree, 2).certificate;
    EXPECT_TRUE(verify_certificate(fs, c));
    for (std::size_t i = 0; i < c.cofactors.size(); ++i)
        for (const auto& [e, coeff] : c.cofactors[i].terms()) {
            Certificate bad = c;
            bad.cofactors[i].add_term(e, q(1));
            EXPECT_FALSE(verify_certificate(fs, bad));
        }
    Certificate short_list = c;
    short_list.cofactors.pop_back();
    EXPECT_FALSE(verify_certificate(fs, short_list));
}

// ---- properties

TEST(CertificateProperties, FeasibilityMatchesDenseSolve)
{
    oracle::Gen g(52);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = static_cast<std::size_t>(g.uniform(1, 2));
        std::vector<SparsePolynomial> fs;
        const std::size_t s = static_cast<std::size_t>(g.uniform(1, 3));
        for (std::size_t i = 0; i < s; ++i)
            fs.push_back(random_poly(g, n, 3, 2));
        const std::int64_t cap = g.uniform(0, 4);
        SearchResult r = certificate_search(fs, SearchMode::total_degree, cap);
        EXPECT_EQ(static_cast<bool>(r.certificate), dense_feasible(fs, cap)) << "trial " << trial;
        if (r.certificate)
            EXPECT_TRUE(verify_certificate(fs, *r.certificate));
    }
}

TEST(CertificateProperties, EmptyVarietySystemsCertifyWithinBound)
{
    oracle::Gen g(53);
    for (int trial = 0; trial < 12; ++trial) {
        auto fs = random_empty_system(g, 2, static_cast<std::size_t>(g.uniform(1, 2)));
        const std::int64_t bound = auto_cap(fs);
        SearchResult r = certificate_search(fs, SearchMode::total_degree, bound);
        ASSERT_TRUE(r.certificate) << "trial " << trial;
        EXPECT_TRUE(verify_certificate(fs, *r.certificate));
        EXPECT_LE(r.certificate->max_product_degree, bound);
        MinimalResult m = minimal_certificate_degree(fs, bound);
        ASSERT_TRUE(m.cap);
        EXPECT_LE(*m.cap, bound);
    }
}

TEST(CertificateProperties, CapMonotonicity)
{
    oracle::Gen g(54);
    for (int trial = 0; trial < 10; ++trial) {
        auto fs = random_empty_system(g, 2, 2);
        bool seen = false;
        for (std::int64_t cap = 0; cap <= 6; ++cap) {
            const bool ok = static_cast<bool>(certificate_search(fs, SearchMode::total_degree, cap).certificate);
            if (seen)
                EXPECT_TRUE(ok) << "cap " << cap;
            seen = seen || ok;
        }
    }
}

TEST(CertificateProperties, ScalingInvariance)
{
    oracle::Gen g(55);
    for (int trial = 0; trial < 10; ++trial) {
        auto fs = random_empty_system(g, 2, 2);
        const Rational k = g.coefficient();
        std::vector<SparsePolynomial> scaled;
        for (const auto& f : fs)
            scaled.push_back(f.scaled(k));
        for (std::int64_t cap = 0; cap <= 5; ++cap) {
            SearchResult a = certificate_search(fs, SearchMode::total_degree, cap);
            SearchResult b = certificate_search(scaled, SearchMode::total_degree, cap);
            ASSERT_EQ(static_cast<bool>(a.certificate), static_cast<bool>(b.certificate));
            if (a.certificate)
                for (std::size_t i = 0; i < fs.size(); ++i)
                    EXPECT_EQ(b.certificate->cofactors[i], a.certificate->cofactors[i].scaled(1 / k));
        }
    }
}

TEST(CertificateProperties, PermutationEquivariance)
{
    oracle::Gen g(56);
    for (int trial = 0; trial < 10; ++trial) {
        auto fs = random_empty_system(g, 2, 2);
        // identical polynomials can trade cofactors, so equivariance is only asked of distinct ones
        if (fs[0] == fs[1] || fs[0] == fs[2] || fs[1] == fs[2])
            continue;
        std::vector<std::size_t> perm(fs.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), g.engine());
        std::vector<SparsePolynomial> permuted;
        for (std::size_t p : perm)
            permuted.push_back(fs[p]);
        MinimalResult a = minimal_certificate_degree(fs, 8);
        MinimalResult b = minimal_certificate_degree(permuted, 8);
        ASSERT_EQ(a.cap, b.cap);
        if (a.certificate)
            for (std::size_t i = 0; i < perm.size(); ++i)
                EXPECT_EQ(b.certificate->cofactors[i], a.certificate->cofactors[perm[i]]);
    }
}
