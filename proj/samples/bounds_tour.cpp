// Prints the mixed and unmixed bounds for a few small systems, and the
// smallest certificate found for one of them.

#include <spnull/bounds.hpp>
#include <spnull/certificate.hpp>

#include <iostream>

using namespace spnull;

namespace {

Support simplex_with_axis(std::size_t n, std::int64_t d)
{
    std::vector<ExponentVector> pts = standard_simplex(n).points();
    for (std::int64_t k = 2; k <= d; ++k) {
        std::vector<std::int64_t> c(n, 0);
        c[0] = k;
        pts.emplace_back(std::move(c));
    }
    return Support(n, std::move(pts));
}

} // namespace

int main()
{
    std::cout << "n  d  M    N     unmixed\n";
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::int64_t d = 2; d <= 4; ++d) {
            std::vector<Support> supports(n, simplex_with_axis(n, d));
            supports.push_back(standard_simplex(n).scaled(d));
            SystemSpec spec(n, supports);
            MixedNssBound b = mixed_nss_bound(spec);
            UnmixedNssBound u = unmixed_nss_bound(spec.union_support(), d);
            std::cout << n << "  " << d << "  " << b.M << "  " << b.N << "  " << u.degree_bound << "\n";
        }
    }

    // x^2 + x + y + 1, x^2 + 2x + y + 1, x^2 + y^2 + 1 have no common zero
    const Rational one(1);
    std::vector<SparsePolynomial> fs{
        SparsePolynomial(2, {{{2, 0}, one}, {{1, 0}, one}, {{0, 1}, one}, {{0, 0}, one}}),
        SparsePolynomial(2, {{{2, 0}, one}, {{1, 0}, Rational(2)}, {{0, 1}, one}, {{0, 0}, one}}),
        SparsePolynomial(2, {{{0, 0}, one}, {{2, 0}, one}, {{0, 2}, one}}),
    };
    std::vector<Support> supports;
    for (const auto& f : fs)
        supports.push_back(f.support());
    const DegreeCap cap = certificate_degree_cap(SystemSpec(2, supports));
    MinimalResult least = minimal_certificate_degree(fs, cap.cap.get_si());
    std::cout << "\ncomplete cap " << cap.cap << ", smallest certificate at degree " << *least.cap << "\n";
    for (std::size_t i = 0; i < fs.size(); ++i)
        std::cout << "  g" << i + 1 << " = " << to_string(least.certificate->cofactors[i]) << "\n";
}
