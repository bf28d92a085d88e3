#ifndef SPNULL_CORE_HPP
#define SPNULL_CORE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spnull {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed or out-of-contract input (bad dimension, empty set, negative exponent, ...).
class InvalidInput : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A documented size wall was hit (subset enumeration cap, inclusion-exclusion dimension, ...).
class LimitExceeded : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// The random-lifting oracle could not find a generic lift within its retry budget.
class GenericityFailure : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// An exact invariant that must hold by construction did not.
class InternalError : public std::logic_error
{
  public:
    using std::logic_error::logic_error;
};

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) { return v.get_str(); }

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// num/den in lowest terms.
inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw InvalidInput("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or an integer literal. Decimal or exponent notation is rejected.
inline Rational parse_rational(const std::string& text)
{
    if (text.empty())
        throw InvalidInput("empty rational literal");
    std::size_t slash = text.find('/');
    auto valid_int = [](const std::string& s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw InvalidInput("not an exact rational literal: '" + text + "'");
    if (num[0] == '+')
        num = num.substr(1);
    Integer d(den, 10);
    if (d == 0)
        throw InvalidInput("zero denominator in '" + text + "'");
    Rational r(Integer(num, 10), d);
    r.canonicalize();
    return r;
}

} // namespace spnull

#endif // SPNULL_CORE_HPP
