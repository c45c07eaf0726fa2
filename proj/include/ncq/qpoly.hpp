#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace ncq {

using Int = mpz_class;
using Rat = mpq_class;

// Dense univariate polynomial over Q. coeffs[i] multiplies t^i; no trailing zeros.
using QPoly = std::vector<Rat>;

namespace qp {

void trim(QPoly& p);
int deg(const QPoly& p);  // deg 0 = -1
bool is_zero(const QPoly& p);
bool is_one(const QPoly& p);
bool is_constant(const QPoly& p);

QPoly constant(const Rat& c);
QPoly monomial(const Rat& c, unsigned k);

QPoly add(const QPoly& a, const QPoly& b);
QPoly sub(const QPoly& a, const QPoly& b);
QPoly neg(const QPoly& a);
QPoly mul(const QPoly& a, const QPoly& b);
QPoly mul_rat(const QPoly& a, const Rat& c);

// quotient/remainder, b != 0
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);

// exact division, throws on nonzero remainder
QPoly divexact(const QPoly& a, const QPoly& b);

// monic gcd (zero poly for gcd(0,0))
QPoly gcd(const QPoly& a, const QPoly& b);

// returns (g, s, t) with s*a + t*b = g, g monic gcd
struct XgcdResult {
    QPoly g, s, t;
};
XgcdResult xgcd(const QPoly& a, const QPoly& b);

Rat eval(const QPoly& p, const Rat& x);

// n-th cyclotomic polynomial, n >= 1
QPoly cyclotomic(unsigned n);

// pretty printer, descending powers, rational coefficients
std::string to_string(const QPoly& p, const std::string& var);

}  // namespace qp
}  // namespace ncq
