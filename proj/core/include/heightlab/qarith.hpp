#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heightlab {

// Exact arithmetic over Q. All values are immutable once built and every
// operation here is a pure function, so they can be moved freely between
// threads.
using Int = mpz_class;
using Rat = mpq_class;

// num/den reduced to lowest terms, den > 0. Throws on den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

// Accepts "a" or "a/b" in base 10 (optional leading '-').
Rat parse_rat(std::string_view s);

// Prints "a" or "a/b"; matches parse_rat.
std::string rat_str(const Rat& x);
std::string int_str(const Int& n);

// log of a positive rational without overflowing double for huge operands.
double log_rat(const Rat& x);

// x^k for k >= 0 (and k < 0 when x != 0).
Rat rat_pow(const Rat& x, long k);

// Trial division below 2^16, then strong pseudoprime tests to the base set
// {2,...,37}, deterministic for n < 3.3e24.
bool is_prime(const Int& n);

// Distinct prime divisors of |n| in ascending order; n must be nonzero.
// Small factors by trial division, large cofactors by Brent's rho.
std::vector<Int> prime_factors(const Int& n);

// A place of Q: the archimedean place or a finite prime p.
class Place {
 public:
  static Place infinity();
  static Place finite(Int p);  // requires p prime

  bool is_infinite() const { return !p_.has_value(); }
  bool is_finite() const { return p_.has_value(); }
  const Int& prime() const;

  // Local degree n_v = [Q_v : Q_v] = 1; kept so height formulas read like
  // their number-field counterparts.
  static constexpr int local_degree = 1;

  // Prints "inf" or "p=<prime>".
  std::string str() const;
  // Accepts "inf", "p=<prime>" or a bare prime like "7".
  static Place parse(std::string_view s);

  // Infinity sorts before all finite places; finite places by prime.
  friend bool operator==(const Place& a, const Place& b);
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place() = default;
  std::optional<Int> p_;
};

// Finite ordered set of places, infinity first then primes ascending.
using PlaceSet = std::vector<Place>;

// Sorts and rejects duplicates.
PlaceSet make_place_set(std::vector<Place> places);
bool place_set_contains(const PlaceSet& s, const Place& v);
// Parses "inf,2,3,5".
PlaceSet parse_place_set(std::string_view csv);
std::string place_set_str(const PlaceSet& s);

// p-adic valuation ord_p(x) of a nonzero rational.
long ord_p(const Rat& x, const Int& p);

// The normalized absolute value ||x||_v: |x| at infinity, p^(-ord_p x) at a
// finite place, and ||0||_v = 0. Exact.
Rat norm(const Rat& x, const Place& v);

// {infinity} together with the primes dividing numerator or denominator;
// outside this set every norm of x equals 1. Requires x != 0.
PlaceSet relevant_places(const Rat& x);

// Product of norm(x, v) over relevant_places(x); equals 1 for every x != 0.
Rat product_formula_check(const Rat& x);

}  // namespace heightlab
