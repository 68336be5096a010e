#include "heightlab/qarith.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace heightlab {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("parse_rat: bad rational '" + std::string(s) + "'"); };
  size_t slash = s.find('/');
  auto parse_int = [&](std::string_view t) {
    if (!t.empty() && t[0] == '+') t.remove_prefix(1);  // mpz rejects a leading '+'
    if (t.empty()) throw bad();
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw bad();
    for (size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) throw bad();
    return Int(std::string(t), 10);
  };
  if (slash == std::string_view::npos) return make_rat(parse_int(s), Int(1));
  return make_rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

std::string rat_str(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string int_str(const Int& n) { return n.get_str(); }

double log_rat(const Rat& x) {
  if (sgn(x) <= 0) throw std::domain_error("log_rat: nonpositive argument");
  // mantissa-exponent split keeps this finite for operands beyond double range
  signed long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, x.get_num().get_mpz_t());
  double md = mpz_get_d_2exp(&ed, x.get_den().get_mpz_t());
  return std::log(mn) - std::log(md) + static_cast<double>(en - ed) * std::numbers::ln2;
}

Rat rat_pow(const Rat& x, long k) {
  if (k < 0) {
    if (x == 0) throw std::domain_error("rat_pow: negative power of zero");
    return rat_pow(Rat(1) / x, -k);
  }
  Rat num, den;
  mpz_pow_ui(num.get_num().get_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(num.get_den().get_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(k));
  return num;
}

namespace {

const std::vector<uint32_t>& small_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t limit = 1u << 16;
    std::vector<bool> sieve(limit, true);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i < limit; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t(i) * i; j < limit; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(const Int& n, const Int& base) {
  // n odd, n > 2, base reduced mod n
  Int d = n - 1;
  unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
  Int x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

Int pollard_brent(const Int& n, unsigned long c0) {
  // Brent's improvement of the rho cycle finder; n odd composite, not a prime power of 2
  Int y(2), c(c0), m(128), g(1), r(1), q(1), x, ys;
  while (g == 1) {
    x = y;
    for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
    Int k(0);
    while (k < r && g == 1) {
      ys = y;
      Int lim = (m < r - k) ? m : r - k;
      for (Int i = 0; i < lim; ++i) {
        y = (y * y + c) % n;
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = (ys * ys + c) % n;
      Int diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void factor_into(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = n;
  unsigned long c = 1;
  while (true) {
    d = pollard_brent(n, c);
    if (d != n && d != 1) break;
    ++c;
  }
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (uint32_t p : small_primes()) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    if (Int(p) * p > n) return true;
  }
  // base set deterministic for n < 3.317e24
  static const std::array<int, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (int b : bases)
    if (!miller_rabin(n, Int(b))) return false;
  return true;
}

std::vector<Int> prime_factors(const Int& n) {
  if (n == 0) throw std::invalid_argument("prime_factors: zero argument");
  Int m = abs(n);
  std::vector<Int> out;
  for (uint32_t p : small_primes()) {
    if (m == 1) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
    }
  }
  if (m > 1) factor_into(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Place Place::infinity() { return Place{}; }

Place Place::finite(Int p) {
  if (!is_prime(p)) throw std::invalid_argument("Place::finite: " + p.get_str() + " is not prime");
  Place v;
  v.p_ = std::move(p);
  return v;
}

const Int& Place::prime() const {
  if (!p_) throw std::logic_error("Place::prime called on the archimedean place");
  return *p_;
}

std::string Place::str() const { return is_infinite() ? "inf" : "p=" + p_->get_str(); }

Place Place::parse(std::string_view s) {
  if (s == "inf" || s == "infty" || s == "oo") return infinity();
  if (s.rfind("p=", 0) == 0) s.remove_prefix(2);
  Rat q = parse_rat(s);
  if (q.get_den() != 1 || q <= 0) throw std::invalid_argument("Place::parse: bad place '" + std::string(s) + "'");
  return finite(q.get_num());
}

bool operator==(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return false;
  return a.is_infinite() || *a.p_ == *b.p_;
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite()) return b.is_finite();
  if (b.is_infinite()) return false;
  return *a.p_ < *b.p_;
}

PlaceSet make_place_set(std::vector<Place> places) {
  std::sort(places.begin(), places.end());
  for (size_t i = 1; i < places.size(); ++i)
    if (places[i] == places[i - 1])
      throw std::invalid_argument("make_place_set: duplicate place " + places[i].str());
  return places;
}

bool place_set_contains(const PlaceSet& s, const Place& v) {
  return std::binary_search(s.begin(), s.end(), v);
}

PlaceSet parse_place_set(std::string_view csv) {
  std::vector<Place> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view tok = csv.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(Place::parse(tok));
    pos = comma + 1;
  }
  return make_place_set(std::move(out));
}

std::string place_set_str(const PlaceSet& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i].is_infinite() ? "inf" : s[i].prime().get_str();
  }
  return out;
}

long ord_p(const Rat& x, const Int& p) {
  if (x == 0) throw std::invalid_argument("ord_p: zero argument");
  Int tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

Rat norm(const Rat& x, const Place& v) {
  if (x == 0) return Rat(0);
  if (v.is_infinite()) return abs(x);
  return rat_pow(Rat(v.prime()), -ord_p(x, v.prime()));
}

PlaceSet relevant_places(const Rat& x) {
  if (x == 0) throw std::invalid_argument("relevant_places: zero has no finite support");
  std::vector<Place> out;
  out.push_back(Place::infinity());
  std::vector<Int> primes = prime_factors(x.get_num());
  for (const Int& p : prime_factors(x.get_den())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (Int& p : primes) out.push_back(Place::finite(std::move(p)));
  return out;  // already sorted: inf first, primes ascending
}

Rat product_formula_check(const Rat& x) {
  Rat prod(1);
  for (const Place& v : relevant_places(x)) prod *= norm(x, v);
  return prod;
}

}  // namespace heightlab
