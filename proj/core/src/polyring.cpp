#include "heightlab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace heightlab {

Monomial Monomial::from_exponents(std::vector<uint32_t> exps) {
  Monomial m(0);
  m.e_ = std::move(exps);
  return m;
}

uint32_t Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e_.size() != o.e_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
  Monomial r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (e_.size() != o.e_.size()) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
  Monomial r(e_.size());
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) throw std::invalid_argument("Monomial: not a divisor");
    r.e_[i] = o.e_[i] - e_[i];
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.e_.size());
  for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](uint32_t e) { return e == 0; });
}

std::string Monomial::str() const {
  std::string out;
  for (size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
  return a.exponents() > b.exponents();
}

std::vector<Monomial> enumerate_monomials(size_t num_vars, uint32_t d) {
  std::vector<Monomial> out;
  if (num_vars == 0) return out;
  std::vector<uint32_t> cur(num_vars, 0);
  // descending lex: place as much as possible on the leftmost variable first
  auto rec = [&](auto&& self, size_t i, uint32_t rest) -> void {
    if (i + 1 == num_vars) {
      cur[i] = rest;
      out.push_back(Monomial::from_exponents(cur));
      return;
    }
    for (uint32_t e = rest + 1; e-- > 0;) {
      cur[i] = e;
      self(self, i + 1, rest - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::vector<Monomial> monomials_of_degree(size_t m, uint32_t d) {
  return enumerate_monomials(m + 1, d);
}

HomPoly HomPoly::single(size_t num_vars, const Monomial& m, const Rat& coef) {
  HomPoly p(num_vars, m.degree());
  p.add_term(m, coef);
  return p;
}

HomPoly HomPoly::variable(size_t num_vars, size_t i) {
  Monomial m(num_vars);
  std::vector<uint32_t> e(num_vars, 0);
  e[i] = 1;
  return single(num_vars, Monomial::from_exponents(std::move(e)), Rat(1));
}

Rat HomPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void HomPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.num_vars() != nvars_) throw std::invalid_argument("HomPoly: variable count mismatch");
  if (m.degree() != deg_)
    throw std::invalid_argument("HomPoly: term of degree " + std::to_string(m.degree()) +
                                " in a polynomial of degree " + std::to_string(deg_));
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
  if (nvars_ != o.nvars_ || deg_ != o.deg_)
    throw std::invalid_argument("HomPoly: +/- requires matching variables and degree");
  HomPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const { return *this + (-o); }

HomPoly HomPoly::operator-() const {
  HomPoly r(nvars_, deg_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("HomPoly: * requires matching variables");
  HomPoly r(nvars_, deg_ + o.deg_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

HomPoly HomPoly::operator*(const Rat& c) const {
  HomPoly r(nvars_, deg_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Rat HomPoly::evaluate(const std::vector<Rat>& coords) const {
  if (coords.size() != nvars_) throw std::invalid_argument("HomPoly::evaluate: dimension mismatch");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < nvars_; ++i)
      if (m.exp(i) > 0) t *= rat_pow(coords[i], m.exp(i));
    acc += t;
  }
  return acc;
}

Rat HomPoly::evaluate(const ProjPoint& x) const { return evaluate(x.coords_rat()); }

HomPoly HomPoly::pow(uint32_t k) const {
  if (k < 1) throw std::invalid_argument("HomPoly::pow: exponent must be >= 1");
  HomPoly acc = *this;
  for (uint32_t i = 1; i < k; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const HomPoly& a, const HomPoly& b) {
  return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.terms_ == b.terms_;
}

std::string HomPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (m.is_one()) {
      out += rat_str(a);
    } else if (a == 1) {
      out += m.str();
    } else {
      out += rat_str(a) + "*" + m.str();
    }
  }
  return out;
}

ProjPoint::ProjPoint(const std::vector<Rat>& coords) {
  if (coords.empty()) throw std::invalid_argument("ProjPoint: no coordinates");
  Int den_lcm(1);
  for (const Rat& c : coords) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> ints;
  ints.reserve(coords.size());
  Int content(0);
  for (const Rat& c : coords) {
    Int v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (content == 0) throw std::invalid_argument("ProjPoint: all coordinates are zero");
  int lead = 0;
  for (const Int& v : ints) {
    if (v != 0) {
      lead = sgn(v);
      break;
    }
  }
  for (Int& v : ints) {
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    if (lead < 0) v = -v;
  }
  coords_ = std::move(ints);
}

ProjPoint ProjPoint::from_ints(std::vector<Int> coords) {
  std::vector<Rat> rats;
  rats.reserve(coords.size());
  for (Int& c : coords) rats.emplace_back(std::move(c));
  return ProjPoint(rats);
}

std::vector<Rat> ProjPoint::coords_rat() const {
  std::vector<Rat> out;
  out.reserve(coords_.size());
  for (const Int& c : coords_) out.emplace_back(c);
  return out;
}

std::string ProjPoint::str() const {
  std::string out = "(";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ":";
    out += coords_[i].get_str();
  }
  return out + ")";
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
  if (a.coords_.size() != b.coords_.size()) return a.coords_.size() < b.coords_.size();
  for (size_t i = 0; i < a.coords_.size(); ++i) {
    int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("parse_poly: " + why + " at offset " + std::to_string(pos) +
                                " in '" + std::string(s) + "'");
  }

  uint64_t parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return std::stoull(std::string(s.substr(start, pos - start)));
  }

  Rat parse_coef() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string num(s.substr(start, pos - start));
    if (eat('/')) {
      skip_ws();
      size_t dstart = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == dstart) fail("expected a denominator");
      return make_rat(Int(num, 10), Int(std::string(s.substr(dstart, pos - dstart)), 10));
    }
    return Rat(Int(num, 10));
  }

  struct RawTerm {
    Rat coef;
    std::map<size_t, uint32_t> exps;
  };

  RawTerm parse_term() {
    RawTerm t{Rat(1), {}};
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coef = parse_coef();
      saw_factor = true;
      if (!eat('*')) return t;  // bare rational constant
    }
    while (true) {
      skip_ws();
      if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X' || s[pos] == 'y')) {
        ++pos;
        size_t var = parse_uint();
        uint32_t e = 1;
        if (eat('^')) e = static_cast<uint32_t>(parse_uint());
        t.exps[var] += e;
        saw_factor = true;
        if (eat('*')) continue;
        break;
      }
      if (!saw_factor) fail("expected a term");
      break;
    }
    return t;
  }

  std::vector<RawTerm> parse_all() {
    std::vector<RawTerm> terms;
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    while (true) {
      RawTerm t = parse_term();
      if (neg) t.coef = -t.coef;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        fail("expected '+' or '-'");
    }
    return terms;
  }
};

}  // namespace

HomPoly parse_poly(std::string_view str, size_t num_vars) {
  PolyParser parser{str};
  auto raw = parser.parse_all();
  uint32_t degree = 0;
  bool saw_nonzero = false;
  for (const auto& t : raw) {
    if (t.coef == 0) continue;
    uint32_t d = 0;
    for (const auto& [var, e] : t.exps) {
      if (var >= num_vars)
        throw std::invalid_argument("parse_poly: variable x" + std::to_string(var) +
                                    " out of range for " + std::to_string(num_vars) + " variables");
      d += e;
    }
    if (!saw_nonzero) {
      degree = d;
      saw_nonzero = true;
    } else if (d != degree) {
      throw std::invalid_argument("parse_poly: not homogeneous: '" + std::string(str) + "'");
    }
  }
  HomPoly p(num_vars, degree);
  for (const auto& t : raw) {
    if (t.coef == 0) continue;
    std::vector<uint32_t> exps(num_vars, 0);
    for (const auto& [var, e] : t.exps) exps[var] = e;
    p.add_term(Monomial::from_exponents(std::move(exps)), t.coef);
  }
  return p;
}

HomPoly parse_poly(std::string_view str) {
  PolyParser parser{str};
  auto raw = parser.parse_all();
  size_t num_vars = 1;
  for (const auto& t : raw)
    for (const auto& [var, e] : t.exps) num_vars = std::max(num_vars, var + 1);
  return parse_poly(str, num_vars);
}

ProjPoint parse_point(std::string_view str) {
  std::string_view s = str;
  auto trim = [](std::string_view& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  };
  trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("parse_point: expected '(a0:...:am)', got '" + std::string(str) + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<Rat> coords;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t colon = s.find(':', pos);
    if (colon == std::string_view::npos) colon = s.size();
    std::string_view tok = s.substr(pos, colon - pos);
    trim(tok);
    if (tok.empty()) throw std::invalid_argument("parse_point: empty coordinate in '" + std::string(str) + "'");
    coords.push_back(parse_rat(tok));
    pos = colon + 1;
    if (colon == s.size()) break;
  }
  return ProjPoint(coords);
}

std::pair<std::vector<HomPoly>, uint32_t> normalize_degrees(const std::vector<HomPoly>& qs) {
  if (qs.empty()) throw std::invalid_argument("normalize_degrees: empty family");
  uint32_t d = 1;
  for (const HomPoly& q : qs) {
    if (q.is_zero()) throw std::invalid_argument("normalize_degrees: zero polynomial");
    if (q.degree() == 0) throw std::invalid_argument("normalize_degrees: degree must be >= 1");
    d = static_cast<uint32_t>(std::lcm<uint64_t>(d, q.degree()));
  }
  std::vector<HomPoly> out;
  out.reserve(qs.size());
  for (const HomPoly& q : qs) {
    uint32_t k = d / q.degree();
    out.push_back(k == 1 ? q : q.pow(k));
  }
  return {std::move(out), d};
}

}  // namespace heightlab
