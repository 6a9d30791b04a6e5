#include <rbif/multipoly.hpp>

#include <rbif/error.hpp>

#include <sstream>

namespace rbif {

namespace {

int total(const Exponents& e) {
  int s = 0;
  for (int k : e) s += k;
  return s;
}

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::t: return "t";
    case Var::u: return "u";
  }
  return "?";
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::var(Var v, int power) {
  Exponents e{};
  e[idx(v)] = power;
  return term(1, e);
}

MultiPoly MultiPoly::term(const Rational& c, const Exponents& e) {
  MultiPoly p;
  if (sgn(c) != 0) p.terms_.emplace(e, c);
  return p;
}

MultiPoly MultiPoly::from_upoly(const UPoly& p, Var v) {
  MultiPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    Exponents e{};
    e[idx(v)] = i;
    r.add_term(e, p.coeff(i));
  }
  return r;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx(v)]);
  return d;
}

int MultiPoly::min_degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[idx(v)];
  for (const auto& [e, c] : terms_) d = std::min(d, e[idx(v)]);
  return d;
}

MultiPoly MultiPoly::leading_form() const { return homogeneous_part(degree()); }

MultiPoly MultiPoly::homogeneous_part(int k) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_)
    if (total(e) == k) r.terms_.emplace(e, c);
  return r;
}

MultiPoly MultiPoly::coeff(Var v, int k) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != k) continue;
    Exponents f = e;
    f[idx(v)] = 0;
    r.terms_.emplace(f, c);
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::coeffs(Var v) const {
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree(v), -1) + 1));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx(v)] = 0;
    out[static_cast<std::size_t>(e[idx(v)])].terms_.emplace(f, c);
  }
  return out;
}

MultiPoly MultiPoly::from_coeffs(const std::vector<MultiPoly>& c, Var v) {
  MultiPoly r;
  for (std::size_t k = 0; k < c.size(); ++k)
    for (const auto& [e, a] : c[k].terms_) {
      Exponents f = e;
      f[idx(v)] += static_cast<int>(k);
      r.add_term(f, a);
    }
  return r;
}

Rational MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

UPoly MultiPoly::to_upoly(Var v) const {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(degree(v), -1) + 1));
  for (const auto& [e, a] : terms_) {
    for (int k = 0; k < kNumVars; ++k)
      if (k != static_cast<int>(v) && e[static_cast<std::size_t>(k)] != 0)
        throw MathError(ErrorKind::Internal,
                        "polynomial " + to_string() + " is not univariate in " + var_name(v));
    c[static_cast<std::size_t>(e[idx(v)])] = a;
  }
  return UPoly(std::move(c));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r += b;
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  r -= b;
  return r;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(Var v) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int k = e[idx(v)];
    if (k == 0) continue;
    Exponents f = e;
    f[idx(v)] = k - 1;
    r.terms_.emplace(f, c * k);
  }
  return r;
}

MultiPoly MultiPoly::scale(const Rational& s) const {
  if (sgn(s) == 0) return {};
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

MultiPoly MultiPoly::shift(Var v, int k) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx(v)] += k;
    r.terms_.emplace(f, c);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::map<Var, MultiPoly>& bindings) const {
  if (bindings.empty()) return *this;
  // powers of each bound variable are cached
  std::map<Var, std::vector<MultiPoly>> powers;
  for (const auto& [v, q] : bindings) powers[v].push_back(MultiPoly(1));
  auto power_of = [&](Var v, int k) -> const MultiPoly& {
    auto& vec = powers[v];
    while (static_cast<int>(vec.size()) <= k) vec.push_back(vec.back() * bindings.at(v));
    return vec[static_cast<std::size_t>(k)];
  };
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    MultiPoly acc = MultiPoly::term(c, Exponents{});
    for (const auto& [v, q] : bindings) {
      int k = e[idx(v)];
      rest[idx(v)] = 0;
      if (k > 0) acc = acc * power_of(v, k);
    }
    r += acc * MultiPoly::term(1, rest);
  }
  return r;
}

MultiPoly MultiPoly::evaluate(Var v, const Rational& value) const {
  return substitute({{v, MultiPoly(value)}});
}

MultiPoly MultiPoly::reduce_u(const UPoly& modulus) const {
  const int dm = modulus.degree();
  if (degree(Var::u) < dm) return *this;
  // group by the non-u part, reduce each u-polynomial
  std::map<Exponents, std::vector<Rational>, GrlexGreater> groups;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx(Var::u)] = 0;
    auto& v = groups[f];
    std::size_t k = static_cast<std::size_t>(e[idx(Var::u)]);
    if (v.size() <= k) v.resize(k + 1);
    v[k] = c;
  }
  MultiPoly r;
  for (auto& [f, v] : groups) {
    UPoly red = UPoly(std::move(v)) % modulus;
    for (int k = 0; k <= red.degree(); ++k) {
      Exponents g = f;
      g[idx(Var::u)] = k;
      r.add_term(g, red.coeff(k));
    }
  }
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return {};
  return scale(1 / leading_coefficient());
}

MultiPoly MultiPoly::primitive() const {
  if (is_zero()) return {};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (sgn(leading_coefficient()) < 0) s = -s;
  return scale(s);
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool has_var = total(e) > 0;
    bool need_star = false;
    if (!has_var || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (int k = 0; k < kNumVars; ++k) {
      int p = e[static_cast<std::size_t>(k)];
      if (p == 0) continue;
      if (need_star) os << "*";
      os << var_name(static_cast<Var>(k));
      if (p > 1) os << "^" << p;
      need_star = true;
    }
  }
  return os.str();
}

bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& q) {
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "division by the zero polynomial");
  q = MultiPoly();
  MultiPoly rem = a;
  const Exponents& lb = b.leading_exponents();
  const Rational lcb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    Exponents e;
    for (std::size_t k = 0; k < e.size(); ++k) {
      e[k] = lr[k] - lb[k];
      if (e[k] < 0) return false;
    }
    MultiPoly t = MultiPoly::term(rem.leading_coefficient() / lcb, e);
    q += t;
    rem -= t * b;
  }
  return true;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!try_divide(a, b, q))
    throw MathError(ErrorKind::Internal, "inexact division of " + a.to_string() + " by " + b.to_string());
  return q;
}

MultiPoly homogenize(const MultiPoly& p, int d) {
  int dxy = -1;
  for (const auto& [e, c] : p.terms()) dxy = std::max(dxy, e[idx(Var::x)] + e[idx(Var::y)]);
  if (dxy > d)
    throw MathError(ErrorKind::DegreeTooSmall, "cannot homogenize degree " + std::to_string(dxy) +
                                                   " polynomial to degree " + std::to_string(d));
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[idx(Var::z)] += d - e[idx(Var::x)] - e[idx(Var::y)];
    r += MultiPoly::term(c, f);
  }
  return r;
}

}  // namespace rbif
