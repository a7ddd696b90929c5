#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <regex>

namespace lorder {

using Q = mpq_class;
using Z = mpz_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComputeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Q qnorm(Q x) {
  x.canonicalize();
  return x;
}

// gmp has no long long overloads; long is 64-bit here
inline Q qll(long long v) { return Q(static_cast<long>(v)); }

inline std::string qstr(const Q& x) { return x.get_str(); }

inline Q parse_q(const std::string& s) {
  Q r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  r.canonicalize();
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  return r;
}

inline int sgn(const Q& x) { return ::sgn(x); }

inline Q qpow(const Q& base, long e) {
  Q r = 1, b = base;
  bool inv = e < 0;
  unsigned long n = inv ? -static_cast<unsigned long>(e) : e;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  if (inv) r = 1 / r;
  return r;
}

// p + q*sqrt(d), d squarefree > 1 (d = 0 means plain rational)
class Quad {
 public:
  Q p, q;
  long d = 0;

  Quad() = default;
  Quad(Q p_) : p(std::move(p_)) {}
  Quad(Q p_, Q q_, long d_) : p(std::move(p_)), q(std::move(q_)), d(d_) {
    if (d != 0 && d < 2) throw ParseError("sqrt radicand must be >= 2");
    if (d == 0 && q != 0) throw ParseError("missing radicand");
    for (long k = 2; k * k <= d; ++k)
      if (d % (k * k) == 0) throw ParseError("radicand must be squarefree");
    if (q == 0) d = 0;
  }

  bool irrational() const { return d != 0 && q != 0; }

  int sign() const {
    int sp = ::sgn(p), sq = ::sgn(q);
    if (sq == 0 || d == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    Q lhs = p * p, rhs = q * q * d;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // unreachable for squarefree d
    return c > 0 ? sp : sq;
  }

  long radicand(const Quad& o) const {
    if (d && o.d && d != o.d) throw ComputeError("mixed quadratic fields");
    return d ? d : o.d;
  }

  friend Quad operator+(const Quad& a, const Quad& b) {
    long dd = a.radicand(b);
    Quad r;
    r.p = a.p + b.p;
    r.q = a.q + b.q;
    r.d = r.q == 0 ? 0 : dd;
    return r;
  }
  friend Quad operator-(const Quad& a) {
    Quad r = a;
    r.p = -r.p;
    r.q = -r.q;
    return r;
  }
  friend Quad operator-(const Quad& a, const Quad& b) { return a + (-b); }
  friend Quad operator*(const Quad& a, const Quad& b) {
    long dd = a.radicand(b);
    Quad r;
    r.p = a.p * b.p + a.q * b.q * dd;
    r.q = a.p * b.q + a.q * b.p;
    r.d = r.q == 0 ? 0 : dd;
    return r;
  }
  friend Quad operator*(const Q& s, const Quad& a) { return Quad(s) * a; }
  Quad inverse() const {
    // 1/(p+q√d) = (p - q√d)/(p^2 - d q^2)
    Q n = p * p - q * q * d;
    if (n == 0) throw ComputeError("division by zero in quadratic field");
    Quad r;
    r.p = p / n;
    r.q = -q / n;
    r.d = r.q == 0 ? 0 : d;
    return r;
  }
  friend Quad operator/(const Quad& a, const Quad& b) { return a * b.inverse(); }
  friend bool operator<(const Quad& a, const Quad& b) { return (a - b).sign() < 0; }
  friend bool operator==(const Quad& a, const Quad& b) { return (a - b).sign() == 0; }

  std::string str() const {
    if (q == 0) return qstr(p);
    std::string s;
    if (p != 0) s = qstr(p) + (q > 0 ? "+" : "");
    return s + qstr(q) + "*sqrt" + std::to_string(d);
  }

  long double approx() const {
    return static_cast<long double>(p.get_d()) +
           static_cast<long double>(q.get_d()) * std::sqrt(static_cast<long double>(d));
  }
};

// accepts "sqrt2", "1+1*sqrt2", "-1/2*sqrt3", "3/4", "2-sqrt5"
inline Quad parse_quad(std::string s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  // p needs an explicit sign before the surd part, otherwise "1/10*sqrt2" splits as 1/1 + 0*sqrt2
  static const std::regex rat(R"(^[+-]?\d+(?:/\d+)?$)");
  static const std::regex surd(R"(^(?:([+-]?\d+(?:/\d+)?)([+-]))?([+-])?(?:(\d+(?:/\d+)?)\*)?sqrt(\d+)$)");
  if (std::regex_match(t, rat)) return Quad(parse_q(t));
  std::smatch m;
  if (t.empty() || !std::regex_match(t, m, surd)) throw ParseError("bad quadratic irrational: '" + s + "'");
  Q p = m[1].matched ? parse_q(m[1].str()) : Q(0);
  Q q = m[4].matched ? parse_q(m[4].str()) : Q(1);
  if (m[2].matched && m[2].str() == "-") q = -q;
  if (m[3].matched && m[3].str() == "-") q = -q;
  return Quad(p, q, std::stol(m[5].str()));
}

}  // namespace lorder
