#include "trop/laurent.hpp"

#include <cctype>
#include <sstream>

#include "trop/errors.hpp"

namespace trop {

ResiduePoly ResiduePoly::operator*(const ResiduePoly& o) const {
  if (rank != o.rank) throw DomainError("residue polynomial rank mismatch");
  ResiduePoly out;
  out.rank = rank;
  for (const auto& [u1, c1] : terms)
    for (const auto& [u2, c2] : o.terms) {
      Vec u = u1 + u2;
      auto [it, fresh] = out.terms.emplace(u, c1 * c2);
      if (!fresh) {
        it->second += c1 * c2;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  return out;
}

std::string ResiduePoly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (u(i).is_zero()) continue;
      os << "*x" << (i + 1);
      if (u(i) != Rational(1)) os << '^' << u(i);
    }
  }
  return os.str();
}

LaurentPoly LaurentPoly::term(const Vec& exponent, const PuiseuxScalar& coeff) {
  if (!is_integral(exponent)) throw DomainError("exponent vector must be integral");
  LaurentPoly f(static_cast<int>(exponent.size()));
  f.insert_term(exponent, coeff);
  return f;
}

LaurentPoly LaurentPoly::constant(int rank, const PuiseuxScalar& c) {
  Vec u(rank);
  for (int i = 0; i < rank; ++i) u(i) = Rational(0);
  return term(u, c);
}

LaurentPoly LaurentPoly::variable(int rank, int i) {
  if (i < 0 || i >= rank) throw DomainError("variable index out of range");
  Vec u(rank);
  for (int j = 0; j < rank; ++j) u(j) = Rational(j == i ? 1 : 0);
  return term(u, PuiseuxScalar::constant(Rational(1)));
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && trop::is_zero(terms_.begin()->first);
}

bool LaurentPoly::trivial_coeffs() const {
  for (const auto& [u, c] : terms_)
    if (!c.trivial_mode()) return false;
  return true;
}

LaurentPoly LaurentPoly::as_puiseux() const {
  LaurentPoly out(rank_);
  for (const auto& [u, c] : terms_) out.terms_.emplace(u, c.as_puiseux());
  return out;
}

void LaurentPoly::insert_term(const Vec& u, const PuiseuxScalar& c) {
  if (u.size() != rank_) throw DomainError("exponent rank mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(u, c);
  if (!fresh) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw DomainError("polynomial rank mismatch");
  LaurentPoly out = *this;
  for (const auto& [u, c] : o.terms_) out.insert_term(u, c);
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [u, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw DomainError("polynomial rank mismatch");
  LaurentPoly out(rank_);
  for (const auto& [u1, c1] : terms_)
    for (const auto& [u2, c2] : o.terms_) out.insert_term(Vec(u1 + u2), c1 * c2);
  return out;
}

LaurentPoly LaurentPoly::shift(const Vec& u) const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) out.insert_term(Vec(e + u), c);
  return out;
}

ExtRat LaurentPoly::psi(const Vec& w) const {
  if (terms_.empty()) throw DomainError("Ψ of the zero polynomial");
  if (w.size() != rank_) throw DomainError("weight vector rank mismatch");
  ExtRat best = ExtRat::infinity();
  for (const auto& [u, c] : terms_) {
    ExtRat weight = c.valuation() + ExtRat(Rational(u.dot(w)));
    best = min(best, weight);
  }
  return best;
}

ResiduePoly LaurentPoly::initial_form(const Vec& v) const {
  ExtRat m = psi(v);
  ResiduePoly out;
  out.rank = rank_;
  for (const auto& [u, c] : terms_) {
    ExtRat weight = c.valuation() + ExtRat(Rational(u.dot(v)));
    if (weight == m) out.terms.emplace(u, c.residue_leading());
  }
  return out;
}

bool LaurentPoly::in_tilted_ring(const Vec& v) const {
  for (const auto& [u, c] : terms_) {
    ExtRat weight = c.valuation() + ExtRat(Rational(u.dot(v)));
    if (weight < ExtRat(0)) return false;
  }
  return true;
}

PuiseuxScalar LaurentPoly::eval(const std::vector<PuiseuxScalar>& y) const {
  if (static_cast<int>(y.size()) != rank_) throw DomainError("evaluation arity mismatch");
  PuiseuxScalar acc = PuiseuxScalar::zero();
  for (const auto& [u, c] : terms_) {
    PuiseuxScalar prod = c;
    for (int i = 0; i < rank_; ++i) {
      long e = static_cast<long>(u(i).num().convert_to<long long>());
      if (e == 0) continue;
      if (y[static_cast<size_t>(i)].is_zero()) {
        if (e < 0) throw DomainError("negative power of a zero coordinate");
        prod = PuiseuxScalar::zero();
        break;
      }
      prod = prod * y[static_cast<size_t>(i)].pow(e);
    }
    acc = acc + prod;
  }
  return acc;
}

ExtRat LaurentPoly::eval_valuation(const std::vector<PuiseuxScalar>& y) const {
  if (static_cast<int>(y.size()) != rank_) throw DomainError("evaluation arity mismatch");
  Vec clear(rank_);
  for (int i = 0; i < rank_; ++i) clear(i) = Rational(0);
  for (const auto& [u, c] : terms_)
    for (int i = 0; i < rank_; ++i)
      if (u(i) < clear(i)) clear(i) = u(i);
  Rational correction(0);
  for (int i = 0; i < rank_; ++i) {
    if (clear(i).is_zero()) continue;
    ExtRat vi = y[static_cast<size_t>(i)].valuation();
    if (vi.is_infinite())
      throw DomainError("function has a pole along a zero coordinate");
    correction += -clear(i) * vi.finite();
  }
  ExtRat v = shift(Vec(-clear)).eval(y).valuation();
  if (v.is_infinite()) return v;
  return ExtRat(v.finite() - correction);
}

Vec LaurentPoly::monomial_factor() const {
  if (terms_.empty()) throw DomainError("monomial factor of the zero polynomial");
  Vec m = terms_.begin()->first;
  for (const auto& [u, c] : terms_)
    for (int i = 0; i < rank_; ++i)
      if (u(i) < m(i)) m(i) = u(i);
  return m;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c << ')';
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      if (u(i).is_zero()) continue;
      os << "*x" << (i + 1);
      if (u(i) != Rational(1)) os << '^' << u(i);
    }
  }
  return os.str();
}

namespace {

struct PCursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(i) + " in '" + s + "'");
  }
  std::string number(bool allow_sign) {
    skip_ws();
    size_t start = i;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_start) fail("expected a number");
    if (i < s.size() && s[i] == '/') {
      ++i;
      size_t d = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == d) fail("expected a denominator");
    }
    return s.substr(start, i - start);
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, int rank, bool trivial) {
  PCursor c{text};
  LaurentPoly out(rank);
  bool negate = false;
  if (c.eat('-')) negate = true;
  while (true) {
    PuiseuxScalar coeff = PuiseuxScalar::constant(Rational(1), trivial);
    Vec u(rank);
    for (int i = 0; i < rank; ++i) u(i) = Rational(0);
    bool saw_factor = false;
    while (true) {
      char p = c.peek();
      if (std::isdigit(static_cast<unsigned char>(p))) {
        coeff = coeff * PuiseuxScalar::constant(Rational::parse(c.number(false)), trivial);
        saw_factor = true;
      } else if (p == '(') {
        c.eat('(');
        size_t depth = 1, start = c.i;
        while (c.i < c.s.size() && depth > 0) {
          if (c.s[c.i] == '(') ++depth;
          if (c.s[c.i] == ')') --depth;
          ++c.i;
        }
        if (depth != 0) c.fail("unbalanced parenthesis");
        coeff = coeff * PuiseuxScalar::parse(c.s.substr(start, c.i - 1 - start), trivial);
        saw_factor = true;
      } else if (p == 't') {
        c.eat('t');
        Rational e(1);
        if (c.eat('^')) e = Rational::parse(c.number(true));
        coeff = coeff * PuiseuxScalar::monomial(Rational(1), e);
        saw_factor = true;
      } else if (p == 'x' || p == 'y' || p == 'z' || p == 'w') {
        int var = -1;
        if (c.eat('x')) {
          if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            size_t start = c.i;
            while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
            var = static_cast<int>(std::stol(c.s.substr(start, c.i - start))) - 1;
          } else {
            var = 0;
          }
        } else if (c.eat('y')) {
          var = 1;
        } else if (c.eat('z')) {
          var = 2;
        } else {
          c.eat('w');
          var = 3;
        }
        if (var < 0 || var >= rank) c.fail("variable index out of range");
        Rational e(1);
        if (c.eat('^')) e = Rational::parse(c.number(true));
        if (!e.is_integer()) c.fail("variable exponents must be integers");
        u(var) += e;
        saw_factor = true;
      } else {
        break;
      }
      c.eat('*');
    }
    if (!saw_factor) c.fail("expected a term");
    if (negate) coeff = -coeff;
    out.insert_term(u, coeff);
    if (c.done()) break;
    if (c.eat('+'))
      negate = false;
    else if (c.eat('-'))
      negate = true;
    else
      c.fail("expected '+' or '-'");
  }
  return out;
}

LaurentPoly substitute(const LaurentPoly& f, const std::vector<LaurentPoly>& images) {
  if (static_cast<int>(images.size()) != f.rank())
    throw DomainError("substitution arity mismatch");
  if (images.empty()) {
    LaurentPoly out(0);
    for (const auto& [u, c] : f.terms()) out = out + LaurentPoly::constant(0, c);
    return out;
  }
  int out_rank = images[0].rank();
  LaurentPoly acc(out_rank);
  for (const auto& [u, c] : f.terms()) {
    LaurentPoly prod = LaurentPoly::constant(out_rank, c);
    for (int i = 0; i < f.rank(); ++i) {
      long e = static_cast<long>(u(i).num().convert_to<long long>());
      if (e == 0) continue;
      const LaurentPoly& g = images[static_cast<size_t>(i)];
      if (e < 0 && !g.is_monomial())
        throw UnsupportedError("negative power of a non-monomial image");
      if (g.is_zero()) {
        prod = LaurentPoly::zero(out_rank);
        break;
      }
      LaurentPoly base = g;
      long n = e;
      if (e < 0) {
        const auto& [gu, gc] = *g.terms().begin();
        base = LaurentPoly::term(Vec(-gu), gc.invert_monomial());
        n = -e;
      }
      for (long k = 0; k < n; ++k) prod = prod * base;
    }
    acc = acc + prod;
  }
  return acc;
}

}  // namespace trop
