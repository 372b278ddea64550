/// @file polynomial.cpp
#include "cel/polynomial.hpp"

#include <stdexcept>

namespace cel {

namespace {

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

long double Polynomial::eval(long double x) const {
  long double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + static_cast<long double>(to_double(*it));
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (int k = 1; k <= degree(); ++k) d.push_back(coeffs_[static_cast<size_t>(k)] * k);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (1 / leading()) * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.degree(), b.degree()) + 1;
  std::vector<Rational> c(static_cast<size_t>(std::max(n, 0)));
  for (int k = 0; k < n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<size_t>(i + j)] += a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
  std::vector<Rational> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(c) << ")";
    if (k > 0) os << "x^" << k;
    first = false;
  }
  return os;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> q(static_cast<size_t>(std::max(a.degree() - b.degree() + 1, 0)));
  Polynomial r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    Rational f = r.leading() / b.leading();
    q[static_cast<size_t>(shift)] = f;
    std::vector<Rational> term(static_cast<size_t>(shift + 1));
    term[static_cast<size_t>(shift)] = f;
    r = r - Polynomial(std::move(term)) * b;
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() < 1) return p;
  return divmod(p, gcd(p, p.derivative())).quotient;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    chain_.push_back(-r);
  }
  chain_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const { return sign_changes(lo) - sign_changes(hi); }

namespace {

void isolate(const Polynomial& sp, const SturmSequence& st, Rational a, Rational b, int k, const Rational& width,
             std::vector<RootInterval>& out) {
  if (k == 0) return;
  if (k == 1) {
    while (true) {
      if (sp(b) == 0) {
        out.push_back({b, b, true});
        return;
      }
      if (b - a <= width) {
        out.push_back({a, b, false});
        return;
      }
      Rational m = (a + b) / 2;
      if (st.count(a, m) == 1)
        b = m;
      else
        a = m;
    }
  }
  Rational m = (a + b) / 2;
  const int left = st.count(a, m);
  isolate(sp, st, a, m, left, width, out);
  isolate(sp, st, m, b, k - left, width, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& lo, const Rational& hi,
                                        const Rational& width) {
  if (p.is_zero()) throw std::invalid_argument("cannot isolate the roots of the zero polynomial");
  if (!(lo < hi)) throw std::invalid_argument("empty isolation interval");
  std::vector<RootInterval> out;
  if (p.degree() == 0) return out;
  Polynomial sp = squarefree_part(p);
  SturmSequence st(sp);
  // (lo, hi] minus a possible root at hi
  int k = st.count(lo, hi);
  const bool root_at_hi = sp(hi) == 0;
  if (root_at_hi) --k;
  if (k == 0) return out;
  Rational top = hi;
  if (root_at_hi) {
    // shrink hi below the endpoint root while keeping every interior root
    Rational step = (hi - lo) / 2;
    while (true) {
      Rational cand = hi - step;
      if (sp(cand) != 0 && st.count(lo, cand) == k) {
        top = cand;
        break;
      }
      step /= 2;
    }
  }
  isolate(sp, st, lo, top, k, width, out);
  return out;
}

}  // namespace cel
