#include "hecke/qpoly.hpp"

#include <stdexcept>

namespace hecke {

QPoly::QPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

QPoly::QPoly(const mpq_class& c) {
  if (c != 0) c_.push_back(c);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::from_integers(const std::vector<mpz_class>& coeffs) {
  std::vector<mpq_class> c(coeffs.begin(), coeffs.end());
  return QPoly(std::move(c));
}

QPoly QPoly::monomial(int exp, const mpq_class& c) {
  std::vector<mpq_class> v(static_cast<std::size_t>(exp + 1));
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::domain_error("QPoly division by zero");
  if (degree() < d.degree()) return {QPoly{}, *this};
  std::vector<mpq_class> rem = c_;
  std::vector<mpq_class> quot(c_.size() - d.c_.size() + 1);
  const mpq_class inv_lead = 1 / d.lead();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class& top = rem[k + d.c_.size() - 1];
    if (top == 0) continue;
    mpq_class qk = top * inv_lead;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= qk * d.c_[j];
    quot[k] = std::move(qk);
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead());
}

QPoly QPoly::scaled(const mpq_class& s) const {
  if (s == 0) return {};
  QPoly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

mpq_class QPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const bool neg = c_[i] < 0;
    mpq_class mag = abs(c_[i]);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0) out += (i == 1) ? std::string("q") : "q^" + std::to_string(i);
  }
  return out;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFunc::RatFunc(const LaurentPoly& p) : den_(1) {
  if (p.is_zero()) return;
  num_ = QPoly::from_integers(p.dense());
  if (p.low() >= 0) num_ = num_ * QPoly::monomial(p.low());
  else den_ = QPoly::monomial(-p.low());
}

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFunc with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    QPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const mpq_class l = den_.lead();
  if (l != 1) {
    num_ = num_.scaled(1 / l);
    den_ = den_.scaled(1 / l);
  }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    reduce();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc{};
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("RatFunc division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

int RatFunc::valuation(const QPoly& p) const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  auto count = [&](QPoly f) {
    int v = 0;
    while (f.degree() >= p.degree()) {
      auto [qt, r] = f.divmod(p);
      if (!r.is_zero()) break;
      f = std::move(qt);
      ++v;
    }
    return v;
  };
  return count(num_) - count(den_);
}

std::optional<LaurentPoly> RatFunc::to_laurent() const {
  if (is_zero()) return LaurentPoly{};
  const int k = den_.degree();
  for (int i = 0; i < k; ++i)
    if (den_.coeff(i) != 0) return std::nullopt;
  std::vector<mpz_class> c;
  for (const auto& x : num_.coeffs()) {
    if (x.get_den() != 1) return std::nullopt;
    c.push_back(x.get_num());
  }
  return LaurentPoly(-k, std::move(c));
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace hecke
