#include "hecke/cyclo.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hecke {

// ---------------------------------------------------------------- RationalC

RationalC::RationalC(long num, long den) {
  if (den <= 0) throw std::invalid_argument("c needs a positive denominator");
  const long g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
  if (2 * num_ <= -den_ || 2 * num_ > den_) throw std::invalid_argument("c must lie in (-1/2, 1/2]");
}

RationalC::RationalC(const mpq_class& value) {
  if (!value.get_num().fits_slong_p() || !value.get_den().fits_slong_p())
    throw std::invalid_argument("c out of range");
  *this = RationalC(value.get_num().get_si(), value.get_den().get_si());
}

RationalC RationalC::parse(std::string_view text) {
  auto to_long = [&](std::string_view s) {
    long v = 0;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalC(to_long(text), 1);
  return RationalC(to_long(text.substr(0, slash)), to_long(text.substr(slash + 1)));
}

std::string RationalC::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<int> smallest_e(const RationalC& c) {
  if (c.num() == 0) return std::nullopt;
  return static_cast<int>(c.den());
}

// ------------------------------------------------------------------ fields

int euler_phi(int m) {
  int result = m;
  int k = m;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

struct Field {
  int m = 1;
  int phi = 1;
  // power[k] = zeta^k in the power basis, 0 <= k < m.
  std::vector<std::vector<mpz_class>> power;
};

const Field& field(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (slot) return *slot;
  auto f = std::make_unique<Field>();
  f->m = m;
  f->phi = euler_phi(m);
  const auto& poly = cyclotomic_polynomial(m);
  const auto phi = static_cast<std::size_t>(f->phi);
  std::vector<mpz_class> cur(phi);
  cur[0] = 1;
  for (int k = 0; k < m; ++k) {
    f->power.push_back(cur);
    // multiply by zeta and reduce with the monic relation
    mpz_class top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * poly[i];
  }
  slot = std::move(f);
  return *slot;
}

std::vector<mpz_class> reduce_powers(const Field& f, const std::vector<mpz_class>& acc) {
  std::vector<mpz_class> out(static_cast<std::size_t>(f.phi));
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (acc[k] == 0) continue;
    const auto& row = f.power[k];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (row[i] != 0) mpz_addmul(out[i].get_mpz_t(), acc[k].get_mpz_t(), row[i].get_mpz_t());
  }
  return out;
}

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

// ----------------------------------------------------------------- CycloNum

CycloNum::CycloNum(long c) {
  if (c != 0) num_.emplace_back(c);
}

CycloNum::CycloNum(const mpq_class& c) {
  if (c != 0) {
    num_.push_back(c.get_num());
    den_ = c.get_den();
  }
}

CycloNum CycloNum::zeta(int m, long k) {
  std::vector<mpz_class> acc(static_cast<std::size_t>(m));
  acc[static_cast<std::size_t>(((k % m) + m) % m)] = 1;
  return from_powers(m, acc);
}

CycloNum CycloNum::from_powers(int m, const std::vector<mpz_class>& coeffs, const mpz_class& den) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  const Field& f = field(m);
  std::vector<mpz_class> acc(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < coeffs.size(); ++j) acc[j % static_cast<std::size_t>(m)] += coeffs[j];
  CycloNum out;
  out.m_ = m;
  out.num_ = reduce_powers(f, acc);
  out.den_ = den;
  out.normalize();
  return out;
}

CycloNum CycloNum::from_coords(int m, const std::vector<mpq_class>& coords) {
  if (static_cast<int>(coords.size()) != euler_phi(m)) throw std::invalid_argument("coordinate count must be phi(m)");
  mpz_class den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num;
  for (const auto& c : coords) num.push_back(c.get_num() * (den / c.get_den()));
  return from_powers(m, num, den);
}

void CycloNum::normalize() {
  bool zero = true;
  for (const auto& c : num_)
    if (c != 0) {
      zero = false;
      break;
    }
  if (zero) {
    num_.clear();
    den_ = 1;
    m_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  if (m_ > 1) {
    bool rational = true;
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) {
        rational = false;
        break;
      }
    if (rational) {
      num_.resize(1);
      m_ = 1;
    }
  }
}

bool CycloNum::is_zero() const { return num_.empty(); }

bool CycloNum::is_rational() const { return m_ == 1; }

mpq_class CycloNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("CycloNum is not rational");
  if (is_zero()) return 0;
  mpq_class v(num_[0], den_);
  v.canonicalize();
  return v;
}

std::vector<mpq_class> CycloNum::coords() const {
  std::vector<mpq_class> out(static_cast<std::size_t>(euler_phi(m_)));
  for (std::size_t i = 0; i < num_.size(); ++i) {
    out[i] = mpq_class(num_[i], den_);
    out[i].canonicalize();
  }
  return out;
}

CycloNum CycloNum::promoted(int m2) const {
  if (m2 == m_ || is_zero()) return *this;
  if (m2 % m_ != 0) throw std::invalid_argument("promotion target must be a multiple of the conductor");
  const int step = m2 / m_;
  std::vector<mpz_class> acc(static_cast<std::size_t>(m2));
  for (std::size_t j = 0; j < num_.size(); ++j) acc[j * static_cast<std::size_t>(step)] = num_[j];
  CycloNum out;
  out.m_ = m2;
  out.num_ = reduce_powers(field(m2), acc);
  out.den_ = den_;
  return out;  // already normalized: same content, same denominator
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int L = lcm_int(m_, o.m_);
  CycloNum a = promoted(L);
  CycloNum b = o.promoted(L);
  if (a.num_.size() < b.num_.size()) a.num_.resize(b.num_.size());
  if (b.num_.size() < a.num_.size()) b.num_.resize(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < a.num_.size(); ++i) a.num_[i] += b.num_[i];
  } else {
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
      a.num_[i] *= b.den_;
      mpz_addmul(a.num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), a.den_.get_mpz_t());
    }
    a.den_ *= b.den_;
  }
  a.m_ = L;
  a.normalize();
  return *this = std::move(a);
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& x, const CycloNum& y) {
  if (x.is_zero() || y.is_zero()) return CycloNum{};
  if (x.is_rational() || y.is_rational()) {
    const CycloNum& r = x.is_rational() ? x : y;
    CycloNum out = x.is_rational() ? y : x;
    for (auto& c : out.num_) c *= r.num_[0];
    out.den_ *= r.den_;
    out.normalize();
    return out;
  }
  const int L = lcm_int(x.m_, y.m_);
  const CycloNum a = x.promoted(L);
  const CycloNum b = y.promoted(L);
  const Field& f = field(L);
  std::vector<mpz_class> acc(static_cast<std::size_t>(L));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(acc[(i + j) % static_cast<std::size_t>(L)].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  CycloNum out;
  out.m_ = L;
  out.num_ = reduce_powers(f, acc);
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this = *this * o.inverse(); }

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (m_ == o.m_) return den_ == o.den_ && num_ == o.num_;
  const int L = lcm_int(m_, o.m_);
  const CycloNum a = promoted(L);
  const CycloNum b = o.promoted(L);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNum CycloNum::galois(int k) const {
  if (is_zero() || m_ <= 2) return *this;
  if (std::gcd(k, m_) != 1) throw std::invalid_argument("Galois exponent must be coprime to the conductor");
  const auto m = static_cast<std::size_t>(m_);
  const std::size_t kk = static_cast<std::size_t>(((k % m_) + m_) % m_);
  std::vector<mpz_class> acc(m);
  for (std::size_t j = 0; j < num_.size(); ++j) acc[(j * kk) % m] = num_[j];
  CycloNum out;
  out.m_ = m_;
  out.num_ = reduce_powers(field(m_), acc);
  out.den_ = den_;
  return out;
}

CycloNum CycloNum::conj() const { return galois(m_ - 1); }

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNum inverse of zero");
  if (is_rational()) return CycloNum(1 / rational_value());
  // x^{-1} = (product of the other conjugates) / norm(x)
  CycloNum others(1);
  for (int k = 2; k < m_; ++k)
    if (std::gcd(k, m_) == 1) others *= galois(k);
  const CycloNum norm = *this * others;
  if (!norm.is_rational()) throw std::logic_error("CycloNum norm is not rational");
  return others * CycloNum(1 / norm.rational_value());
}

std::pair<double, double> CycloNum::approx() const {
  double re = 0, im = 0;
  const double d = den_.get_d();
  for (std::size_t j = 0; j < num_.size(); ++j) {
    const double a = 2.0 * M_PI * static_cast<double>(j) / m_;
    re += num_[j].get_d() / d * std::cos(a);
    im += num_[j].get_d() / d * std::sin(a);
  }
  return {re, im};
}

std::string CycloNum::to_string() const {
  if (is_zero()) return "0";
  if (is_rational()) return rational_value().get_str();
  std::string out;
  bool first = true;
  for (std::size_t j = 0; j < num_.size(); ++j) {
    if (num_[j] == 0) continue;
    mpq_class c(num_[j], den_);
    c.canonicalize();
    const bool neg = c < 0;
    mpq_class mag = abs(c);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    if (j == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "z" + std::to_string(m_);
    if (j != 1) out += "^" + std::to_string(j);
  }
  return out;
}

CycloNum q_at(const RationalC& c) { return CycloNum::zeta(static_cast<int>(c.den()), c.num()); }

CycloNum specialize(const LaurentPoly& p, const RationalC& c) {
  const long m = c.den();
  std::vector<mpz_class> acc(static_cast<std::size_t>(m));
  for (const auto& [e, coeff] : p.terms()) {
    const long idx = ((static_cast<long>(e) * c.num()) % m + m) % m;
    acc[static_cast<std::size_t>(idx)] += coeff;
  }
  return CycloNum::from_powers(static_cast<int>(m), acc);
}

std::optional<std::pair<int, int>> as_root_of_unity(const CycloNum& x) {
  if (x.is_zero()) return std::nullopt;
  const int m = x.conductor();
  const int L = (m % 2 == 0) ? m : 2 * m;
  for (int j = 0; j < L; ++j) {
    if (x == CycloNum::zeta(L, j)) {
      const int g = std::gcd(L, j);
      return std::make_pair(L / g, j / g);
    }
  }
  return std::nullopt;
}

}  // namespace hecke
