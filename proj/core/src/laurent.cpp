#include "hecke/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hecke {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(int low, std::vector<mpz_class> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(int exp, const mpz_class& c) {
  return LaurentPoly(exp, std::vector<mpz_class>{c});
}

LaurentPoly LaurentPoly::q_integer(int k) {
  if (k <= 0) return LaurentPoly{};
  return LaurentPoly(0, std::vector<mpz_class>(static_cast<std::size_t>(k), mpz_class(1)));
}

LaurentPoly LaurentPoly::q_factorial(int k) {
  LaurentPoly out(1);
  for (int j = 2; j <= k; ++j) out *= q_integer(j);
  return out;
}

bool LaurentPoly::is_one() const { return low_ == 0 && coeffs_.size() == 1 && coeffs_[0] == 1; }

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<mpz_class>(coeffs_.begin() + static_cast<long>(first), coeffs_.begin() + static_cast<long>(last));
  }
  low_ += static_cast<int>(first);
}

mpz_class LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < low_ || exp > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exp - low_)];
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpz_class>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
  low_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly{};
  std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  if (is_zero()) return {};
  std::vector<mpz_class> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-high(), std::move(rev));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("LaurentPoly division by zero");
  if (is_zero()) return LaurentPoly{};
  // Both sides have nonzero constant term after stripping q-powers, so
  // ordinary long division from the top decides divisibility.
  std::vector<mpz_class> rem = coeffs_;
  const auto& dc = d.coeffs_;
  if (rem.size() < dc.size()) return std::nullopt;
  std::vector<mpz_class> quot(rem.size() - dc.size() + 1);
  const mpz_class& lead = dc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpz_class& top = rem[k + dc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_class qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < dc.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), dc[j].get_mpz_t());
    quot[k] = std::move(qk);
  }
  for (const auto& c : rem)
    if (c != 0) return std::nullopt;
  return LaurentPoly(low_ - d.low_, std::move(quot));
}

mpq_class LaurentPoly::eval(const mpq_class& x) const {
  if (is_zero()) return 0;
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  if (low_ != 0) {
    mpq_class p = 1;
    const int e = low_ < 0 ? -low_ : low_;
    for (int k = 0; k < e; ++k) p *= x;
    if (low_ < 0) acc /= p;
    else acc *= p;
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    const bool neg = c < 0;
    mpz_class mag = abs(c);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += 'q';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

std::map<std::string, std::string> LaurentPoly::to_sparse() const {
  std::map<std::string, std::string> out;
  for (const auto& [e, c] : terms()) out[std::to_string(e)] = c.get_str();
  return out;
}

LaurentPoly LaurentPoly::from_sparse(const std::map<std::string, std::string>& m) {
  LaurentPoly out;
  for (const auto& [e, c] : m) out += monomial(std::stoi(e), mpz_class(c));
  return out;
}

std::pair<int, std::vector<mpz_class>> split_q_power(const LaurentPoly& p) {
  return {p.low(), p.dense()};
}

const std::vector<mpz_class>& cyclotomic_polynomial(int e) {
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  if (e < 1) throw std::invalid_argument("cyclotomic polynomial index must be positive");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(e); it != cache.end()) return it->second;
  // Phi_e = (q^e - 1) / prod_{d | e, d < e} Phi_d, computed bottom-up.
  for (int k = 1; k <= e; ++k) {
    if (cache.count(k) || e % k != 0) continue;
    std::vector<mpz_class> xk(static_cast<std::size_t>(k + 1));
    xk[0] = -1;
    xk[static_cast<std::size_t>(k)] = 1;
    LaurentPoly num(0, xk);
    for (int d = 1; d < k; ++d) {
      if (k % d) continue;
      num = *num.divide_exact(LaurentPoly(0, cache.at(d)));
    }
    cache[k] = num.dense();
  }
  return cache.at(e);
}

std::map<int, int> cyclotomic_root_multiplicities(const LaurentPoly& p, int e_max) {
  if (p.is_zero()) throw std::invalid_argument("cyclotomic multiplicities of the zero polynomial");
  std::map<int, int> out;
  for (int e = 2; e <= e_max; ++e) {
    const LaurentPoly phi(0, cyclotomic_polynomial(e));
    LaurentPoly cur = p;
    int mult = 0;
    while (cur.high() - cur.low() >= phi.high()) {
      auto qt = cur.divide_exact(phi);
      if (!qt) break;
      cur = std::move(*qt);
      ++mult;
    }
    if (mult > 0) out[e] = mult;
  }
  return out;
}

std::optional<LaurentPoly> decode_at_power_of_two(const mpq_class& x, unsigned bits) {
  if (x == 0) return LaurentPoly{};
  const mpz_class& den = x.get_den();
  const auto twos = static_cast<unsigned>(mpz_scan1(den.get_mpz_t(), 0));
  mpz_class odd = den >> twos;
  if (odd != 1) return std::nullopt;
  const unsigned j = (twos + bits - 1) / bits;
  mpz_class big = x.get_num();
  big <<= j * bits - twos;
  const mpz_class base = mpz_class(1) << bits;
  const mpz_class half = base >> 1;
  const mpz_class limit = mpz_class(1) << (bits / 2);
  std::vector<mpz_class> digits;
  while (big != 0) {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), big.get_mpz_t(), bits);
    if (r >= half) r -= base;
    if (abs(r) >= limit) return std::nullopt;
    big -= r;
    big >>= bits;
    digits.push_back(std::move(r));
  }
  return LaurentPoly(-static_cast<int>(j), std::move(digits));
}

}  // namespace hecke
