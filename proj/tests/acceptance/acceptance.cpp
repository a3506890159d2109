// Acceptance suite: one PASS/FAIL line per criterion AC1..AC8.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/algebra.hpp"
#include "hecke/linalg.hpp"
#include "hecke/specht.hpp"
#include "hecke/unitarity.hpp"

namespace {

using namespace hecke;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    failures.push_back(std::move(why));
  }
};

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Partition hook(int n, int k) {
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(parts);
}

bool is_row_or_column(const Partition& p) { return p.length() == 1 || p.length() == p.size(); }

AlgebraSpec<CycloNum> p1_spec(int n) { return {n, 2, CycloNum::zeta(5), {CycloNum(1), CycloNum(-1)}}; }
AlgebraSpec<CycloNum> p2_spec(int n) { return {n, 2, CycloNum::zeta(8), {CycloNum::zeta(8, 2), CycloNum::zeta(8, 5)}}; }

Outcome ac1_main_locus() {
  Outcome o;
  const auto sum = verify_theorem(6, 16, default_cache(), default_threads());
  int shapes = 0, points = 0;
  for (const auto& rep : sum.reports) {
    if (rep.shape.size() < 3 || is_row_or_column(rep.shape)) continue;
    ++shapes;
    points += static_cast<int>(rep.tested_points.size());
    for (const auto& m : rep.mismatches) o.fail("(" + rep.shape.to_string() + ") " + m);
  }
  o.summary = std::to_string(shapes) + " shapes, " + std::to_string(points) + " points, n <= 6, bound 16";
  return o;
}

Outcome ac2_hooks() {
  Outcome o;
  int points = 0;
  for (int n = 3; n <= 7; ++n) {
    const mpq_class radius(1, n);
    for (int k = 1; k <= n - 2; ++k) {
      const auto rep = scan_locus(hook(n, k), 16, default_cache(), default_threads());
      for (const auto& p : rep.tested_points) {
        ++points;
        const bool inside = abs(p.c.value()) <= radius;
        if (p.computed != inside)
          o.fail("(" + rep.shape.to_string() + ") c = " + p.c.to_string() + ": expected " + (inside ? "unitary" : "not unitary") + ", computed " +
                 to_string(p.verdict.status));
      }
    }
    const auto column = scan_locus(hook(n, n - 1), 16, default_cache(), default_threads());
    for (const auto& p : column.tested_points) {
      ++points;
      if (!p.computed) o.fail("(" + column.shape.to_string() + ") c = " + p.c.to_string() + ": computed " + to_string(p.verdict.status));
    }
    const auto row = scan_locus(hook(n, 0), 16, default_cache(), default_threads());
    points += static_cast<int>(row.tested_points.size());
    for (const auto& m : row.mismatches) o.fail("(" + row.shape.to_string() + ") " + m);
  }
  o.summary = "hooks, columns and rows for 3 <= n <= 7, " + std::to_string(points) + " points";
  return o;
}

Outcome ac3_det_multiplicity() {
  Outcome o;
  int cases = 0;
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      ++cases;
      const auto mult = cyclotomic_root_multiplicities(gram_determinant(build_specht(hook(n, k))), n);
      const auto it = mult.find(n);
      const long got = it == mult.end() ? 0 : it->second;
      if (got != binomial(n - 2, k))
        o.fail("(" + hook(n, k).to_string() + "): Phi_" + std::to_string(n) + " multiplicity " + std::to_string(got) + ", expected " +
               std::to_string(binomial(n - 2, k)));
    }
  o.summary = std::to_string(cases) + " hooks";
  return o;
}

Outcome ac4_jantzen_hooks() {
  Outcome o;
  int cases = 0;
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k <= n - 2; ++k) {
      const auto sd = build_specht(hook(n, k));
      const std::vector<int> expected{sd.dimension(), static_cast<int>(binomial(n - 2, k)), 0};
      for (const auto& c : {RationalC(1, n), RationalC(-1, n)}) {
        ++cases;
        const auto rep = jantzen_layers(sd, c);
        if (rep.layer_dims != expected) {
          std::ostringstream os;
          os << "(" << hook(n, k).to_string() << ") c = " << c.to_string() << ": layers";
          for (int d : rep.layer_dims) os << ' ' << d;
          o.fail(os.str());
        }
      }
    }
  o.summary = std::to_string(cases) + " (hook, c) pairs";
  return o;
}

Outcome ac5_form_identities() {
  Outcome o;
  int cases = 0;
  const std::vector<RationalC> cs{RationalC(0, 1), RationalC(1, 7), RationalC(1, 4), RationalC(1, 3), RationalC(1, 2)};
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : partitions_of(n)) {
      const auto sd = build_specht(p);
      const auto sigma_sym = sigma_matrix_symbolic(sd);
      for (const auto& c : cs) {
        ++cases;
        const std::string where = "(" + p.to_string() + ") c = " + c.to_string();
        const auto hg = hermitian_gram(sd, sigma_sym, c);
        if (adjoint(hg.h) != hg.h) o.fail(where + ": H is not Hermitian");
        for (int i = 1; i < n; ++i) {
          const auto rho = specialize(sd.action[static_cast<std::size_t>(i)], c);
          if (adjoint(rho) * hg.h * rho != hg.h) o.fail(where + ": T_" + std::to_string(i) + " does not preserve H");
        }
        const auto s = sigma_on_module(sd, c);
        if (s * s.map([](const CycloNum& x) { return x.conj(); }) != Matrix<CycloNum>::identity(sd.dimension()))
          o.fail(where + ": S conj(S) != I");
        if (rank(hg.h) + signature(hg.h).zero != sd.dimension()) o.fail(where + ": rank(H) + n0 != dim S");
      }
    }
  o.summary = std::to_string(cases) + " (shape, c) pairs, n <= 5";
  return o;
}

Outcome ac6_oracle() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : partitions_of(n)) {
      ++cases;
      const auto fast = build_specht(p);
      const auto slow = oracle_specht(p);
      if (fast.basis != slow.basis || fast.gram != slow.gram || fast.action != slow.action) o.fail("(" + p.to_string() + ") r = 1");
    }
  for (int n = 1; n <= 3; ++n)
    for (const auto& spec : {p1_spec(n), p2_spec(n)}) {
      const auto alg = make_cyclo_algebra(n, spec.q, spec.params);
      for (const auto& shape : multipartitions_of(n, 2)) {
        ++cases;
        const auto fast = build_specht(shape, spec);
        const auto slow = oracle_specht(shape, alg);
        if (fast.basis != slow.basis || fast.gram != slow.gram || fast.action != slow.action)
          o.fail("(" + shape.to_string() + ") r = 2, q = " + spec.q.to_string());
      }
    }
  o.summary = std::to_string(cases) + " modules";
  return o;
}

Outcome ac7_sigma_witness() {
  Outcome o;
  int cases = 0;
  for (int n = 1; n <= 3; ++n)
    for (const auto& spec : {p1_spec(n), p2_spec(n)}) {
      const auto alg = make_cyclo_algebra(n, spec.q, spec.params);
      for (const auto& shape : multipartitions_of(n, 2)) {
        ++cases;
        const std::string where = "(" + shape.to_string() + ") q = " + spec.q.to_string();
        try {
          const auto w = verify_lemma31(alg, shape);
          const auto m = alg.m_lambda(shape);
          if (alg.sigma(m) != alg.multiply(m, w.u)) o.fail(where + ": sigma(m) != m u");
          if (alg.multiply(w.u, w.u_inverse) != alg.one() || alg.multiply(w.u_inverse, w.u) != alg.one()) o.fail(where + ": u is not invertible");
        } catch (const std::exception& e) {
          o.fail(where + ": " + e.what());
        }
      }
    }
  for (int n = 1; n <= 5; ++n) {
    const auto alg = make_symbolic_algebra(n);
    for (const auto& p : partitions_of(n)) {
      ++cases;
      const auto w = verify_lemma31(alg, p);
      if (w.u != alg.scalar(LaurentPoly(sigma_exponent(p), {mpz_class(1)})) || alg.sigma(alg.m_lambda(p)) != alg.multiply(alg.m_lambda(p), w.u))
        o.fail("(" + p.to_string() + ") r = 1: u is not q^s");
    }
  }
  o.summary = std::to_string(cases) + " shapes";
  return o;
}

Outcome ac8_zero_criterion() {
  Outcome o;
  int cases = 0;
  const auto cs = rationals_up_to(12);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n))
      for (const auto& c : cs) {
        ++cases;
        const auto v = verdict(p, c, default_cache());
        const bool zero = v.status == UnitarityStatus::Zero;
        if (zero == is_e_restricted(p, v.e)) o.fail("(" + p.to_string() + ") c = " + c.to_string() + ": status " + to_string(v.status));
      }
  o.summary = std::to_string(cases) + " (shape, c) pairs, n <= 6, denominators <= 12";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1", ac1_main_locus},         {"AC2", ac2_hooks},      {"AC3", ac3_det_multiplicity}, {"AC4", ac4_jantzen_hooks},
      {"AC5", ac5_form_identities},    {"AC6", ac6_oracle},     {"AC7", ac7_sigma_witness},          {"AC8", ac8_zero_criterion},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s  %s (%.1fs)\n", name, o.pass ? "PASS" : "FAIL", o.summary.c_str(), secs);
    for (const auto& f : o.failures) std::printf("    %s\n", f.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
