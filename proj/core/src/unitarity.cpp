#include "hecke/unitarity.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace hecke {

Signature signature(const Matrix<CycloNum>& h, unsigned start_bits) {
  if (h.rows() != h.cols() || !(adjoint(h) == h)) throw std::invalid_argument("signature: matrix is not Hermitian");
  Matrix<CycloNum> a = h;
  std::vector<int> active(static_cast<std::size_t>(a.rows()));
  std::iota(active.begin(), active.end(), 0);
  Signature sig;
  while (!active.empty()) {
    auto kit = std::find_if(active.begin(), active.end(), [&](int k) { return !a(k, k).is_zero(); });
    if (kit == active.end()) {
      int pi = -1;
      int pj = -1;
      for (int i : active) {
        for (int j : active)
          if (i != j && !a(i, j).is_zero()) {
            pi = i;
            pj = j;
            break;
          }
        if (pi >= 0) break;
      }
      if (pi < 0) break;
      // e_i <- e_i + t e_j with t = a_ij makes the (i, i) entry 2|a_ij|^2.
      const CycloNum t = a(pi, pj);
      const CycloNum tc = t.conj();
      for (int c : active)
        if (!a(pj, c).is_zero()) a(pi, c) += t * a(pj, c);
      for (int r : active)
        if (!a(r, pj).is_zero()) a(r, pi) += tc * a(r, pj);
      kit = std::find(active.begin(), active.end(), pi);
    }
    const int k = *kit;
    active.erase(kit);
    const CycloNum pivot = a(k, k);
    const int s = sign_of_real(pivot, start_bits).sign;
    if (s > 0) ++sig.positive;
    else ++sig.negative;
    const CycloNum inv = pivot.inverse();
    for (int i : active) {
      if (a(i, k).is_zero()) continue;
      const CycloNum f = a(i, k) * inv;
      for (int j : active)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
    }
  }
  sig.zero = h.rows() - sig.positive - sig.negative;
  return sig;
}

std::string to_string(UnitarityStatus s) {
  switch (s) {
    case UnitarityStatus::Zero: return "Zero";
    case UnitarityStatus::NonzeroUnitary: return "NonzeroUnitary";
    case UnitarityStatus::NonzeroNotUnitary: return "NonzeroNotUnitary";
  }
  return "?";
}

std::string to_string(LocusKind k) {
  switch (k) {
    case LocusKind::FullInterval: return "FullInterval";
    case LocusKind::NMinusSet: return "NMinusSet";
    case LocusKind::IntervalPlusPoints: return "IntervalPlusPoints";
  }
  return "?";
}

std::set<RationalC> singular_points_of(const LaurentPoly& det, int n) {
  std::set<RationalC> out;
  for (const auto& [e, mult] : cyclotomic_root_multiplicities(det, std::max(2, 2 * n + 2))) {
    (void)mult;
    for (long r = 1; 2 * r <= e; ++r) {
      if (std::gcd(r, static_cast<long>(e)) != 1) continue;
      out.insert(RationalC(r, e));
      if (2 * r != e) out.insert(RationalC(-r, e));
    }
  }
  return out;
}

std::shared_ptr<const SpechtEntry> SpechtCache::get(const Partition& shape) {
  std::shared_ptr<Slot> slot;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto& s = slots_[shape];
    if (!s) s = std::make_shared<Slot>();
    slot = s;
  }
  std::call_once(slot->once, [&] {
    auto e = std::make_shared<SpechtEntry>();
    e->module = build_specht(shape);
    e->sigma = sigma_matrix_symbolic(e->module);
    e->form = sesquilinear_form_symbolic(e->module, e->sigma);
    e->det = gram_determinant(e->module);
    e->singular = singular_points_of(e->det, shape.size());
    slot->entry = std::move(e);
  });
  return slot->entry;
}

SpechtCache& default_cache() {
  static SpechtCache cache;
  return cache;
}

UnitarityVerdict verdict(const Partition& shape, const RationalC& c) { return verdict(shape, c, default_cache()); }

UnitarityVerdict verdict(const Partition& shape, const RationalC& c, SpechtCache& cache, unsigned start_bits) {
  const auto entry = cache.get(shape);
  const auto hg = hermitian_from_form(entry->module.shape, entry->form, c);
  UnitarityVerdict v;
  v.shape = shape;
  v.c = c;
  v.e = smallest_e(c);
  v.signature = signature(hg.h, start_bits);
  v.dim_d = v.signature.positive + v.signature.negative;
  if (v.dim_d == 0) v.status = UnitarityStatus::Zero;
  else if (v.signature.positive == 0 || v.signature.negative == 0) v.status = UnitarityStatus::NonzeroUnitary;
  else v.status = UnitarityStatus::NonzeroNotUnitary;
  return v;
}

bool LocusDescription::contains(const RationalC& c) const {
  switch (kind) {
    case LocusKind::FullInterval: return true;
    case LocusKind::NMinusSet: return excluded.count(c) == 0;
    case LocusKind::IntervalPlusPoints: {
      const mpq_class v = c.value();
      return abs(v) < interval_radius || points.count(c) > 0;
    }
  }
  return false;
}

LocusDescription predicted_locus(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("empty shape");
  const int n = shape.size();
  LocusDescription out;
  if (shape.length() == n) return out;
  if (shape.length() == 1) {
    out.kind = LocusKind::NMinusSet;
    for (long m = 2; m <= n; ++m)
      for (long r = 1; 2 * r <= m; ++r) {
        if (std::gcd(r, m) != 1) continue;
        out.excluded.insert(RationalC(r, m));
        if (2 * r != m) out.excluded.insert(RationalC(-r, m));
      }
    return out;
  }
  const auto hd = hook_data(shape);
  out.kind = LocusKind::IntervalPlusPoints;
  out.interval_radius = mpq_class(1, hd.largest_hook);
  for (int k : hd.main_hooks) {
    out.points.insert(RationalC(1, k));
    if (k != 2) out.points.insert(RationalC(-1, k));
  }
  return out;
}

std::set<RationalC> singular_points(const Partition& shape) { return default_cache().get(shape)->singular; }

std::vector<RationalC> rationals_up_to(int bound) {
  std::set<RationalC> s;
  s.insert(RationalC(0, 1));
  for (long m = 2; m <= bound; ++m)
    for (long r = 1; 2 * r <= m; ++r) {
      if (std::gcd(r, m) != 1) continue;
      s.insert(RationalC(r, m));
      if (2 * r != m) s.insert(RationalC(-r, m));
    }
  return {s.begin(), s.end()};
}

int default_threads() {
  if (const char* env = std::getenv("HECKE_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  threads = std::max(1, std::min(threads, count));
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

RationalC midpoint(const mpq_class& a, const mpq_class& b) {
  mpq_class m = (a + b) / 2;
  m.canonicalize();
  return RationalC(m);
}

/// Report skeleton and sample set for one shape; the caller fills in verdicts.
ScanReport scan_points(const Partition& shape, int bound, SpechtCache& cache, std::vector<RationalC>& points) {
  ScanReport rep;
  rep.shape = shape;
  rep.bound = bound;
  rep.predicted = predicted_locus(shape);
  rep.singular_points = cache.get(shape)->singular;
  std::set<RationalC> all;
  for (const auto& c : rationals_up_to(bound)) all.insert(c);
  for (const auto& c : rep.singular_points) all.insert(c);
  for (const auto& c : rep.predicted.points) all.insert(c);
  std::vector<mpq_class> cuts{mpq_class(-1, 2)};
  for (const auto& c : rep.singular_points)
    if (c.value() != mpq_class(1, 2)) cuts.push_back(c.value());
  cuts.emplace_back(1, 2);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const RationalC m = midpoint(cuts[k], cuts[k + 1]);
    rep.interval_samples.push_back(m);
    all.insert(m);
  }
  points.assign(all.begin(), all.end());
  return rep;
}

bool same_inertia_up_to_sign(const Signature& a, const Signature& b) {
  return a.zero == b.zero && std::minmax(a.positive, a.negative) == std::minmax(b.positive, b.negative);
}

void finish_report(ScanReport& rep) {
  auto fail = [&](const std::string& msg) {
    rep.agreement = false;
    rep.mismatches.push_back(msg);
  };
  for (auto& p : rep.tested_points) {
    p.predicted = rep.predicted.contains(p.c);
    p.computed = p.verdict.status == UnitarityStatus::NonzeroUnitary;
    if (p.predicted != p.computed) {
      std::ostringstream os;
      os << "c = " << p.c.to_string() << ": predicted " << (p.predicted ? "unitary" : "not unitary") << ", computed "
         << to_string(p.verdict.status);
      fail(os.str());
    }
  }
  // Between consecutive singular points the inertia is constant up to the
  // global sign left open by the choice of alpha.
  const auto& sing = rep.singular_points;
  const ScanPoint* prev = nullptr;
  for (const auto& p : rep.tested_points) {
    if (sing.count(p.c)) {
      prev = nullptr;
      continue;
    }
    if (prev && !same_inertia_up_to_sign(prev->verdict.signature, p.verdict.signature)) {
      fail("signature changes between " + prev->c.to_string() + " and " + p.c.to_string() + " without a singular point");
    }
    prev = &p;
  }
}

}  // namespace

ScanReport scan_locus(const Partition& shape, int bound, int threads) { return scan_locus(shape, bound, default_cache(), threads); }

ScanReport scan_locus(const Partition& shape, int bound, SpechtCache& cache, int threads, unsigned start_bits) {
  std::vector<RationalC> points;
  ScanReport rep = scan_points(shape, bound, cache, points);
  rep.tested_points.resize(points.size());
  parallel_for(static_cast<int>(points.size()), threads, [&](int i) {
    const auto& c = points[static_cast<std::size_t>(i)];
    rep.tested_points[static_cast<std::size_t>(i)] = ScanPoint{c, verdict(shape, c, cache, start_bits), false, false};
  });
  finish_report(rep);
  return rep;
}

TheoremSummary verify_theorem(int n_max, int bound, int threads) { return verify_theorem(n_max, bound, default_cache(), threads); }

TheoremSummary verify_theorem(int n_max, int bound, SpechtCache& cache, int threads, unsigned start_bits) {
  TheoremSummary sum;
  sum.n_max = n_max;
  sum.bound = bound;
  std::vector<Partition> shapes;
  for (int n = 2; n <= n_max; ++n)
    for (const auto& p : partitions_of(n)) shapes.push_back(p);
  parallel_for(static_cast<int>(shapes.size()), threads, [&](int i) { cache.get(shapes[static_cast<std::size_t>(i)]); });

  std::vector<std::vector<RationalC>> points(shapes.size());
  std::vector<std::pair<int, int>> jobs;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    sum.reports.push_back(scan_points(shapes[s], bound, cache, points[s]));
    sum.reports.back().tested_points.resize(points[s].size());
    for (std::size_t k = 0; k < points[s].size(); ++k) jobs.emplace_back(static_cast<int>(s), static_cast<int>(k));
  }
  parallel_for(static_cast<int>(jobs.size()), threads, [&](int j) {
    const auto [s, k] = jobs[static_cast<std::size_t>(j)];
    const auto& c = points[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)];
    sum.reports[static_cast<std::size_t>(s)].tested_points[static_cast<std::size_t>(k)] =
        ScanPoint{c, verdict(shapes[static_cast<std::size_t>(s)], c, cache, start_bits), false, false};
  });
  for (auto& rep : sum.reports) {
    finish_report(rep);
    sum.agreement = sum.agreement && rep.agreement;
    sum.points_checked += static_cast<int>(rep.tested_points.size());
  }
  return sum;
}

}  // namespace hecke
