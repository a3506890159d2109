#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/cyclo.hpp"
#include "hecke/laurent.hpp"
#include "hecke/matrix.hpp"
#include "hecke/sign.hpp"
#include "hecke/specht.hpp"

namespace hecke {

/// Inertia (n+, n-, n0) of a Hermitian matrix.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Inertia by conjugate-congruence elimination with certified pivot signs.
/// Throws std::invalid_argument unless h is exactly Hermitian.
Signature signature(const Matrix<CycloNum>& h, unsigned start_bits = default_precision_bits());

enum class UnitarityStatus { Zero, NonzeroUnitary, NonzeroNotUnitary };
std::string to_string(UnitarityStatus s);

/// The simple module D_lambda at q = exp(2 pi i c): whether it vanishes,
/// and otherwise whether the induced form is definite.
struct UnitarityVerdict {
  Partition shape;
  RationalC c;
  /// Order of q; nullopt for infinity.
  std::optional<int> e;
  UnitarityStatus status = UnitarityStatus::Zero;
  Signature signature;
  int dim_d = 0;
};

/// Per-shape symbolic data shared across specializations.
struct SpechtEntry {
  SpechtData module;
  Matrix<LaurentPoly> sigma;
  /// S^T G.
  Matrix<LaurentPoly> form;
  LaurentPoly det;
  std::set<RationalC> singular;
};

/// Thread-safe memo of SpechtEntry by shape; each shape is built once.
class SpechtCache {
 public:
  std::shared_ptr<const SpechtEntry> get(const Partition& shape);

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const SpechtEntry> entry;
  };
  std::mutex mu_;
  std::map<Partition, std::shared_ptr<Slot>> slots_;
};

/// Process-wide cache used by the overloads without an explicit cache.
SpechtCache& default_cache();

UnitarityVerdict verdict(const Partition& shape, const RationalC& c);
UnitarityVerdict verdict(const Partition& shape, const RationalC& c, SpechtCache& cache, unsigned start_bits = default_precision_bits());

enum class LocusKind { FullInterval, NMinusSet, IntervalPlusPoints };
std::string to_string(LocusKind k);

/// Closed-form unitarity locus in (-1/2, 1/2].
struct LocusDescription {
  LocusKind kind = LocusKind::FullInterval;
  /// Open interval (-radius, radius); 1/2 for the full interval.
  mpq_class interval_radius = mpq_class(1, 2);
  std::set<RationalC> points;
  std::set<RationalC> excluded;

  bool contains(const RationalC& c) const;
};

LocusDescription predicted_locus(const Partition& shape);

/// All c in (-1/2, 1/2] at which det G vanishes.
std::set<RationalC> singular_points(const Partition& shape);
std::set<RationalC> singular_points_of(const LaurentPoly& det, int n);

/// All reduced c in (-1/2, 1/2] with denominator at most `bound`.
std::vector<RationalC> rationals_up_to(int bound);

struct ScanPoint {
  RationalC c;
  UnitarityVerdict verdict;
  bool predicted = false;
  bool computed = false;
};

struct ScanReport {
  Partition shape;
  LocusDescription predicted;
  int bound = 0;
  /// Sorted by c.
  std::vector<ScanPoint> tested_points;
  std::set<RationalC> singular_points;
  std::vector<RationalC> interval_samples;
  bool agreement = true;
  std::vector<std::string> mismatches;
};

/// Default worker count: HECKE_THREADS if set, else the hardware concurrency.
int default_threads();

/// Runs fn(0..count-1) on `threads` workers. The first exception is rethrown
/// after all workers stop.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

ScanReport scan_locus(const Partition& shape, int bound, int threads = default_threads());
ScanReport scan_locus(const Partition& shape, int bound, SpechtCache& cache, int threads, unsigned start_bits = default_precision_bits());

struct TheoremSummary {
  int n_max = 0;
  int bound = 0;
  /// Sorted by n, then shape in reverse lexicographic order.
  std::vector<ScanReport> reports;
  bool agreement = true;
  int points_checked = 0;
};

/// scan_locus for every partition of n, 2 <= n <= n_max.
TheoremSummary verify_theorem(int n_max, int bound, int threads = default_threads());
TheoremSummary verify_theorem(int n_max, int bound, SpechtCache& cache, int threads, unsigned start_bits = default_precision_bits());

}  // namespace hecke
