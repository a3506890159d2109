#include "hecke/serialize.hpp"

#include <sstream>

namespace hecke {

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = c.get_str();
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("Laurent polynomial must be a JSON object");
  LaurentPoly out;
  for (const auto& [k, v] : j.items()) out += LaurentPoly::monomial(std::stoi(k), mpz_class(v.get<std::string>()));
  return out;
}

Json to_json(const CycloNum& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(c.get_str());
  return Json{{"m", x.conductor()}, {"coords", coords}};
}

CycloNum cyclo_from_json(const Json& j) {
  std::vector<mpq_class> coords;
  for (const auto& c : j.at("coords")) {
    mpq_class q(c.get<std::string>());
    q.canonicalize();
    coords.push_back(q);
  }
  return CycloNum::from_coords(j.at("m").get<int>(), coords);
}

namespace {

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class T, class F>
Matrix<T> matrix_from(const Json& j, F&& entry) {
  Matrix<T> m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const auto& e = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) m(i, k) = entry(e.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(k)));
  return m;
}

Json basis_json(const std::vector<Tableau>& basis) {
  Json out = Json::array();
  for (const auto& t : basis) out.push_back(t.to_string());
  return out;
}

std::string e_string(const std::optional<int>& e) { return e ? std::to_string(*e) : "inf"; }

}  // namespace

Json to_json(const Matrix<LaurentPoly>& m) { return matrix_json(m); }
Json to_json(const Matrix<CycloNum>& m) { return matrix_json(m); }
Matrix<LaurentPoly> laurent_matrix_from_json(const Json& j) { return matrix_from<LaurentPoly>(j, laurent_from_json); }
Matrix<CycloNum> cyclo_matrix_from_json(const Json& j) { return matrix_from<CycloNum>(j, cyclo_from_json); }

template <class R>
Json to_json(const HeckeAlgebra<R>& alg, const HeckeElement<R>& x) {
  Json terms = Json::array();
  for (const auto& [k, c] : x.terms) terms.push_back(Json{{"word", alg.word_string(k)}, {"coeff", to_json(c)}});
  return Json{{"n", x.n}, {"r", x.r}, {"terms", terms}};
}

template Json to_json(const HeckeAlgebra<LaurentPoly>&, const HeckeElement<LaurentPoly>&);
template Json to_json(const HeckeAlgebra<CycloNum>&, const HeckeElement<CycloNum>&);

Json to_json(const SpechtData& sd, bool with_action) {
  Json out{{"schema", kSchemaVersion}, {"lambda", sd.shape.to_string()}, {"dimension", sd.dimension()}, {"basis", basis_json(sd.basis)},
           {"gram", to_json(sd.gram)}};
  if (with_action) {
    Json act = Json::array();
    for (const auto& a : sd.action) act.push_back(to_json(a));
    out["action"] = act;
  }
  return out;
}

Json to_json(const HermitianGram& hg) {
  return Json{{"schema", kSchemaVersion}, {"lambda", hg.shape.to_string()}, {"c", hg.c.to_string()},
              {"alpha", to_json(hg.alpha)}, {"phase", to_json(hg.phase)}, {"hermitian", to_json(hg.h)}};
}

Json to_json(const JantzenReport& rep) {
  return Json{{"schema", kSchemaVersion}, {"lambda", rep.shape.to_string()}, {"c", rep.c.to_string()}, {"layers", rep.layer_dims}};
}

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

Json to_json(const UnitarityVerdict& v) {
  return Json{{"schema", kSchemaVersion}, {"lambda", v.shape.to_string()}, {"c", v.c.to_string()}, {"e", e_string(v.e)},
              {"status", to_string(v.status)}, {"signature", to_json(v.signature)}, {"dim_D", v.dim_d}};
}

Json to_json(const LocusDescription& l) {
  Json points = Json::array();
  for (const auto& c : l.points) points.push_back(c.to_string());
  Json excluded = Json::array();
  for (const auto& c : l.excluded) excluded.push_back(c.to_string());
  return Json{{"kind", to_string(l.kind)}, {"interval_radius", l.interval_radius.get_str()}, {"points", points}, {"excluded", excluded}};
}

Json to_json(const ScanReport& rep) {
  Json points = Json::array();
  for (const auto& p : rep.tested_points)
    points.push_back(Json{{"c", p.c.to_string()}, {"status", to_string(p.verdict.status)}, {"signature", to_json(p.verdict.signature)},
                          {"predicted", p.predicted}});
  Json singular = Json::array();
  for (const auto& c : rep.singular_points) singular.push_back(c.to_string());
  Json samples = Json::array();
  for (const auto& c : rep.interval_samples) samples.push_back(c.to_string());
  return Json{{"schema", kSchemaVersion}, {"lambda", rep.shape.to_string()}, {"bound", rep.bound}, {"predicted", to_json(rep.predicted)},
              {"singular_points", singular}, {"interval_samples", samples}, {"points", points}, {"agreement", rep.agreement},
              {"mismatches", rep.mismatches}};
}

Json to_json(const TheoremSummary& sum) {
  Json shapes = Json::array();
  for (const auto& rep : sum.reports) {
    Json s{{"lambda", rep.shape.to_string()}, {"points", rep.tested_points.size()}, {"agreement", rep.agreement}};
    if (!rep.mismatches.empty()) s["mismatches"] = rep.mismatches;
    shapes.push_back(std::move(s));
  }
  return Json{{"schema", kSchemaVersion}, {"n_max", sum.n_max}, {"bound", sum.bound}, {"shapes", shapes},
              {"points_checked", sum.points_checked}, {"agreement", sum.agreement}};
}

std::string scan_csv_header() { return "lambda,c,status,n_plus,n_minus,n_zero,predicted,computed\n"; }

std::string to_csv_rows(const ScanReport& rep) {
  std::ostringstream os;
  for (const auto& p : rep.tested_points) {
    const auto& s = p.verdict.signature;
    os << '"' << rep.shape.to_string() << "\"," << p.c.to_string() << ',' << to_string(p.verdict.status) << ',' << s.positive << ','
       << s.negative << ',' << s.zero << ',' << (p.predicted ? 1 : 0) << ',' << (p.computed ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace hecke
