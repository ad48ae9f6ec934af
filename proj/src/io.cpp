#include "liftcover/io.hpp"

#include <fstream>
#include <sstream>

#include "liftcover/errors.hpp"

namespace liftcover::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t index) { return where + "/" + std::to_string(index); }

const json& field(const json& j, const std::string& where, const std::string& key) {
  if (!j.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("missing field '" + key + "'", at(where, key));
  return *it;
}

std::size_t size_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError("expected a nonnegative integer", where);
  return j.get<std::size_t>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("expected an array", where);
  return j;
}

json optional_vector(const std::optional<QVector>& v) { return v ? to_json(*v) : json(nullptr); }

}  // namespace

json to_json(const Rational& q) { return format_rational(q); }

json to_json(const QVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json matrix_rows(const QMatrix& M) {
  json out = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) out.push_back(to_json(M.row(i)));
  return out;
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw ParseError("expected a rational string such as \"-3/4\"", where);
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(e.what(), where);
  }
}

QVector vector_from_json(const json& j, const std::string& where, std::optional<std::size_t> size) {
  array(j, where);
  if (size && j.size() != *size)
    throw ParseError("expected " + std::to_string(*size) + " entries, got " + std::to_string(j.size()), where);
  QVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i], at(where, i));
  return v;
}

QMatrix matrix_from_json(const json& j, const std::string& where, std::optional<std::size_t> cols) {
  array(j, where);
  if (j.empty()) return QMatrix(0, cols.value_or(0));
  std::size_t width = cols ? *cols : array(j[0], at(where, 0)).size();
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(vector_from_json(j[i], at(where, i), width));
  return QMatrix::from_rows(rows, width);
}

json to_json(const SFreeBody& B) {
  json out;
  out["dim"] = B.dim();
  out["normals"] = json::array();
  for (const auto& a : B.normals()) out["normals"].push_back(to_json(a));
  return out;
}

SFreeBody body_from_json(const json& j, const std::string& where) {
  std::size_t dim = size_from_json(field(j, where, "dim"), at(where, "dim"));
  const json& normals = array(field(j, where, "normals"), at(where, "normals"));
  if (normals.empty()) throw ParseError("body needs at least one normal", at(where, "normals"));
  std::vector<QVector> out;
  for (std::size_t i = 0; i < normals.size(); ++i)
    out.push_back(vector_from_json(normals[i], at(at(where, "normals"), i), dim));
  try {
    return SFreeBody(std::move(out));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), at(where, "normals"));
  } catch (const DimensionError& e) {
    throw ParseError(e.what(), at(where, "dim"));
  }
}

json to_json(const TruncatedAffineLattice& S) {
  json out;
  out["dim"] = S.dim();
  const QMatrix& basis = S.lattice().basis();
  out["basis"] = json::array();
  for (std::size_t c = 0; c < basis.cols(); ++c) out["basis"].push_back(to_json(basis.column(c)));
  out["shift"] = to_json(S.shift());
  out["hull"] = {{"A", matrix_rows(S.hull().A())}, {"b", to_json(S.hull().b())}};
  return out;
}

TruncatedAffineLattice lattice_from_json(const json& j, const std::string& where) {
  std::size_t dim = size_from_json(field(j, where, "dim"), at(where, "dim"));
  std::string bw = at(where, "basis");
  const json& basis = array(field(j, where, "basis"), bw);
  std::vector<QVector> cols;
  for (std::size_t i = 0; i < basis.size(); ++i) cols.push_back(vector_from_json(basis[i], at(bw, i), dim));
  QVector shift = vector_from_json(field(j, where, "shift"), at(where, "shift"), dim);
  std::string hw = at(where, "hull");
  const json& hull = field(j, where, "hull");
  QMatrix A = matrix_from_json(field(hull, hw, "A"), at(hw, "A"), dim);
  QVector b = vector_from_json(field(hull, hw, "b"), at(hw, "b"), A.rows());
  try {
    return TruncatedAffineLattice(shift, Lattice(QMatrix::from_columns(cols, dim)), HPolyhedron(A, b));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), where.empty() ? "/" : where);
  } catch (const DimensionError& e) {
    throw ParseError(e.what(), bw);
  }
}

json to_json(const AffineMap& T) { return {{"M", matrix_rows(T.M)}, {"m", to_json(T.m)}}; }

AffineMap map_from_json(const json& j, const std::string& where) {
  QVector m = vector_from_json(field(j, where, "m"), at(where, "m"));
  QMatrix M = matrix_from_json(field(j, where, "M"), at(where, "M"), m.size());
  if (M.rows() != m.size()) throw ParseError("M must be square and match m", at(where, "M"));
  try {
    return AffineMap(M, m);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), at(where, "M"));
  }
}

json to_json(const MixedIntegerInstance& inst) { return {{"R", matrix_rows(inst.R)}, {"P", matrix_rows(inst.P)}}; }

MixedIntegerInstance instance_from_json(const json& j, const std::string& where) {
  QMatrix R = matrix_from_json(field(j, where, "R"), at(where, "R"));
  QMatrix P = matrix_from_json(field(j, where, "P"), at(where, "P"));
  if (R.rows() != P.rows()) throw ParseError("R and P need the same number of rows", at(where, "P"));
  try {
    return MixedIntegerInstance(R, P);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), where.empty() ? "/" : where);
  }
}

json to_json(const LimitInstance& inst) {
  json samples = json::array();
  for (const auto& B : inst.samples) samples.push_back(to_json(B));
  return {{"lattice", to_json(inst.S)}, {"samples", samples}, {"limit", to_json(inst.limit)}};
}

LimitInstance limit_from_json(const json& j, const std::string& where) {
  TruncatedAffineLattice S = lattice_from_json(field(j, where, "lattice"), at(where, "lattice"));
  std::string sw = at(where, "samples");
  const json& samples = array(field(j, where, "samples"), sw);
  std::vector<SFreeBody> bodies;
  for (std::size_t i = 0; i < samples.size(); ++i) bodies.push_back(body_from_json(samples[i], at(sw, i)));
  SFreeBody limit = body_from_json(field(j, where, "limit"), at(where, "limit"));
  return {S, std::move(bodies), std::move(limit)};
}

json to_json(const CoveringReport& r) {
  json cert = json::array();
  for (const auto& t : r.certificate) cert.push_back({{"anchor", to_json(t.anchor)}, {"w", to_json(t.w)}});
  return {{"verdict", to_string(r.verdict)},
          {"halfspace", r.halfspace},
          {"reduced", r.reduced},
          {"complementary", r.complementary},
          {"validation_exact", r.validation_exact},
          {"witness", optional_vector(r.witness)},
          {"witness_working", optional_vector(r.witness_working)},
          {"certificate", cert},
          {"spindles", r.spindles},
          {"translates_examined", r.translates_examined},
          {"notes", r.notes}};
}

json to_json(const OracleResult& r) {
  return {{"covered", r.covered},
          {"resolution", r.resolution},
          {"samples", r.samples},
          {"uncovered", optional_vector(r.uncovered)}};
}

json to_json(const LiftingValue& v) {
  return {{"value", to_json(v.value)}, {"w", to_json(v.w)}, {"certified", v.certified}};
}

json to_json(const Cut& c) {
  json psi = json::array(), pi = json::array(), wit = json::array();
  for (const auto& x : c.psi) psi.push_back(to_json(x));
  for (const auto& x : c.pi) pi.push_back(to_json(x));
  for (const auto& w : c.witnesses) wit.push_back(to_json(w));
  return {{"psi", psi}, {"pi", pi}, {"witnesses", wit}, {"certified", c.certified}, {"label", c.label}};
}

json to_json(const CutValidation& v) {
  return {{"verdict", to_string(v.verdict)},
          {"feasible_points", v.feasible_points},
          {"min_lhs", v.min_lhs ? to_json(*v.min_lhs) : json(nullptr)},
          {"violation_s", optional_vector(v.violation_s)},
          {"violation_y", optional_vector(v.violation_y)}};
}

json to_json(const LimitBodyReport& r) {
  return {{"free", r.free},     {"exact", r.exact},     {"maximal", r.maximal}, {"polytope", r.polytope},
          {"covered", r.covered}, {"verdict", r.verdict}, {"facets", r.facets}};
}

json to_json(const LimitReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  return {{"samples", samples},
          {"limit", to_json(r.limit)},
          {"hypotheses", r.hypotheses},
          {"all_samples_covered", r.all_samples_covered},
          {"consistent", r.consistent},
          {"approached", r.approached}};
}

json to_json(const GalleryEntry& e) {
  return {{"name", e.name},
          {"body", to_json(e.B)},
          {"lattice", to_json(e.S)},
          {"expected_covering", e.expected_covering},
          {"provenance", e.provenance}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at byte " + std::to_string(e.byte), "");
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, "");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

}  // namespace liftcover::io
