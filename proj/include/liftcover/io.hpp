#ifndef LIFTCOVER_IO_HPP
#define LIFTCOVER_IO_HPP

#include <json.hpp>
#include <string>

#include "liftcover/cutgen.hpp"
#include "liftcover/gallery.hpp"

namespace liftcover::io {

using json = nlohmann::json;

// Rationals travel as strings in lowest terms ("-3/4", "2"). Parsers also
// accept JSON integers; every failure is a ParseError carrying the JSON
// pointer of the offending field.
json to_json(const Rational& q);
json to_json(const QVector& v);
json matrix_rows(const QMatrix& M);

Rational rational_from_json(const json& j, const std::string& where);
QVector vector_from_json(const json& j, const std::string& where, std::optional<std::size_t> size = std::nullopt);
// Row list; `cols` fixes the width when there may be no rows.
QMatrix matrix_from_json(const json& j, const std::string& where, std::optional<std::size_t> cols = std::nullopt);

// {dim, normals}
json to_json(const SFreeBody& B);
SFreeBody body_from_json(const json& j, const std::string& where = "");

// {dim, basis (one entry per basis vector), shift, hull: {A, b}}
json to_json(const TruncatedAffineLattice& S);
TruncatedAffineLattice lattice_from_json(const json& j, const std::string& where = "");

// {M, m}
json to_json(const AffineMap& T);
AffineMap map_from_json(const json& j, const std::string& where = "");

// {R, P} as row lists.
json to_json(const MixedIntegerInstance& inst);
MixedIntegerInstance instance_from_json(const json& j, const std::string& where = "");

// {lattice, samples, limit}
json to_json(const LimitInstance& inst);
LimitInstance limit_from_json(const json& j, const std::string& where = "");

json to_json(const CoveringReport& r);
json to_json(const OracleResult& r);
json to_json(const LiftingValue& v);
json to_json(const Cut& c);
json to_json(const CutValidation& v);
json to_json(const LimitBodyReport& r);
json to_json(const LimitReport& r);
json to_json(const GalleryEntry& e);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
json parse_text(const std::string& text, const std::string& source);
json read_file(const std::string& path);

}  // namespace liftcover::io

#endif
