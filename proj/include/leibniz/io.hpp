#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/axiom_report.hpp"
#include "leibniz/representation.hpp"

namespace leibniz::io {

using json = nlohmann::json;
using AnyAlgebra = std::variant<Algebra, LYAlgebra>;
using AnyRep = std::variant<LeibnizRep, LYRep>;

// Algebra documents:
//   {"kind": "leibniz", "dim": n, "name": ..., "product": [[i, j, k, "p/q"], ...]}
//   {"kind": "ly", "dim": n, "name": ..., "binary": [[i, j, k, "p/q"], ...],
//    "ternary": [[i, j, k, m, "p/q"], ...]}
// Sparse entries are written sorted by index tuple with zeros omitted.
//
// Representation documents:
//   {"kind": "leibniz-rep", "algebra": <algebra document or path>, "dim_v": m,
//    "l": [matrix per basis index], "r": [...]}
//   {"kind": "ly-rep", "algebra": ..., "dim_v": m, "rho": [...],
//    "theta": [[matrix per (i, j)]], "d": [[...]]}
// A matrix is an array of rows, each an array of rational strings.

json to_json(const Algebra& a);
json to_json(const LYAlgebra& a);
json to_json(const LeibnizRep& rep);
json to_json(const LYRep& rep);
json to_json(const Matrix& m);
json to_json(const Vector& v);

/// Relative "algebra" paths inside representation documents resolve against
/// `base_dir`.
AnyAlgebra algebra_from_json(const json& doc);
AnyRep rep_from_json(const json& doc, const std::filesystem::path& base_dir = {});
Matrix matrix_from_json(const json& doc, std::size_t rows, std::size_t cols,
                        const std::string& context);

AnyAlgebra parse_algebra(const std::filesystem::path& path);
AnyRep parse_rep(const std::filesystem::path& path);

/// Canonical text of a document: two-space indentation, sorted keys, trailing
/// newline.
std::string serialize(const json& doc);
void write_document(const std::filesystem::path& path, const json& doc);

enum class Format { text, json };

struct Report {
  std::string command;
  std::string verdict;
  std::vector<Violation> violations;
  std::optional<Matrix> witness;
  std::string note;
  /// Command-specific fields, emitted under their own keys.
  json extra = json::object();
  std::optional<double> timing_ms;
};

std::string emit_report(const Report& report, Format format);

}  // namespace leibniz::io
