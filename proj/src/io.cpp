#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "leibniz/errors.hpp"

namespace leibniz::io {

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& message) {
  throw ParseError(context + ": " + message);
}

void require_keys(const json& obj, const std::set<std::string>& required,
                  const std::set<std::string>& optional, const std::string& context) {
  if (!obj.is_object()) fail(context, "expected an object");
  for (const auto& key : required) {
    if (!obj.contains(key)) fail(context, "missing key '" + key + "'");
  }
  for (const auto& [key, value] : obj.items()) {
    if (!required.contains(key) && !optional.contains(key)) {
      fail(context, "unexpected key '" + key + "'");
    }
  }
}

std::size_t count_from(const json& v, const std::string& context) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    fail(context, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rational rational_from(const json& v, const std::string& context) {
  if (!v.is_string()) fail(context, "rational must be a string \"p/q\" or \"p\"");
  try {
    return Rational::from_string(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(context, e.what());
  }
}

std::string kind_of(const json& doc, const std::string& context) {
  if (!doc.is_object()) fail(context, "expected an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) fail(context, "missing string key 'kind'");
  return doc["kind"].get<std::string>();
}

// Sparse entries [i_1, ..., i_arity, "p/q"] accumulated into `set`.
template <typename Setter>
void read_sparse(const json& list, std::size_t arity, std::size_t dim, const std::string& context,
                 Setter set) {
  if (!list.is_array()) fail(context, "expected an array of sparse entries");
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < list.size(); ++e) {
    const std::string ctx = context + "[" + std::to_string(e) + "]";
    const json& entry = list[e];
    if (!entry.is_array() || entry.size() != arity + 1) {
      fail(ctx, "expected " + std::to_string(arity) + " indices followed by a rational");
    }
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < arity; ++a) {
      const std::size_t i = count_from(entry[a], ctx);
      if (i >= dim) {
        throw IndexOutOfRange(ctx + ": index " + std::to_string(i) + " out of range for dim " +
                              std::to_string(dim));
      }
      idx.push_back(i);
    }
    if (!seen.insert(idx).second) fail(ctx, "duplicate index tuple");
    set(idx, rational_from(entry[arity], ctx));
  }
}

json sparse3(const Tensor3& t) {
  json out = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(i, j, k).is_zero()) out.push_back({i, j, k, t(i, j, k).to_string()});
  return out;
}

json sparse4(const Tensor4& t) {
  json out = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (!t(i, j, k, m).is_zero()) out.push_back({i, j, k, m, t(i, j, k, m).to_string()});
  return out;
}

json family(const std::vector<Matrix>& mats) {
  json out = json::array();
  for (const auto& m : mats) out.push_back(to_json(m));
  return out;
}

json pair_family(const std::vector<Matrix>& mats, std::size_t n) {
  json out = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(to_json(mats[i * n + j]));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Matrix> family_from(const json& doc, std::size_t count, std::size_t dim_v,
                                const std::string& context) {
  if (!doc.is_array() || doc.size() != count) {
    fail(context, "expected an array of " + std::to_string(count) + " matrices");
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(matrix_from_json(doc[i], dim_v, dim_v, context + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<Matrix> pair_family_from(const json& doc, std::size_t n, std::size_t dim_v,
                                     const std::string& context) {
  if (!doc.is_array() || doc.size() != n) {
    fail(context, "expected an " + std::to_string(n) + "x" + std::to_string(n) +
                      " array of matrices");
  }
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto row = family_from(doc[i], n, dim_v, context + "[" + std::to_string(i) + "]");
    for (auto& m : row) out.push_back(std::move(m));
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string name_from(const json& doc, const std::string& context) {
  if (!doc.contains("name")) return {};
  if (!doc["name"].is_string()) fail(context + ".name", "expected a string");
  return doc["name"].get<std::string>();
}

}  // namespace

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json to_json(const Algebra& a) {
  return {{"kind", "leibniz"}, {"dim", a.dim()}, {"name", a.name}, {"product", sparse3(a.product)}};
}

json to_json(const LYAlgebra& a) {
  return {{"kind", "ly"},
          {"dim", a.dim()},
          {"name", a.name},
          {"binary", sparse3(a.binary)},
          {"ternary", sparse4(a.ternary)}};
}

json to_json(const LeibnizRep& rep) {
  return {{"kind", "leibniz-rep"},
          {"algebra", to_json(rep.algebra)},
          {"dim_v", rep.dim_v},
          {"l", family(rep.l)},
          {"r", family(rep.r)}};
}

json to_json(const LYRep& rep) {
  return {{"kind", "ly-rep"},
          {"algebra", to_json(rep.algebra)},
          {"dim_v", rep.dim_v},
          {"rho", family(rep.rho)},
          {"theta", pair_family(rep.theta_mats, rep.dim())},
          {"d", pair_family(rep.d_mats, rep.dim())}};
}

Matrix matrix_from_json(const json& doc, std::size_t rows, std::size_t cols,
                        const std::string& context) {
  if (!doc.is_array() || doc.size() != rows) {
    fail(context, "expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string ctx = context + "[" + std::to_string(i) + "]";
    if (!doc[i].is_array() || doc[i].size() != cols) {
      fail(ctx, "expected a row of " + std::to_string(cols) + " entries");
    }
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = rational_from(doc[i][j], ctx + "[" + std::to_string(j) + "]");
    }
  }
  return m;
}

AnyAlgebra algebra_from_json(const json& doc) {
  const std::string context = "algebra";
  const std::string kind = kind_of(doc, context);
  if (kind == "leibniz") {
    require_keys(doc, {"kind", "dim", "product"}, {"name"}, context);
    const std::size_t n = count_from(doc["dim"], context + ".dim");
    Tensor3 c(n);
    read_sparse(doc["product"], 3, n, context + ".product",
                [&](const auto& idx, Rational v) { c(idx[0], idx[1], idx[2]) = std::move(v); });
    Algebra a(std::move(c), name_from(doc, context));
    a.verified = check_left_leibniz(a).passed();
    return a;
  }
  if (kind == "ly") {
    require_keys(doc, {"kind", "dim", "binary", "ternary"}, {"name"}, context);
    const std::size_t n = count_from(doc["dim"], context + ".dim");
    Tensor3 b(n);
    Tensor4 t(n);
    read_sparse(doc["binary"], 3, n, context + ".binary",
                [&](const auto& idx, Rational v) { b(idx[0], idx[1], idx[2]) = std::move(v); });
    read_sparse(doc["ternary"], 4, n, context + ".ternary", [&](const auto& idx, Rational v) {
      t(idx[0], idx[1], idx[2], idx[3]) = std::move(v);
    });
    return LYAlgebra(std::move(b), std::move(t), name_from(doc, context));
  }
  fail(context + ".kind", "unknown algebra kind '" + kind + "'");
}

AnyRep rep_from_json(const json& doc, const std::filesystem::path& base_dir) {
  const std::string context = "rep";
  const std::string kind = kind_of(doc, context);
  if (kind != "leibniz-rep" && kind != "ly-rep") {
    fail(context + ".kind", "unknown representation kind '" + kind + "'");
  }
  const bool leibniz = kind == "leibniz-rep";
  if (leibniz) {
    require_keys(doc, {"kind", "algebra", "dim_v", "l", "r"}, {}, context);
  } else {
    require_keys(doc, {"kind", "algebra", "dim_v", "rho", "theta", "d"}, {}, context);
  }

  AnyAlgebra algebra = [&]() -> AnyAlgebra {
    const json& a = doc["algebra"];
    if (a.is_string()) {
      std::filesystem::path p = a.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      return parse_algebra(p);
    }
    return algebra_from_json(a);
  }();
  const std::size_t dim_v = count_from(doc["dim_v"], context + ".dim_v");

  if (leibniz) {
    auto* a = std::get_if<Algebra>(&algebra);
    if (a == nullptr) fail(context + ".algebra", "a leibniz-rep needs a leibniz algebra");
    const std::size_t n = a->dim();
    auto l = family_from(doc["l"], n, dim_v, context + ".l");
    auto r = family_from(doc["r"], n, dim_v, context + ".r");
    return LeibnizRep(std::move(*a), dim_v, std::move(l), std::move(r));
  }
  auto* a = std::get_if<LYAlgebra>(&algebra);
  if (a == nullptr) fail(context + ".algebra", "an ly-rep needs an ly algebra");
  const std::size_t n = a->dim();
  auto rho = family_from(doc["rho"], n, dim_v, context + ".rho");
  auto theta = pair_family_from(doc["theta"], n, dim_v, context + ".theta");
  auto d = pair_family_from(doc["d"], n, dim_v, context + ".d");
  return LYRep(std::move(*a), dim_v, std::move(rho), std::move(theta), std::move(d));
}

AnyAlgebra parse_algebra(const std::filesystem::path& path) {
  try {
    return algebra_from_json(read_json_file(path));
  } catch (const IndexOutOfRange& e) {
    throw IndexOutOfRange(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

AnyRep parse_rep(const std::filesystem::path& path) {
  try {
    return rep_from_json(read_json_file(path), path.parent_path());
  } catch (const IndexOutOfRange& e) {
    throw IndexOutOfRange(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_array() || x.is_object()) return false;
  }
  return true;
}

// Two-space indentation; arrays of scalars stay on one line so matrix rows
// and sparse entries read naturally. Object keys come out sorted because
// nlohmann::json stores them in a std::map.
void write_canonical(std::ostream& os, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (const auto& [key, value] : v.items()) {
      os << (first ? "" : ",\n") << inner << json(key).dump() << ": ";
      write_canonical(os, value, indent + 1);
      first = false;
    }
    os << '\n' << pad << '}';
  } else if (is_flat_array(v)) {
    os << '[';
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].dump();
    os << ']';
  } else if (v.is_array()) {
    os << "[\n";
    for (std::size_t k = 0; k < v.size(); ++k) {
      os << (k ? ",\n" : "") << inner;
      write_canonical(os, v[k], indent + 1);
    }
    os << '\n' << pad << ']';
  } else {
    os << v.dump();
  }
}

}  // namespace

std::string serialize(const json& doc) {
  std::ostringstream os;
  write_canonical(os, doc, 0);
  os << '\n';
  return os.str();
}

void write_document(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw ParseError(path.string() + ": cannot open for writing");
  out << serialize(doc);
}

std::string emit_report(const Report& report, Format format) {
  if (format == Format::json) {
    json doc = report.extra;
    doc["command"] = report.command;
    doc["verdict"] = report.verdict;
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"axiom", v.axiom}, {"indices", v.indices}, {"defect", to_json(v.defect)}});
    }
    doc["violations"] = std::move(violations);
    if (report.witness) doc["witness"] = to_json(*report.witness);
    if (!report.note.empty()) doc["note"] = report.note;
    if (report.timing_ms) doc["timing_ms"] = *report.timing_ms;
    return serialize(doc);
  }

  std::ostringstream os;
  os << "command: " << report.command << '\n';
  os << "verdict: " << report.verdict << '\n';
  for (const auto& [key, value] : report.extra.items()) {
    os << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  if (!report.note.empty()) os << "note: " << report.note << '\n';
  if (report.witness) os << "witness: " << report.witness->to_string() << '\n';
  os << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) {
    os << "  " << v.axiom << " (";
    for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k ? "," : "") << v.indices[k];
    os << "): [";
    for (std::size_t k = 0; k < v.defect.size(); ++k) os << (k ? ", " : "") << v.defect[k];
    os << "]\n";
  }
  if (report.timing_ms) os << "timing_ms: " << *report.timing_ms << '\n';
  return os.str();
}

}  // namespace leibniz::io
