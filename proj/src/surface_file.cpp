#include "bgeom/surface_file.hpp"

#include "bgeom/error.hpp"

#include <cctype>

namespace bgeom {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

void require_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) fail(path + "." + key, "unknown field");
  }
  for (std::string_view r : required) {
    if (!j.contains(r)) fail(path + "." + std::string(r), "missing field");
  }
}

Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path, "expected a rational as \"p/q\" or an integer");
}

int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) fail(path, "integer out of range");
  return static_cast<int>(v);
}

std::string read_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

std::vector<Rational> read_vector(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(read_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::map<std::string, Rational> read_rational_map(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  std::map<std::string, Rational> out;
  for (const auto& [key, value] : j.items()) out[key] = read_rational(value, path + "." + key);
  return out;
}

std::vector<CurveSpec> read_curves(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  std::vector<CurveSpec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require_keys(j[i], p, {"name", "class"}, {"name", "class"});
    out.push_back({read_string(j[i]["name"], p + ".name"), read_vector(j[i]["class"], p + ".class")});
  }
  return out;
}

BaseSpec read_base(const json& j) {
  BaseSpec base;
  if (j.is_object() && j.contains("preset")) {
    require_keys(j, "base", {"preset", "n", "curves"});
    base.preset = read_string(j["preset"], "base.preset");
    if (base.preset != "P2" && base.preset != "Fn" && base.preset != "ruled1") {
      fail("base.preset", "expected one of P2, Fn, ruled1");
    }
    if (j.contains("n")) base.n = read_int(j["n"], "base.n");
    if (base.preset != "P2" && !base.n) fail("base.n", "missing field");
    if (base.preset == "P2" && base.n) fail("base.n", "P2 takes no parameter");
    if (j.contains("curves")) base.curves = read_curves(j["curves"], "base.curves");
    return base;
  }
  require_keys(j, "base", {"name", "rank", "basis", "gram", "canonical", "curves"}, {"rank", "gram", "canonical"});
  const int rank = read_int(j["rank"], "base.rank");
  if (rank < 1) fail("base.rank", "must be positive");
  if (j.contains("name")) base.name = read_string(j["name"], "base.name");
  if (j.contains("basis")) {
    if (!j["basis"].is_array()) fail("base.basis", "expected an array");
    for (std::size_t i = 0; i < j["basis"].size(); ++i) {
      base.basis.push_back(read_string(j["basis"][i], "base.basis[" + std::to_string(i) + "]"));
    }
  } else {
    for (int i = 1; i <= rank; ++i) base.basis.push_back("g" + std::to_string(i));
  }
  if (!j["gram"].is_array()) fail("base.gram", "expected an array");
  for (std::size_t i = 0; i < j["gram"].size(); ++i) {
    base.gram.push_back(read_vector(j["gram"][i], "base.gram[" + std::to_string(i) + "]"));
  }
  base.canonical = read_vector(j["canonical"], "base.canonical");
  if (j.contains("curves")) base.curves = read_curves(j["curves"], "base.curves");

  const auto r = static_cast<std::size_t>(rank);
  if (base.basis.size() != r) fail("base.basis", "length differs from rank");
  if (base.gram.size() != r) fail("base.gram", "row count differs from rank");
  for (std::size_t i = 0; i < r; ++i) {
    if (base.gram[i].size() != r) fail("base.gram[" + std::to_string(i) + "]", "length differs from rank");
  }
  if (base.canonical.size() != r) fail("base.canonical", "length differs from rank");
  return base;
}

json rational_json(const Rational& q) { return to_string(q); }

json vector_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& q : v) out.push_back(rational_json(q));
  return out;
}

json map_json(const std::map<std::string, Rational>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = rational_json(v);
  return out;
}

json curves_json(const std::vector<CurveSpec>& curves) {
  json out = json::array();
  for (const CurveSpec& c : curves) out.push_back({{"name", c.name}, {"class", vector_json(c.cls)}});
  return out;
}

Vector to_vector(const std::vector<Rational>& v) {
  Vector out(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Index>(i)] = v[i];
  return out;
}

BaseSurface build_base(const BaseSpec& spec) {
  std::vector<std::pair<std::string, Vector>> extra;
  for (const CurveSpec& c : spec.curves) extra.emplace_back(c.name, to_vector(c.cls));
  if (!spec.preset.empty()) {
    BaseSurface base = spec.preset == "P2" ? projective_plane()
                       : spec.preset == "Fn" ? hirzebruch(*spec.n)
                                             : elliptic_ruled(*spec.n);
    return extra.empty() ? base : with_curves(std::move(base), extra);
  }
  const Index r = static_cast<Index>(spec.gram.size());
  Matrix gram(r, r);
  for (Index i = 0; i < r; ++i) gram.row(i) = to_vector(spec.gram[static_cast<std::size_t>(i)]).transpose();
  std::vector<Curve> curves;
  for (const auto& [name, cls] : extra) curves.push_back({name, cls, false});
  return make_base(spec.name.empty() ? "raw" : spec.name, spec.basis, gram, to_vector(spec.canonical),
                   std::move(curves));
}

}  // namespace

SurfaceFile parse_surface_file(std::string_view bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  require_keys(j, "$", {"version", "base", "blowups", "contraction", "pair"}, {"version", "base"});

  SurfaceFile file;
  file.version = read_int(j["version"], "version");
  if (file.version != 1) fail("version", "unsupported version");
  file.base = read_base(j["base"]);

  if (j.contains("blowups")) {
    const json& list = j["blowups"];
    if (!list.is_array()) fail("blowups", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string p = "blowups[" + std::to_string(i) + "]";
      require_keys(list[i], p, {"multiplicities", "name"}, {"multiplicities"});
      BlowupCenter center;
      const json& mults = list[i]["multiplicities"];
      if (!mults.is_object()) fail(p + ".multiplicities", "expected an object");
      for (const auto& [name, value] : mults.items()) {
        center.multiplicities[name] = read_int(value, p + ".multiplicities." + name);
      }
      if (list[i].contains("name")) center.name = read_string(list[i]["name"], p + ".name");
      file.blowups.push_back(std::move(center));
    }
  }

  if (j.contains("contraction")) {
    const json& c = j["contraction"];
    require_keys(c, "contraction", {"curves", "log_resolution"}, {"curves"});
    ContractionSpec spec;
    if (!c["curves"].is_array()) fail("contraction.curves", "expected an array");
    for (std::size_t i = 0; i < c["curves"].size(); ++i) {
      spec.curves.push_back(read_string(c["curves"][i], "contraction.curves[" + std::to_string(i) + "]"));
    }
    if (c.contains("log_resolution")) {
      if (!c["log_resolution"].is_boolean()) fail("contraction.log_resolution", "expected a boolean");
      spec.log_resolution = c["log_resolution"].get<bool>();
    }
    file.contraction = std::move(spec);
  }

  if (j.contains("pair")) {
    const json& p = j["pair"];
    require_keys(p, "pair", {"boundary", "nef_part", "cartier_index"});
    PairSpec spec;
    if (p.contains("boundary")) spec.boundary = read_rational_map(p["boundary"], "pair.boundary");
    if (p.contains("nef_part")) spec.nef_part = read_rational_map(p["nef_part"], "pair.nef_part");
    if (p.contains("cartier_index")) spec.cartier_index = read_int(p["cartier_index"], "pair.cartier_index");
    file.pair = std::move(spec);
  }
  return file;
}

json to_json(const SurfaceFile& file) {
  json out;
  out["version"] = file.version;
  json base;
  const BaseSpec& b = file.base;
  if (!b.preset.empty()) {
    base["preset"] = b.preset;
    if (b.n) base["n"] = *b.n;
    if (!b.curves.empty()) base["curves"] = curves_json(b.curves);
  } else {
    if (!b.name.empty()) base["name"] = b.name;
    base["rank"] = b.gram.size();
    base["basis"] = b.basis;
    base["gram"] = json::array();
    for (const auto& row : b.gram) base["gram"].push_back(vector_json(row));
    base["canonical"] = vector_json(b.canonical);
    base["curves"] = curves_json(b.curves);
  }
  out["base"] = std::move(base);
  out["blowups"] = json::array();
  for (const BlowupCenter& c : file.blowups) {
    json center{{"multiplicities", json::object()}};
    for (const auto& [name, m] : c.multiplicities) center["multiplicities"][name] = m;
    if (!c.name.empty()) center["name"] = c.name;
    out["blowups"].push_back(std::move(center));
  }
  if (file.contraction) {
    out["contraction"] = {{"curves", file.contraction->curves}, {"log_resolution", file.contraction->log_resolution}};
  }
  if (file.pair) {
    out["pair"] = {{"boundary", map_json(file.pair->boundary)},
                   {"nef_part", map_json(file.pair->nef_part)},
                   {"cartier_index", file.pair->cartier_index}};
  }
  return out;
}

std::string serialize(const SurfaceFile& file) { return to_json(file).dump(2) + "\n"; }

Workspace materialize(const SurfaceFile& file, Index max_rank) {
  const Index base_rank = file.base.preset.empty()  ? static_cast<Index>(file.base.gram.size())
                          : file.base.preset == "P2" ? 1
                                                     : 2;
  if (base_rank + static_cast<Index>(file.blowups.size()) > max_rank) {
    throw Error(ErrorCode::RankLimitExceeded, "model rank exceeds the limit of " + std::to_string(max_rank));
  }
  Workspace ws{build_model(build_base(file.base), file.blowups), std::nullopt, std::nullopt};
  const Lattice& top = ws.model.lattice();
  if (file.contraction) ws.contraction.emplace(top, file.contraction->curves, file.contraction->log_resolution);
  if (file.pair) {
    std::vector<std::pair<std::string, Rational>> terms(file.pair->nef_part.begin(), file.pair->nef_part.end());
    DivisorClass m = resolve_terms(top, terms);
    if (ws.contraction) {
      ws.pair.emplace(*ws.contraction, file.pair->boundary, std::move(m), file.pair->cartier_index);
    } else {
      ws.pair.emplace(top, file.pair->boundary, std::move(m), file.pair->cartier_index);
    }
  }
  return ws;
}

std::vector<std::pair<std::string, Rational>> parse_terms(std::string_view text) {
  std::vector<std::pair<std::string, Rational>> terms;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto bad = [&](const std::string& what) -> Error {
    return Error(ErrorCode::ParseError, "divisor expression, column " + std::to_string(pos + 1) + ": " + what);
  };

  skip();
  if (pos == text.size()) throw bad("empty expression");
  bool first = true;
  while (true) {
    skip();
    Rational sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw bad("expected '+' or '-'");
    }
    Rational coeff = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      coeff = parse_rational(text.substr(start, pos - start));
      skip();
      if (pos >= text.size() || text[pos] != '*') throw bad("expected '*' after coefficient");
      ++pos;
      skip();
    }
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                 text[pos] == '\'')) {
      ++pos;
    }
    if (start == pos || std::isdigit(static_cast<unsigned char>(text[start]))) throw bad("expected a name");
    terms.emplace_back(std::string(text.substr(start, pos - start)), sign * coeff);
    first = false;
    skip();
    if (pos == text.size()) break;
  }
  return terms;
}

DivisorClass resolve_terms(const Lattice& lattice, const std::vector<std::pair<std::string, Rational>>& terms) {
  DivisorClass sum = lattice.zero();
  for (const auto& [name, coeff] : terms) {
    if (lattice.curve_index(name)) {
      sum += coeff * lattice.curve_class(name);
    } else if (const auto i = lattice.basis_index(name)) {
      sum += coeff * lattice.basis_vector(*i);
    } else {
      throw Error(ErrorCode::UnknownCurveName, "unknown curve or basis name '" + name + "'");
    }
  }
  return sum;
}

DivisorClass parse_divisor(const Lattice& lattice, std::string_view text) {
  return resolve_terms(lattice, parse_terms(text));
}

}  // namespace bgeom
