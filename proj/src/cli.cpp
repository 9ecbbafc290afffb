#include "bgeom/cli.hpp"

#include "bgeom/bounds.hpp"
#include "bgeom/descent.hpp"
#include "bgeom/error.hpp"
#include "bgeom/exact.hpp"
#include "bgeom/positivity.hpp"
#include "bgeom/surface_file.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace bgeom::cli {

using nlohmann::json;

namespace {

struct Flags {
  std::string command;
  std::string file;
  std::string which;
  std::string d, d1, d2, m, h, f;
  bool target = false;
  bool strict = false;
  bool birational = false;
  int m0 = 1;
  std::string delta = "1";
  std::string e = "1/2";
};

struct StrictFailure {
  std::string verdict;
};

json class_json(const Lattice& lattice, const DivisorClass& d) {
  json out = json::object();
  for (Index i = 0; i < d.size(); ++i) out[lattice.basis()[static_cast<std::size_t>(i)]] = to_string(d[i]);
  return out;
}

json named_rationals(const std::vector<std::pair<std::string, Rational>>& values) {
  json out = json::object();
  for (const auto& [name, q] : values) out[name] = to_string(q);
  return out;
}

Index max_rank() {
  const char* raw = std::getenv("BGEOM_MAX_RANK");
  if (raw == nullptr || *raw == '\0') return 64;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) throw Error(ErrorCode::ParseError, "BGEOM_MAX_RANK must be a positive integer");
  return static_cast<Index>(v);
}

const Lattice& working_lattice(const Workspace& ws, bool target) {
  if (!target) return ws.model.lattice();
  if (!ws.contraction) throw Error(ErrorCode::ValidationError, "--target needs a contraction in the file");
  return ws.contraction->target();
}

const GenPair& require_pair(const Workspace& ws) {
  if (!ws.pair) throw Error(ErrorCode::ValidationError, "the file has no pair section");
  return *ws.pair;
}

json check_result(const Workspace& ws) {
  const Lattice& top = ws.model.lattice();
  const Inertia s = inertia(top.gram());
  json curves = json::array();
  for (const Curve& c : top.curves()) {
    curves.push_back({{"name", c.name}, {"class", class_json(top, top.make(c.cls))}, {"exceptional", c.exceptional}});
  }
  json out{{"rank", top.rank()},
           {"basis", top.basis()},
           {"canonical", class_json(top, top.canonical())},
           {"canonical_square", to_string(top.intersect(top.canonical(), top.canonical()))},
           {"signature", {{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}}},
           {"curves", std::move(curves)},
           {"base_effective_cone_generated", ws.model.base().effective_cone_generated}};
  if (ws.contraction) {
    out["contraction"] = {{"contracted", ws.contraction->contracted()},
                          {"target_basis", ws.contraction->target().basis()},
                          {"log_resolution", ws.contraction->is_log_resolution()}};
  }
  if (const auto defect = configuration_defect(top)) out["configuration_warning"] = *defect;
  return out;
}

json bounds_result(const Workspace& ws, const Flags& flags) {
  if (ws.pair && ws.pair->on_contraction()) {
    throw Error(ErrorCode::ValidationError, "bounds are evaluated on a smooth model; drop the contraction");
  }
  const Lattice& top = ws.model.lattice();
  BoundaryDivisor fixed;
  if (!flags.f.empty()) {
    for (const auto& [name, q] : parse_terms(flags.f)) {
      top.curve(name);
      fixed[name] += q;
    }
  }
  BoundInstance instance{top,
                         ws.pair ? ws.pair->boundary() : BoundaryDivisor{},
                         ws.pair ? ws.pair->nef_part() : top.zero(),
                         parse_divisor(top, flags.h),
                         std::move(fixed),
                         flags.m0,
                         parse_rational(flags.delta),
                         parse_rational(flags.e),
                         flags.birational};
  BoundCheck check;
  if (flags.which == "HB") {
    check = check_boundHB(instance);
  } else if (flags.which == "HM") {
    check = check_boundHM(instance);
  } else if (flags.which == "M2") {
    check = check_boundM2(instance);
  } else {
    check = check_boundHG(instance);
  }
  return {{"bound", flags.which},
          {"lhs", to_string(check.lhs)},
          {"rhs", to_string(check.rhs)},
          {"holds", check.holds},
          {"hypotheses_asserted", check.hypotheses_asserted}};
}

json execute(const Flags& flags, const Workspace& ws) {
  const std::string& cmd = flags.command;
  if (cmd == "check") return check_result(ws);
  if (cmd == "intersect") {
    const Lattice& x = working_lattice(ws, flags.target);
    return to_string(x.intersect(parse_divisor(x, flags.d1), parse_divisor(x, flags.d2)));
  }
  if (cmd == "zariski") {
    const Lattice& x = working_lattice(ws, flags.target);
    const ZariskiDecomposition z = zariski(x, parse_divisor(x, flags.d));
    json support = json::object();
    for (std::size_t i = 0; i < z.support.size(); ++i) support[z.support[i]] = to_string(z.coefficients[i]);
    return {{"positive", class_json(x, z.positive)},
            {"negative", class_json(x, z.negative)},
            {"support", std::move(support)}};
  }
  if (cmd == "volume") {
    const Lattice& x = working_lattice(ws, flags.target);
    return to_string(volume(x, parse_divisor(x, flags.d)));
  }
  if (cmd == "pair-volume") return to_string(pair_volume(require_pair(ws)));
  if (cmd == "discrepancies") {
    if (!ws.contraction) throw Error(ErrorCode::ValidationError, "discrepancies need a contraction");
    const Lattice& top = ws.model.lattice();
    return named_rationals(discrepancies(*ws.contraction, ws.pair ? ws.pair->boundary() : BoundaryDivisor{},
                                         ws.pair ? ws.pair->nef_part() : top.zero()));
  }
  if (cmd == "classify") {
    const Lattice& top = ws.model.lattice();
    const GenPair pair = ws.pair ? *ws.pair
                         : ws.contraction ? GenPair(*ws.contraction, {}, top.zero())
                                          : GenPair(top, {}, top.zero());
    const std::string verdict(to_string(classify(pair)));
    if (flags.strict && verdict == "not_glc") throw StrictFailure{verdict};
    return verdict;
  }
  if (cmd == "descend") {
    const Lattice& top = ws.model.lattice();
    const DescentResult r = descend_nef(ws.model, parse_divisor(top, flags.m));
    return {{"blowup_count", r.blowup_count},
            {"bound", to_string(r.bound)},
            {"contracted", r.contracted},
            {"intermediate_basis", r.intermediate.basis()},
            {"m_prime", class_json(r.intermediate, r.m_prime)}};
  }
  return bounds_result(ws, flags);
}

std::string render(const Flags& flags, const json& hash, const json& result, const json& error) {
  json report{{"command", flags.command}, {"input_hash", hash}, {"result", result}, {"exact", true}};
  if (!error.is_null()) report["error"] = error;
  return report.dump(2) + "\n";
}

json error_json(std::string_view code, const std::string& message) {
  return {{"code", code}, {"message", message}};
}

void build_parser(CLI::App& app, Flags& flags) {
  app.require_subcommand(1);
  auto file = [&](CLI::App* sub) { sub->add_option("file", flags.file, "surface description (JSON)")->required(); };
  auto target = [&](CLI::App* sub) { sub->add_flag("--target", flags.target, "evaluate on the contraction target"); };

  file(app.add_subcommand("check", "validate a surface file"));
  auto* intersect = app.add_subcommand("intersect", "intersection number D1·D2");
  file(intersect);
  intersect->add_option("--D1", flags.d1)->required();
  intersect->add_option("--D2", flags.d2)->required();
  target(intersect);
  for (const auto& [name, about] : {std::pair{"zariski", "Zariski decomposition P + N"},
                                    std::pair{"volume", "volume of a divisor"}}) {
    auto* sub = app.add_subcommand(name, about);
    file(sub);
    sub->add_option("-D", flags.d)->required();
    target(sub);
  }
  file(app.add_subcommand("pair-volume", "vol(K + B + M) of the pair"));
  file(app.add_subcommand("discrepancies", "generalized discrepancies of the contraction"));
  auto* classify = app.add_subcommand("classify", "gklt / glc / not_glc");
  file(classify);
  classify->add_flag("--strict", flags.strict, "exit 1 on not_glc");
  auto* descend = app.add_subcommand("descend", "nef descent of M over the tower");
  file(descend);
  descend->add_option("-M", flags.m)->required();
  auto* bounds = app.add_subcommand("bounds", "evaluate a surface inequality");
  bounds->add_option("which", flags.which)->required()->check(CLI::IsMember({"HB", "HM", "M2", "HG"}));
  file(bounds);
  bounds->add_option("--H", flags.h)->required();
  bounds->add_option("--F", flags.f, "effective combination of tracked curves");
  bounds->add_option("--m0", flags.m0)->check(CLI::PositiveNumber);
  bounds->add_option("--delta", flags.delta);
  bounds->add_option("--e", flags.e);
  bounds->add_flag("--birational", flags.birational, "assert that |H| defines a birational map");
}

}  // namespace

std::string input_hash(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out = "sha256:";
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

Outcome run(const std::vector<std::string>& args) {
  Flags flags;
  CLI::App app{"exact birational geometry of surfaces", "bgeom"};
  build_parser(app, flags);

  std::vector<std::string> reversed;
  for (const std::string& a : args) reversed.push_back(a == "-D1" ? "--D1" : a == "-D2" ? "--D2" : a);
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) flags.command = app.get_subcommands().front()->get_name();
    return {2, render(flags, nullptr, nullptr, error_json("USAGE", e.what()))};
  }
  flags.command = app.get_subcommands().front()->get_name();

  std::ifstream in(flags.file, std::ios::binary);
  if (!in) return {2, render(flags, nullptr, nullptr, error_json("IO_ERROR", "cannot read " + flags.file))};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  const json hash = input_hash(bytes);

  try {
    const Workspace ws = materialize(parse_surface_file(bytes), max_rank());
    return {0, render(flags, hash, execute(flags, ws), nullptr)};
  } catch (const StrictFailure& s) {
    return {1, render(flags, hash, s.verdict, error_json("NOT_GLC", "verdict is not_glc"))};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::ParseError ? 2 : 1;
    return {code, render(flags, hash, nullptr, error_json(error_code_string(e.code()), e.what()))};
  }
}

}  // namespace bgeom::cli
