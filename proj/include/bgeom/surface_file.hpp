#pragma once

#include "bgeom/contraction.hpp"
#include "bgeom/model.hpp"
#include "bgeom/pairs.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bgeom {

struct CurveSpec {
  std::string name;
  std::vector<Rational> cls;
  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Either a preset ("P2", "Fn", "ruled1" with parameter n, optionally with
/// extra curves) or raw lattice data.
struct BaseSpec {
  std::string preset;  // empty for raw data
  std::optional<int> n;
  std::string name;
  std::vector<std::string> basis;
  std::vector<std::vector<Rational>> gram;
  std::vector<Rational> canonical;
  std::vector<CurveSpec> curves;
  friend bool operator==(const BaseSpec&, const BaseSpec&) = default;
};

struct ContractionSpec {
  std::vector<std::string> curves;
  bool log_resolution = false;
  friend bool operator==(const ContractionSpec&, const ContractionSpec&) = default;
};

struct PairSpec {
  BoundaryDivisor boundary;
  std::map<std::string, Rational> nef_part;  // tracked-curve or basis name -> coefficient
  int cartier_index = 1;
  friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

struct SurfaceFile {
  int version = 1;
  BaseSpec base;
  std::vector<BlowupCenter> blowups;
  std::optional<ContractionSpec> contraction;
  std::optional<PairSpec> pair;
  friend bool operator==(const SurfaceFile&, const SurfaceFile&) = default;
};

/// Strict parse: unknown fields and wrong types are ParseError, with the
/// offending JSON path in the message.
SurfaceFile parse_surface_file(std::string_view bytes);
nlohmann::json to_json(const SurfaceFile& file);
/// Canonical text: sorted keys, rationals as "p/q".
std::string serialize(const SurfaceFile& file);

/// Engine objects described by a file.
struct Workspace {
  SurfaceModel model;
  std::optional<Contraction> contraction;
  std::optional<GenPair> pair;
};

/// Builds and validates the model, contraction and pair. Throws the engine's
/// errors, or RankLimitExceeded when the model rank exceeds `max_rank`.
Workspace materialize(const SurfaceFile& file, Index max_rank = 64);

/// Divisor expressions: term := [rational "*"] name, expr := term (("+"|"-") term)*.
std::vector<std::pair<std::string, Rational>> parse_terms(std::string_view text);
/// Resolves names as tracked curves first, then basis names. Throws UnknownCurveName.
DivisorClass resolve_terms(const Lattice& lattice, const std::vector<std::pair<std::string, Rational>>& terms);
DivisorClass parse_divisor(const Lattice& lattice, std::string_view text);

}  // namespace bgeom
