#pragma once

#include <string>
#include <vector>

namespace bgeom::cli {

struct Outcome {
  int exit_code = 0;  // 0 ok, 1 domain error, 2 usage or parse error
  std::string output;
};

/// Runs one command, e.g. {"volume", "surface.json", "-D", "piL + E"}.
/// The program name is not part of `args`.
Outcome run(const std::vector<std::string>& args);

/// "sha256:<hex>" of the given bytes.
std::string input_hash(const std::string& bytes);

}  // namespace bgeom::cli
