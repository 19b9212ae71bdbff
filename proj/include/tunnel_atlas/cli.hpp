#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace tunnel_atlas::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitInternal = 3;

/// Environment variable overriding the word-length cap of `search`.
inline constexpr const char* kCapEnvVar = "TUNNEL_ATLAS_ENUM_CAP";

enum class OutputFormat { text, json };

/// One invocation's output. Every number is stored as a decimal string so
/// the text and structured forms carry identical digits.
struct OutputDocument {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
  std::vector<std::string> summary; // human-readable lead, text form only

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// Runs the CLI on args (program name excluded). Returns the exit code:
/// 0 success, 2 invalid input, 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tunnel_atlas::cli
