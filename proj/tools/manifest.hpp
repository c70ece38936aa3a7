#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace apexkit::cli {

using json = nlohmann::json;

/// Lower-case hex SHA-256.
std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& path);

struct FileDigest {
  std::string path;
  std::string sha256;
};

struct RunManifest {
  std::string command;
  json config = json::object();  // fields that determine the payload
  json runtime = json::object();  // workers, checkpoint: no effect on the payload
  std::string tool_version;
  double wall_time_s = 0;
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;
  int exit_code = 0;
  std::string cache = "off";  // off, miss, hit
  json stats = json::object();

  json to_json() const;
  static RunManifest from_json(const json& j);
};

/// Recomputes every input and output digest; returns the mismatches.
std::vector<std::string> verify_manifest(const RunManifest& m);

/// Content-addressed directory: <root>/<key[0:2]>/<key>/{payload,manifest.json}.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path root) : root_(std::move(root)) {}

  static std::string key(const std::string& command, const json& config, const std::string& input_digest);

  struct Entry {
    std::string payload;
    RunManifest manifest;
  };
  std::optional<Entry> load(const std::string& key) const;
  void store(const std::string& key, const std::string& payload, const RunManifest& manifest) const;

 private:
  std::filesystem::path dir(const std::string& key) const;
  std::filesystem::path root_;
};

}  // namespace apexkit::cli
