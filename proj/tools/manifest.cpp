#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apexkit::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << bytes;
}

json digests_to_json(const std::vector<FileDigest>& v) {
  json a = json::array();
  for (const FileDigest& d : v) a.push_back({{"path", d.path}, {"sha256", d.sha256}});
  return a;
}

std::vector<FileDigest> digests_from_json(const json& a) {
  std::vector<FileDigest> v;
  for (const json& d : a) v.push_back({d.at("path").get<std::string>(), d.at("sha256").get<std::string>()});
  return v;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string sha256_file(const fs::path& path) { return sha256_hex(read_file(path)); }

json RunManifest::to_json() const {
  return {{"command", command},       {"config", config},
          {"runtime", runtime},       {"tool_version", tool_version},
          {"wall_time_s", wall_time_s}, {"inputs", digests_to_json(inputs)},
          {"outputs", digests_to_json(outputs)}, {"exit_code", exit_code},
          {"cache", cache},           {"stats", stats}};
}

RunManifest RunManifest::from_json(const json& j) {
  RunManifest m;
  m.command = j.at("command").get<std::string>();
  m.config = j.at("config");
  m.runtime = j.value("runtime", json::object());
  m.tool_version = j.at("tool_version").get<std::string>();
  m.wall_time_s = j.at("wall_time_s").get<double>();
  m.inputs = digests_from_json(j.at("inputs"));
  m.outputs = digests_from_json(j.at("outputs"));
  m.exit_code = j.at("exit_code").get<int>();
  m.cache = j.value("cache", "off");
  m.stats = j.value("stats", json::object());
  return m;
}

std::vector<std::string> verify_manifest(const RunManifest& m) {
  std::vector<std::string> bad;
  auto check = [&](const FileDigest& d) {
    if (d.path == "-") return;  // stdin is recorded but cannot be re-read
    std::error_code ec;
    if (!fs::exists(d.path, ec)) {
      bad.push_back(d.path + ": missing");
    } else if (sha256_file(d.path) != d.sha256) {
      bad.push_back(d.path + ": digest mismatch");
    }
  };
  for (const FileDigest& d : m.inputs) check(d);
  for (const FileDigest& d : m.outputs) check(d);
  return bad;
}

std::string ResultCache::key(const std::string& command, const json& config, const std::string& input_digest) {
  return sha256_hex(command + "\n" + config.dump() + "\n" + input_digest);
}

fs::path ResultCache::dir(const std::string& key) const { return root_ / key.substr(0, 2) / key; }

std::optional<ResultCache::Entry> ResultCache::load(const std::string& key) const {
  const fs::path d = dir(key);
  std::error_code ec;
  if (!fs::exists(d / "manifest.json", ec) || !fs::exists(d / "payload", ec)) return std::nullopt;
  Entry e;
  e.payload = read_file(d / "payload");
  e.manifest = RunManifest::from_json(json::parse(read_file(d / "manifest.json")));
  // a payload that no longer matches its recorded digest is treated as a miss
  if (e.manifest.outputs.empty() || sha256_hex(e.payload) != e.manifest.outputs.front().sha256) return std::nullopt;
  return e;
}

void ResultCache::store(const std::string& key, const std::string& payload, const RunManifest& manifest) const {
  const fs::path d = dir(key);
  const fs::path tmp = d.string() + ".tmp";
  fs::create_directories(tmp);
  RunManifest m = manifest;
  m.outputs = {{"payload", sha256_hex(payload)}};
  write_file(tmp / "payload", payload);
  write_file(tmp / "manifest.json", m.to_json().dump(2) + "\n");
  std::error_code ec;
  fs::remove_all(d, ec);
  fs::rename(tmp, d);
}

}  // namespace apexkit::cli
