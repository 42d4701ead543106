#pragma once
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pidmlab/hashing.hpp"

namespace pidmlab {

// key-value text config: one "key v1 v2 ..." per line, '#' starts a comment,
// repeated keys allowed (walls, goals). Order-preserving.
class KvConfig {
 public:
  struct Entry {
    std::string key;
    std::vector<std::string> values;
  };

  static KvConfig parse(std::istream& in, const std::string& origin = "<stream>") {
    KvConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      std::string key;
      if (!(ls >> key)) continue;
      Entry e{key, {}};
      std::string tok;
      while (ls >> tok) e.values.push_back(tok);
      if (e.values.empty())
        throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": key '" + key +
                                 "' has no value");
      cfg.entries_.push_back(std::move(e));
    }
    return cfg;
  }

  static KvConfig load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return parse(in, path);
  }

  bool has(const std::string& key) const {
    for (const auto& e : entries_)
      if (e.key == key) return true;
    return false;
  }

  const std::vector<std::string>& values(const std::string& key) const {
    for (const auto& e : entries_)
      if (e.key == key) return e.values;
    throw std::runtime_error("missing config key: " + key);
  }

  std::vector<const Entry*> all(const std::string& key) const {
    std::vector<const Entry*> out;
    for (const auto& e : entries_)
      if (e.key == key) out.push_back(&e);
    return out;
  }

  std::string str(const std::string& key) const {
    const auto& v = values(key);
    if (v.size() != 1) throw std::runtime_error("config key '" + key + "' expects one value");
    return v[0];
  }

  double num(const std::string& key) const { return to_num(str(key), key); }
  long integer(const std::string& key) const {
    double d = num(key);
    long i = static_cast<long>(d);
    if (double(i) != d) throw std::runtime_error("config key '" + key + "' expects an integer");
    return i;
  }
  double num_or(const std::string& key, double fallback) const {
    return has(key) ? num(key) : fallback;
  }
  std::string str_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? str(key) : fallback;
  }

  static double to_num(const std::string& s, const std::string& ctx) {
    double d = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (ec != std::errc() || p != s.data() + s.size())
      throw std::runtime_error("config value for '" + ctx + "' is not a number: " + s);
    return d;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  void add(const std::string& key, std::vector<std::string> values) {
    entries_.push_back({key, std::move(values)});
  }

  std::string serialize() const {
    std::ostringstream out;
    for (const auto& e : entries_) {
      out << e.key;
      for (const auto& v : e.values) out << ' ' << v;
      out << '\n';
    }
    return out.str();
  }

  // canonical content hash (whitespace-normalized via serialize)
  uint64_t hash() const { return fnv1a64(serialize()); }

 private:
  std::vector<Entry> entries_;
};

}  // namespace pidmlab
