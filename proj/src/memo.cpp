#include "gwb/memo.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <mutex>
#include <sstream>

namespace gwb {

MemoTable::MemoTable(const MemoTable& other) {
  std::shared_lock lock(other.mutex_);
  values_ = other.values_;
  dirty_ = other.dirty_;
}

MemoTable& MemoTable::operator=(const MemoTable& other) {
  if (this == &other) return *this;
  std::map<std::string, ExactRational> copy;
  bool dirty = false;
  {
    std::shared_lock lock(other.mutex_);
    copy = other.values_;
    dirty = other.dirty_;
  }
  std::unique_lock lock(mutex_);
  values_ = std::move(copy);
  dirty_ = dirty;
  return *this;
}

std::string MemoTable::key(std::string_view manifold_key, std::span<const std::int64_t> coeffs) {
  std::string k(manifold_key);
  k += '|';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) k += ',';
    k += std::to_string(coeffs[i]);
  }
  return k;
}

std::optional<ExactRational> MemoTable::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const std::string& key, const ExactRational& value) {
  std::unique_lock lock(mutex_);
  auto [it, inserted] = values_.emplace(key, value);
  if (!inserted) {
    if (it->second != value)
      throw MemoConflict("memo entry '" + key + "' already holds " + it->second.to_string() + ", refusing " +
                         value.to_string());
    return;
  }
  dirty_ = true;
}

void MemoTable::merge(const MemoTable& other) {
  if (this == &other) return;
  for (const auto& [k, v] : other.entries()) insert(k, v);
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

bool MemoTable::dirty() const {
  std::shared_lock lock(mutex_);
  return dirty_;
}

void MemoTable::mark_clean() {
  std::unique_lock lock(mutex_);
  dirty_ = false;
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  dirty_ = !values_.empty();
  values_.clear();
}

std::map<std::string, ExactRational> MemoTable::entries() const {
  std::shared_lock lock(mutex_);
  return values_;
}

std::string MemoTable::to_json_string() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : entries()) j[k] = v.to_fraction_string();
  return j.dump(2) + "\n";
}

MemoTable MemoTable::from_json_string(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("cache file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::runtime_error("cache file must hold a JSON object");
  MemoTable table;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw std::runtime_error("cache entry '" + k + "' is not a \"p/q\" string");
    try {
      table.insert(k, ExactRational::parse(v.get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("cache entry '" + k + "': " + e.what());
    }
  }
  table.mark_clean();
  return table;
}

void MemoTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    if (!std::filesystem::exists(path)) return;
    throw std::runtime_error("cannot read cache file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const bool was_dirty = dirty();
  merge(from_json_string(buffer.str()));
  if (!was_dirty) mark_clean();
}

void MemoTable::save(const std::filesystem::path& path) const {
  MemoTable combined;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    // unreadable file: overwrite it
    try {
      combined = from_json_string(buffer.str());
    } catch (const std::runtime_error&) {
      combined.clear();
    }
  }
  for (const auto& [k, v] : entries()) {
    if (auto existing = combined.find(k); existing && *existing != v) {
      auto snapshot = combined.entries();
      snapshot[k] = v;
      combined.clear();
      for (const auto& [k2, v2] : snapshot) combined.insert(k2, v2);
    } else {
      combined.insert(k, v);
    }
  }
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
    out << combined.to_json_string();
    if (!out) throw std::runtime_error("failed writing cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace gwb
