#pragma once

#include "gwb/rational.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>

namespace gwb {

class MemoConflict : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact values keyed by "manifold-key|c1,c2,...". Entries are write-once;
// concurrent readers, serialized writers. Persisted as a JSON object
// {"BlP2|3,-1": "12/1", ...}.
class MemoTable {
 public:
  MemoTable() = default;
  MemoTable(const MemoTable& other);
  MemoTable& operator=(const MemoTable& other);

  static std::string key(std::string_view manifold_key, std::span<const std::int64_t> coeffs);

  std::optional<ExactRational> find(const std::string& key) const;
  // Throws MemoConflict if `key` already holds a different value.
  void insert(const std::string& key, const ExactRational& value);
  // Inserts every entry of `other`; conflicting entries throw.
  void merge(const MemoTable& other);

  std::size_t size() const;
  bool dirty() const;
  void mark_clean();
  void clear();

  // Sorted snapshot.
  std::map<std::string, ExactRational> entries() const;

  std::string to_json_string() const;
  static MemoTable from_json_string(std::string_view text);

  // load merges the file into this table (missing file is a no-op).
  void load(const std::filesystem::path& path);
  // save is load-merge-save: values already on disk are kept, this table's
  // entries are added, and the whole file is rewritten.
  void save(const std::filesystem::path& path) const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, ExactRational> values_;
  bool dirty_ = false;
};

}  // namespace gwb
