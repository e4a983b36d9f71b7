#pragma once

#include <fstream>
#include <set>
#include <string>

#include "hullsmith/serialize.hpp"

namespace hullsmith {

/// Append-only JSONL store keyed by content hash of the canonical JSON.
/// Appending an already-present record is a no-op, so re-running a command
/// with identical inputs leaves the file unchanged.
class Catalog {
  public:
    /// Path resolution: explicit argument, else $HULLSMITH_CATALOG, else
    /// ./hullsmith_catalog.jsonl.
    explicit Catalog(std::string path = "");

    /// Returns true when the record was new.
    bool append(const std::string& kind, const json& payload);

    const std::string& path() const { return path_; }
    size_t size() const { return hashes_.size(); }

  private:
    std::string path_;
    std::set<std::string> hashes_;
    std::ofstream out_; // opened lazily on the first new record
};

} // namespace hullsmith
