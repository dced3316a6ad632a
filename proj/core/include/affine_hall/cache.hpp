#pragma once

#include "affine_hall/quiver.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

namespace ah {

// (quotient orbit key, sub orbit key) -> Hall number, for one module M and one sub weight.
using HallTable = std::map<std::pair<std::string, std::string>, long long>;

// Hall tables persisted as JSON lines, one file per (quiver, admissible order, q):
//   {"m":fp,"sub":[..],"n":fp,"l":fp,"g":int}   one nonzero Hall number
//   {"m":fp,"sub":[..],"complete":true}         the table for (m, sub) is fully written
// A table without its completion record is ignored. Unreadable files are discarded and
// rebuilt with a warning on stderr.
class HallCache {
 public:
  // An empty directory keeps everything in memory.
  explicit HallCache(std::string dir = {});

  std::optional<HallTable> get(const std::string& scope, const std::string& m, const DimVec& sub);
  void put(const std::string& scope, const std::string& m, const DimVec& sub, const HallTable& t);
  int rebuilt_files() const { return rebuilt_; }
  const std::string& dir() const { return dir_; }

  static std::string scope_for(const Quiver& Q, int q);

 private:
  using Key = std::pair<std::string, DimVec>;
  std::string dir_;
  std::mutex mu_;
  std::map<std::string, std::map<Key, HallTable>> tables_;
  int rebuilt_ = 0;

  std::map<Key, HallTable>& load(const std::string& scope);
  std::string path(const std::string& scope) const;
};

}  // namespace ah
