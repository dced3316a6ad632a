#include "affine_hall/cache.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace ah {

namespace fs = std::filesystem;
using json = nlohmann::json;

HallCache::HallCache(std::string dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) fs::create_directories(dir_);
}

std::string HallCache::scope_for(const Quiver& Q, int q) {
  std::string s = Q.hash() + "-q" + std::to_string(q) + "-o";
  const auto& order = Q.admissible_order();
  for (std::size_t k = 0; k < order.size(); ++k) s += (k ? "." : "") + std::to_string(order[k]);
  return s;
}

std::string HallCache::path(const std::string& scope) const { return (fs::path(dir_) / ("hall-" + scope + ".jsonl")).string(); }

std::map<HallCache::Key, HallTable>& HallCache::load(const std::string& scope) {
  auto it = tables_.find(scope);
  if (it != tables_.end()) return it->second;
  auto& out = tables_[scope];
  if (dir_.empty()) return out;
  std::ifstream in(path(scope));
  if (!in) return out;
  std::map<Key, HallTable> pending;
  std::string line;
  int lineno = 0;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      json r = json::parse(line);
      Key k{r.at("m").get<std::string>(), r.at("sub").get<DimVec>()};
      if (r.contains("complete")) {
        out[k] = std::move(pending[k]);
        pending.erase(k);
      } else {
        pending[k][{r.at("n").get<std::string>(), r.at("l").get<std::string>()}] = r.at("g").get<long long>();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "warning: discarding corrupt Hall cache " << path(scope) << " (line " << lineno << ": " << e.what() << ")\n";
    out.clear();
    in.close();
    fs::remove(path(scope));
    ++rebuilt_;
  }
  return out;
}

std::optional<HallTable> HallCache::get(const std::string& scope, const std::string& m, const DimVec& sub) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& t = load(scope);
  auto it = t.find({m, sub});
  if (it == t.end()) return std::nullopt;
  return it->second;
}

void HallCache::put(const std::string& scope, const std::string& m, const DimVec& sub, const HallTable& t) {
  std::lock_guard<std::mutex> lock(mu_);
  auto& tables = load(scope);
  if (!tables.emplace(Key{m, sub}, t).second) return;
  if (dir_.empty()) return;
  std::ofstream out(path(scope), std::ios::app);
  for (const auto& [nl, g] : t)
    out << json{{"m", m}, {"sub", sub}, {"n", nl.first}, {"l", nl.second}, {"g", g}}.dump() << "\n";
  out << json{{"m", m}, {"sub", sub}, {"complete", true}}.dump() << "\n";
}

}  // namespace ah
