#include "veronalt/component_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace veronalt {
namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::string key_text(const IdentitySet& ids, std::size_t rank, const MultiDegree& m) {
  return ids.fingerprint() + "|" + std::to_string(rank) + "|" + m.to_string();
}

}  // namespace

std::optional<std::filesystem::path> ComponentCache::directory() {
  const char* dir = std::getenv("VERONALT_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir);
}

std::filesystem::path ComponentCache::blob_path(const IdentitySet& ids, std::size_t rank, const MultiDegree& m) {
  std::ostringstream name;
  name << std::hex << fnv1a(key_text(ids, rank, m)) << ".json";
  return *directory() / name.str();
}

bool ComponentCache::load(const IdentitySet& ids, std::size_t rank, Component& c) {
  std::ifstream in(blob_path(ids, rank, c.m_));
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("version").get<int>() != kVersion || j.at("key").get<std::string>() != key_text(ids, rank, c.m_) ||
        j.at("product_dim").get<std::size_t>() != c.std_index_.size())
      return false;
    std::vector<Monomial> columns = std::move(c.standard_);
    c.standard_.clear();
    std::fill(c.std_index_.begin(), c.std_index_.end(), -1);
    for (auto col : j.at("standard_columns").get<std::vector<std::uint32_t>>()) {
      c.std_index_.at(col) = static_cast<std::int32_t>(c.standard_.size());
      c.standard_.push_back(columns.at(col));
    }
    for (const auto& entry : j.at("normal_forms")) {
      const auto col = entry.at(0).get<std::uint32_t>();
      SparseVec nf;
      for (const auto& e : entry.at(1)) {
        Rational q(e.at(1).get<std::string>());
        q.canonicalize();
        nf.emplace_back(e.at(0).get<std::uint32_t>(), q);
      }
      c.column_nf_.at(col) = std::move(nf);
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

void ComponentCache::store(const IdentitySet& ids, std::size_t rank, const Component& c) {
  const auto dir = directory();
  if (!dir) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  nlohmann::json j;
  j["version"] = kVersion;
  j["key"] = key_text(ids, rank, c.m_);
  j["product_dim"] = c.std_index_.size();
  std::vector<std::uint32_t> standard_columns;
  nlohmann::json nfs = nlohmann::json::array();
  for (std::uint32_t col = 0; col < c.std_index_.size(); ++col) {
    if (c.std_index_[col] >= 0) {
      standard_columns.push_back(col);
      continue;
    }
    nlohmann::json row = nlohmann::json::array();
    for (const auto& [s, q] : c.column_nf_[col]) row.push_back({s, q.get_str()});
    nfs.push_back({col, std::move(row)});
  }
  j["standard_columns"] = standard_columns;
  j["normal_forms"] = std::move(nfs);

  const auto path = blob_path(ids, rank, c.m_);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(reinterpret_cast<std::uintptr_t>(&c));
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace veronalt
