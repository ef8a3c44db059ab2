#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "spinsym/serialize.hpp"
#include "spinsym/spin_green.hpp"

namespace spinsym {

// Bumped whenever a change could alter any cached value.
inline constexpr const char* kEngineVersion = "spinsym-engine-1";

enum class CacheKind { L, Y, schur_q, qhl };

std::string cache_kind_name(CacheKind kind);

struct CacheEntry {
    CacheKind kind;
    std::string key;
    json value;
    std::string version;
};

// Persistent memo store: one JSON file per kind under a directory. Files
// written by a different engine version are ignored on load and replaced on
// save.
class Cache {
public:
    explicit Cache(std::filesystem::path dir, std::string version = kEngineVersion);

    // GAMMA_CACHE_DIR, else $XDG_CACHE_HOME/spinsym, else $HOME/.cache/spinsym.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }

    void load();
    // Throws std::runtime_error if the directory or a file cannot be written.
    void save() const;

    std::optional<CacheEntry> get(CacheKind kind, const std::string& key) const;
    void put(CacheEntry entry);
    const std::map<std::string, json>& entries(CacheKind kind) const;
    std::size_t size() const;
    // Entries dropped on load because of a version mismatch.
    std::size_t stale() const { return stale_; }

private:
    std::filesystem::path file_for(CacheKind kind) const;

    std::filesystem::path dir_;
    std::string version_;
    std::map<CacheKind, std::map<std::string, json>> entries_;
    std::size_t stale_ = 0;
};

std::string pair_key(const Partition& a, const Partition& b);
std::string modes_key(const std::vector<int>& modes);

// Seeds every engine memo from the cache.
void warm_engines(const Cache& cache, const VertexEngine& vertex, const QKostkaEngine& kostka,
                  const SpinGreenEngine& green);
// Copies every engine memo into the cache.
void store_engines(Cache& cache, const VertexEngine& vertex, const QKostkaEngine& kostka,
                   const SpinGreenEngine& green);

}  // namespace spinsym
