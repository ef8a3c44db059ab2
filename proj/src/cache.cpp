#include "spinsym/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spinsym {

namespace fs = std::filesystem;

namespace {

constexpr CacheKind kAllKinds[] = {CacheKind::L, CacheKind::Y, CacheKind::schur_q, CacheKind::qhl};

std::pair<Partition, Partition> split_pair_key(const std::string& key) {
    const auto bar = key.find('|');
    if (bar == std::string::npos) throw std::invalid_argument("malformed cache key '" + key + "'");
    return {Partition::parse(key.substr(0, bar)), Partition::parse(key.substr(bar + 1))};
}

std::vector<int> split_modes_key(const std::string& key) {
    std::vector<int> modes;
    if (key.empty()) return modes;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, ',')) modes.push_back(std::stoi(tok));
    return modes;
}

}  // namespace

std::string cache_kind_name(CacheKind kind) {
    switch (kind) {
        case CacheKind::L: return "L";
        case CacheKind::Y: return "Y";
        case CacheKind::schur_q: return "schur_q";
        case CacheKind::qhl: return "qhl";
    }
    throw std::logic_error("unknown cache kind");
}

Cache::Cache(fs::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

fs::path Cache::default_dir() {
    if (const char* env = std::getenv("GAMMA_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "spinsym";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "spinsym";
    return fs::temp_directory_path() / "spinsym-cache";
}

fs::path Cache::file_for(CacheKind kind) const { return dir_ / (cache_kind_name(kind) + ".json"); }

void Cache::load() {
    entries_.clear();
    stale_ = 0;
    for (CacheKind kind : kAllKinds) {
        std::ifstream in(file_for(kind));
        if (!in) continue;
        try {
            json doc;
            in >> doc;
            const json entries = doc.value("entries", json::array());
            if (doc.value("version", "") != version_ || doc.value("kind", "") != cache_kind_name(kind)) {
                stale_ += entries.size();
                continue;
            }
            std::map<std::string, json> slot;
            for (const auto& e : entries) slot.emplace(e.at("key").get<std::string>(), e.at("value"));
            entries_[kind] = std::move(slot);
        } catch (const json::exception&) {
            continue;  // unreadable cache files are recomputed
        }
    }
}

void Cache::save() const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
    for (const auto& [kind, entries] : entries_) {
        json doc = {{"version", version_}, {"kind", cache_kind_name(kind)}, {"entries", json::array()}};
        for (const auto& [key, value] : entries) doc["entries"].push_back({{"key", key}, {"value", value}});
        const fs::path target = file_for(kind);
        const fs::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << doc.dump() << '\n';
        }
        fs::rename(tmp, target, ec);
        if (ec) throw std::runtime_error("cannot replace cache file " + target.string() + ": " + ec.message());
    }
}

std::optional<CacheEntry> Cache::get(CacheKind kind, const std::string& key) const {
    auto kit = entries_.find(kind);
    if (kit == entries_.end()) return std::nullopt;
    auto it = kit->second.find(key);
    if (it == kit->second.end()) return std::nullopt;
    return CacheEntry{kind, key, it->second, version_};
}

void Cache::put(CacheEntry entry) {
    if (entry.version != version_) return;
    entries_[entry.kind].insert_or_assign(std::move(entry.key), std::move(entry.value));
}

const std::map<std::string, json>& Cache::entries(CacheKind kind) const {
    static const std::map<std::string, json> none;
    auto it = entries_.find(kind);
    return it == entries_.end() ? none : it->second;
}

std::size_t Cache::size() const {
    std::size_t n = 0;
    for (const auto& [kind, entries] : entries_) n += entries.size();
    return n;
}

std::string pair_key(const Partition& a, const Partition& b) { return a.to_string() + "|" + b.to_string(); }

std::string modes_key(const std::vector<int>& modes) {
    std::string out;
    for (std::size_t i = 0; i < modes.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(modes[i]);
    }
    return out;
}

void warm_engines(const Cache& cache, const VertexEngine& vertex, const QKostkaEngine& kostka,
                  const SpinGreenEngine& green) {
    for (const auto& [key, value] : cache.entries(CacheKind::L)) {
        const auto [lambda, mu] = split_pair_key(key);
        kostka.seed(lambda, mu, tpoly_from_json(value));
    }
    for (const auto& [key, value] : cache.entries(CacheKind::Y)) {
        const auto [lambda, mu] = split_pair_key(key);
        green.seed(lambda, mu, tpoly_from_json(value));
    }
    for (const auto& [key, value] : cache.entries(CacheKind::schur_q)) {
        vertex.seed_schur_q(Partition::parse(key), gamma_from_json(value));
    }
    for (const auto& [key, value] : cache.entries(CacheKind::qhl)) {
        vertex.seed_qhl(split_modes_key(key), gamma_from_json(value));
    }
}

void store_engines(Cache& cache, const VertexEngine& vertex, const QKostkaEngine& kostka,
                   const SpinGreenEngine& green) {
    for (const auto& [key, value] : kostka.memo_entries()) {
        cache.put({CacheKind::L, pair_key(key.first, key.second), to_json(value), kEngineVersion});
    }
    for (const auto& [key, value] : green.memo_entries()) {
        cache.put({CacheKind::Y, pair_key(key.first, key.second), to_json(value), kEngineVersion});
    }
    for (const auto& [lambda, value] : vertex.schur_q_entries()) {
        cache.put({CacheKind::schur_q, lambda.to_string(), to_json(value), kEngineVersion});
    }
    for (const auto& [modes, value] : vertex.qhl_entries()) {
        cache.put({CacheKind::qhl, modes_key(modes), to_json(value), kEngineVersion});
    }
}

}  // namespace spinsym
