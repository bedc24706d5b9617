#pragma once

#include "omzv/contour_quad.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omzv {

// Persistent store of evaluated integrals, one JSON object per line. Keys are
// the canonical text "expression|omega|config fingerprint"; values keep the
// exact bit patterns so a hit reproduces a fresh computation bit for bit.
class ValueCache {
public:
    struct Stats {
        std::size_t entries = 0;
        std::size_t corrupt = 0;
        std::size_t hits = 0;
        std::size_t misses = 0;
    };

    explicit ValueCache(std::filesystem::path path);

    std::optional<EvalResult> lookup(const std::string& key) const;
    void store(const std::string& key, const EvalResult& result);
    void clear();

    Stats stats() const;
    const std::filesystem::path& path() const noexcept { return path_; }
    std::vector<std::string> warnings() const;

    static std::uint64_t hash(std::string_view text);
    static std::string make_key(std::string_view expression, double omega, std::string_view fingerprint);

private:
    void load();
    void rewrite() const;

    std::filesystem::path path_;
    mutable std::mutex mutex_;
    std::map<std::string, EvalResult> entries_;
    std::vector<std::string> warnings_;
    std::size_t corrupt_ = 0;
    mutable std::size_t hits_ = 0;
    mutable std::size_t misses_ = 0;
};

}  // namespace omzv
