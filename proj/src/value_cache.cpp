#include "omzv/value_cache.hpp"

#include "omzv/errors.hpp"

#include <json.hpp>

#include <bit>
#include <cstdio>
#include <fstream>

namespace omzv {

namespace {

using nlohmann::json;

std::string hex_bits(double v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(v)));
    return buf;
}

double from_hex_bits(const std::string& s) {
    if (s.size() != 16) throw ParseError("bad bit pattern");
    std::size_t used = 0;
    unsigned long long bits = std::stoull(s, &used, 16);
    if (used != 16) throw ParseError("bad bit pattern");
    return std::bit_cast<double>(static_cast<std::uint64_t>(bits));
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json encode(const std::string& key, const EvalResult& r) {
    json eps = json::array();
    for (double e : r.meta.eps) eps.push_back(hex_bits(e));
    return json{{"hash", hex64(ValueCache::hash(key))},
                {"key", key},
                {"re", hex_bits(r.value.real())},
                {"im", hex_bits(r.value.imag())},
                {"err", hex_bits(r.err_estimate)},
                {"eps", eps},
                {"half_width", hex_bits(r.meta.half_width)},
                {"nodes", r.meta.nodes},
                {"step", hex_bits(r.meta.step)}};
}

std::pair<std::string, EvalResult> decode(const std::string& line) {
    json j = json::parse(line);
    const std::string key = j.at("key").get<std::string>();
    if (j.at("hash").get<std::string>() != hex64(ValueCache::hash(key))) throw ParseError("hash mismatch");
    EvalResult r;
    r.value = {from_hex_bits(j.at("re").get<std::string>()), from_hex_bits(j.at("im").get<std::string>())};
    r.err_estimate = from_hex_bits(j.at("err").get<std::string>());
    for (const auto& e : j.at("eps")) r.meta.eps.push_back(from_hex_bits(e.get<std::string>()));
    r.meta.half_width = from_hex_bits(j.at("half_width").get<std::string>());
    r.meta.nodes = j.at("nodes").get<std::size_t>();
    r.meta.step = from_hex_bits(j.at("step").get<std::string>());
    return {key, r};
}

}  // namespace

ValueCache::ValueCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

std::uint64_t ValueCache::hash(std::string_view text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string ValueCache::make_key(std::string_view expression, double omega, std::string_view fingerprint) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", omega);
    return std::string(expression) + "|" + buf + "|" + std::string(fingerprint);
}

void ValueCache::load() {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto [key, r] = decode(line);
            entries_[key] = r;
        } catch (const std::exception&) {
            ++corrupt_;
            warnings_.push_back("cache " + path_.string() + ": skipping corrupt entry on line " + std::to_string(lineno));
        }
    }
    if (corrupt_ > 0) rewrite();
}

void ValueCache::rewrite() const {
    if (!path_.parent_path().empty()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + path_.string());
    for (const auto& [key, r] : entries_) out << encode(key, r).dump() << '\n';
}

std::optional<EvalResult> ValueCache::lookup(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return it->second;
}

void ValueCache::store(const std::string& key, const EvalResult& result) {
    std::lock_guard lock(mutex_);
    entries_[key] = result;
    if (!path_.parent_path().empty()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("cannot write cache file " + path_.string());
    out << encode(key, result).dump() << '\n';
}

void ValueCache::clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
    std::error_code ec;
    std::filesystem::remove(path_, ec);
}

ValueCache::Stats ValueCache::stats() const {
    std::lock_guard lock(mutex_);
    return Stats{entries_.size(), corrupt_, hits_, misses_};
}

std::vector<std::string> ValueCache::warnings() const {
    std::lock_guard lock(mutex_);
    return warnings_;
}

}  // namespace omzv
