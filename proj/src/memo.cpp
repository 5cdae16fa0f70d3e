#include "wts/detail/memo.hpp"

#include <cstdlib>
#include <string>

namespace wts::detail {

std::size_t memo_limit_from_env() {
    static const std::size_t limit = [] {
        const char* raw = std::getenv("WTS_MEMO_LIMIT");
        if (raw == nullptr || *raw == '\0') return std::size_t{0};
        try {
            return static_cast<std::size_t>(std::stoull(raw));
        } catch (...) {
            return std::size_t{0};
        }
    }();
    return limit;
}

MemoTable::MemoTable() : limit_(memo_limit_from_env()) {}

std::optional<MemoValue> MemoTable::find(const MemoKey& key) const {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
}

void MemoTable::put(const MemoKey& key, MemoValue value) {
    Shard& s = shard(key);
    std::lock_guard lock(s.mutex);
    if (limit_ != 0 && s.map.size() * kShards >= limit_) s.map.clear();
    s.map.insert_or_assign(key, value);
}

std::size_t MemoTable::size() const {
    std::size_t n = 0;
    for (auto& s : shards_) {
        std::lock_guard lock(s.mutex);
        n += s.map.size();
    }
    return n;
}

void MemoTable::clear() {
    for (auto& s : shards_) {
        std::lock_guard lock(s.mutex);
        s.map.clear();
    }
}

}  // namespace wts::detail
