#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>

namespace wts::detail {

struct MemoKey {
    std::uint32_t op = 0;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::int64_t extra = 0;

    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL * (k.op + 1);
        h ^= (std::uint64_t{k.a} << 32 | k.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= static_cast<std::uint64_t>(k.extra) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct MemoValue {
    std::int64_t first = 0;
    std::int64_t second = 0;
};

// Reads WTS_MEMO_LIMIT once; 0 means unlimited.
std::size_t memo_limit_from_env();

// Sharded cache shared by every operation on a store. Each caller picks an
// op tag that is unique within the store. A shard that reaches the entry
// limit is cleared rather than refusing new entries.
class MemoTable {
public:
    MemoTable();

    std::optional<MemoValue> find(const MemoKey& key) const;
    void put(const MemoKey& key, MemoValue value);
    std::size_t size() const;
    void clear();
    void set_limit(std::size_t limit) { limit_ = limit; }

private:
    static constexpr std::size_t kShards = 16;
    struct Shard {
        std::mutex mutex;
        std::unordered_map<MemoKey, MemoValue, MemoKeyHash> map;
    };
    mutable std::array<Shard, kShards> shards_;
    std::size_t limit_;

    Shard& shard(const MemoKey& key) const {
        return shards_[MemoKeyHash{}(key) % kShards];
    }
};

}  // namespace wts::detail
