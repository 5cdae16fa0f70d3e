#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>

#include "wts/error.hpp"

namespace wts::detail {

// Append-only storage with stable addresses. Appends must be serialized by
// the caller; reads of already published slots need no lock.
template <typename T>
class Arena {
public:
    static constexpr std::size_t kChunkBits = 12;
    static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
    static constexpr std::size_t kMaxChunks = std::size_t{1} << 16;

    Arena() : chunks_(std::make_unique<std::array<std::atomic<T*>, kMaxChunks>>()) {
        for (auto& c : *chunks_) c.store(nullptr, std::memory_order_relaxed);
    }
    ~Arena() {
        std::size_t n = size_.load(std::memory_order_relaxed);
        for (std::size_t c = 0; c * kChunkSize < n; ++c) delete[] (*chunks_)[c].load();
    }
    Arena(const Arena&) = delete;
    Arena& operator=(const Arena&) = delete;

    std::uint32_t push(T value) {
        std::size_t i = size_.load(std::memory_order_relaxed);
        std::size_t c = i >> kChunkBits;
        if (c >= kMaxChunks) throw Error(ErrorCode::TooLarge, "node store exhausted");
        T* chunk = (*chunks_)[c].load(std::memory_order_relaxed);
        if (chunk == nullptr) {
            chunk = new T[kChunkSize];
            (*chunks_)[c].store(chunk, std::memory_order_release);
        }
        chunk[i & (kChunkSize - 1)] = std::move(value);
        size_.store(i + 1, std::memory_order_release);
        return static_cast<std::uint32_t>(i);
    }

    const T& operator[](std::uint32_t i) const {
        const T* chunk = (*chunks_)[i >> kChunkBits].load(std::memory_order_acquire);
        return chunk[i & (kChunkSize - 1)];
    }

    std::size_t size() const { return size_.load(std::memory_order_acquire); }

private:
    std::unique_ptr<std::array<std::atomic<T*>, kMaxChunks>> chunks_;
    std::atomic<std::size_t> size_{0};
};

}  // namespace wts::detail
