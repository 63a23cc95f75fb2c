#pragma once

#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace vnum::detail {

// Shared cache for pure functions. All writers of a key store equal values,
// so a racing second write is harmless (last write wins).
template <class Key, class Value, class Hash = std::hash<Key>>
class ConcurrentMemo {
public:
    std::optional<Value> find(const Key& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(const Key& key, const Value& value) {
        std::unique_lock lock(mutex_);
        map_.insert_or_assign(key, value);
    }

    template <class F>
    Value get_or_compute(const Key& key, F&& compute) {
        if (auto hit = find(key)) return *hit;
        Value v = compute();
        store(key, v);
        return v;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Value, Hash> map_;
};

} // namespace vnum::detail
