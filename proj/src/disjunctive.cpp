#include "wts/disjunctive.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "wts/checked.hpp"
#include "wts/core.hpp"
#include "wts/detail/ops.hpp"
#include "wts/error.hpp"
#include "wts/order.hpp"

namespace wts {

namespace {

constexpr std::size_t kMaxTable = std::size_t{1} << 22;

void require_values_in(const GameStore& store, GameRef g, const std::vector<std::int64_t>& domain,
                       const char* what) {
    for (std::int64_t v : value_set(store, g))
        if (!std::binary_search(domain.begin(), domain.end(), v))
            throw Error(ErrorCode::ValueOutsideDomain,
                        std::string(what) + ": leaf " + std::to_string(v) + " outside domain");
}

GameRef cached(GameStore& store, const detail::MemoKey& key) {
    return GameRef{static_cast<std::uint32_t>(store.memo().find(key)->first)};
}

template <typename LeafFn>
GameRef extend_binary(GameStore& store, detail::Op op, GameRef g, GameRef h, const LeafFn& fn) {
    const GameNode& a = store.node(g);
    const GameNode& b = store.node(h);
    if (a.leaf && b.leaf) return store.leaf(fn(a.score, b.score));
    detail::MemoKey key{op, g.id, h.id, 0};
    if (store.memo().find(key)) return cached(store, key);
    std::vector<GameRef> left, right;
    for (GameRef o : a.left) left.push_back(extend_binary(store, op, o, h, fn));
    for (GameRef o : b.left) left.push_back(extend_binary(store, op, g, o, fn));
    for (GameRef o : a.right) right.push_back(extend_binary(store, op, o, h, fn));
    for (GameRef o : b.right) right.push_back(extend_binary(store, op, g, o, fn));
    GameRef out = store.make_game(std::move(left), std::move(right));
    store.memo().put(key, {out.id, 0});
    return out;
}

struct TupleHash {
    std::size_t operator()(const std::vector<GameRef>& v) const noexcept {
        std::uint64_t h = v.size();
        for (GameRef g : v) h ^= g.id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

class Extender {
public:
    Extender(GameStore& store, const Combiner& f) : store_(store), f_(f) {}

    GameRef run(std::vector<GameRef> gs) {
        auto it = memo_.find(gs);
        if (it != memo_.end()) return it->second;
        bool all_leaves = true;
        for (GameRef g : gs) all_leaves = all_leaves && store_.is_leaf(g);
        GameRef out;
        if (all_leaves) {
            std::vector<std::int64_t> args;
            for (GameRef g : gs) args.push_back(store_.score(g));
            out = store_.leaf(f_(args));
        } else {
            std::vector<GameRef> left, right;
            for (std::size_t i = 0; i < gs.size(); ++i) {
                const GameNode& n = store_.node(gs[i]);
                for (GameRef o : n.left) left.push_back(run(replaced(gs, i, o)));
                for (GameRef o : n.right) right.push_back(run(replaced(gs, i, o)));
            }
            out = store_.make_game(std::move(left), std::move(right));
        }
        memo_.emplace(std::move(gs), out);
        return out;
    }

private:
    static std::vector<GameRef> replaced(const std::vector<GameRef>& gs, std::size_t i, GameRef o) {
        std::vector<GameRef> next = gs;
        next[i] = o;
        return next;
    }

    GameStore& store_;
    const Combiner& f_;
    std::unordered_map<std::vector<GameRef>, GameRef, TupleHash> memo_;
};

GameRef invertible_representative(GameStore& store, GameRef g, const char* what) {
    if (in_invertible_class(store, g)) return g;
    if (!invertible(store, g))
        throw Error(ErrorCode::NotInvertible, std::string(what) + " is not invertible");
    return upside(store, g);
}

GameRef replace_positive_leaves(GameStore& store, GameRef g,
                                std::unordered_map<GameRef, GameRef>& memo) {
    auto it = memo.find(g);
    if (it != memo.end()) return it->second;
    const GameNode& n = store.node(g);
    GameRef out;
    if (n.leaf) {
        out = n.score > 0 ? q_gadget(store, n.score) : g;
    } else {
        std::vector<GameRef> left, right;
        for (GameRef o : n.left) left.push_back(replace_positive_leaves(store, o, memo));
        for (GameRef o : n.right) right.push_back(replace_positive_leaves(store, o, memo));
        out = store.make_game(std::move(left), std::move(right));
    }
    memo.emplace(g, out);
    return out;
}

}  // namespace

Combiner::Combiner(std::vector<std::vector<std::int64_t>> domains, const Fn& fn) {
    for (auto& d : domains) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
    }
    domains_ = std::move(domains);
    std::size_t total = 1;
    for (const auto& d : domains_) {
        if (d.empty()) throw Error(ErrorCode::InvalidArgument, "empty domain");
        total *= d.size();
        if (total > kMaxTable) throw Error(ErrorCode::TooLarge, "combiner table too large");
    }
    if (domains_.empty()) throw Error(ErrorCode::ArityMismatch, "combiner needs arity >= 1");
    table_.resize(total);
    std::vector<std::int64_t> args(domains_.size());
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = domains_.size(); i-- > 0;) {
            args[i] = domains_[i][rest % domains_[i].size()];
            rest /= domains_[i].size();
        }
        table_[idx] = fn(args);
    }
    validate();
}

Combiner Combiner::from_table(std::vector<std::vector<std::int64_t>> domains,
                              const std::vector<Entry>& entries) {
    std::map<std::vector<std::int64_t>, std::int64_t> lookup;
    for (const auto& [in, out] : entries) {
        if (in.size() != domains.size())
            throw Error(ErrorCode::ArityMismatch, "table entry has wrong arity");
        if (!lookup.emplace(in, out).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate table entry");
    }
    std::size_t expected = 1;
    for (auto d : domains) {
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        expected *= d.size();
    }
    if (lookup.size() != expected) throw Error(ErrorCode::InvalidArgument, "table is not total");
    return Combiner(std::move(domains), [&lookup](std::span<const std::int64_t> args) {
        auto it = lookup.find(std::vector<std::int64_t>(args.begin(), args.end()));
        if (it == lookup.end()) throw Error(ErrorCode::ValueOutsideDomain, "tuple not in table");
        return it->second;
    });
}

std::size_t Combiner::index_of(std::span<const std::int64_t> args) const {
    if (args.size() != domains_.size())
        throw Error(ErrorCode::ArityMismatch,
                    "expected " + std::to_string(domains_.size()) + " arguments");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& d = domains_[i];
        auto it = std::lower_bound(d.begin(), d.end(), args[i]);
        if (it == d.end() || *it != args[i])
            throw Error(ErrorCode::ValueOutsideDomain, std::to_string(args[i]) + " outside domain");
        idx = idx * d.size() + static_cast<std::size_t>(it - d.begin());
    }
    return idx;
}

std::int64_t Combiner::operator()(std::span<const std::int64_t> args) const {
    return table_[index_of(args)];
}

std::vector<Combiner::Entry> Combiner::entries() const {
    std::vector<Entry> out;
    std::vector<std::int64_t> args(domains_.size());
    for (std::size_t idx = 0; idx < table_.size(); ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = domains_.size(); i-- > 0;) {
            args[i] = domains_[i][rest % domains_[i].size()];
            rest /= domains_[i].size();
        }
        out.emplace_back(args, table_[idx]);
    }
    return out;
}

void Combiner::validate() {
    // Monotone along each axis between neighbouring domain elements.
    std::size_t stride = 1;
    for (std::size_t i = domains_.size(); i-- > 0;) {
        std::size_t n = domains_[i].size();
        for (std::size_t idx = 0; idx < table_.size(); ++idx) {
            std::size_t pos = (idx / stride) % n;
            if (pos + 1 < n && table_[idx + stride] < table_[idx])
                throw Error(ErrorCode::NotOrderPreserving,
                            "decreases in argument " + std::to_string(i));
        }
        stride *= n;
    }
}

GameRef extend(GameStore& store, const Combiner& f, std::span<const GameRef> gs) {
    if (gs.size() != f.arity())
        throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(f.arity()) + " games");
    for (std::size_t i = 0; i < gs.size(); ++i) require_values_in(store, gs[i], f.domains()[i], "extend");
    Extender ex(store, f);
    return ex.run(std::vector<GameRef>(gs.begin(), gs.end()));
}

GameRef sum(GameStore& store, GameRef g, GameRef h) {
    return extend_binary(store, detail::kSum, g, h,
                         [](std::int64_t a, std::int64_t b) { return checked_add(a, b); });
}

GameRef diff(GameStore& store, GameRef g, GameRef h) { return sum(store, g, negate(store, h)); }

GameRef or_op(GameStore& store, GameRef g, GameRef h) {
    static const std::vector<std::int64_t> bits{0, 1};
    require_values_in(store, g, bits, "or");
    require_values_in(store, h, bits, "or");
    return extend_binary(store, detail::kOr, g, h,
                         [](std::int64_t a, std::int64_t b) { return std::max(a, b); });
}

GameRef and_op(GameStore& store, GameRef g, GameRef h) {
    static const std::vector<std::int64_t> bits{0, 1};
    require_values_in(store, g, bits, "and");
    require_values_in(store, h, bits, "and");
    return extend_binary(store, detail::kAnd, g, h,
                         [](std::int64_t a, std::int64_t b) { return std::min(a, b); });
}

GameRef star_op(GameStore& store, GameRef g, GameRef h) {
    static const std::vector<std::int64_t> trits{-1, 0, 1};
    require_values_in(store, g, trits, "star_op");
    require_values_in(store, h, trits, "star_op");
    return extend_binary(store, detail::kStarOp, g, h, [](std::int64_t a, std::int64_t b) {
        return std::max<std::int64_t>(-1, std::min<std::int64_t>(1, a + b));
    });
}

GameRef round_to_set(GameStore& store, GameRef g, const std::set<std::int64_t>& values) {
    if (values.empty()) throw Error(ErrorCode::InvalidArgument, "rounding target set is empty");
    std::vector<std::int64_t> domain(values.begin(), values.end());
    auto nearest = [&domain](std::int64_t x) {
        auto hi = std::lower_bound(domain.begin(), domain.end(), x);
        if (hi == domain.end()) return domain.back();
        if (*hi == x || hi == domain.begin()) return *hi;
        std::int64_t lo = *(hi - 1);
        // Compare distances without overflow: x - lo vs hi - x.
        unsigned long long dlo = static_cast<unsigned long long>(x) - static_cast<unsigned long long>(lo);
        unsigned long long dhi = static_cast<unsigned long long>(*hi) - static_cast<unsigned long long>(x);
        return dlo <= dhi ? lo : *hi;
    };
    std::vector<std::int64_t> source;
    for (std::int64_t v : value_set(store, g)) source.push_back(v);
    Combiner f({source}, [&](std::span<const std::int64_t> a) { return nearest(a[0]); });
    GameRef args[] = {g};
    return extend(store, f, args);
}

GameRef ampersand(GameStore& store, GameRef up, GameRef down,
                  const std::optional<std::set<std::int64_t>>& values) {
    if (store.parity(up) != store.parity(down))
        throw Error(ErrorCode::ParityMismatch, "ampersand arguments differ in parity");
    GameRef hi = invertible_representative(store, up, "upper argument");
    GameRef lo = invertible_representative(store, down, "lower argument");
    if (!ge(store, hi, lo)) throw Error(ErrorCode::NotComparable, "upper argument is not >= lower");
    std::unordered_map<GameRef, GameRef> memo;
    GameRef spread = replace_positive_leaves(store, diff(store, hi, lo), memo);
    GameRef out = sum(store, spread, lo);
    if (values) out = round_to_set(store, out, *values);
    return out;
}

}  // namespace wts
