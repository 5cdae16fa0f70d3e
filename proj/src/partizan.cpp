#include "wts/partizan.hpp"

#include <algorithm>

#include "wts/checked.hpp"
#include "wts/detail/ops.hpp"
#include "wts/error.hpp"

namespace wts {

namespace {

PartizanRef as_ref(const detail::MemoValue& v) {
    return PartizanRef{static_cast<std::uint32_t>(v.first)};
}

void normalize(std::vector<PartizanRef>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::size_t PartizanStore::KeyHash::operator()(const Key& k) const noexcept {
    std::uint64_t h = 0x7f4a7c15ULL;
    auto mix = [&h](std::uint64_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (PartizanRef g : k.left) mix(g.id);
    mix(0xffffffffULL);
    for (PartizanRef g : k.right) mix(g.id);
    return static_cast<std::size_t>(h);
}

PartizanRef PartizanStore::make(std::vector<PartizanRef> left, std::vector<PartizanRef> right) {
    normalize(left);
    normalize(right);
    Key key{left, right};
    std::lock_guard lock(intern_mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) return PartizanRef{it->second};
    PartizanNode n;
    for (const auto* side : {&left, &right})
        for (PartizanRef o : *side) n.height = std::max(n.height, nodes_[o.id].height + 1);
    n.left = std::move(left);
    n.right = std::move(right);
    std::uint32_t id = nodes_.push(std::move(n));
    index_.emplace(std::move(key), id);
    return PartizanRef{id};
}

PartizanRef p_number(PartizanStore& store, const Dyadic& x) {
    detail::MemoKey key{detail::kPNumber, static_cast<std::uint32_t>(x.exp()), 0, x.num()};
    if (auto hit = store.memo().find(key)) return as_ref(*hit);
    PartizanRef out;
    if (x.is_integer()) {
        std::int64_t n = x.num();
        if (n == 0) {
            out = store.make({}, {});
        } else if (n > 0) {
            out = store.make({p_number(store, Dyadic(n - 1))}, {});
        } else {
            out = store.make({}, {p_number(store, Dyadic(n + 1))});
        }
    } else {
        Dyadic step(1, x.exp());
        out = store.make({p_number(store, x - step)}, {p_number(store, x + step)});
    }
    store.memo().put(key, {out.id, 0});
    return out;
}

PartizanRef p_int(PartizanStore& store, std::int64_t n) { return p_number(store, Dyadic(n)); }

PartizanRef p_star(PartizanStore& store) {
    PartizanRef zero = p_int(store, 0);
    return store.make({zero}, {zero});
}

bool p_leq(PartizanStore& store, PartizanRef g, PartizanRef h) {
    if (g == h) return true;
    detail::MemoKey key{detail::kPLeq, g.id, h.id, 0};
    if (auto hit = store.memo().find(key)) return hit->first != 0;
    bool result = true;
    for (PartizanRef gl : store.left_options(g)) {
        if (p_leq(store, h, gl)) {
            result = false;
            break;
        }
    }
    if (result) {
        for (PartizanRef hr : store.right_options(h)) {
            if (p_leq(store, hr, g)) {
                result = false;
                break;
            }
        }
    }
    store.memo().put(key, {result ? 1 : 0, 0});
    return result;
}

bool p_eq(PartizanStore& store, PartizanRef g, PartizanRef h) {
    return p_leq(store, g, h) && p_leq(store, h, g);
}

bool p_lf(PartizanStore& store, PartizanRef g, PartizanRef h) { return !p_leq(store, h, g); }

PComparison p_compare(PartizanStore& store, PartizanRef g, PartizanRef h) {
    bool a = p_leq(store, g, h);
    bool b = p_leq(store, h, g);
    if (a && b) return PComparison::Equal;
    if (a) return PComparison::Less;
    if (b) return PComparison::Greater;
    return PComparison::Fuzzy;
}

PartizanRef p_sum(PartizanStore& store, PartizanRef g, PartizanRef h) {
    const PartizanNode& a = store.node(g);
    const PartizanNode& b = store.node(h);
    if (a.left.empty() && a.right.empty()) return h;
    if (b.left.empty() && b.right.empty()) return g;
    detail::MemoKey key{detail::kPSum, g.id, h.id, 0};
    if (auto hit = store.memo().find(key)) return as_ref(*hit);
    std::vector<PartizanRef> left, right;
    for (PartizanRef o : a.left) left.push_back(p_sum(store, o, h));
    for (PartizanRef o : b.left) left.push_back(p_sum(store, g, o));
    for (PartizanRef o : a.right) right.push_back(p_sum(store, o, h));
    for (PartizanRef o : b.right) right.push_back(p_sum(store, g, o));
    PartizanRef out = store.make(std::move(left), std::move(right));
    store.memo().put(key, {out.id, 0});
    return out;
}

PartizanRef p_neg(PartizanStore& store, PartizanRef g) {
    detail::MemoKey key{detail::kPNeg, g.id, 0, 0};
    if (auto hit = store.memo().find(key)) return as_ref(*hit);
    std::vector<PartizanRef> left, right;
    for (PartizanRef o : store.right_options(g)) left.push_back(p_neg(store, o));
    for (PartizanRef o : store.left_options(g)) right.push_back(p_neg(store, o));
    PartizanRef out = store.make(std::move(left), std::move(right));
    store.memo().put(key, {out.id, 0});
    return out;
}

PartizanRef p_diff(PartizanStore& store, PartizanRef g, PartizanRef h) {
    return p_sum(store, g, p_neg(store, h));
}

namespace {

// One simplification step on options that are already canonical. Returns
// true when something changed.
bool remove_dominated(PartizanStore& store, std::vector<PartizanRef>& opts, bool left_side) {
    std::vector<PartizanRef> kept;
    for (PartizanRef a : opts) {
        bool dominated = false;
        for (PartizanRef b : opts) {
            if (a == b) continue;
            if (left_side ? p_leq(store, a, b) : p_leq(store, b, a)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(a);
    }
    bool changed = kept.size() != opts.size();
    opts = std::move(kept);
    return changed;
}

bool bypass_reversible(PartizanStore& store, std::vector<PartizanRef>& left,
                       std::vector<PartizanRef>& right) {
    PartizanRef whole = store.make(left, right);
    for (std::size_t i = 0; i < left.size(); ++i) {
        for (PartizanRef back : store.right_options(left[i])) {
            if (p_leq(store, back, whole)) {
                std::vector<PartizanRef> next(left.begin(), left.begin() + i);
                next.insert(next.end(), left.begin() + i + 1, left.end());
                for (PartizanRef o : store.left_options(back)) next.push_back(o);
                normalize(next);
                left = std::move(next);
                return true;
            }
        }
    }
    for (std::size_t i = 0; i < right.size(); ++i) {
        for (PartizanRef back : store.left_options(right[i])) {
            if (p_leq(store, whole, back)) {
                std::vector<PartizanRef> next(right.begin(), right.begin() + i);
                next.insert(next.end(), right.begin() + i + 1, right.end());
                for (PartizanRef o : store.right_options(back)) next.push_back(o);
                normalize(next);
                right = std::move(next);
                return true;
            }
        }
    }
    return false;
}

}  // namespace

PartizanRef p_canonical(PartizanStore& store, PartizanRef g) {
    detail::MemoKey key{detail::kPCanonical, g.id, 0, 0};
    if (auto hit = store.memo().find(key)) return as_ref(*hit);
    std::vector<PartizanRef> left, right;
    for (PartizanRef o : store.left_options(g)) left.push_back(p_canonical(store, o));
    for (PartizanRef o : store.right_options(g)) right.push_back(p_canonical(store, o));
    normalize(left);
    normalize(right);
    while (true) {
        bool changed = remove_dominated(store, left, true);
        changed = remove_dominated(store, right, false) || changed;
        if (changed) continue;
        if (!bypass_reversible(store, left, right)) break;
    }
    PartizanRef out = store.make(std::move(left), std::move(right));
    store.memo().put(key, {out.id, 0});
    store.memo().put({detail::kPCanonical, out.id, 0, 0}, {out.id, 0});
    return out;
}

std::optional<Dyadic> p_as_number(PartizanStore& store, PartizanRef g) {
    PartizanRef c = p_canonical(store, g);
    detail::MemoKey key{detail::kPAsNumber, c.id, 0, 0};
    if (auto hit = store.memo().find(key)) {
        if (hit->second < 0) return std::nullopt;
        return Dyadic(hit->first, static_cast<int>(hit->second));
    }
    std::optional<Dyadic> result;
    const PartizanNode& n = store.node(c);
    if (n.left.size() <= 1 && n.right.size() <= 1) {
        std::optional<Dyadic> lo, hi;
        bool ok = true;
        if (!n.left.empty()) ok = (lo = p_as_number(store, n.left.front())).has_value();
        if (ok && !n.right.empty()) ok = (hi = p_as_number(store, n.right.front())).has_value();
        if (ok && (!lo || !hi || *lo < *hi)) {
            Dyadic cand = simplest_between(lo, hi);
            if (p_number(store, cand) == c) result = cand;
        }
    }
    store.memo().put(key, result ? detail::MemoValue{result->num(), result->exp()}
                                 : detail::MemoValue{0, -1});
    return result;
}

std::optional<std::int64_t> p_as_integer(PartizanStore& store, PartizanRef g) {
    auto x = p_as_number(store, g);
    if (x && x->is_integer()) return x->num();
    return std::nullopt;
}

namespace {

Dyadic stop(PartizanStore& store, PartizanRef g, bool left) {
    if (auto x = p_as_number(store, g)) return *x;
    detail::MemoKey key{left ? detail::kPLeftStop : detail::kPRightStop, g.id, 0, 0};
    if (auto hit = store.memo().find(key)) return Dyadic(hit->first, static_cast<int>(hit->second));
    const auto& opts = left ? store.left_options(g) : store.right_options(g);
    std::optional<Dyadic> best;
    for (PartizanRef o : opts) {
        Dyadic s = stop(store, o, !left);
        if (!best || (left ? *best < s : s < *best)) best = s;
    }
    // Games with an empty side are numbers, handled above.
    store.memo().put(key, {best->num(), best->exp()});
    return *best;
}

std::optional<std::int64_t> bracket_search(PartizanStore& store, const std::vector<PartizanRef>& left,
                                           const std::vector<PartizanRef>& right, bool largest) {
    if (left.empty() || right.empty())
        throw Error(ErrorCode::EmptyOptions, "bracket needs options on both sides");
    std::optional<Dyadic> lo, hi;
    for (const auto* side : {&left, &right}) {
        for (PartizanRef o : *side) {
            for (Dyadic s : {left_stop(store, o), right_stop(store, o)}) {
                if (!lo || s < *lo) lo = s;
                if (!hi || *hi < s) hi = s;
            }
        }
    }
    std::int64_t from = checked_sub(lo->floor(), 2);
    std::int64_t to = checked_add(hi->ceil(), 2);
    auto fits = [&](std::int64_t n) {
        PartizanRef v = p_int(store, n);
        for (PartizanRef o : left)
            if (!p_lf(store, o, v)) return false;
        for (PartizanRef o : right)
            if (!p_lf(store, v, o)) return false;
        return true;
    };
    if (largest) {
        for (std::int64_t n = to; n >= from; --n)
            if (fits(n)) return n;
    } else {
        for (std::int64_t n = from; n <= to; ++n)
            if (fits(n)) return n;
    }
    return std::nullopt;
}

}  // namespace

Dyadic left_stop(PartizanStore& store, PartizanRef g) { return stop(store, g, true); }
Dyadic right_stop(PartizanStore& store, PartizanRef g) { return stop(store, g, false); }

PartizanRef bracket_plus(PartizanStore& store, const std::vector<PartizanRef>& left,
                         const std::vector<PartizanRef>& right) {
    if (auto n = bracket_search(store, left, right, true)) return p_int(store, *n);
    return store.make(left, right);
}

PartizanRef bracket_minus(PartizanStore& store, const std::vector<PartizanRef>& left,
                          const std::vector<PartizanRef>& right) {
    if (auto n = bracket_search(store, left, right, false)) return p_int(store, *n);
    return store.make(left, right);
}

PartizanRef overheat(PartizanStore& store, PartizanRef g, PartizanRef t) {
    PartizanRef c = p_canonical(store, g);
    if (auto n = p_as_integer(store, c)) return p_int(store, *n);
    detail::MemoKey key{detail::kPOverheat, c.id, t.id, 0};
    if (auto hit = store.memo().find(key)) return as_ref(*hit);
    std::vector<PartizanRef> left, right;
    for (PartizanRef o : store.left_options(c))
        left.push_back(p_canonical(store, p_sum(store, overheat(store, o, t), t)));
    for (PartizanRef o : store.right_options(c))
        right.push_back(p_canonical(store, p_diff(store, overheat(store, o, t), t)));
    PartizanRef out = p_canonical(store, store.make(std::move(left), std::move(right)));
    store.memo().put(key, {out.id, 0});
    return out;
}

}  // namespace wts
