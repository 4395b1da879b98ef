#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "aeg/edge.hpp"
#include "aeg/family.hpp"
#include "aeg/properties.hpp"

namespace aeg {

// Game value in Avoider moves; empty means the Avoider survives optimal play.
struct GameValue {
    std::optional<int> finite;
    bool infinite() const { return !finite.has_value(); }
    bool operator==(const GameValue&) const = default;
};

struct SolveOptions {
    // Cap on memo entries; exceeding it raises CapacityError, never a wrong
    // answer. The n = 6 state space fits in ~15M entries.
    size_t memo_budget = size_t{1} << 25;
};

namespace detail {

// Open-addressing map from 2m-bit position keys to value bytes.
class FlatMemo {
public:
    explicit FlatMemo(size_t budget) : budget_(budget) { rehash(1 << 16); }

    bool find(uint64_t key, int8_t& out) const {
        size_t i = slot(key);
        while (keys_[i] != 0) {
            if (keys_[i] == key + 1) {
                out = vals_[i];
                return true;
            }
            i = (i + 1) & mask_;
        }
        return false;
    }

    void insert(uint64_t key, int8_t val) {
        if (size_ + 1 > budget_) throw CapacityError("solver memo budget exceeded");
        if ((size_ + 1) * 10 > keys_.size() * 7) rehash(keys_.size() * 2);
        size_t i = slot(key);
        while (keys_[i] != 0) {
            if (keys_[i] == key + 1) {
                vals_[i] = val;
                return;
            }
            i = (i + 1) & mask_;
        }
        keys_[i] = key + 1;
        vals_[i] = val;
        ++size_;
    }

    size_t size() const { return size_; }

private:
    size_t slot(uint64_t key) const { return (key * 0x9e3779b97f4a7c15ULL) & mask_; }

    void rehash(size_t cap) {
        std::vector<uint64_t> old_keys = std::move(keys_);
        std::vector<int8_t> old_vals = std::move(vals_);
        keys_.assign(cap, 0);
        vals_.assign(cap, 0);
        mask_ = cap - 1;
        for (size_t i = 0; i < old_keys.size(); ++i)
            if (old_keys[i] != 0) {
                size_t j = slot(old_keys[i] - 1);
                while (keys_[j] != 0) j = (j + 1) & mask_;
                keys_[j] = old_keys[i];
                vals_[j] = old_vals[i];
            }
    }

    std::vector<uint64_t> keys_;
    std::vector<int8_t> vals_;
    size_t mask_ = 0, size_ = 0, budget_;
};

}  // namespace detail

// Exact optimal-play values for small boards by memoized adversarial search.
// A position where the Avoider's edge set contains a losing set is terminal
// with value = his move count; an exhausted board is terminal with value
// infinity. The Avoider maximizes (infinity greatest), the Enforcer minimizes.
class TauSolver {
public:
    static constexpr int8_t kInfinite = 127;

    TauSolver(GameFamily family, int n, SolveOptions opts = {})
        : family_(family), n_(n), m_(static_cast<int>(edge_slot_count(n))), memo_(opts.memo_budget) {
        if (n < 2) throw InvalidParameter("solver requires n >= 2");
        if (n > 6) throw CapacityError("solver capacity is n <= 6");
        losing_.assign(size_t{1} << m_, -1);
        losing_fn_ = [this](uint32_t a_mask) {
            SimpleGraph g(n_);
            for (int b = 0; b < m_; ++b)
                if (a_mask >> b & 1) {
                    Edge e = edge_from_index(n_, b);
                    g.add_edge(e.u, e.v);
                }
            return is_losing(g, family_);
        };
    }

    // Test hook: replace the losing predicate (e.g. by a vertex-relabeled one).
    void set_losing_predicate(std::function<bool(uint32_t)> fn) {
        losing_fn_ = std::move(fn);
        losing_.assign(size_t{1} << m_, -1);
    }

    GameValue solve() {
        int8_t v = search(0, 0);
        if (v == kInfinite) return {};
        return {v};
    }

    // Optimal play line (ties broken toward the lowest edge index), ending at
    // the first Avoider loss or board exhaustion.
    std::vector<Edge> principal_variation() {
        solve();
        std::vector<Edge> line;
        uint32_t a = 0, e = 0;
        while (true) {
            if (losing(a)) break;
            uint32_t free = ~(a | e) & full_mask();
            if (!free) break;
            bool avoider_turn = std::popcount(a) == std::popcount(e);
            int best_bit = -1;
            int8_t best_val = 0;
            for (int b = 0; b < m_; ++b) {
                if (!(free >> b & 1)) continue;
                int8_t v = avoider_turn ? search(a | (1u << b), e) : search(a, e | (1u << b));
                bool better = best_bit < 0 || (avoider_turn ? v > best_val : v < best_val);
                if (better) {
                    best_bit = b;
                    best_val = v;
                }
            }
            line.push_back(edge_from_index(n_, best_bit));
            if (avoider_turn)
                a |= 1u << best_bit;
            else
                e |= 1u << best_bit;
        }
        return line;
    }

    size_t memo_size() const { return memo_.size(); }

private:
    uint32_t full_mask() const { return (uint32_t{1} << m_) - 1; }

    bool losing(uint32_t a_mask) {
        int8_t& c = losing_[a_mask];
        if (c < 0) c = losing_fn_(a_mask) ? 1 : 0;
        return c == 1;
    }

    int8_t search(uint32_t a, uint32_t e) {
        if (losing(a)) return static_cast<int8_t>(std::popcount(a));
        uint32_t free = ~(a | e) & full_mask();
        if (!free) return kInfinite;
        uint64_t key = (uint64_t(e) << m_) | a;
        int8_t cached;
        if (memo_.find(key, cached)) return cached;

        bool avoider_turn = std::popcount(a) == std::popcount(e);
        int8_t best = avoider_turn ? 0 : kInfinite;
        for (int b = 0; b < m_; ++b) {
            if (!(free >> b & 1)) continue;
            int8_t v = avoider_turn ? search(a | (1u << b), e) : search(a, e | (1u << b));
            if (avoider_turn) {
                if (v > best) best = v;
                if (best == kInfinite) break;
            } else {
                if (v < best) best = v;
                if (best <= std::popcount(a) + 1) break;  // cannot force an earlier loss
            }
        }
        memo_.insert(key, best);
        return best;
    }

    GameFamily family_;
    int n_, m_;
    detail::FlatMemo memo_;
    std::vector<int8_t> losing_;
    std::function<bool(uint32_t)> losing_fn_;
};

inline GameValue solve_tau(const GameFamily& family, int n, SolveOptions opts = {}) {
    return TauSolver(family, n, opts).solve();
}

struct Relation1Report {
    GameValue tau;
    TauBounds bounds;
    bool vacuous = false;  // infinite tau passes vacuously
    bool pass = false;
};

inline Relation1Report verify_relation1(const GameFamily& family, int n, SolveOptions opts = {}) {
    Relation1Report rep;
    rep.tau = solve_tau(family, n, opts);
    rep.bounds = tau_bounds(family, n);
    if (rep.tau.infinite()) {
        rep.vacuous = true;
        rep.pass = true;
    } else {
        rep.pass = rep.bounds.lower <= *rep.tau.finite && *rep.tau.finite <= rep.bounds.upper;
    }
    return rep;
}

}  // namespace aeg
