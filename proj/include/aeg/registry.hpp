#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aeg/rng.hpp"
#include "aeg/strategies/baselines.hpp"
#include "aeg/strategies/diamond_avoider.hpp"
#include "aeg/strategies/kdegenerate_avoider.hpp"
#include "aeg/strategies/outerplanar_avoider.hpp"
#include "aeg/strategies/pairing_enforcer.hpp"
#include "aeg/strategy.hpp"

namespace aeg {

inline const std::vector<std::string>& strategy_ids() {
    static const std::vector<std::string> ids = {
        "paper-op-avoider", "paper-diamond-avoider", "paper-kdeg-avoider",
        "pairing-enforcer", "random",                "greedy-avoider",
        "saboteur-enforcer"};
    return ids;
}

// Instantiate a registered strategy for one game. The stream seed is split
// from the game seed by role tag, so the two players are independent.
inline std::unique_ptr<Strategy> make_strategy(const std::string& id, Player role, int n,
                                               const GameFamily& family, uint64_t game_seed) {
    uint64_t stream =
        derive_stream_seed(game_seed, role == Player::Avoider ? "avoider" : "enforcer");
    auto require = [&](Player expected) {
        if (role != expected)
            throw InvalidParameter("strategy " + id + " cannot play this role");
    };
    if (id == "random") return std::make_unique<RandomStrategy>(role, n, stream);
    if (id == "greedy-avoider") {
        require(Player::Avoider);
        return std::make_unique<GreedyAvoider>(n, family);
    }
    if (id == "saboteur-enforcer") {
        require(Player::Enforcer);
        return std::make_unique<SaboteurEnforcer>(n);
    }
    if (id == "pairing-enforcer") {
        require(Player::Enforcer);
        return std::make_unique<PairingEnforcer>(n);
    }
    if (id == "paper-op-avoider") {
        require(Player::Avoider);
        return std::make_unique<OuterplanarAvoider>(n);
    }
    if (id == "paper-diamond-avoider") {
        require(Player::Avoider);
        return std::make_unique<DiamondAvoider>(n);
    }
    if (id == "paper-kdeg-avoider") {
        require(Player::Avoider);
        if (family.kind != FamilyKind::KDegenerate)
            throw InvalidParameter("paper-kdeg-avoider needs the kdegenerate family");
        return std::make_unique<KDegenerateAvoider>(n, family.k);
    }
    throw InvalidParameter("unknown strategy id: " + id);
}

}  // namespace aeg
