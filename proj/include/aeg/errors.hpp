#pragma once

#include <stdexcept>
#include <string>

namespace aeg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad n, bad k, bad edge, ...).
struct InvalidParameter : Error {
    using Error::Error;
};

// Attempt to claim an edge that is already owned.
struct OccupiedEdge : Error {
    using Error::Error;
};

// Move made out of turn, or other violation of the alternation protocol.
struct ProtocolError : Error {
    using Error::Error;
};

// A strategy produced an illegal move. Identifies the strategy and move index.
struct StrategyFault : Error {
    StrategyFault(std::string strategy_id, int move_index, const std::string& what)
        : Error(what), strategy(std::move(strategy_id)), move_index(move_index) {}
    std::string strategy;
    int move_index;
};

// A computation exceeded its configured size/memory cap. Never a wrong answer.
struct CapacityError : Error {
    using Error::Error;
};

}  // namespace aeg
