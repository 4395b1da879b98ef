#pragma once

#include <string>

#include "aeg/errors.hpp"

namespace aeg {

enum class FamilyKind { Outerplanar, DiamondFree, KDegenerate };

// Which losing-set family is in force. A graph is "losing" when it is
// non-outerplanar, contains a diamond minor, or is not k-degenerate.
struct GameFamily {
    FamilyKind kind = FamilyKind::Outerplanar;
    int k = 0;  // meaningful for KDegenerate only

    static GameFamily outerplanar() { return {FamilyKind::Outerplanar, 0}; }
    static GameFamily diamond_free() { return {FamilyKind::DiamondFree, 0}; }
    static GameFamily k_degenerate(int k) {
        if (k < 1) throw InvalidParameter("k must be at least 1");
        return {FamilyKind::KDegenerate, k};
    }

    bool operator==(const GameFamily&) const = default;
};

inline std::string family_name(const GameFamily& f) {
    switch (f.kind) {
        case FamilyKind::Outerplanar: return "outerplanar";
        case FamilyKind::DiamondFree: return "diamond";
        case FamilyKind::KDegenerate: return "kdegenerate";
    }
    return "?";
}

inline GameFamily parse_family(const std::string& name, int k = 0) {
    if (name == "outerplanar") return GameFamily::outerplanar();
    if (name == "diamond") return GameFamily::diamond_free();
    if (name == "kdegenerate") return GameFamily::k_degenerate(k);
    throw InvalidParameter("unknown family: " + name);
}

// Largest size of a non-losing edge set on n vertices, by the closed formulas:
// 2n-3 (maximal outerplanar), ceil((3n-5)/2) (diamond-free), (n-k)k + C(k,2)
// (maximal k-degenerate).
inline long long extremal(const GameFamily& f, int n) {
    if (n < 2) throw InvalidParameter("extremal requires n >= 2");
    long long nn = n;
    switch (f.kind) {
        case FamilyKind::Outerplanar:
            return 2 * nn - 3;
        case FamilyKind::DiamondFree:
            return (3 * nn - 5 + 1) / 2;  // ceil((3n-5)/2), 3n-5 >= 1 here
        case FamilyKind::KDegenerate: {
            long long k = f.k;
            if (k < 1) throw InvalidParameter("k must be at least 1");
            if (nn < k + 1) throw InvalidParameter("k-degenerate extremal requires n >= k+1");
            return (nn - k) * k + k * (k - 1) / 2;
        }
    }
    throw InvalidParameter("bad family");
}

struct TauBounds {
    long long lower = 0;
    long long upper = 0;
};

// Move-count window for the first forced loss: (ceil(ex/2) + 1, ex + 1),
// counting Avoider's moves only.
inline TauBounds tau_bounds(const GameFamily& f, int n) {
    long long ex = extremal(f, n);
    return {(ex + 1) / 2 + 1, ex + 1};
}

// Family-specific guaranteed survival threshold for the scripted Avoider
// strategies: the loss move is never earlier than this.
inline long long theorem_lower(const GameFamily& f, int n) {
    switch (f.kind) {
        case FamilyKind::Outerplanar: return 2LL * n - 7;
        case FamilyKind::DiamondFree: return extremal(f, n) - 2;
        case FamilyKind::KDegenerate: return extremal(f, n) + 1;
    }
    throw InvalidParameter("bad family");
}

}  // namespace aeg
