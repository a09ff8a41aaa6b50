#pragma once

#include <string>
#include <vector>

namespace og10lat::replay {

struct ReplayCheck {
    std::string name;
    bool pass = false;
    std::string detail; // set when the check fails
};

/// Golden checks for the headline lattice facts: marked Mukai classes,
/// lambda-perp and Gamma invariants, factoriality, the d = 14 Picard
/// lattice, the scale obstruction and the discriminant predicates.
std::vector<ReplayCheck> run_replay();

} // namespace og10lat::replay
