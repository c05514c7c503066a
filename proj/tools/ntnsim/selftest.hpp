#pragma once

#include <string>
#include <vector>

#include "ntnoff/scenario.hpp"

namespace ntnsim {

// Runs every method on a few snapshots of `scenario` and checks the report
// invariants. Returns one message per violation; empty means all passed.
std::vector<std::string> run_selftest(const ntnoff::Scenario& scenario, int n_snapshots = 10);

}  // namespace ntnsim
