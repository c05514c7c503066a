#pragma once

#include <span>
#include <vector>

#include "ntnoff/random.hpp"
#include "ntnoff/scenario.hpp"

namespace ntnoff {

// Large (echocardiogram), Medium (ECG) and Low (PPG) payloads, equal mix,
// 10% relative spread on the packet size.
std::vector<PayloadClassSpec> default_class_specs();

// One task per GD, ids 0..n_gds-1. The class is drawn from the mix fractions
// and the size from a normal around the class mean, floored at
// max(1, 0.1 * mean) and rounded to whole bits.
std::vector<Task> generate_tasks(std::span<const PayloadClassSpec> specs, int n_gds,
                                 RandomStream& rng);

}  // namespace ntnoff
