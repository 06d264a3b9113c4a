#pragma once

#include "fracwright/montecarlo.hpp"

#include <ostream>
#include <string>

namespace fw {

// shortest decimal form that parses back to the same double; nan and inf spelled out
std::string format_double(double x);

// header index,component_0..component_{dim-1}, one row per sample
void write_batch_csv(std::ostream& os, const SampleBatch& batch);

}  // namespace fw
