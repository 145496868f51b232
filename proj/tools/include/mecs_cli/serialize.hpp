#pragma once

#include <string>

#include "mecs/gadgets.hpp"
#include "mecs/kernel.hpp"

namespace mecs::cli {

// Pretty-printed JSON with a trailing newline; key order is fixed.
std::string trace_json(const KernelTrace& trace);
std::string layout_json(const GadgetLayout& layout);

}  // namespace mecs::cli
