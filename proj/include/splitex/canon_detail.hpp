#pragma once

// Internal hooks shared by the canonical labeler and the enumerator.

#include <cstdint>
#include <vector>

#include "splitex/canon.hpp"

namespace splitex::detail {

using Cells = std::vector<std::uint64_t>;

void refine(const Graph& g, Cells& cells);
CanonicalForm canonical_form_from(const Graph& g, Cells start);

}  // namespace splitex::detail
