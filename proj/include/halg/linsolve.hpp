#pragma once

#include <optional>

#include "halg/gb.hpp"
#include "halg/snf.hpp"

namespace halg {

// Row-span primitives used by the module layer, dispatching on ring
// capability: Smith-form solving over euclidean rings, module Groebner
// bases over polynomial rings with several variables.

// Coefficients c with sum_i c[i] * rows[i] = target, or nullopt.
std::optional<std::vector<Elem>> lift_through_rows(const RingPtr& ring,
                                                   const std::vector<std::vector<Elem>>& rows,
                                                   std::size_t width,
                                                   const std::vector<Elem>& target);

// Generating set of the syzygies { c : sum_i c[i] * rows[i] = 0 }.
std::vector<std::vector<Elem>> row_syzygies(const RingPtr& ring,
                                            const std::vector<std::vector<Elem>>& rows,
                                            std::size_t width);

}  // namespace halg
