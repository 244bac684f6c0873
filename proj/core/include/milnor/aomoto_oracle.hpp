#pragma once

#include "milnor/aomoto.hpp"

namespace milnor {

/// Independent brute-force evaluation of dim H^1(A*, w wedge): builds the
/// full exterior square on d generators and quotients by the span of the
/// relations coming from dependent triples (three hyperplanes sharing a
/// rank-2 flat), then measures the kernel of the wedge map into the
/// quotient by explicit linear algebra. Shares no code with the blockwise
/// route in aomoto.cpp beyond the field types and rref.
AomotoReport os_oracle_h1(const FlatList& flats, const WeightVector& w);

}  // namespace milnor
