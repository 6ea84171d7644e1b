#pragma once

#include <utility>

#include "rasm/montecarlo.hpp"

namespace rasm {

// Builds the (AcTable, SymbolMap) pair for any scheme kind:
//   RASM  - adaptive-size ACs, D = 2^floor(log2(2^N_r - 1))
//   RSM   - the N_r singleton ACs (N_r must be a power of 2)
//   RGSM  - fixed-size-N_s ACs, D = 2^floor(log2 C(N_r, N_s))
//   RGSSK - as RGSM but with no symbol bits (M = 1 pilot)
std::pair<AcTable, SymbolMap> make_scheme_table(const SystemConfig& config);

// floor(log2 C(n, k))
int fixed_size_index_bits(int n, int k);

} // namespace rasm
