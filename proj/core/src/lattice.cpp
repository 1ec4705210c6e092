#include "permuto/lattice.hpp"

// FunctionVector is header-only; this translation unit pins the two
// instantiations used across the library.

namespace permuto {

template class FunctionVector<std::int64_t>;
template class FunctionVector<Rat>;

}  // namespace permuto
