#pragma once

#include "ctxg/simd/kernels.hpp"

// Per-variant kernel tables. Only the variants compiled into this binary
// define their table; dispatch code checks availability before touching them.

namespace ctxg::simd {

namespace scalar {
extern const detail::Ops kOps;
}

#if defined(CTXG_HAVE_AVX2)
namespace avx2 {
extern const detail::Ops kOps;
}
#endif

#if defined(CTXG_HAVE_NEON)
namespace neon {
extern const detail::Ops kOps;
}
#endif

} // namespace ctxg::simd
