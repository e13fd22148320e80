#pragma once

#include <complex>

#ifdef QM_HAVE_FLOAT128
#include <boost/multiprecision/float128.hpp>
#endif

namespace qm {

#ifdef QM_HAVE_FLOAT128
using xreal = boost::multiprecision::float128;
inline constexpr bool has_float128 = true;
#else
using xreal = long double;
inline constexpr bool has_float128 = false;
#endif

template <class R>
using cplx = std::complex<R>;

enum class Precision { standard, extended };

// unit e(num/den) with the residue reduced before any rounding
template <class R>
cplx<R> unit_root(long long num, long long den);

}  // namespace qm
