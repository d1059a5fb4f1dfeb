#pragma once

#include <boost/multiprecision/float128.hpp>

namespace risgg {

/// 113-bit software floating point (about 34 significant digits). Used inside
/// the Meijer engine and for the moment fit.
using Extended = boost::multiprecision::float128;

}  // namespace risgg
