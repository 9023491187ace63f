#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace syndet {

// Exact fraction type used for every density value. Counting stays in int64;
// numerators and denominators here never exceed the window length, so the
// underlying arithmetic cannot overflow at supported sizes.
using Rational = boost::rational<std::int64_t>;

}  // namespace syndet
