#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace parikhseq {

/// Exact integer of unbounded magnitude.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace parikhseq
