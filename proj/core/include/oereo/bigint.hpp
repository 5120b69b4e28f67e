#ifndef OEREO_BIGINT_HPP
#define OEREO_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace oereo {

// All arithmetic in this library is exact; Int never wraps.
using Int = boost::multiprecision::cpp_int;

}  // namespace oereo

#endif
