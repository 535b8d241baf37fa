#pragma once

/* Boost 1.74's is_byte_container trait (guarding cpp_int's byte-container
 * constructor) is not SFINAE-safe: it reads iterator_traits<C::const_iterator>
 * ::value_type, and Eigen 3.4 typedefs const_iterator = void on 2-D matrices,
 * so any Matrix<cpp_int> product hard-errors inside overload resolution.
 * Pre-empt the header with an equivalent trait that fails soft. Must be
 * included before any boost/multiprecision header; int_matrix.hpp is the one
 * place that does. */

#if defined(BOOST_IS_BYTE_CONTAINER_HPP)
#error "pbundle/compat.hpp must precede all boost/multiprecision includes"
#endif
#define BOOST_IS_BYTE_CONTAINER_HPP

#include <iterator>
#include <type_traits>

namespace boost { namespace multiprecision { namespace detail {

template <class C, class = void>
struct is_byte_container : std::false_type {};

template <class C>
struct is_byte_container<
    C, std::void_t<typename std::iterator_traits<typename C::const_iterator>::value_type>>
    : std::integral_constant<
          bool,
          std::is_integral<typename std::remove_cv<typename std::iterator_traits<
              typename C::const_iterator>::value_type>::type>::value &&
              sizeof(typename std::iterator_traits<typename C::const_iterator>::value_type) ==
                  1> {};

}}} // namespace boost::multiprecision::detail
