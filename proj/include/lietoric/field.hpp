#pragma once

// The scalar contract shared by Rational and AlgNum. Generic code calls
// the helpers below instead of is_zero/to_string directly so that ADL picks
// up the overload for whichever field the template was instantiated with,
// even from inside classes that declare members of the same name.

#include <concepts>
#include <string>

namespace lietoric {

class Rational;

template <class K>
concept ExactField = requires(const K a, const K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  K(1);
};

namespace detail {

template <class K>
bool zero(const K& a) {
  return is_zero(a);
}

template <class K>
std::string str(const K& a) {
  return to_string(a);
}

}  // namespace detail
}  // namespace lietoric
