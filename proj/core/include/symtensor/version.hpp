#ifndef SYMTENSOR_VERSION_HPP
#define SYMTENSOR_VERSION_HPP

namespace symtensor {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace symtensor

#endif  // SYMTENSOR_VERSION_HPP
