#include "foldsys/errors.hpp"

namespace foldsys {

UndefinedFold::UndefinedFold(std::size_t core_len, std::size_t proc_len)
    : Error("UndefinedFold: |w|=" + std::to_string(core_len) + " but |v|=" + std::to_string(proc_len)) {}

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}

}  // namespace foldsys
