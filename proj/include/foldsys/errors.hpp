#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace foldsys {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// h(w, v) is partial: it is undefined when |w| != |v|.
class UndefinedFold : public Error {
 public:
  UndefinedFold(std::size_t core_len, std::size_t proc_len);
};

// A symbol outside its declared alphabet.
class SymbolError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised by the enumerative oracles instead of silently truncating.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace foldsys
