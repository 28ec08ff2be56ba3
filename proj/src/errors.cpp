#include "kconj/errors.hpp"

namespace kconj {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " +
            message),
      message_(message),
      position_(position) {}

}  // namespace kconj
