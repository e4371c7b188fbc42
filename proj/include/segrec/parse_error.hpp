#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace segrec {

/// Malformed input text. `where` is a byte offset or a JSON path.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::string location)
        : std::runtime_error(msg + " at " + location), where(std::move(location)) {}
    std::string where;
};

}  // namespace segrec
