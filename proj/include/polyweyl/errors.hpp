#pragma once

#include <stdexcept>
#include <string>

namespace polyweyl {

// Violation of an operation's mathematical preconditions: negative lengths,
// degree-bound mismatches, region mismatches, unsupported state combinations.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON documents, rational literals).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polyweyl
