// Copyright 2026 The Judge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace judge {

/// A document (lexicon, phrase table, context config, ...) could not be
/// loaded. `line()` is 1-based; 0 means the error is not tied to a line.
class LoadError : public std::runtime_error {
 public:
  LoadError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Text could not be parsed. `offset()` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error("offset " + std::to_string(offset) + ": " + what),
        message_(what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// A caller broke an operation's precondition (bad index, empty input where
/// one is required).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Configuration refers to something that does not exist (unknown ontology,
/// unknown context, bad language tag).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace judge
