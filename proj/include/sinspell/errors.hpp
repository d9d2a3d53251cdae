#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sinspell {

// Invalid UTF-8 in an input buffer. `offset` is the byte position of the
// first offending byte.
class DecodeError : public std::runtime_error {
public:
  DecodeError(std::size_t offset, const std::string& what)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// Malformed line in a data file (.aff, .dic, .lexc, rule/confusion TSVs).
// `line` is 1-based; 0 means the error is not tied to a single line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// A word that cannot be split into grapheme clusters (e.g. it starts with a
// combining mark). `position` is the codepoint index of the offender.
class SegmentError : public std::runtime_error {
public:
  SegmentError(std::size_t position, const std::string& what)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// expand_all() hit its size limit before exhausting the dictionary.
class ExpandLimitError : public std::runtime_error {
public:
  ExpandLimitError(std::size_t limit, std::size_t generated)
      : std::runtime_error("expansion exceeds limit of " +
                           std::to_string(limit) + " words"),
        limit_(limit), generated_(generated) {}
  std::size_t limit() const { return limit_; }
  std::size_t generated() const { return generated_; }

private:
  std::size_t limit_;
  std::size_t generated_;
};

// Document pair that cannot be sentence-aligned (empty side, or sentence
// counts outside the representable bead ratio).
class AlignError : public std::runtime_error {
public:
  explicit AlignError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sinspell
