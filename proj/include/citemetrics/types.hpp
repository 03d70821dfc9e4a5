#pragma once
// Shared identifiers, the time-slice view, and the error hierarchy.

#include <optional>
#include <stdexcept>
#include <string>

namespace citemetrics {

// Catalog identifier of a paper or an author. Opaque; compared as a string.
using Id = std::string;

// Restricts citation visibility to papers published at or before a cutoff
// year. A citing paper is visible in the slice iff its year <= cutoff_year.
struct TimeSlice {
    int cutoff_year;
};

using MaybeSlice = std::optional<TimeSlice>;

// Base class for everything this library throws.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. Message carries the 1-based line number.
class parse_error : public error {
  public:
    parse_error(const std::string& what, std::size_t line)
        : error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// A graph (or record) violating one of the documented invariants.
class validation_error : public error {
  public:
    using error::error;
};

// Unknown id or index key.
class lookup_error : public error {
  public:
    using error::error;
};

// Requested data is neither cached nor reachable.
class offline_error : public error {
  public:
    using error::error;
};

}  // namespace citemetrics
