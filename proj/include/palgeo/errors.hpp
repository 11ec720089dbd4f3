#pragma once

#include <stdexcept>
#include <string>

namespace palgeo {

// Base class for every error the library raises.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateInput : Error { using Error::Error; };
struct EmptyErosion : Error { using Error::Error; };
struct NotATriangle : Error { using Error::Error; };
struct NotThreeContact : Error { using Error::Error; };
struct InvalidWidth : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

}  // namespace palgeo
