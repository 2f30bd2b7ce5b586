#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcalab {

// Invalid parameters or an infeasible request (CLI exit code 2).
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// A random construction failed after exhausting its retry budget (CLI exit code 2).
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& what) : std::runtime_error(what) {}
};

// File or stream failure (CLI exit code 3).
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; line is 1-based (CLI exit code 3).
struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Exploration exceeded its vertex budget (CLI exit code 4).
struct BudgetError : std::runtime_error {
    std::uint64_t budget;
    explicit BudgetError(std::uint64_t budget_)
        : std::runtime_error("exploration budget of " + std::to_string(budget_) +
                             " vertices exceeded"),
          budget(budget_) {}
};

}  // namespace lcalab
