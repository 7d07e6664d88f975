#pragma once

// Text formats.
//
// Puzzle file (ASCII, trailing newline required, no comments):
//   n q
//   n+1 lines of n integers   horizontal slots, top slot row first
//   n lines of n+1 integers   vertical slots
//
// Witness file: n lines of n entries "i,j:r" (original label and rotation),
// row-major, separated by single spaces.

#include <stdexcept>
#include <string>
#include <string_view>

#include "jigsaw/core.hpp"

namespace jigsaw {

/// Malformed input. line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

std::string write_puzzle(const GridColoring& gc);
GridColoring read_puzzle(std::string_view text);

std::string write_witness(const Assembly& a);
/// The side n is taken from the number of lines. Throws ParseError on bad
/// syntax and std::invalid_argument if the placement is not a bijection.
Assembly read_witness(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace jigsaw
