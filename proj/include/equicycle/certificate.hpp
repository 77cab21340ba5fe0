#pragma once

#include <stdexcept>
#include <string>

#include "equicycle/system.hpp"

namespace equicycle {

// Flat text certificates: header lines (ell=, v=, graph=, route=, seed=),
// optional named base-cycle lines, one colour line per vertex, one line per
// cycle.  Writing is canonical -- colour lines sorted by vertex, cycle lines
// as least traversals in sorted order -- so write(read(text)) == text for
// anything this module wrote, byte for byte.

struct ParseError : std::runtime_error {
  long line;
  ParseError(long line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " +
                           message),
        line(line_number) {}
};

std::string to_text(const CycleSystem& system);
CycleSystem from_text(const std::string& text);

// The same content as a JSON document (what --format structured prints).
std::string to_json(const CycleSystem& system);
CycleSystem from_json(const std::string& text);

}  // namespace equicycle
