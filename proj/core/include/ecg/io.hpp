#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ecg/colored_graph.hpp"

namespace ecg::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/**
 * "ecg v1" text form:
 *
 *   ecg <n> <edge_count>
 *   <u> <v> <color>
 *   ...
 *
 * one edge per line with u < v, lines sorted lexicographically by (u, v),
 * ASCII decimal fields separated by single spaces, trailing newline. The
 * writer refuses graphs with deleted vertices (the format has no way to say
 * which indices are dead); serialize before peeling, not after.
 *
 * parse/serialize round-trip byte-exactly: the parser accepts exactly the
 * writer's form and reports the first offending line on anything else.
 */
std::string to_ecg_text(const ColoredGraph& g);
ColoredGraph from_ecg_text(std::string_view text);

/** Same data as a JSON object {"schema":1,"n":...,"edges":[[u,v,color],...]}. */
std::string to_json_text(const ColoredGraph& g, int indent = -1);
ColoredGraph from_json_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

}  // namespace ecg::io
