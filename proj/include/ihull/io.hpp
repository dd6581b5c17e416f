#pragma once

#include <string>

#include "ihull/semigroup.hpp"

namespace ihull {

enum class InputKind { Table, Language, Markov, Monoid, Fixture };

struct InputDocument {
  InputKind kind = InputKind::Table;
  std::string origin;  // file path, "<text>" or "fixture:NAME"
  Semigroup semigroup;
};

const char* input_kind_name(InputKind kind);

// Line-oriented formats, '#' starts a comment. The first line is the header:
//
//   semigroup:            language:           markov:           monoid:
//   elements: 0 e s       alphabet: a b       alphabet: x y     elements: 1 g
//   table:                words: a b aa ba    matrix:           table:
//   0 0 0                 mode: close         1 1               1 g
//   0 e 0                                     1 0               g 1
//   0 s 0                                     maxlen: 3
//
// Errors carry "origin:line: ".
InputDocument parse_input_text(const std::string& text, const std::string& origin = "<text>");
InputDocument parse_input_file(const std::string& path);
// "fixture:NAME" loads a built-in fixture, anything else is a path.
InputDocument load_input(const std::string& spec);

}  // namespace ihull
