#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ihull/hull.hpp"
#include "ihull/io.hpp"
#include "ihull/spectrum.hpp"

namespace ihull {

using json = nlohmann::json;

struct Options {
  bool oracle = false;
  std::size_t max_hull = kDefaultHullCap;
  int max_cover = kDefaultMaxCover;
  std::string suite;        // verify selector
  int syllable_bound = 4;   // freeprod lcm verification
};

// Cells are strings, booleans, integers, null, or arrays of names.
struct Table {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Report {
  std::string command;
  std::string subject;
  std::vector<Table> tables;
  std::vector<std::string> notes;
  int status = 0;  // 0 ok, 2 verification failure
};

json report_to_json(const Report& r);
Report report_from_json(const json& j);
std::string render_json(const Report& r);
std::string render_text(const Report& r);

std::vector<std::string> command_names();  // everything except freeprod
Report run_command(const std::string& command, const InputDocument& doc, const Options& opts = {});

Report cmd_props(const InputDocument& doc, const Options& opts);
Report cmd_hull(const InputDocument& doc, const Options& opts);
Report cmd_constructible(const InputDocument& doc, const Options& opts);
Report cmd_strings(const InputDocument& doc, const Options& opts);
Report cmd_spectrum(const InputDocument& doc, const Options& opts);
Report cmd_census(const InputDocument& doc, const Options& opts);
Report cmd_verify(const InputDocument& doc, const Options& opts);
// Each expression is either a product like "a.M * b.N" or a query "x | y".
Report cmd_freeprod(const InputDocument& M, const InputDocument& N, const std::vector<std::string>& exprs,
                    const Options& opts);

}  // namespace ihull
