#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "coordgame/deviation.hpp"
#include "coordgame/instances.hpp"

namespace coordgame {

// Instance text format, version 1. One statement per line, '#' starts a
// comment, blank lines are ignored:
//
//   coordgame 1                 header, first statement
//   name <text>                 optional
//   provenance <text>           optional
//   node <label> <color>...     label: integer, colors: non-empty tokens
//   edge <label> <label>
//   profile <label> <color>     optional; all nodes or none
//
// Errors throw ParseError carrying the line number.
Instance parse_instance(std::string_view text);

// Canonical form: nodes by label, colors by name, edges sorted.
std::string serialize_instance(const Instance& inst);

// Profile text: optional "coordgame 1" header, then "profile" lines covering
// every node.
JointStrategy parse_profile(const Instance& inst, std::string_view text);
std::string serialize_profile(const Instance& inst, const JointStrategy& s);

// Built-in names are resolved before the file system.
Instance load_instance(const std::string& name_or_path);
JointStrategy load_profile(const Instance& inst, const std::string& path);

// "{1,4,5,6,7}->c" for a single target color, "{1->a,2->b}" otherwise.
std::string format_witness(const Instance& inst, const DeviationReport& d);
// "(a,b,b,a)" in label order.
std::string format_profile(const Instance& inst, const JointStrategy& s);

enum class ReportFormat { text, csv, json_lines };

// "text", "csv", "json-lines".
ReportFormat parse_report_format(std::string_view name);

// One result line. Fixed CSV columns:
// instance,n,m_colors,k,property,value,witness,runtime_ms
struct ReportRecord {
  std::string instance;
  int n = 0;
  int m_colors = 0;
  std::optional<int> k;
  std::string property;
  std::string value;
  std::string witness;
  double runtime_ms = 0;
};

class ReportWriter {
 public:
  ReportWriter(std::ostream& out, ReportFormat format);

  void write(const ReportRecord& record);

 private:
  std::ostream* out_;
  ReportFormat format_;
  bool header_written_ = false;
};

}  // namespace coordgame
