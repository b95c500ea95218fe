#include "coordgame/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "coordgame/error.hpp"

namespace coordgame {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
  std::string rest;  // text after the keyword, trimmed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string body = trim(raw);
    if (body.empty()) continue;
    Line line{number, {}, {}};
    std::istringstream in(body);
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    auto sp = body.find_first_of(" \t");
    line.rest = sp == std::string::npos ? "" : trim(std::string_view(body).substr(sp));
    out.push_back(std::move(line));
  }
  return out;
}

std::int64_t parse_label(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer node label, got '" + tok + "'");
  }
  return v;
}

void check_header(const std::vector<Line>& lines, bool required) {
  if (lines.empty() || lines.front().tokens.front() != "coordgame") {
    if (required) {
      throw ParseError(lines.empty() ? 0 : lines.front().number,
                       "expected header 'coordgame 1'");
    }
    return;
  }
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[1] != "1") {
    throw ParseError(h.number, "unsupported format version (expected 'coordgame 1')");
  }
}

struct ProfileLine {
  int line;
  std::int64_t label;
  std::string color;
};

JointStrategy build_profile(const Instance& inst, const std::vector<ProfileLine>& rows) {
  const int n = inst.game.node_count();
  std::vector<ColorId> colors(n, -1);
  for (const auto& r : rows) {
    auto it = std::lower_bound(inst.labels.begin(), inst.labels.end(), r.label);
    if (it == inst.labels.end() || *it != r.label) {
      throw ParseError(r.line, "profile names unknown node " + std::to_string(r.label));
    }
    const NodeId v = static_cast<NodeId>(it - inst.labels.begin());
    if (colors[v] != -1) {
      throw ParseError(r.line, "node " + std::to_string(r.label) + " already has a profile color");
    }
    const Palette& pal = inst.game.palette();
    if (!pal.contains(r.color) || !inst.game.assignment().allows(v, pal.id(r.color))) {
      throw ParseError(r.line, "infeasible profile: color '" + r.color +
                                   "' is not in the color set of node " +
                                   std::to_string(r.label));
    }
    colors[v] = pal.id(r.color);
  }
  for (NodeId v = 0; v < n; ++v) {
    if (colors[v] == -1) {
      throw ParseError(rows.empty() ? 0 : rows.front().line,
                       "profile misses node " + std::to_string(inst.labels[v]));
    }
  }
  return JointStrategy(inst.game, std::move(colors));
}

ProfileLine parse_profile_line(const Line& l) {
  if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'profile <node> <color>'");
  return {l.number, parse_label(l.tokens[1], l.number), l.tokens[2]};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  check_header(lines, true);

  std::string name, provenance;
  std::map<std::int64_t, std::pair<int, std::vector<std::string>>> nodes;
  std::vector<std::pair<int, std::pair<std::int64_t, std::int64_t>>> edges;
  std::vector<ProfileLine> profile;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const std::string& kw = l.tokens.front();
    if (kw == "name") {
      name = l.rest;
    } else if (kw == "provenance") {
      provenance = l.rest;
    } else if (kw == "node") {
      if (l.tokens.size() < 2) throw ParseError(l.number, "expected 'node <label> <color>...'");
      const std::int64_t label = parse_label(l.tokens[1], l.number);
      if (l.tokens.size() == 2) {
        throw ParseError(l.number, "empty color set for node " + l.tokens[1]);
      }
      std::vector<std::string> colors(l.tokens.begin() + 2, l.tokens.end());
      std::set<std::string> seen;
      for (const auto& c : colors) {
        if (!seen.insert(c).second) {
          throw ParseError(l.number, "color '" + c + "' repeated for node " + l.tokens[1]);
        }
      }
      if (!nodes.emplace(label, std::make_pair(l.number, std::move(colors))).second) {
        throw ParseError(l.number, "duplicate node " + l.tokens[1]);
      }
    } else if (kw == "edge") {
      if (l.tokens.size() != 3) throw ParseError(l.number, "expected 'edge <label> <label>'");
      edges.push_back({l.number,
                       {parse_label(l.tokens[1], l.number), parse_label(l.tokens[2], l.number)}});
    } else if (kw == "profile") {
      profile.push_back(parse_profile_line(l));
    } else if (kw == "coordgame") {
      throw ParseError(l.number, "header repeated");
    } else {
      throw ParseError(l.number, "unknown statement '" + kw + "'");
    }
  }
  if (nodes.empty()) throw ParseError(0, "instance has no nodes");

  std::vector<std::int64_t> labels;
  std::vector<std::vector<std::string>> sets;
  for (auto& [label, entry] : nodes) {
    labels.push_back(label);
    sets.push_back(entry.second);
  }
  std::set<std::pair<std::int64_t, std::int64_t>> seen_edges;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& [line, e] : edges) {
    auto [a, b] = e;
    for (std::int64_t x : {a, b}) {
      if (!nodes.count(x)) throw ParseError(line, "edge names unknown node " + std::to_string(x));
    }
    if (a == b) throw ParseError(line, "self-loop at node " + std::to_string(a));
    if (!seen_edges.insert(std::minmax(a, b)).second) {
      throw ParseError(line, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    pairs.emplace_back(a, b);
  }
  Instance inst = make_instance(std::move(labels), sets, pairs, name, provenance);
  if (!profile.empty()) inst.profile = build_profile(inst, profile);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  const auto& g = inst.game.graph();
  const auto& a = inst.game.assignment();
  std::ostringstream out;
  out << "coordgame 1\n";
  if (!inst.name.empty()) out << "name " << inst.name << "\n";
  if (!inst.provenance.empty()) out << "provenance " << inst.provenance << "\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    out << "node " << inst.labels[v];
    for (ColorId c : a.colors_of(v)) out << " " << inst.game.palette().name(c);
    out << "\n";
  }
  std::vector<std::pair<std::int64_t, std::int64_t>> es;
  for (const Edge& e : g.edges()) es.emplace_back(inst.labels[e.u], inst.labels[e.v]);
  std::sort(es.begin(), es.end());
  for (auto [u, v] : es) out << "edge " << u << " " << v << "\n";
  if (inst.profile) out << serialize_profile(inst, *inst.profile);
  return out.str();
}

JointStrategy parse_profile(const Instance& inst, std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  check_header(lines, false);
  std::vector<ProfileLine> rows;
  for (const Line& l : lines) {
    const std::string& kw = l.tokens.front();
    if (kw == "coordgame" && &l == &lines.front()) continue;
    if (kw != "profile") throw ParseError(l.number, "expected 'profile <node> <color>'");
    rows.push_back(parse_profile_line(l));
  }
  if (rows.empty()) throw ParseError(0, "no profile lines");
  return build_profile(inst, rows);
}

std::string serialize_profile(const Instance& inst, const JointStrategy& s) {
  std::ostringstream out;
  for (NodeId v = 0; v < s.size(); ++v) {
    out << "profile " << inst.labels[v] << " " << inst.game.palette().name(s[v]) << "\n";
  }
  return out.str();
}

Instance load_instance(const std::string& name_or_path) {
  if (auto inst = builtin_instance(name_or_path)) return std::move(*inst);
  Instance inst = parse_instance(read_file(name_or_path));
  if (inst.name.empty()) inst.name = name_or_path;
  return inst;
}

JointStrategy load_profile(const Instance& inst, const std::string& path) {
  return parse_profile(inst, read_file(path));
}

std::string format_witness(const Instance& inst, const DeviationReport& d) {
  const Palette& pal = inst.game.palette();
  const bool single = std::all_of(d.new_colors.begin(), d.new_colors.end(),
                                  [&](ColorId c) { return c == d.new_colors.front(); });
  std::string out = "{";
  for (int i = 0; i < d.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(inst.labels[d.coalition[i]]);
    if (!single) out += "->" + pal.name(d.new_colors[i]);
  }
  out += "}";
  if (single && !d.new_colors.empty()) out += "->" + pal.name(d.new_colors.front());
  return out;
}

std::string format_profile(const Instance& inst, const JointStrategy& s) {
  std::string out = "(";
  for (NodeId v = 0; v < s.size(); ++v) {
    if (v) out += ",";
    out += inst.game.palette().name(s[v]);
  }
  return out + ")";
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "csv") return ReportFormat::csv;
  if (name == "json-lines") return ReportFormat::json_lines;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

ReportWriter::ReportWriter(std::ostream& out, ReportFormat format)
    : out_(&out), format_(format) {}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed_ms(double ms) {
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(3);
  ss << ms;
  return ss.str();
}

}  // namespace

void ReportWriter::write(const ReportRecord& r) {
  std::ostream& out = *out_;
  const std::string k = r.k ? std::to_string(*r.k) : "";
  switch (format_) {
    case ReportFormat::text:
      out << r.instance << " " << r.property;
      if (r.k) out << " k=" << *r.k;
      out << ": " << r.value;
      if (!r.witness.empty()) out << "  witness " << r.witness;
      out << "  [" << fixed_ms(r.runtime_ms) << " ms]\n";
      break;
    case ReportFormat::csv:
      if (!header_written_) {
        out << "instance,n,m_colors,k,property,value,witness,runtime_ms\n";
        header_written_ = true;
      }
      out << csv_field(r.instance) << "," << r.n << "," << r.m_colors << "," << k << ","
          << csv_field(r.property) << "," << csv_field(r.value) << ","
          << csv_field(r.witness) << "," << fixed_ms(r.runtime_ms) << "\n";
      break;
    case ReportFormat::json_lines: {
      nlohmann::ordered_json j;
      j["instance"] = r.instance;
      j["n"] = r.n;
      j["m_colors"] = r.m_colors;
      j["k"] = r.k ? nlohmann::ordered_json(*r.k) : nlohmann::ordered_json(nullptr);
      j["property"] = r.property;
      j["value"] = r.value;
      j["witness"] = r.witness;
      j["runtime_ms"] = r.runtime_ms;
      out << j.dump() << "\n";
      break;
    }
  }
  out.flush();
}

}  // namespace coordgame
