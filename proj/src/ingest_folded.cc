#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "profsum/error.h"
#include "profsum/ingest.h"

namespace profsum {

namespace {

struct RawLine {
  std::string_view text;
  size_t line_no;
};

bool parse_u64(std::string_view s, uint64_t& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_line_number(std::string_view s, std::optional<uint32_t>& out) {
  uint64_t v = 0;
  if (!parse_u64(s, v) || v > UINT32_MAX) return false;
  out = v == 0 ? std::nullopt : std::optional<uint32_t>(uint32_t(v));
  return true;
}

bool is_blank(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ';' || c == '(' || is_blank(c);
  });
}

struct Split {
  std::vector<RawLine> lines;
  MetricDescriptor metric{"samples", "count"};
};

Split split_lines(std::string_view text) {
  Split out;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line_no == 1 && line.starts_with("#metric")) {
        std::istringstream in{std::string(line.substr(7))};
        std::string name, unit, extra;
        if (!(in >> name >> unit) || (in >> extra) ||
            (line.size() > 7 && !is_blank(line[7])))
          throw Error::MalformedLine(line_no,
                                     "pragma must be `#metric <name> <unit>`");
        out.metric = {name, unit};
      }
      continue;
    }
    out.lines.push_back({line, line_no});
  }
  return out;
}

// Returns nullptr on success, otherwise a static description of the failure.
const char* parse_line(std::string_view line, Sample& out) {
  size_t sp = line.rfind(' ');
  if (sp == std::string_view::npos || sp == 0)
    return "expected `STACK COUNT`";
  uint64_t count = 0;
  if (!parse_u64(line.substr(sp + 1), count)) return "count is not a decimal";
  if (count == 0) return "count must be at least 1";
  std::string_view stack = line.substr(0, sp);
  out.stack.clear();
  size_t start = 0;
  while (true) {
    size_t semi = stack.find(';', start);
    std::string_view token = stack.substr(
        start, semi == std::string_view::npos ? std::string_view::npos
                                              : semi - start);
    auto frame = parse_folded_frame(token);
    if (!frame) return "malformed frame token";
    out.stack.push_back(std::move(*frame));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  out.values.assign(1, count);
  return nullptr;
}

IngestResult finish(Split split, std::vector<Sample> samples) {
  IngestReport report;
  report.format = ProfileFormat::kFolded;
  report.samples_read = samples.size();
  for (const auto& s : samples)
    for (const auto& f : s.stack)
      (f.file ? report.frames_resolved : report.frames_unresolved)++;
  if (samples.empty())
    throw Error(ErrorKind::kEmptyInput, "folded input has no samples");
  Profile raw({split.metric}, std::move(samples), 0);
  return {canonicalize(raw), report};
}

}  // namespace

std::optional<Frame> parse_folded_frame(std::string_view token) {
  if (token.empty()) return std::nullopt;
  size_t paren = token.find('(');
  if (paren != std::string_view::npos) {
    if (token.back() != ')') return std::nullopt;
    std::string_view name = token.substr(0, paren);
    std::string_view inner = token.substr(paren + 1, token.size() - paren - 2);
    size_t colon = inner.rfind(':');
    if (!valid_name(name) || colon == std::string_view::npos || colon == 0)
      return std::nullopt;
    std::string_view file = inner.substr(0, colon);
    if (std::any_of(file.begin(), file.end(), [](char c) {
          return c == ';' || c == '(' || c == ')' || is_blank(c);
        }))
      return std::nullopt;
    std::optional<uint32_t> line;
    if (!parse_line_number(inner.substr(colon + 1), line)) return std::nullopt;
    return Frame(std::string(name), std::string(file), line);
  }
  size_t mark = token.rfind(":L");
  if (mark != std::string_view::npos && mark > 0 && mark + 2 < token.size()) {
    std::optional<uint32_t> line;
    if (parse_line_number(token.substr(mark + 2), line)) {
      std::string_view name = token.substr(0, mark);
      if (!valid_name(name)) return std::nullopt;
      return Frame(std::string(name), std::nullopt, line);
    }
  }
  if (!valid_name(token)) return std::nullopt;
  return Frame(std::string(token));
}

std::string folded_frame_token(const Frame& frame) {
  std::string out = frame.function;
  if (frame.file) {
    out += '(';
    out += *frame.file;
    out += ':';
    out += std::to_string(frame.line.value_or(0));
    out += ')';
  } else if (frame.line) {
    out += ":L";
    out += std::to_string(*frame.line);
  }
  return out;
}

IngestResult parse_folded(std::string_view text) {
  Split split = split_lines(text);
  const auto& lines = split.lines;
  const long n = static_cast<long>(lines.size());
  std::vector<Sample> samples(lines.size());
  std::vector<const char*> failure(lines.size(), nullptr);

#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) failure[i] = parse_line(lines[i].text, samples[i]);

  for (size_t i = 0; i < lines.size(); ++i)
    if (failure[i]) throw Error::MalformedLine(lines[i].line_no, failure[i]);
  return finish(std::move(split), std::move(samples));
}

IngestResult parse_folded_serial(std::string_view text) {
  Split split = split_lines(text);
  std::vector<Sample> samples;
  samples.reserve(split.lines.size());
  for (const auto& line : split.lines) {
    Sample s;
    if (const char* why = parse_line(line.text, s))
      throw Error::MalformedLine(line.line_no, why);
    samples.push_back(std::move(s));
  }
  return finish(std::move(split), std::move(samples));
}

std::string export_folded(const Profile& profile, size_t metric) {
  Profile single = project(profile, metric);
  std::string out;
  const MetricDescriptor& d = single.descriptors()[0];
  if (!(d.name == "samples" && d.unit == "count"))
    out += "#metric " + d.name + " " + d.unit + "\n";
  for (const auto& s : single.samples()) {
    for (size_t i = 0; i < s.stack.size(); ++i) {
      if (i) out += ';';
      out += folded_frame_token(s.stack[i]);
    }
    out += ' ';
    out += std::to_string(s.values[0]);
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProfileFormat detect_format(std::span<const uint8_t> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 0x1f && bytes[1] == 0x8b)
    return ProfileFormat::kPprof;
  if (bytes.empty()) return ProfileFormat::kFolded;
  uint8_t tag = bytes[0];
  uint32_t field = tag >> 3;
  uint32_t wire = tag & 7;
  bool plausible_tag = field >= 1 && field <= 14 && (wire == 0 || wire == 2);
  if (!plausible_tag) return ProfileFormat::kFolded;
  // Folded text never contains C0 control bytes other than whitespace.
  bool binary = std::any_of(bytes.begin(), bytes.end(), [](uint8_t b) {
    return b < 0x09 || (b > 0x0d && b < 0x20);
  });
  return binary ? ProfileFormat::kPprof : ProfileFormat::kFolded;
}

IngestResult parse_any(std::span<const uint8_t> bytes, ProfileFormat format) {
  if (format == ProfileFormat::kAuto) format = detect_format(bytes);
  if (format == ProfileFormat::kPprof) return parse_pprof(bytes);
  return parse_folded(std::string_view(
      reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

IngestResult load_profile(const std::string& path, ProfileFormat format) {
  std::string data = read_file(path);
  return parse_any(std::span<const uint8_t>(
                       reinterpret_cast<const uint8_t*>(data.data()),
                       data.size()),
                   format);
}

}  // namespace profsum
