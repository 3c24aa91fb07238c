// pprof decoding. Only the fields needed to rebuild stacks are read; the
// remaining Profile fields (mappings, labels, periods, comments) are skipped.

#include <zlib.h>

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <unordered_map>

#include "profsum/error.h"
#include "profsum/ingest.h"

namespace profsum {

namespace {

enum WireType : uint32_t {
  kVarint = 0,
  kFixed64 = 1,
  kLengthDelimited = 2,
  kFixed32 = 5,
};

// Cursor over one protobuf message. |base| is the absolute offset of |data|
// within the decompressed buffer, so errors point at the original bytes.
class WireReader {
 public:
  WireReader(std::span<const uint8_t> data, size_t base)
      : data_(data), base_(base) {}

  bool done() const { return pos_ >= data_.size(); }
  size_t offset() const { return base_ + pos_; }

  uint64_t varint() {
    uint64_t result = 0;
    size_t start = offset();
    for (int shift = 0; shift < 64; shift += 7) {
      if (done()) throw Error::DecodeError(start, "truncated varint");
      uint8_t b = data_[pos_++];
      result |= uint64_t(b & 0x7f) << shift;
      if (!(b & 0x80)) return result;
    }
    throw Error::DecodeError(start, "varint longer than 10 bytes");
  }

  // Returns (field number, wire type).
  std::pair<uint32_t, uint32_t> tag() {
    size_t start = offset();
    uint64_t t = varint();
    uint32_t field = static_cast<uint32_t>(t >> 3);
    if (field == 0) throw Error::DecodeError(start, "field number 0");
    return {field, static_cast<uint32_t>(t & 7)};
  }

  WireReader sub() {
    size_t start = offset();
    uint64_t len = varint();
    if (len > data_.size() - pos_)
      throw Error::DecodeError(start, "length exceeds message bounds");
    WireReader r(data_.subspan(pos_, len), base_ + pos_);
    pos_ += len;
    return r;
  }

  std::string_view bytes() {
    WireReader r = sub();
    return {reinterpret_cast<const char*>(r.data_.data()), r.data_.size()};
  }

  void skip(uint32_t wire) {
    size_t start = offset();
    switch (wire) {
      case kVarint: varint(); return;
      case kLengthDelimited: sub(); return;
      case kFixed64: advance(8, start); return;
      case kFixed32: advance(4, start); return;
      default: throw Error::DecodeError(start, "unsupported wire type");
    }
  }

  // Appends one or many (packed) varints for a repeated scalar field.
  void repeated_varint(uint32_t wire, std::vector<uint64_t>& out) {
    if (wire == kVarint) {
      out.push_back(varint());
    } else if (wire == kLengthDelimited) {
      WireReader packed = sub();
      while (!packed.done()) out.push_back(packed.varint());
    } else {
      throw Error::DecodeError(offset(), "bad wire type for repeated varint");
    }
  }

  uint64_t expect_varint(uint32_t wire) {
    if (wire != kVarint)
      throw Error::DecodeError(offset(), "expected varint field");
    return varint();
  }

  WireReader expect_sub(uint32_t wire) {
    if (wire != kLengthDelimited)
      throw Error::DecodeError(offset(), "expected length-delimited field");
    return sub();
  }

 private:
  void advance(size_t n, size_t start) {
    if (n > data_.size() - pos_) throw Error::DecodeError(start, "truncated");
    pos_ += n;
  }

  std::span<const uint8_t> data_;
  size_t base_;
  size_t pos_ = 0;
};

struct RawValueType {
  uint64_t type = 0, unit = 0;
};
struct RawSample {
  std::vector<uint64_t> location_ids;
  std::vector<uint64_t> values;
  size_t offset = 0;
};
struct RawLine {
  uint64_t function_id = 0;
  int64_t line = 0;
};
struct RawLocation {
  uint64_t address = 0;
  std::vector<RawLine> lines;
};
struct RawFunction {
  uint64_t name = 0, filename = 0;
  int64_t start_line = 0;
};

std::vector<uint8_t> gunzip(std::span<const uint8_t> in) {
  z_stream zs{};
  if (inflateInit2(&zs, 15 + 16) != Z_OK)
    throw Error(ErrorKind::kDecodeError, "inflateInit2 failed");
  std::vector<uint8_t> out;
  zs.next_in = const_cast<Bytef*>(in.data());
  zs.avail_in = static_cast<uInt>(in.size());
  uint8_t chunk[1 << 15];
  int rc;
  do {
    zs.next_out = chunk;
    zs.avail_out = sizeof(chunk);
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      size_t at = zs.total_in;
      inflateEnd(&zs);
      throw Error::DecodeError(at, "corrupt gzip stream");
    }
    out.insert(out.end(), chunk, chunk + (sizeof(chunk) - zs.avail_out));
    if (rc != Z_STREAM_END && zs.avail_in == 0) {
      size_t at = zs.total_in;
      inflateEnd(&zs);
      throw Error::DecodeError(at, "truncated gzip stream");
    }
  } while (rc != Z_STREAM_END);
  inflateEnd(&zs);
  return out;
}

bool is_other_compression(std::span<const uint8_t> b) {
  auto starts = [&](std::initializer_list<uint8_t> magic) {
    if (b.size() < magic.size()) return false;
    size_t i = 0;
    for (uint8_t m : magic)
      if (b[i++] != m) return false;
    return true;
  };
  if (starts({0x28, 0xb5, 0x2f, 0xfd})) return true;              // zstd
  if (starts({'B', 'Z', 'h'})) return true;                       // bzip2
  if (starts({0xfd, '7', 'z', 'X', 'Z', 0x00})) return true;      // xz
  if (starts({0x04, 0x22, 0x4d, 0x18})) return true;              // lz4
  // zlib: CMF 0x78 with a valid FCHECK. Field 15 does not exist in Profile.
  if (b.size() >= 2 && b[0] == 0x78 && ((b[0] << 8) | b[1]) % 31 == 0)
    return true;
  return false;
}

std::string hex_address(uint64_t address) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "0x%" PRIx64, address);
  return buf;
}

IngestResult decode(std::span<const uint8_t> msg) {
  std::vector<RawValueType> sample_types;
  std::vector<RawSample> samples;
  std::unordered_map<uint64_t, RawLocation> locations;
  std::unordered_map<uint64_t, RawFunction> functions;
  std::vector<std::string_view> strings;
  size_t string_table_offset = 0;

  WireReader top(msg, 0);
  while (!top.done()) {
    size_t field_offset = top.offset();
    auto [field, wire] = top.tag();
    switch (field) {
      case 1: {  // sample_type
        WireReader r = top.expect_sub(wire);
        RawValueType vt;
        while (!r.done()) {
          auto [f, w] = r.tag();
          if (f == 1) vt.type = r.expect_varint(w);
          else if (f == 2) vt.unit = r.expect_varint(w);
          else r.skip(w);
        }
        sample_types.push_back(vt);
        break;
      }
      case 2: {  // sample
        WireReader r = top.expect_sub(wire);
        RawSample s;
        s.offset = field_offset;
        while (!r.done()) {
          auto [f, w] = r.tag();
          if (f == 1) {
            r.repeated_varint(w, s.location_ids);
          } else if (f == 2) {
            r.repeated_varint(w, s.values);
          } else {
            r.skip(w);
          }
        }
        samples.push_back(std::move(s));
        break;
      }
      case 4: {  // location
        WireReader r = top.expect_sub(wire);
        uint64_t id = 0;
        RawLocation loc;
        while (!r.done()) {
          auto [f, w] = r.tag();
          if (f == 1) {
            id = r.expect_varint(w);
          } else if (f == 3) {
            loc.address = r.expect_varint(w);
          } else if (f == 4) {
            WireReader lr = r.expect_sub(w);
            RawLine line;
            while (!lr.done()) {
              auto [lf, lw] = lr.tag();
              if (lf == 1) line.function_id = lr.expect_varint(lw);
              else if (lf == 2)
                line.line = static_cast<int64_t>(lr.expect_varint(lw));
              else lr.skip(lw);
            }
            loc.lines.push_back(line);
          } else {
            r.skip(w);
          }
        }
        if (id == 0) throw Error::DecodeError(field_offset, "location id 0");
        locations[id] = std::move(loc);
        break;
      }
      case 5: {  // function
        WireReader r = top.expect_sub(wire);
        uint64_t id = 0;
        RawFunction fn;
        while (!r.done()) {
          auto [f, w] = r.tag();
          if (f == 1) id = r.expect_varint(w);
          else if (f == 2) fn.name = r.expect_varint(w);
          else if (f == 4) fn.filename = r.expect_varint(w);
          else if (f == 5)
            fn.start_line = static_cast<int64_t>(r.expect_varint(w));
          else r.skip(w);
        }
        if (id == 0) throw Error::DecodeError(field_offset, "function id 0");
        functions[id] = fn;
        break;
      }
      case 6:  // string_table
        if (strings.empty()) string_table_offset = field_offset;
        if (wire != kLengthDelimited)
          throw Error::DecodeError(field_offset, "string_table entry type");
        strings.push_back(top.bytes());
        break;
      default:
        top.skip(wire);
    }
  }

  if (samples.empty())
    throw Error(ErrorKind::kEmptyInput, "pprof profile has no samples");
  if (strings.empty() || !strings[0].empty())
    throw Error::DecodeError(string_table_offset,
                             "string_table[0] must be the empty string");
  if (sample_types.empty())
    throw Error(ErrorKind::kDecodeError, "samples present but no sample_type");

  auto str = [&](uint64_t idx) -> std::string_view {
    if (idx >= strings.size())
      throw Error::DanglingReference(idx, "string");
    return strings[idx];
  };

  std::vector<MetricDescriptor> descriptors;
  for (const auto& vt : sample_types)
    descriptors.push_back({std::string(str(vt.type)), std::string(str(vt.unit))});

  IngestReport report;
  report.format = ProfileFormat::kPprof;
  std::vector<Sample> out;
  out.reserve(samples.size());
  for (const RawSample& rs : samples) {
    if (rs.values.size() != descriptors.size())
      throw Error::DecodeError(rs.offset, "sample value count mismatch");
    if (rs.location_ids.empty())
      throw Error::DecodeError(rs.offset, "sample without locations");
    Sample s;
    bool positive = false;
    for (uint64_t v : rs.values) {
      if (static_cast<int64_t>(v) < 0)
        throw Error::DecodeError(rs.offset, "negative sample value");
      positive |= v > 0;
      s.values.push_back(v);
    }
    if (!positive) throw Error::DecodeError(rs.offset, "zero-weight sample");
    // Leaf-first in the message; inline lines within a location are also
    // leaf-first. Reversed once at the end.
    for (uint64_t loc_id : rs.location_ids) {
      auto it = locations.find(loc_id);
      if (it == locations.end())
        throw Error::DanglingReference(loc_id, "location");
      const RawLocation& loc = it->second;
      if (loc.lines.empty()) {
        s.stack.emplace_back(hex_address(loc.address));
        continue;
      }
      for (const RawLine& line : loc.lines) {
        if (line.function_id == 0) {
          s.stack.emplace_back(hex_address(loc.address));
          continue;
        }
        auto fit = functions.find(line.function_id);
        if (fit == functions.end())
          throw Error::DanglingReference(line.function_id, "function");
        const RawFunction& fn = fit->second;
        std::string name(str(fn.name));
        if (name.empty()) name = hex_address(loc.address);
        std::optional<std::string> file;
        if (std::string_view f = str(fn.filename); !f.empty()) file = f;
        int64_t ln = line.line > 0 ? line.line : fn.start_line;
        std::optional<uint32_t> lineno;
        if (ln > 0 && ln <= INT64_C(0xffffffff)) lineno = uint32_t(ln);
        s.stack.emplace_back(std::move(name), std::move(file), lineno);
      }
    }
    std::reverse(s.stack.begin(), s.stack.end());
    for (const auto& f : s.stack)
      (f.file ? report.frames_resolved : report.frames_unresolved)++;
    out.push_back(std::move(s));
  }
  report.samples_read = out.size();
  size_t default_metric = descriptors.size() - 1;
  try {
    Profile raw(std::move(descriptors), std::move(out), default_metric);
    return {canonicalize(raw), report};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kInvalidProfile) throw;
    throw Error(ErrorKind::kDecodeError, e.detail());
  }
}

}  // namespace

IngestResult parse_pprof(std::span<const uint8_t> bytes) {
  if (bytes.size() >= 2 && bytes[0] == 0x1f && bytes[1] == 0x8b) {
    std::vector<uint8_t> raw = gunzip(bytes);
    return decode(raw);
  }
  if (is_other_compression(bytes))
    throw Error(ErrorKind::kUnsupportedCompression,
                "only gzip-compressed pprof is supported");
  return decode(bytes);
}

}  // namespace profsum
