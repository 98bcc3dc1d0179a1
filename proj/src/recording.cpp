#include "semg/recording.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "semg/errors.hpp"

namespace semg {

namespace {

void check_monotone(const RawStream& s) {
  if (s.timestamps.size() < 2)
    throw MalformedStream("stream '" + s.stream_id + "' has fewer than 2 samples");
  if (s.timestamps.size() != s.values.size())
    throw MalformedStream("stream '" + s.stream_id + "' timestamp/value length mismatch");
  for (size_t i = 1; i < s.timestamps.size(); ++i)
    if (!(s.timestamps[i] > s.timestamps[i - 1]))
      throw MalformedStream("stream '" + s.stream_id + "' timestamps not strictly increasing");
}

double lerp_at(const RawStream& s, double t, size_t& hint) {
  // hint is the index of the last knot <= t; queries arrive in increasing t.
  while (hint + 1 < s.timestamps.size() && s.timestamps[hint + 1] <= t) ++hint;
  if (s.timestamps[hint] == t || hint + 1 == s.timestamps.size()) return s.values[hint];
  const double t0 = s.timestamps[hint], t1 = s.timestamps[hint + 1];
  const double w = (t - t0) / (t1 - t0);
  return s.values[hint] + w * (s.values[hint + 1] - s.values[hint]);
}

// Shortest round-trip decimal representation of a double.
std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

Recording resample_synchronize(const std::vector<RawStream>& streams,
                               const RawStream& labels_stream, double target_rate) {
  if (streams.empty()) throw EmptyInput("resample_synchronize: no signal streams");
  if (target_rate <= 0) throw Error("resample_synchronize: target_rate must be positive");
  for (const auto& s : streams) check_monotone(s);
  check_monotone(labels_stream);

  double t_start = labels_stream.timestamps.front();
  double t_end = labels_stream.timestamps.back();
  for (const auto& s : streams) {
    t_start = std::max(t_start, s.timestamps.front());
    t_end = std::min(t_end, s.timestamps.back());
  }
  if (!(t_start <= t_end)) throw NoOverlap("resample_synchronize: streams share no time span");

  const size_t count = static_cast<size_t>(std::floor((t_end - t_start) * target_rate)) + 1;
  Recording rec;
  rec.channel_count = static_cast<int>(streams.size());
  rec.sample_rate = target_rate;
  rec.timestamps.resize(count);
  rec.labels.resize(count);
  rec.samples.resize(count * streams.size());

  for (size_t k = 0; k < count; ++k) rec.timestamps[k] = t_start + static_cast<double>(k) / target_rate;

  for (size_t c = 0; c < streams.size(); ++c) {
    size_t hint = 0;
    for (size_t k = 0; k < count; ++k)
      rec.samples[k * streams.size() + c] = lerp_at(streams[c], rec.timestamps[k], hint);
  }

  // Labels: nearest preceding knot. Labels are categorical, never interpolated.
  size_t hint = 0;
  for (size_t k = 0; k < count; ++k) {
    const double t = rec.timestamps[k];
    while (hint + 1 < labels_stream.timestamps.size() && labels_stream.timestamps[hint + 1] <= t)
      ++hint;
    rec.labels[k] = static_cast<int>(std::lround(labels_stream.values[hint]));
  }
  return rec;
}

std::vector<int> relabel_center_thirds(const std::vector<int>& labels) {
  std::vector<int> out(labels.size(), kAmbiguous);
  size_t i = 0;
  while (i < labels.size()) {
    size_t j = i;
    while (j < labels.size() && labels[j] == labels[i]) ++j;
    const size_t run_len = j - i;
    const size_t flank = run_len / 3;
    for (size_t k = i + flank; k < j - flank; ++k) out[k] = labels[i];
    i = j;
  }
  return out;
}

std::string sidecar_path(const std::string& csv_path) {
  std::filesystem::path p(csv_path);
  p.replace_extension(".json");
  return p.string();
}

void save_recording(const Recording& rec, const AcquisitionMeta& meta,
                    const std::string& csv_path) {
  std::ofstream out(csv_path);
  if (!out) throw Error("save_recording: cannot open " + csv_path);
  out << "t";
  for (int c = 1; c <= rec.channel_count; ++c) out << ",ch" << c;
  out << ",label\n";
  std::string line;
  for (size_t t = 0; t < rec.sample_count(); ++t) {
    line.clear();
    line += format_double(rec.timestamps[t]);
    for (int c = 0; c < rec.channel_count; ++c) {
      line += ',';
      line += format_double(rec.at(t, c));
    }
    line += ',';
    line += std::to_string(rec.labels[t]);
    line += '\n';
    out << line;
  }
  if (!out) throw Error("save_recording: write failed for " + csv_path);

  nlohmann::json j;
  j["acquisition"] = meta.acquisition;
  j["day"] = meta.day;
  j["slot"] = meta.slot;
  if (!meta.config_hash.empty()) {
    j["config_hash"] = meta.config_hash;
    j["seed"] = meta.seed;
  }
  std::ofstream side(sidecar_path(csv_path));
  if (!side) throw Error("save_recording: cannot open " + sidecar_path(csv_path));
  side << j.dump(2) << "\n";
}

namespace {

double parse_field_double(const std::string& field, size_t line_no) {
  double v = 0;
  auto res = std::from_chars(field.data(), field.data() + field.size(), v);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size())
    throw ParseError("bad numeric field '" + field + "'", line_no);
  return v;
}

}  // namespace

LoadedRecording load_recording(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw Error("load_recording: cannot open " + csv_path);

  std::string header;
  if (!std::getline(in, header)) throw ParseError("empty file", 1);
  // header: t,ch1..chC,label
  int channels = 0;
  {
    std::stringstream ss(header);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() < 3 || fields.front() != "t" || fields.back() != "label")
      throw ParseError("header must be t,ch1..chC,label", 1);
    channels = static_cast<int>(fields.size()) - 2;
    for (int c = 0; c < channels; ++c)
      if (fields[1 + c] != "ch" + std::to_string(c + 1))
        throw ParseError("unexpected channel column '" + fields[1 + c] + "'", 1);
  }

  Recording rec;
  rec.channel_count = channels;
  std::string line;
  size_t line_no = 1;
  std::vector<std::string> fields;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    fields.clear();
    size_t pos = 0;
    while (true) {
      size_t comma = line.find(',', pos);
      fields.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    if (fields.size() != static_cast<size_t>(channels) + 2)
      throw ParseError("expected " + std::to_string(channels + 2) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    const double t = parse_field_double(fields[0], line_no);
    if (!rec.timestamps.empty() && !(t > rec.timestamps.back()))
      throw ParseError("timestamps not strictly increasing", line_no);
    rec.timestamps.push_back(t);
    for (int c = 0; c < channels; ++c)
      rec.samples.push_back(parse_field_double(fields[1 + c], line_no));
    const double lf = parse_field_double(fields[channels + 1], line_no);
    const int label = static_cast<int>(std::lround(lf));
    if (label != lf || label < kAmbiguous || label > kMaxLabel)
      throw ParseError("label out of range: " + fields[channels + 1], line_no);
    rec.labels.push_back(label);
  }
  if (rec.timestamps.size() < 2) throw ParseError("recording needs at least 2 samples", line_no);
  rec.sample_rate =
      static_cast<double>(rec.timestamps.size() - 1) / (rec.timestamps.back() - rec.timestamps.front());

  LoadedRecording out;
  AcquisitionMeta meta;
  const std::string side = sidecar_path(csv_path);
  if (std::filesystem::exists(side)) {
    std::ifstream sin(side);
    nlohmann::json j = nlohmann::json::parse(sin, nullptr, true);
    meta.acquisition = j.value("acquisition", 0);
    meta.day = j.value("day", 0);
    meta.slot = j.value("slot", "0900");
    meta.config_hash = j.value("config_hash", "");
    meta.seed = j.value("seed", uint64_t{0});
  }
  rec.acquisition_id = meta.acquisition;
  out.rec = std::move(rec);
  out.meta = std::move(meta);
  return out;
}

}  // namespace semg
