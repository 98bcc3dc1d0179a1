#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace semg {

// Label alphabet: 0 = rest, 1..17 = movements, kAmbiguous marks samples
// discarded by relabeling. Encoded as -1 in the CSV format.
constexpr int kAmbiguous = -1;
constexpr int kRestLabel = 0;
constexpr int kMaxLabel = 17;

// One raw sensor stream before synchronization. Timestamps may be irregular
// but must be strictly increasing.
struct RawStream {
  std::vector<double> timestamps;
  std::vector<double> values;
  std::string stream_id;
};

// Sidecar metadata for one acquisition file.
struct AcquisitionMeta {
  int acquisition = 0;
  int day = 0;
  std::string slot = "0900";  // "0900" | "1200" | "1400"
  std::string config_hash;    // provenance, optional
  uint64_t seed = 0;          // provenance, optional
};

// Uniformly sampled multichannel recording with per-sample labels.
// Samples are stored row-major: sample t, channel c at samples[t * channels + c].
struct Recording {
  std::vector<double> samples;
  std::vector<double> timestamps;
  std::vector<int> labels;
  double sample_rate = 0.0;
  int channel_count = 0;
  int acquisition_id = 0;

  size_t sample_count() const { return timestamps.size(); }

  double at(size_t t, int c) const {
    return samples[t * static_cast<size_t>(channel_count) + static_cast<size_t>(c)];
  }
  double& at(size_t t, int c) {
    return samples[t * static_cast<size_t>(channel_count) + static_cast<size_t>(c)];
  }
  std::span<const double> row(size_t t) const {
    return {samples.data() + t * static_cast<size_t>(channel_count),
            static_cast<size_t>(channel_count)};
  }
};

// Resamples all streams by linear interpolation onto a uniform grid at
// target_rate over the common time span. The label stream is categorical and
// uses the nearest preceding value instead of interpolation.
Recording resample_synchronize(const std::vector<RawStream>& streams,
                               const RawStream& labels_stream, double target_rate);

// Keeps only the center third of every maximal run of identical labels
// (rest included); flank samples become kAmbiguous. A run of length L keeps
// indices [floor(L/3), L - floor(L/3)).
std::vector<int> relabel_center_thirds(const std::vector<int>& labels);

struct LoadedRecording {
  Recording rec;
  AcquisitionMeta meta;
};

// CSV schema: header "t,ch1..chC,label", one row per sample, kAmbiguous
// encoded as -1. Metadata lives in a sidecar JSON next to the CSV
// (same stem, .json extension).
void save_recording(const Recording& rec, const AcquisitionMeta& meta,
                    const std::string& csv_path);
LoadedRecording load_recording(const std::string& csv_path);

std::string sidecar_path(const std::string& csv_path);

}  // namespace semg
