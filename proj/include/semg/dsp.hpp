#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "semg/recording.hpp"

namespace semg {

// Second-order IIR section, a[0] normalized to 1.
struct IirCoefficients {
  std::array<double, 3> b{};
  std::array<double, 3> a{};
  double design_cutoff = 0.0;
  double design_rate = 0.0;
};

// Second-order Butterworth low-pass via bilinear transform with frequency
// prewarping, so |H| at the cutoff is exactly 1/sqrt(2).
IirCoefficients design_butter2_lowpass(double cutoff_hz, double rate_hz);

// Single-pass magnitude response |H(e^{j 2 pi f / fs})|.
double magnitude_response(const IirCoefficients& c, double freq_hz);

// Forward-backward zero-phase filtering. Edges use odd-reflection padding of
// 6 samples and steady-state initial conditions, so a constant input maps to
// itself from sample 0.
std::vector<double> filtfilt(const IirCoefficients& c, const std::vector<double>& x);

// filtfilt applied to every channel of a recording; channels run in parallel.
void filtfilt_recording(const IirCoefficients& c, Recording& rec);

// A window into a recording: `width` consecutive samples starting at
// start_index, all sharing `label`.
struct LabeledWindow {
  size_t start_index = 0;
  int label = 0;
};

// Windows referencing a source recording. All windows share the same width.
struct WindowSet {
  const Recording* source = nullptr;
  int width = 0;
  std::vector<LabeledWindow> windows;
};

// Emits a window every step_ms when all samples in it carry the same
// non-ambiguous label. Returns an empty set when the recording is shorter
// than one window.
WindowSet segment_windows(const Recording& rec, int window_ms, int step_ms);

}  // namespace semg
