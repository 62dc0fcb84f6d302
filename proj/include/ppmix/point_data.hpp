#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ppmix/common.hpp"

namespace ppmix {

// Rectangular observation window in native units plus the affine map onto
// the open unit interval/square. Events must lie strictly inside.
struct ObservationWindow {
  int dims = 1;
  std::array<double, 2> lo{0.0, 0.0};
  std::array<double, 2> hi{1.0, 1.0};

  static ObservationWindow temporal(double lo, double hi);
  static ObservationWindow spatial(double lo1, double hi1, double lo2, double hi2);

  double to_unit(double v, int dim) const { return (v - lo[dim]) / (hi[dim] - lo[dim]); }
  double to_native(double u, int dim) const { return lo[dim] + u * (hi[dim] - lo[dim]); }
  double scale(int dim) const { return hi[dim] - lo[dim]; }
  double area() const;
  void validate() const;
};

enum class MarkKind { Categorical, Count, Continuous };
enum class ContinuousSupport { Real, Positive, ShiftedPositive };

struct MarkDescriptor {
  std::string name;
  MarkKind kind = MarkKind::Continuous;
  int levels = 0;                                           // categorical
  int bound = 0;                                            // count lower truncation
  ContinuousSupport support = ContinuousSupport::Real;      // continuous
  double offset = 0.0;                                      // shifted-positive
  void validate() const;
};

struct MarkSchema {
  std::vector<MarkDescriptor> marks;
  int size() const { return static_cast<int>(marks.size()); }
  int index_of(const std::string& name) const;  // -1 when absent
  void validate() const;
  // throws ValidationError naming the event when value is outside support
  void check_mark(int mark_idx, double value, int event_idx) const;
};

struct Event {
  std::array<double, 2> loc{0.0, 0.0};  // unit-window coordinates
  std::vector<double> marks;            // native mark values, schema order
};

struct MarkedPointPattern {
  ObservationWindow window;
  MarkSchema schema;
  std::vector<Event> events;

  int n() const { return static_cast<int>(events.size()); }
  void validate() const;
};

struct RawEvent {
  std::array<double, 2> loc{0.0, 0.0};  // native units
  std::vector<double> marks;
};

// Affine map of native locations onto the open unit window; marks untouched.
// Events on or outside the native boundary are rejected (the logit models
// need the open interval), naming the offending index.
MarkedPointPattern rescale_window(const std::vector<RawEvent>& raw,
                                  const ObservationWindow& native,
                                  const MarkSchema& schema);

// CSV with header: temporal `t[,marks...]`, spatial `x1,x2[,marks...]`.
// Window bounds come from the caller, never inferred from data.
MarkedPointPattern load_pattern(const std::string& path,
                                const ObservationWindow& native,
                                const MarkSchema& schema);

void save_pattern(const MarkedPointPattern& pat, const std::string& path);

// Stable order by (first coordinate, input index); returns event indices.
std::vector<int> sorted_event_order(const MarkedPointPattern& pat, int dim = 0);

}  // namespace ppmix
