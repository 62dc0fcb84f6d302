#include "ppmix/point_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ppmix {

ObservationWindow ObservationWindow::temporal(double lo, double hi) {
  ObservationWindow w;
  w.dims = 1;
  w.lo = {lo, 0.0};
  w.hi = {hi, 1.0};
  w.validate();
  return w;
}

ObservationWindow ObservationWindow::spatial(double lo1, double hi1, double lo2, double hi2) {
  ObservationWindow w;
  w.dims = 2;
  w.lo = {lo1, lo2};
  w.hi = {hi1, hi2};
  w.validate();
  return w;
}

double ObservationWindow::area() const {
  double a = 1.0;
  for (int d = 0; d < dims; ++d) a *= scale(d);
  return a;
}

void ObservationWindow::validate() const {
  if (dims != 1 && dims != 2) throw ValidationError("window dims must be 1 or 2");
  for (int d = 0; d < dims; ++d) {
    if (!(lo[d] < hi[d]))
      throw ValidationError("window bounds must satisfy lo < hi in dimension " + std::to_string(d + 1));
  }
}

void MarkDescriptor::validate() const {
  if (name.empty()) throw ValidationError("mark descriptor needs a name");
  switch (kind) {
    case MarkKind::Categorical:
      if (levels < 2) throw ValidationError("categorical mark '" + name + "' needs at least 2 levels");
      break;
    case MarkKind::Count:
      if (bound < 0) throw ValidationError("count mark '" + name + "' truncation bound must be >= 0");
      break;
    case MarkKind::Continuous:
      break;
  }
}

void MarkSchema::validate() const {
  for (const auto& m : marks) m.validate();
  for (size_t i = 0; i < marks.size(); ++i)
    for (size_t j = i + 1; j < marks.size(); ++j)
      if (marks[i].name == marks[j].name)
        throw ValidationError("duplicate mark name '" + marks[i].name + "'");
}

int MarkSchema::index_of(const std::string& name) const {
  for (size_t i = 0; i < marks.size(); ++i)
    if (marks[i].name == name) return static_cast<int>(i);
  return -1;
}

void MarkSchema::check_mark(int mark_idx, double value, int event_idx) const {
  const auto& d = marks.at(mark_idx);
  const std::string where = "mark '" + d.name + "' at event " + std::to_string(event_idx);
  if (!std::isfinite(value)) throw ValidationError(where + " is not finite");
  switch (d.kind) {
    case MarkKind::Categorical: {
      double r = std::round(value);
      if (std::abs(value - r) > 1e-9 || r < 0 || r >= d.levels)
        throw ValidationError(where + " must be an integer level in [0," + std::to_string(d.levels - 1) + "]");
      break;
    }
    case MarkKind::Count: {
      double r = std::round(value);
      if (std::abs(value - r) > 1e-9) throw ValidationError(where + " must be an integer count");
      if (r < d.bound)
        throw ValidationError(where + " is below the truncation bound " + std::to_string(d.bound));
      break;
    }
    case MarkKind::Continuous:
      if (d.support == ContinuousSupport::Positive && value <= 0.0)
        throw ValidationError(where + " must be positive");
      if (d.support == ContinuousSupport::ShiftedPositive && value <= d.offset)
        throw ValidationError(where + " must exceed the offset " + std::to_string(d.offset));
      break;
  }
}

void MarkedPointPattern::validate() const {
  window.validate();
  schema.validate();
  for (int i = 0; i < n(); ++i) {
    const Event& e = events[i];
    for (int d = 0; d < window.dims; ++d)
      if (!(e.loc[d] > 0.0 && e.loc[d] < 1.0))
        throw ValidationError("event " + std::to_string(i) + " lies outside the open unit window");
    if (static_cast<int>(e.marks.size()) != schema.size())
      throw ValidationError("event " + std::to_string(i) + " has wrong mark count");
    for (int k = 0; k < schema.size(); ++k) schema.check_mark(k, e.marks[k], i);
  }
}

MarkedPointPattern rescale_window(const std::vector<RawEvent>& raw,
                                  const ObservationWindow& native,
                                  const MarkSchema& schema) {
  native.validate();
  schema.validate();
  MarkedPointPattern pat;
  pat.window = native;
  pat.schema = schema;
  pat.events.reserve(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    Event e;
    for (int d = 0; d < native.dims; ++d) {
      const double v = raw[i].loc[d];
      if (!(v > native.lo[d] && v < native.hi[d]))
        throw ValidationError("event " + std::to_string(i) + " lies on or outside the native window boundary in dimension " +
                              std::to_string(d + 1));
      e.loc[d] = native.to_unit(v, d);
      if (!(e.loc[d] > 0.0 && e.loc[d] < 1.0))
        throw ValidationError("event " + std::to_string(i) + " maps onto the unit-window boundary");
    }
    e.marks = raw[i].marks;
    pat.events.push_back(std::move(e));
  }
  pat.validate();
  return pat;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    s = (a == std::string::npos) ? "" : s.substr(a, b - a + 1);
  }
  return out;
}

}  // namespace

MarkedPointPattern load_pattern(const std::string& path,
                                const ObservationWindow& native,
                                const MarkSchema& schema) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open data file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw ValidationError("empty data file (no header): " + path);
  const auto header = split_csv_line(line);

  std::vector<std::string> expected;
  if (native.dims == 1)
    expected = {"t"};
  else
    expected = {"x1", "x2"};
  for (const auto& m : schema.marks) expected.push_back(m.name);

  if (header.size() != expected.size())
    throw ValidationError("header of " + path + " has " + std::to_string(header.size()) +
                          " columns, expected " + std::to_string(expected.size()));
  for (size_t i = 0; i < expected.size(); ++i)
    if (header[i] != expected[i])
      throw ValidationError("missing or misplaced column '" + expected[i] + "' in " + path +
                            " (found '" + header[i] + "')");

  std::vector<RawEvent> raw;
  int row = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != expected.size())
      throw ValidationError("row " + std::to_string(row) + " of " + path + " has wrong field count");
    RawEvent e;
    e.marks.resize(schema.size());
    for (size_t c = 0; c < cells.size(); ++c) {
      double v;
      try {
        size_t pos = 0;
        v = std::stod(cells[c], &pos);
        if (pos != cells[c].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ValidationError("cannot parse '" + cells[c] + "' (row " + std::to_string(row) +
                              ", column '" + expected[c] + "') in " + path);
      }
      if (c < static_cast<size_t>(native.dims))
        e.loc[c] = v;
      else
        e.marks[c - native.dims] = v;
    }
    raw.push_back(std::move(e));
    ++row;
  }
  return rescale_window(raw, native, schema);
}

void save_pattern(const MarkedPointPattern& pat, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open output file: " + path);
  out.precision(17);
  if (pat.window.dims == 1)
    out << "t";
  else
    out << "x1,x2";
  for (const auto& m : pat.schema.marks) out << "," << m.name;
  out << "\n";
  for (const auto& e : pat.events) {
    out << pat.window.to_native(e.loc[0], 0);
    if (pat.window.dims == 2) out << "," << pat.window.to_native(e.loc[1], 1);
    for (double v : e.marks) out << "," << v;
    out << "\n";
  }
}

std::vector<int> sorted_event_order(const MarkedPointPattern& pat, int dim) {
  std::vector<int> idx(pat.n());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return pat.events[a].loc[dim] < pat.events[b].loc[dim]; });
  return idx;
}

}  // namespace ppmix
