// A coordinate chart: an ordered list of named coordinates on which every
// value in the library lives.  Charts are immutable and cheap to copy.
#ifndef JBV_CHART_HPP
#define JBV_CHART_HPP

#include <memory>
#include <string>
#include <vector>

namespace jbv {

class Chart {
public:
  Chart() = default;
  static Chart make(std::vector<std::string> coord_names);

  bool valid() const { return static_cast<bool>(d_); }
  int dim() const { return d_ ? static_cast<int>(d_->names.size()) : 0; }
  const std::string& name(int i) const { return d_->names.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return d_->names; }

  /// 0-based index of a coordinate name, or -1.
  int index_of(const std::string& n) const;

  /// Content equality (same dimension, same names in the same order).
  bool same_as(const Chart& o) const;

private:
  struct Data { std::vector<std::string> names; };
  std::shared_ptr<const Data> d_;
};

/// Throws StructuralError unless both values live on the same chart.
void require_same_chart(const Chart& a, const Chart& b, const char* where);

} // namespace jbv

#endif
