#include "core/chart.hpp"

#include <set>

#include "core/rational.hpp"

namespace jbv {

Chart Chart::make(std::vector<std::string> coord_names) {
  if (coord_names.empty()) throw StructuralError("chart: dimension must be >= 1");
  std::set<std::string> seen;
  for (const auto& n : coord_names) {
    if (n.empty()) throw StructuralError("chart: empty coordinate name");
    if (!seen.insert(n).second) throw StructuralError("chart: duplicate coordinate name '" + n + "'");
  }
  Chart c;
  auto d = std::make_shared<Data>();
  d->names = std::move(coord_names);
  c.d_ = std::move(d);
  return c;
}

int Chart::index_of(const std::string& n) const {
  if (!d_) return -1;
  for (size_t i = 0; i < d_->names.size(); ++i)
    if (d_->names[i] == n) return static_cast<int>(i);
  return -1;
}

bool Chart::same_as(const Chart& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->names == o.d_->names;
}

void require_same_chart(const Chart& a, const Chart& b, const char* where) {
  if (!a.same_as(b))
    throw StructuralError(std::string(where) + ": values live on different charts");
}

} // namespace jbv
