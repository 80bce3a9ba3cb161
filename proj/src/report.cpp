#include "leibniz/report.hpp"

#include <sstream>

namespace leibniz {

std::string Report::summary() const {
  std::ostringstream out;
  out << (subject_.empty() ? "report" : subject_) << ": ";
  if (passed()) {
    out << "pass (" << checked_ << " checks)";
    return out.str();
  }
  out << failures_.size() << " of " << checked_ << " checks failed";
  for (const auto& v : failures_) {
    out << "\n  " << v.axiom;
    if (!v.indices.empty()) {
      out << " at (";
      for (std::size_t i = 0; i < v.indices.size(); ++i) out << (i ? "," : "") << v.indices[i];
      out << ")";
    }
    if (v.residual.size() > 0) {
      out << " residual [";
      for (Index i = 0; i < v.residual.size(); ++i) out << (i ? " " : "") << v.residual(i).to_string();
      out << "]";
    }
    if (!v.note.empty()) out << " " << v.note;
  }
  return out.str();
}

}  // namespace leibniz
