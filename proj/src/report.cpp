#include "szw/report.hpp"

#include <sstream>

namespace szw {

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "szw-report " << kSchema << "\n";
  out << "command: " << command << "\n";
  out << "seed: " << seed << "\n";
  out << "guards: " << guards << "\n";
  for (const ReportRecord& r : records) {
    out << "record: id=" << r.id << " n=" << r.n << " pass=" << (r.pass ? 1 : 0);
    out << " bound=" << (r.bound ? r.bound->str_fraction() : std::string("-"));
    out << " attainers=";
    if (r.attainers.empty()) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < r.attainers.size(); ++i) out << (i ? "," : "") << r.attainers[i];
    }
    if (include_timings) out << " ms=" << r.ms;
    out << "\n";
    for (const std::string& w : r.witnesses) out << "witness: " << w << "\n";
  }
  return out.str();
}

bool ReportDocument::all_pass() const {
  for (const ReportRecord& r : records)
    if (!r.pass) return false;
  return true;
}

}  // namespace szw
