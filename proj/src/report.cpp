#include "qstar/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace qstar {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_complex(cplx v) {
  if (v.imag() == 0.0) return format_double(v.real());
  std::string out = format_double(v.real());
  if (!std::signbit(v.imag())) out += '+';
  out += format_double(v.imag());
  out += 'i';
  return out;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "functional,q,case,bound,achieved,gap,verdict\n";
  for (const ReportItem& item : report.items) {
    os << item.name << ',' << format_complex(item.zeta) << ',' << item.case_label << ','
       << format_double(item.bound) << ',' << format_double(item.achieved) << ','
       << format_double(item.gap) << ',' << to_string(item.verdict) << '\n';
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const ReportItem& item : report.items) {
    nlohmann::ordered_json j;
    j["name"] = item.name;
    j["zeta"] = {item.zeta.real(), item.zeta.imag()};
    j["alpha"] = item.alpha;
    j["case"] = item.case_label;
    j["method"] = item.method;
    j["bound"] = item.bound;
    j["achieved"] = item.achieved;
    j["gap"] = item.gap;
    j["verdict"] = std::string(to_string(item.verdict));
    j["samples"] = item.samples;
    j["violations"] = item.violations;
    j["skipped"] = item.skipped;
    j["violating_samples"] = item.violating_samples;
    items.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["tool_version"] = report.tool_version;
  root["seed"] = report.seed;
  root["items"] = std::move(items);
  return root.dump(2) + "\n";
}

}  // namespace qstar
