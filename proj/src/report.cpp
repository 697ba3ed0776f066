#include "cbsum/report.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

namespace cbsum {

ReportFormat parse_report_format(const std::string& name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "table") return ReportFormat::table;
  throw ConfigError("unknown report format: " + name);
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x",
                        static_cast<unsigned>(ch));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

void emit_check_results(std::ostream& os, const std::vector<CheckResult>& rs,
                        ReportFormat fmt) {
  if (fmt == ReportFormat::csv)
    os << "check,p,status,lhs,rhs,modulus,elapsed_us\n";
  for (const auto& r : rs) {
    switch (fmt) {
      case ReportFormat::json:
        os << "{\"check\":\"" << json_escape(r.id) << "\",\"p\":" << r.p
           << ",\"status\":\"" << to_string(r.status) << "\",\"lhs\":\""
           << r.lhs.get_str() << "\",\"rhs\":\"" << r.rhs.get_str()
           << "\",\"modulus\":\"" << r.modulus.get_str()
           << "\",\"elapsed_us\":" << r.elapsed_us << "}\n";
        break;
      case ReportFormat::csv:
        os << csv_field(r.id) << ',' << r.p << ',' << to_string(r.status)
           << ',' << r.lhs.get_str() << ',' << r.rhs.get_str() << ','
           << r.modulus.get_str() << ',' << r.elapsed_us << '\n';
        break;
      case ReportFormat::table:
        os << std::left << std::setw(12) << r.id << std::right << std::setw(7)
           << r.p << "  " << std::left << std::setw(5) << to_string(r.status)
           << "  lhs=" << r.lhs.get_str() << "  rhs=" << r.rhs.get_str()
           << "  mod=" << r.modulus.get_str();
        if (r.elapsed_us) os << "  us=" << r.elapsed_us;
        os << '\n';
        break;
    }
  }
}

void emit_identity_cases(std::ostream& os, const std::vector<IdentityCase>& cs,
                         ReportFormat fmt) {
  if (fmt == ReportFormat::csv) os << "identity,n,status,lhs,rhs\n";
  for (const auto& c : cs) {
    const char* st = c.pass ? "pass" : "fail";
    switch (fmt) {
      case ReportFormat::json:
        os << "{\"identity\":\"" << json_escape(c.id) << "\",\"n\":" << c.n
           << ",\"status\":\"" << st << "\",\"lhs\":\"" << c.lhs.get_str()
           << "\",\"rhs\":\"" << c.rhs.get_str() << "\"}\n";
        break;
      case ReportFormat::csv:
        os << csv_field(c.id) << ',' << c.n << ',' << st << ','
           << csv_field(c.lhs.get_str()) << ',' << csv_field(c.rhs.get_str())
           << '\n';
        break;
      case ReportFormat::table:
        os << std::left << std::setw(6) << c.id << std::right << std::setw(6)
           << c.n << "  " << std::left << std::setw(5) << st
           << "  lhs=" << c.lhs.get_str() << "  rhs=" << c.rhs.get_str()
           << '\n';
        break;
    }
  }
}

void emit_audit_report(std::ostream& os, const AuditReport& rep,
                       ReportFormat fmt) {
  if (fmt == ReportFormat::csv) os << "section,p,detail\n";
  for (const auto& d : rep.discrepancies) {
    switch (fmt) {
      case ReportFormat::json:
        os << "{\"audit\":\"discrepancy\",\"section\":\""
           << json_escape(d.section) << "\",\"p\":" << d.p << ",\"detail\":\""
           << json_escape(d.detail) << "\"}\n";
        break;
      case ReportFormat::csv:
        os << csv_field(d.section) << ',' << d.p << ','
           << csv_field(d.detail) << '\n';
        break;
      case ReportFormat::table:
        os << std::left << std::setw(10) << d.section << std::right
           << std::setw(7) << d.p << "  " << d.detail << '\n';
        break;
    }
  }
  if (fmt == ReportFormat::json) {
    os << "{\"audit\":\"summary\",\"bound\":" << rep.bound
       << ",\"comparisons\":" << rep.comparisons
       << ",\"discrepancies\":" << rep.discrepancies.size() << "}\n";
  } else if (fmt == ReportFormat::table) {
    os << "audit bound=" << rep.bound << " comparisons=" << rep.comparisons
       << " discrepancies=" << rep.discrepancies.size() << '\n';
  }
}

void emit_reconstructions(std::ostream& os,
                          const std::vector<ReconstructionCandidate>& cs,
                          ReportFormat fmt) {
  if (fmt == ReportFormat::csv) os << "check,promoted,reading,samples\n";
  for (const auto& c : cs) {
    switch (fmt) {
      case ReportFormat::json: {
        os << "{\"check\":\"" << json_escape(c.check_id) << "\",\"reading\":\""
           << json_escape(c.reading) << "\",\"promoted\":"
           << (c.promoted ? "true" : "false") << ",\"samples\":[";
        bool first = true;
        for (const auto& [p, ok] : c.outcomes) {
          if (!first) os << ',';
          first = false;
          os << "{\"p\":" << p << ",\"holds\":" << (ok ? "true" : "false")
             << '}';
        }
        os << "]}\n";
        break;
      }
      case ReportFormat::csv: {
        std::string samples;
        for (const auto& [p, ok] : c.outcomes) {
          if (!samples.empty()) samples += ';';
          samples += std::to_string(p);
          samples += ok ? ":holds" : ":fails";
        }
        os << csv_field(c.check_id) << ','
           << (c.promoted ? "promoted" : "rejected") << ','
           << csv_field(c.reading) << ',' << csv_field(samples) << '\n';
        break;
      }
      case ReportFormat::table: {
        os << (c.promoted ? "PROMOTED " : "rejected ") << c.check_id << ": "
           << c.reading << '\n';
        for (const auto& [p, ok] : c.outcomes)
          os << "    p=" << p << "  " << (ok ? "holds" : "fails") << '\n';
        break;
      }
    }
  }
}

void emit_check_roster(std::ostream& os, ReportFormat fmt) {
  if (fmt == ReportFormat::csv)
    os << "check,source,conjectural,target_exponent,working_exponent,"
          "prime_cap,description\n";
  for (const auto& d : catalog()) {
    switch (fmt) {
      case ReportFormat::json:
        os << "{\"check\":\"" << json_escape(d.id) << "\",\"source\":\""
           << to_string(d.source) << "\",\"conjectural\":"
           << (d.conjectural ? "true" : "false")
           << ",\"target_exponent\":" << d.target_e
           << ",\"working_exponent\":" << d.working_e << ",\"prime_cap\":";
        if (d.prime_cap) os << *d.prime_cap;
        else os << "null";
        os << ",\"description\":\"" << json_escape(d.description) << "\"}\n";
        break;
      case ReportFormat::csv:
        os << csv_field(d.id) << ',' << to_string(d.source) << ','
           << (d.conjectural ? "true" : "false") << ',' << d.target_e << ','
           << d.working_e << ',';
        if (d.prime_cap) os << *d.prime_cap;
        os << ',' << csv_field(d.description) << '\n';
        break;
      case ReportFormat::table:
        os << std::left << std::setw(12) << d.id << std::setw(15)
           << to_string(d.source) << " mod p^" << d.target_e;
        if (d.prime_cap) os << "  (p <= " << *d.prime_cap << ")";
        os << "\n    " << d.description << '\n';
        break;
    }
  }
}

}  // namespace cbsum
