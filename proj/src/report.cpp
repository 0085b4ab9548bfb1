#include <iomanip>
#include <sstream>

#include <json.hpp>
#include <limits>

#include "abelmax/verify.hpp"

namespace abelmax {

namespace {

using json = nlohmann::ordered_json;

json big_json(nt::BigInt const &x)
{
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(x);
  return x.str();
}

json summary_json(ReportSummary const &s)
{
  return json{{"total", s.total},
              {"passed", s.passed},
              {"failed", s.failed},
              {"expected_exceptions", s.expected_exceptions},
              {"unverified", s.unverified}};
}

json check_json(TheoremCheck const &c)
{
  json detail = json::object();
  for (auto const &[k, v] : c.detail)
    detail[k] = big_json(v);
  json j{{"theorem", c.theorem},
         {"group_id", c.group_id},
         {"passed", c.passed},
         {"status", status_name(c.status)},
         {"m", c.m ? json(*c.m) : json(nullptr)},
         {"order", big_json(c.order)},
         {"detail", std::move(detail)}};
  if (!c.note.empty())
    j["note"] = c.note;
  return j;
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + '"';
}

} // namespace

std::string to_json(VerificationReport const &r)
{
  json checks = json::array();
  for (auto const &c : r.checks)
    checks.push_back(check_json(c));
  json j{{"suite", r.suite},
         {"ok", r.ok()},
         {"summary", summary_json(r.summary())},
         {"checks", std::move(checks)}};
  return j.dump(2) + "\n";
}

std::string to_csv(VerificationReport const &r)
{
  std::ostringstream out;
  out << "theorem,group_id,passed,m,order,detail_status,detail_key,detail_value\n";
  for (auto const &c : r.checks) {
    auto const *value = c.find(c.key_detail);
    out << csv_field(c.theorem) << ',' << csv_field(c.group_id) << ','
        << (c.passed ? "true" : "false") << ',' << (c.m ? std::to_string(*c.m) : "") << ','
        << c.order.str() << ',' << status_name(c.status) << ',' << csv_field(c.key_detail) << ','
        << (value ? value->str() : "") << '\n';
  }
  return out.str();
}

std::string to_text(VerificationReport const &r)
{
  std::ostringstream out;
  for (auto const &c : r.checks) {
    out << std::left << std::setw(10) << c.theorem << ' ' << std::setw(28) << c.group_id << ' '
        << std::setw(18) << status_name(c.status);
    if (c.m)
      out << " m=" << *c.m;
    out << " |G|=" << c.order.str();
    if (auto const *value = c.find(c.key_detail))
      out << ' ' << c.key_detail << '=' << value->str();
    if (!c.note.empty())
      out << "  (" << c.note << ')';
    out << '\n';
  }
  auto const s = r.summary();
  out << "suite " << r.suite << ": " << s.total << " checks, " << s.passed << " pass, " << s.failed
      << " fail, " << s.expected_exceptions << " expected exceptions, " << s.unverified
      << " unverified\n";
  return out.str();
}

std::string to_json(LargePrimeReport const &r)
{
  json primes = json::array();
  for (auto p : r.large_primes)
    primes.push_back(p);
  json j{{"group_id", r.group_id},
         {"order", big_json(r.order.value())},
         {"order_factors", r.order.factor_string()},
         {"m", r.m},
         {"large_primes", std::move(primes)},
         {"prime", r.prime},
         {"case", case_name(r.which)}};
  if (!r.note.empty())
    j["note"] = r.note;
  return j.dump(2) + "\n";
}

} // namespace abelmax
