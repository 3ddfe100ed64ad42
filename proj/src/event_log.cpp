#include "precima/event_log.hpp"

#include <algorithm>
#include <sstream>

namespace precima {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::uint64_t EventLog::total_traces() const {
  std::uint64_t n = 0;
  for (const auto& [trace, count] : traces) n += count;
  return n;
}

std::set<Activity> EventLog::alphabet() const {
  std::set<Activity> out;
  for (const auto& [trace, count] : traces)
    out.insert(trace.begin(), trace.end());
  return out;
}

std::set<Trace> trace_set(const EventLog& log) {
  std::set<Trace> out;
  for (const auto& [trace, count] : log.traces) out.insert(trace);
  return out;
}

EventLog parse_log(std::string_view text) {
  EventLog log;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    auto x = line.find('x');
    if (x == std::string::npos)
      throw ParseError(lineno, "expected '<count>x <activities>'");
    std::string count_str = trim(line.substr(0, x));
    if (count_str.empty() ||
        count_str.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError(lineno, "count must be a positive integer, got '" +
                                   count_str + "'");
    std::uint64_t count = 0;
    try {
      count = std::stoull(count_str);
    } catch (const std::exception&) {
      throw ParseError(lineno, "count out of range: '" + count_str + "'");
    }
    if (count == 0) throw ParseError(lineno, "count must be >= 1");

    Trace trace;
    std::string rest = trim(line.substr(x + 1));
    if (!rest.empty()) {
      std::size_t pos = 0;
      while (true) {
        auto comma = rest.find(',', pos);
        std::string token = trim(rest.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (token.empty())
          throw ParseError(lineno, "empty activity name");
        trace.push_back(token);
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    log.traces[trace] += count;
  }
  return log;
}

std::string serialize_log(const EventLog& log) {
  std::vector<std::pair<Trace, std::uint64_t>> entries(log.traces.begin(),
                                                       log.traces.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second != b.second) return a.second > b.second;
                     return a.first < b.first;
                   });
  std::string out;
  for (const auto& [trace, count] : entries) {
    out += std::to_string(count);
    out += 'x';
    for (std::size_t i = 0; i < trace.size(); ++i) {
      out += i == 0 ? " " : ",";
      out += trace[i];
    }
    out += '\n';
  }
  return out;
}

EventLog project_log(const EventLog& log, const std::set<Activity>& keep) {
  EventLog out;
  for (const auto& [trace, count] : log.traces) {
    Trace projected;
    for (const auto& a : trace)
      if (keep.count(a)) projected.push_back(a);
    out.traces[projected] += count;
  }
  return out;
}

}  // namespace precima
