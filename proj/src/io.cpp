#include "flowshop/io.hpp"

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"

namespace flowshop {

namespace {

using json = nlohmann::json;

std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::int64_t integer_field(const json& value, const std::string& name) {
  if (value.is_number_unsigned()) {
    const std::uint64_t raw = value.get<std::uint64_t>();
    if (raw > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw ValidationError(name + " exceeds the nonnegative int64 range");
    return static_cast<std::int64_t>(raw);
  }
  if (!value.is_number_integer()) throw ParseError(name + ": expected an integer");
  return value.get<std::int64_t>();
}

}  // namespace

Instance load_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(std::string(error.what()) + " (" + position_of(text, error.byte) + ")");
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  if (!doc.contains("m")) throw ParseError("missing field \"m\"");
  if (!doc.contains("jobs")) throw ParseError("missing field \"jobs\"");

  Instance instance;
  const std::int64_t m = integer_field(doc["m"], "m");
  if (m < 1 || m > std::numeric_limits<int>::max())
    throw ValidationError("m must be in [1, " +
                          std::to_string(std::numeric_limits<int>::max()) + "], got " +
                          std::to_string(m));
  instance.m = static_cast<int>(m);

  const json& jobs = doc["jobs"];
  if (!jobs.is_array()) throw ParseError("jobs: expected an array");
  instance.jobs.reserve(jobs.size());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const json& pair = jobs[i];
    const std::string name = "jobs[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(name + ": expected a [r, t] pair");
    Job job;
    job.r = integer_field(pair[0], name + "[0]");
    job.t = integer_field(pair[1], name + "[1]");
    if (job.r < 0) throw ValidationError(name + "[0] is negative");
    if (job.t < 0) throw ValidationError(name + "[1] is negative");
    instance.jobs.push_back(job);
  }
  validate_instance(instance);
  return instance;
}

std::string save_instance(const Instance& instance) {
  json doc;
  doc["m"] = instance.m;
  json jobs = json::array();
  for (const Job& job : instance.jobs) jobs.push_back(json::array({job.r, job.t}));
  doc["jobs"] = std::move(jobs);
  return doc.dump(2) + "\n";
}

std::string render_result(const Schedule& schedule, const std::string& algo, bool optimal,
                          const std::optional<Rational>& ratio_bound, bool value_only) {
  json doc;
  doc["makespan"] = schedule.makespan;
  doc["algo"] = algo;
  doc["optimal"] = optimal;
  doc["ratio_bound"] = ratio_bound ? json(to_string(*ratio_bound)) : json(nullptr);
  if (value_only) {
    doc["assignment"] = nullptr;
    doc["shops"] = nullptr;
  } else {
    doc["assignment"] = schedule.assignment;
    json shops = json::array();
    for (std::size_t shop = 0; shop < schedule.order.size(); ++shop) {
      json item;
      item["order"] = schedule.order[shop];
      item["rho"] = schedule.completions[shop].rho;
      item["tau"] = schedule.completions[shop].tau;
      shops.push_back(std::move(item));
    }
    doc["shops"] = std::move(shops);
  }
  return doc.dump(2) + "\n";
}

}  // namespace flowshop
