#include "report.hpp"

#include <sstream>

#include "document.hpp"

namespace mcdeform::cli {

using nlohmann::json;

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << prefix << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["schema"] = kSchema;
  j["command"] = {{"name", r.command}, {"args", r.args}};
  j["status"] = r.status;
  j["exit_code"] = r.exit_code;
  j["payload"] = r.payload;
  if (r.wall_time) j["wall_time"] = *r.wall_time;
  return j;
}

std::string render(const Report& r, Format f) {
  const json j = to_json(r);
  if (f == Format::Json) return j.dump(2) + "\n";
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace mcdeform::cli
