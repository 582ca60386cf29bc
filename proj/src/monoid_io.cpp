#include "monpure/monoid_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace monpure {

namespace {

Int json_to_int(const nlohmann::json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return Int(v.get<std::string>());
  } catch (...) {
  }
  throw InputError("field '" + where + "' must be an integer");
}

}  // namespace

MonoidFile parse_monoid_text(const std::string& text, const Budgets& defaults) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("monoid file: ") + e.what());
  }
  if (!j.is_object()) throw InputError("monoid file: top level must be an object");

  MonoidFile f;
  f.budgets = defaults;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("field 'name' must be a string");
    f.name = j["name"].get<std::string>();
  }
  if (!j.contains("ambient_dim")) throw InputError("missing field 'ambient_dim'");
  Int q = json_to_int(j["ambient_dim"], "ambient_dim");
  if (q < 1) throw InputError("'ambient_dim' must be positive");
  f.ambient_dim = q.get_ui();

  if (!j.contains("generators")) throw InputError("missing field 'generators'");
  if (!j["generators"].is_array() || j["generators"].empty())
    throw InputError("'generators' must be a nonempty array");
  for (std::size_t i = 0; i < j["generators"].size(); ++i) {
    const auto& row = j["generators"][i];
    if (!row.is_array() || row.size() != f.ambient_dim)
      throw InputError("generator " + std::to_string(i) + " must be an array of length " +
                       std::to_string(f.ambient_dim));
    IntVector g;
    for (const auto& entry : row)
      g.push_back(json_to_int(entry, "generators[" + std::to_string(i) + "]"));
    f.generators.push_back(std::move(g));
  }

  if (j.contains("budgets")) {
    const auto& b = j["budgets"];
    if (!b.is_object()) throw InputError("'budgets' must be an object");
    auto positive = [&](const char* key, const Int& v) {
      if (v < 1) throw InputError(std::string("budget '") + key + "' must be positive");
      return v;
    };
    if (b.contains("m_budget"))
      f.budgets.m_budget = positive("m_budget", json_to_int(b["m_budget"], "m_budget"));
    if (b.contains("t_budget"))
      f.budgets.t_budget =
          static_cast<int>(positive("t_budget", json_to_int(b["t_budget"], "t_budget")).get_si());
    if (b.contains("hilbert_budget"))
      f.budgets.hilbert_budget =
          positive("hilbert_budget", json_to_int(b["hilbert_budget"], "hilbert_budget"));
    if (b.contains("window_bound")) {
      const auto& w = b["window_bound"];
      Rat bound = w.is_string() ? parse_rat(w.get<std::string>())
                                : Rat(json_to_int(w, "window_bound"));
      if (bound <= 0) throw InputError("budget 'window_bound' must be positive");
      f.budgets.window_bound = bound;
    }
  }
  return f;
}

MonoidFile parse_monoid_file(const std::string& path, const Budgets& defaults) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open monoid file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_monoid_text(buf.str(), defaults);
}

}  // namespace monpure
