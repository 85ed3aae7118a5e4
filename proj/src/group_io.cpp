#include "qdesign/group_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace qdesign {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double number_or_string(const json& j, const char* what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    require(pos == s.size(), std::string(what) + ": trailing characters in numeric string");
    return v;
  }
  throw std::invalid_argument(std::string(what) + ": expected number or numeric string");
}

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::int64_t> parse_dims_token(const std::string& token) {
  std::vector<std::int64_t> dims;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t stop = token.find('x', start);
    const std::string piece =
        token.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    require(!piece.empty(), "group name: empty dimension field");
    std::size_t pos = 0;
    long long d = 0;
    try {
      d = std::stoll(piece, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("group name: bad dimension '" + piece + "'");
    }
    require(pos == piece.size() && d >= 2, "group name: dimensions must be integers >= 2");
    dims.push_back(d);
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return dims;
}

}  // namespace

ordered_json wh_index_to_json(const WHIndex& a) {
  require(is_canonical(a), "wh_index_to_json: index not canonical");
  return ordered_json{{"d", a.d}, {"k", a.k}, {"p", {a.p[0], a.p[1]}}};
}

WHIndex wh_index_from_json(const json& j) {
  require(j.is_object() && j.contains("d") && j.contains("k") && j.contains("p"),
          "wh index: expected object with d, k, p");
  require(j["p"].is_array() && j["p"].size() == 2, "wh index: p must be a pair");
  return make_canonical(j["d"].get<std::int64_t>(), j["k"].get<std::int64_t>(),
                        {j["p"][0].get<std::int64_t>(), j["p"][1].get<std::int64_t>()});
}

GroupSpec group_spec_from_json(const json& j, double unitarity_tol) {
  require(j.is_object(), "group spec: expected a JSON object");
  require(j.contains("dims") && j["dims"].is_array() && !j["dims"].empty(),
          "group spec: dims must be a non-empty array");
  require(j.contains("generators") && j["generators"].is_array() && !j["generators"].empty(),
          "group spec: generators must be a non-empty array");

  GroupSpec spec;
  for (const auto& d : j["dims"]) {
    require(d.is_number_integer(), "group spec: dims must be integers");
    spec.dims.push_back(d.get<std::int64_t>());
  }
  const std::int64_t n = total_dimension(spec.dims);
  spec.label = j.value("label", std::string("unnamed-group"));

  for (const auto& gen : j["generators"]) {
    require(gen.is_array() && gen.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
            "group spec: each generator needs dim^2 row-major entries");
    ComplexMatrix m(n, n);
    for (std::size_t e = 0; e < gen.size(); ++e) {
      require(gen[e].is_array() && gen[e].size() == 2,
              "group spec: entries must be [re, im] pairs");
      m.data()[e] = Complex(number_or_string(gen[e][0], "group spec entry"),
                            number_or_string(gen[e][1], "group spec entry"));
    }
    spec.generators.push_back(canonicalize(m, unitarity_tol));
  }
  return spec;
}

ordered_json group_spec_to_json(const GroupSpec& spec) {
  ordered_json out;
  out["dims"] = spec.dims;
  out["label"] = spec.label;
  ordered_json gens = ordered_json::array();
  for (const auto& g : spec.generators) {
    ordered_json entries = ordered_json::array();
    for (const Complex& x : g.matrix.data()) entries.push_back({x.real(), x.imag()});
    gens.push_back(std::move(entries));
  }
  out["generators"] = std::move(gens);
  return out;
}

ResolvedGroup resolve_group(const std::string& name_or_path, double unitarity_tol) {
  require(!name_or_path.empty(), "group: empty name");
  if (name_or_path.rfind("clifford:", 0) == 0) {
    const std::vector<std::int64_t> dims = parse_dims_token(name_or_path.substr(9));
    GroupSpec spec = dims.size() == 1 ? clifford_generators(dims[0])
                                      : multipartite_clifford_generators(dims);
    return ResolvedGroup{std::move(spec), GroupKind::clifford_normalizer};
  }
  if (name_or_path.rfind("wh:", 0) == 0) {
    const std::vector<std::int64_t> dims = parse_dims_token(name_or_path.substr(3));
    require(dims.size() == 1, "group name: wh groups take a single dimension");
    return ResolvedGroup{wh_generators(dims[0]), GroupKind::wh_structured};
  }
  std::ifstream in(name_or_path);
  if (!in) throw std::invalid_argument("group: cannot open spec file '" + name_or_path + "'");
  json parsed;
  try {
    in >> parsed;
  } catch (const json::exception& e) {
    throw std::invalid_argument("group spec '" + name_or_path + "': " + e.what());
  }
  return ResolvedGroup{group_spec_from_json(parsed, unitarity_tol), GroupKind::plain};
}

ordered_json design_report_to_json(const DesignReport& report) {
  ordered_json out;
  out["label"] = report.label;
  if (report.group_size)
    out["group_size"] = *report.group_size;
  else
    out["group_size"] = "not enumerated";
  if (report.frame_potential)
    out["frame_potential"] = *report.frame_potential;
  else
    out["frame_potential"] = nullptr;
  if (report.commutant_dimension)
    out["commutant_dimension"] = *report.commutant_dimension;
  else
    out["commutant_dimension"] = nullptr;
  out["order_class_count"] = report.order_class_count;
  ordered_json classes = ordered_json::object();
  for (const auto& [order, count] : report.order_class_sizes)
    classes[std::to_string(order)] = count;
  out["order_classes"] = std::move(classes);
  out["verdict"] = to_string(report.verdict);
  return out;
}

namespace {

std::string order_classes_flat(const DesignReport& report) {
  std::string flat;
  for (const auto& [order, count] : report.order_class_sizes) {
    if (!flat.empty()) flat += ' ';
    flat += std::to_string(order) + ":" + std::to_string(count);
  }
  return flat;
}

}  // namespace

std::string design_report_to_csv(const DesignReport& report) {
  std::string row = "label,group_size,frame_potential,commutant_dimension,order_class_count,"
                    "order_classes,verdict\n";
  row += '"' + report.label + "\",";
  row += report.group_size ? std::to_string(*report.group_size) : std::string("not enumerated");
  row += ',';
  if (report.frame_potential) row += format_double(*report.frame_potential);
  row += ',';
  if (report.commutant_dimension) row += std::to_string(*report.commutant_dimension);
  row += ',';
  row += std::to_string(report.order_class_count);
  row += ",\"" + order_classes_flat(report) + "\",";
  row += to_string(report.verdict);
  row += '\n';
  return row;
}

std::string design_report_to_text(const DesignReport& report) {
  std::string text;
  text += "label:               " + report.label + '\n';
  text += "group size:          " +
          (report.group_size ? std::to_string(*report.group_size)
                             : std::string("not enumerated")) +
          '\n';
  text += "frame potential:     " +
          (report.frame_potential ? format_double(*report.frame_potential)
                                  : std::string("not computed")) +
          '\n';
  text += "commutant dimension: " +
          (report.commutant_dimension ? std::to_string(*report.commutant_dimension)
                                      : std::string("not computed")) +
          '\n';
  text += "order classes:       ";
  if (report.order_class_count == 0) {
    text += "not applicable";
  } else {
    text += order_classes_flat(report) + " (count " +
            std::to_string(report.order_class_count) + ")";
  }
  text += '\n';
  text += "verdict:             " + std::string(to_string(report.verdict)) + '\n';
  return text;
}

void write_choi(std::ostream& out, const ChoiMatrix& c) {
  validate_choi(c);
  out << ordered_json{{"d", c.d}, {"normalization", "trace=d"}}.dump() << '\n';
  write_matrix_dump(out, c.matrix);
}

ChoiMatrix read_choi(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("choi: missing header line");
  json parsed;
  try {
    parsed = json::parse(header);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("choi header: ") + e.what());
  }
  require(parsed.is_object() && parsed.contains("d"), "choi header: missing dimension");
  require(parsed.value("normalization", "") == std::string("trace=d"),
          "choi header: unsupported normalization");
  ChoiMatrix c{parsed["d"].get<std::int64_t>(), read_matrix_dump(in)};
  validate_choi(c);
  return c;
}

}  // namespace qdesign
