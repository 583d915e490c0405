#include "qcr/state_file.hpp"

#include <fstream>
#include <sstream>

#include "qcr/registers.hpp"

namespace qcr {

using nlohmann::json;

namespace {

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("expected a [real, imaginary] number pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string digits_string(const Digits& d) {
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(d[k]);
  }
  return s;
}

json cut_json(const CutSpec& c) { return {{"side_one", c.side_one}, {"side_two", c.side_two}}; }

}  // namespace

json layout_to_json(const Layout& layout) {
  json subs = json::array();
  for (const auto& s : layout) {
    subs.push_back({{"label", s.label}, {"role", std::string(role_name(s.role))}, {"party", s.party}, {"dim", s.dim}});
  }
  json out = {{"subsystems", subs}, {"d", nullptr}, {"players", nullptr}};
  try {
    const QcrStructure qs = describe(layout);
    out["d"] = qs.d;
    out["players"] = qs.players;
  } catch (const LabelError&) {
    // Plain register list without dealer/player structure.
  }
  return out;
}

Layout layout_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("subsystems") || !doc["subsystems"].is_array()) {
    throw FormatError("layout must be an object with a 'subsystems' array");
  }
  std::vector<Subsystem> regs;
  for (const auto& s : doc["subsystems"]) {
    if (!s.is_object() || !s.contains("label") || !s.contains("role") || !s.contains("dim")) {
      throw FormatError("subsystem entries need label, role and dim");
    }
    const auto role = role_from_name(s["role"].get<std::string>());
    if (!role) throw FormatError("unknown role '" + s["role"].get<std::string>() + "'");
    const int party = s.value("party", *role == Role::Environment ? kNoParty : kDealerParty);
    if (!s["dim"].is_number_integer()) throw FormatError("dim must be an integer");
    regs.push_back({s["label"].get<std::string>(), *role, party, s["dim"].get<Index>()});
  }
  Layout layout;
  try {
    layout = Layout(std::move(regs));
  } catch (const Error& e) {
    throw FormatError(std::string("invalid layout: ") + e.what());
  }
  if (doc.contains("d") && !doc["d"].is_null()) {
    QcrStructure qs;
    try {
      qs = describe(layout);
    } catch (const LabelError& e) {
      throw FormatError(std::string("layout declares d but has no dealer/player structure: ") + e.what());
    }
    if (doc["d"].get<int>() != qs.d) throw FormatError("declared d does not match the information registers");
    if (doc.contains("players") && !doc["players"].is_null() && doc["players"].get<int>() != qs.players) {
      throw FormatError("declared player count does not match the layout");
    }
  }
  return layout;
}

json state_to_json(const QuantumState& s, const std::string& note) {
  json data = json::array();
  if (s.is_pure()) {
    for (Index i = 0; i < s.dim(); ++i) data.push_back(complex_pair(s.vector()(i)));
  } else {
    const auto& m = s.matrix();
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) data.push_back(complex_pair(m(i, j)));
    }
  }
  json out = {{"format", "qcr-state"},
              {"version", kStateFileVersion},
              {"layout", layout_to_json(s.layout())},
              {"representation", s.is_pure() ? "pure" : "density"},
              {"data", std::move(data)}};
  if (!note.empty()) out["note"] = note;
  return out;
}

QuantumState state_from_json(const json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != "qcr-state") throw FormatError("not a qcr-state document");
    if (doc.value("version", 0) != kStateFileVersion) {
      throw FormatError("unsupported state-file version " + doc.value("version", json(0)).dump());
    }
    const Layout layout = layout_from_json(doc.at("layout"));
    const std::string rep = doc.at("representation").get<std::string>();
    const json& data = doc.at("data");
    if (!data.is_array()) throw FormatError("'data' must be an array");
    const Index n = layout.total_dim();
    if (rep == "pure") {
      if (static_cast<Index>(data.size()) != n) throw FormatError("pure data length does not match layout dimension");
      ComplexVector v(n);
      for (Index i = 0; i < n; ++i) v(i) = complex_from(data[static_cast<std::size_t>(i)]);
      return QuantumState::pure(layout, std::move(v));
    }
    if (rep == "density") {
      if (static_cast<Index>(data.size()) != n * n) {
        throw FormatError("density data length does not match layout dimension squared");
      }
      ComplexMatrix m(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) m(i, j) = complex_from(data[static_cast<std::size_t>(i * n + j)]);
      }
      return QuantumState::density(layout, std::move(m));
    }
    throw FormatError("representation must be 'pure' or 'density'");
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed state document: ") + e.what());
  }
}

void write_state_file(const std::filesystem::path& path, const QuantumState& s, const std::string& note) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  // One [re, im] pair per line so fixtures diff cleanly.
  json doc = state_to_json(s, note);
  const json data = std::move(doc["data"]);
  doc.erase("data");
  std::string head = doc.dump(2);
  head.erase(head.find_last_of('}'));
  while (!head.empty() && (head.back() == '\n' || head.back() == ' ')) head.pop_back();
  out << head << ",\n  \"data\": [";
  for (std::size_t k = 0; k < data.size(); ++k) out << (k ? ",\n    " : "\n    ") << data[k].dump();
  out << "\n  ]\n}\n";
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

QuantumState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  return state_from_json(doc);
}

json report_to_json(const VerificationReport& r) {
  json dist = json::array();
  for (const auto& [digits, p] : r.condition_i.distribution) dist.push_back({{"outcome", digits}, {"probability", p}});
  json coalitions = json::array();
  for (const auto& c : r.condition_ii.coalitions) {
    coalitions.push_back({{"dishonest", c.coalition.dishonest},
                          {"honest", c.coalition.honest},
                          {"pass", c.pass},
                          {"max_distance", c.max_distance},
                          {"dealer_probabilities", c.dealer_probabilities}});
  }
  return {{"format", "qcr-verify-report"},
          {"version", 1},
          {"verdict", r.verdict},
          {"tolerance", r.tol},
          {"failing", r.failing_conditions()},
          {"condition_i",
           {{"pass", r.condition_i.pass},
            {"max_deviation", r.condition_i.max_deviation},
            {"off_support_mass", r.condition_i.off_support_mass},
            {"distribution", dist}}},
          {"condition_ii",
           {{"pass", r.condition_ii.pass}, {"max_distance", r.condition_ii.max_distance}, {"coalitions", coalitions}}}};
}

json report_to_json(const PptReport& r) {
  json cuts = json::array();
  for (const auto& c : r.cuts) {
    cuts.push_back({{"cut", cut_json(c.cut)}, {"min_eigenvalue", c.min_eigenvalue}, {"ppt", c.ppt}});
  }
  return {{"format", "qcr-ppt-report"}, {"version", 1}, {"all_ppt", r.all_ppt}, {"cuts", cuts}};
}

json report_to_json(const CompositionRecord& r) {
  json relabel = json::object();
  for (const auto& [from, to] : r.second_relabeling) relabel[from] = to;
  return {{"format", "qcr-compose-report"},
          {"version", 1},
          {"unitary", r.unitary},
          {"target", r.target_label},
          {"control", r.control_label},
          {"first_layout", layout_to_json(r.first)},
          {"second_layout", layout_to_json(r.second)},
          {"merged_layout", layout_to_json(r.merged)},
          {"second_relabeling", relabel}};
}

json branch_to_json(const ReductionOutcome& r) {
  return {{"measured", r.measured},
          {"measured_string", digits_string(r.measured)},
          {"announced", r.announced},
          {"probability", r.probability},
          {"correction_applied", r.correction_applied},
          {"kept_players", r.kept_players}};
}

}  // namespace qcr
