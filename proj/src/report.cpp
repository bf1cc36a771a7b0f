#include "hflkit/report.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "hflkit/complex_json.hpp"
#include "hflkit/kauffman.hpp"
#include "hflkit/longitude.hpp"
#include "hflkit/satellite.hpp"

namespace hflkit {

using nlohmann::json;

namespace {

void require_positive(int n, const char* flag) {
  if (n < 1) throw std::invalid_argument(std::string(flag) + " must be >= 1, got " + std::to_string(n));
}

json rank_table_json(const HomologyTable& table) {
  json rows = json::array();
  for (const auto& [key, group] : table.entries()) {
    rows.push_back({{"maslov", to_json(key.maslov)}, {"rank", group.free_rank}});
  }
  return rows;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

void table_rows(std::ostringstream& os, const json& table, const std::string& indent) {
  if (table.empty()) {
    os << indent << "(empty)\n";
    return;
  }
  os << indent << pad("spinc", 8) << pad("maslov", 8) << pad("rank", 6) << "  torsion\n";
  for (const json& row : table) {
    std::string torsion;
    for (const json& t : row["torsion"]) torsion += (torsion.empty() ? "Z/" : " + Z/") + t.get<std::string>();
    os << indent << pad(row["spinc"]["value"].get<std::string>(), 8)
       << pad(row["maslov"]["value"].get<std::string>(), 8) << pad(std::to_string(row["free_rank"].get<int>()), 6)
       << "  " << (torsion.empty() ? "-" : torsion) << "\n";
  }
}

void rank_rows(std::ostringstream& os, const json& rows, const std::string& indent) {
  os << indent << pad("maslov", 8) << pad("rank", 6) << "\n";
  for (const json& row : rows) {
    os << indent << pad(row["maslov"]["value"].get<std::string>(), 8) << pad(std::to_string(row["rank"].get<int>()), 6)
       << "\n";
  }
}

}  // namespace

bool ReportDocument::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json ReportDocument::to_json() const {
  json checks_json = json::array();
  for (const CheckResult& c : checks) checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"command", command}, {"inputs", inputs}, {"result", result}, {"checks", checks_json}};
}

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "table") return OutputFormat::Table;
  throw std::invalid_argument("unknown format '" + text + "' (expected json or table)");
}

std::string render(const ReportDocument& doc, OutputFormat format) {
  if (format == OutputFormat::Json) return doc.to_json().dump(2) + "\n";
  return render_table(doc);
}

std::string render_table(const ReportDocument& doc) {
  std::ostringstream os;
  os << doc.command;
  for (const auto& [key, value] : doc.inputs.items()) {
    os << "  " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
  }
  os << "\n";

  const json& r = doc.result;
  if (doc.command == "hfl") {
    os << "computed:\n";
    table_rows(os, r["computed"], "  ");
    os << "closed form:\n";
    table_rows(os, r["closed_form"], "  ");
    os << "agreement: " << (r["agreement"].get<bool>() ? "true" : "false") << "\n";
  } else if (doc.command == "homology") {
    table_rows(os, r["homology"], "  ");
    os << "euler characteristic: " << r["euler_characteristic"]["text"].get<std::string>() << "\n";
  } else if (doc.command == "whitehead") {
    rank_rows(os, r["table"], "  ");
    os << "total rank: " << r["total_rank"].get<int>() << "\n";
  } else if (doc.command == "alexander torus" || doc.command == "alexander satellite") {
    os << r["polynomial"]["text"].get<std::string>() << "\n";
    if (r.contains("from_states")) os << "from states: " << r["from_states"]["text"].get<std::string>() << "\n";
    if (r.contains("unit")) os << "unit: " << (r["unit"].get<bool>() ? "true" : "false") << "\n";
  } else if (doc.command == "kauffman") {
    os << "count: " << r["count"].get<int>() << "\n";
    if (r.contains("states")) {
      for (const json& st : r["states"]) {
        os << "  ";
        if (st.contains("index")) {
          os << "z_" << st["index"].get<int>() << "  s=" << st["spinc"]["value"].get<std::string>()
             << "  mu=" << st["maslov"]["value"].get<std::string>() << "  ";
        }
        bool first = true;
        for (const json& c : st["corners"]) {
          os << (first ? "" : " ") << c["region"].get<std::string>() << ":" << c["crossing"].get<int>() << "/"
             << c["quadrant"].get<int>();
          first = false;
        }
        os << "\n";
      }
    }
  } else if (doc.command == "complex") {
    for (const json& g : r["complex"]["generators"]) {
      os << "  " << g["label"].get<std::string>() << "  s=" << g["spinc"]["value"].get<std::string>()
         << "  mu=" << g["maslov"]["value"].get<std::string>() << "\n";
    }
    for (const json& a : r["complex"]["differential"]) {
      os << "  d: " << a["from"].get<int>() << " -> " << a["to"].get<int>() << "  x"
         << a["coefficient"].get<std::string>() << "\n";
    }
  } else if (doc.command == "verify") {
    os << "passed: " << r["passed"].get<int>() << "  failed: " << r["failed"].get<int>() << "\n";
    if (!r["first_failure"].is_null()) os << "first failure: " << r["first_failure"].get<std::string>() << "\n";
  } else {
    os << r.dump(2) << "\n";
  }

  if (!doc.checks.empty()) {
    os << "checks:\n";
    for (const CheckResult& c : doc.checks) {
      os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << "\n";
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

ReportDocument cmd_hfl(int n, std::optional<HalfInt> spinc) {
  require_positive(n, "--n");
  ReportDocument doc;
  doc.command = "hfl";
  doc.inputs["n"] = n;

  HomologyTable computed;
  HomologyTable closed = hfl_closed_form(n);
  if (spinc) {
    if (spinc->is_integer()) throw std::invalid_argument("--spinc must be a strict half-integer, got " + spinc->to_string());
    doc.inputs["spinc"] = spinc->to_string();
    computed = homology(build_hfl_complex(n, *spinc));
    closed = closed.restricted_to(*spinc);
  } else {
    computed = hfl_compute(n);
  }
  const bool agree = computed == closed;
  doc.result["computed"] = to_json(computed);
  doc.result["closed_form"] = to_json(closed);
  doc.result["agreement"] = agree;
  doc.checks.push_back({"closed_form_agreement", agree, ""});
  return doc;
}

ReportDocument cmd_complex(int n, HalfInt spinc) {
  require_positive(n, "--n");
  ReportDocument doc;
  doc.command = "complex";
  doc.inputs["n"] = n;
  doc.inputs["spinc"] = spinc.to_string();
  doc.result["complex"] = to_json(build_hfl_complex(n, spinc));
  return doc;
}

ReportDocument cmd_homology(const json& complex_json) {
  const GradedComplex complex = complex_from_json(complex_json);
  ReportDocument doc;
  doc.command = "homology";
  doc.inputs["generators"] = complex.size();
  doc.result["homology"] = to_json(homology(complex));
  doc.result["euler_characteristic"] = to_json(euler_characteristic(complex));
  return doc;
}

ReportDocument cmd_whitehead(int n) {
  require_positive(n, "--n");
  ReportDocument doc;
  doc.command = "whitehead";
  doc.inputs["n"] = n;
  const HomologyTable table = whitehead_hfk_one(n);
  const HomologyTable expected = whitehead_expected_table(n);
  doc.result["spinc"] = to_json(HalfInt::from_int(1));
  doc.result["table"] = rank_table_json(table);
  doc.result["total_rank"] = table.total_rank();
  doc.checks.push_back({"expected_table", table == expected && !table.has_torsion(), ""});
  doc.checks.push_back({"total_rank_4n", table.total_rank() == 4 * n, "expected " + std::to_string(4 * n)});
  return doc;
}

ReportDocument cmd_alexander_torus(int n) {
  require_positive(n, "--n");
  ReportDocument doc;
  doc.command = "alexander torus";
  doc.inputs["n"] = n;
  const LaurentPoly closed = torus_alexander(n);
  const LaurentPoly states = alexander_from_states(n);
  doc.result["polynomial"] = to_json(closed);
  doc.result["from_states"] = to_json(states);
  doc.checks.push_back({"state_sum_matches", closed == states, ""});
  return doc;
}

ReportDocument cmd_alexander_satellite(const std::string& companion, const std::string& pattern,
                                       std::int64_t winding) {
  ReportDocument doc;
  doc.command = "alexander satellite";
  doc.inputs["companion"] = companion;
  doc.inputs["pattern"] = pattern;
  doc.inputs["winding"] = winding;
  const SatelliteSpec spec{LaurentPoly::parse(companion), LaurentPoly::parse(pattern), winding};
  const LaurentPoly p = satellite_alexander(spec);
  doc.result["polynomial"] = to_json(p);
  doc.result["unit"] = p.is_unit();
  return doc;
}

namespace {

json state_json(const KauffmanState& st, const std::map<std::size_t, std::string>& names) {
  json corners = json::array();
  for (const auto& [r, k] : st.assignment) {
    auto it = names.find(r);
    corners.push_back({{"region", it != names.end() ? it->second : "R" + std::to_string(r)},
                       {"crossing", k.crossing + 1},
                       {"quadrant", k.quadrant}});
  }
  return json{{"corners", corners}};
}

}  // namespace

ReportDocument cmd_kauffman(int n, bool list) {
  require_positive(n, "--n");
  ReportDocument doc;
  doc.command = "kauffman";
  doc.inputs["n"] = n;
  doc.inputs["list"] = list;

  const PlanarDiagram d = build_torus_diagram(n);
  const auto faces = regions(d);
  const auto names = torus_region_names(n, faces);
  auto states = enumerate_states(d);
  std::vector<std::pair<int, const KauffmanState*>> indexed;
  for (const auto& st : states) indexed.emplace_back(torus_state_index(n, faces, st), &st);
  std::sort(indexed.begin(), indexed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  doc.result["diagram"] = d.to_string();
  doc.result["count"] = states.size();
  if (list) {
    const auto gradings = torus_state_gradings(n);
    json arr = json::array();
    for (const auto& [i, st] : indexed) {
      json entry = state_json(*st, names);
      entry["index"] = i;
      entry["spinc"] = to_json(gradings[static_cast<std::size_t>(i - 1)].spinc);
      entry["maslov"] = to_json(gradings[static_cast<std::size_t>(i - 1)].maslov);
      arr.push_back(entry);
    }
    doc.result["states"] = arr;
  }
  const auto expected = static_cast<std::size_t>(2 * n + 1);
  doc.checks.push_back({"state_count", states.size() == expected, "expected " + std::to_string(expected)});
  return doc;
}

ReportDocument cmd_kauffman_pd(const std::string& pd_text, bool list) {
  ReportDocument doc;
  doc.command = "kauffman";
  const PlanarDiagram d = PlanarDiagram::parse(pd_text);
  doc.inputs["pd"] = d.to_string();
  doc.inputs["list"] = list;
  const auto states = enumerate_states(d);
  doc.result["diagram"] = d.to_string();
  doc.result["count"] = states.size();
  if (list) {
    json arr = json::array();
    for (const auto& st : states) arr.push_back(state_json(st, {}));
    doc.result["states"] = arr;
  }
  return doc;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<CheckResult> family_checks(int n) {
  std::vector<CheckResult> out;
  const std::string tag = "n=" + std::to_string(n);
  const HomologyTable closed = hfl_closed_form(n);

  for (HalfInt s : hfl_classes(n)) {
    const GradedComplex c = build_hfl_complex(n, s);
    const HomologyTable h = homology(c);
    const std::string where = tag + " s=" + s.to_string();
    out.push_back({where + " closed_form", h == closed.restricted_to(s) && !h.has_torsion(), ""});
    out.push_back({where + " euler_zero", euler_characteristic(c).is_zero(), ""});
  }
  for (std::int64_t twice : {2 * n + 1, 2 * n + 3}) {
    for (HalfInt s : {HalfInt::from_twice(twice), HalfInt::from_twice(-twice)}) {
      out.push_back({tag + " s=" + s.to_string() + " trivial_above_genus", homology(build_hfl_complex(n, s)).empty(), ""});
    }
  }
  out.push_back({tag + " symmetry", verify_symmetry(n), ""});
  out.push_back({tag + " genus_fibered", verify_genus_and_fibered(n), ""});

  const HomologyTable wh = whitehead_hfk_one(n);
  out.push_back({tag + " whitehead_table", wh == whitehead_expected_table(n) && wh.total_rank() == 4 * n, ""});

  const LaurentPoly delta = torus_alexander(n);
  out.push_back({tag + " alexander_state_sum", alexander_from_states(n) == delta, ""});
  const auto count = enumerate_states(build_torus_diagram(n)).size();
  out.push_back({tag + " kauffman_determinant",
                 count == static_cast<std::size_t>(2 * n + 1) && abs(delta.value_at_minus_one()) == 2 * n + 1,
                 std::to_string(count) + " states"});
  return out;
}

}  // namespace

ReportDocument cmd_verify(int max_n) {
  require_positive(max_n, "--max-n");
  ReportDocument doc;
  doc.command = "verify";
  doc.inputs["max_n"] = max_n;

  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (int n = 1; n <= max_n; ++n) jobs.push_back(std::async(std::launch::async, family_checks, n));
  for (auto& job : jobs) {
    auto part = job.get();
    doc.checks.insert(doc.checks.end(), part.begin(), part.end());
  }

  int passed = 0;
  json first_failure = nullptr;
  for (const CheckResult& c : doc.checks) {
    if (c.pass) {
      ++passed;
    } else if (first_failure.is_null()) {
      first_failure = c.name;
    }
  }
  doc.result["passed"] = passed;
  doc.result["failed"] = static_cast<int>(doc.checks.size()) - passed;
  doc.result["first_failure"] = first_failure;
  return doc;
}

}  // namespace hflkit
