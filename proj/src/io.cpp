#include "coarse/io.hpp"

#include <istream>
#include <ostream>

#include "coarse/errors.hpp"

namespace coarse {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json number_json(const Number& x, Domain domain) {
  if (domain == Domain::Integers && is_integer(x) && x.get_num().fits_slong_p()) {
    return Json(x.get_num().get_si());
  }
  return Json(to_string(x));
}

const Json& field(const Json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::uint64_t positive_int(const Json& j, const std::string& name) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0) {
    throw SpecError(name + " must be a positive integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

Number number_from_json(const Json& j) {
  if (j.is_number_integer()) return Number(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return parse_number(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json spec_to_json(const PartitionSpec& spec) {
  Json j;
  const Domain d = spec.domain;
  std::visit(overloaded{
                 [&](const FixedWidth& k) {
                   j["kind"] = "fixed_width";
                   j["width"] = k.width;
                 },
                 [&](const Fibonacci&) { j["kind"] = "fibonacci"; },
                 [&](const WidthList& k) {
                   j["kind"] = "widths";
                   j["widths"] = k.widths;
                 },
                 [&](const EpsilonGrowth& k) {
                   j["kind"] = "epsilon";
                   j["epsilon"] = to_string(k.epsilon);
                 },
                 [&](const ExplicitBounds& k) {
                   j["kind"] = "explicit";
                   Json b = Json::array();
                   for (const auto& x : k.boundaries) b.push_back(number_json(x, d));
                   j["bounds"] = b;
                 },
                 [&](const ExplicitCells& k) {
                   j["kind"] = "explicit";
                   Json b = Json::array();
                   for (const auto& [lo, hi] : k.cells) {
                     b.push_back(Json::array({number_json(lo, d), number_json(hi, d)}));
                   }
                   j["bounds"] = b;
                 },
                 [&](const Singleton& k) {
                   j["kind"] = "singleton";
                   j["step"] = to_string(k.step);
                 },
             },
             spec.kind);
  j["domain"] = to_string(d);
  return j;
}

PartitionSpec spec_from_json(const Json& j) try {
  if (!j.is_object()) throw ParseError("partition spec must be a JSON object");
  const std::string kind = field(j, "kind").get<std::string>();
  PartitionSpec spec;
  if (j.contains("domain")) {
    const std::string d = j.at("domain").get<std::string>();
    if (d == "int") {
      spec.domain = Domain::Integers;
    } else if (d == "real") {
      spec.domain = Domain::Reals;
    } else {
      throw ParseError("domain must be \"int\" or \"real\", got \"" + d + "\"");
    }
  } else {
    spec.domain = kind == "epsilon" ? Domain::Reals : Domain::Integers;
  }

  if (kind == "fixed_width") {
    spec.kind = FixedWidth{positive_int(field(j, "width"), "width")};
  } else if (kind == "fibonacci") {
    spec.kind = Fibonacci{};
  } else if (kind == "widths") {
    WidthList w;
    for (const auto& x : field(j, "widths")) w.widths.push_back(positive_int(x, "widths[]"));
    spec.kind = std::move(w);
  } else if (kind == "epsilon") {
    spec.kind = EpsilonGrowth{number_from_json(field(j, "epsilon"))};
  } else if (kind == "singleton") {
    spec.kind = Singleton{j.contains("step") ? number_from_json(j.at("step")) : Number(1)};
  } else if (kind == "explicit") {
    const Json& b = field(j, "bounds");
    if (!b.is_array() || b.empty()) throw SpecError("bounds must be a non-empty array");
    if (b.front().is_array()) {
      ExplicitCells cells;
      for (const auto& pair : b) {
        if (!pair.is_array() || pair.size() != 2) {
          throw SpecError("bounds entries must all be [lo, hi] pairs");
        }
        cells.cells.emplace_back(number_from_json(pair[0]), number_from_json(pair[1]));
      }
      spec.kind = std::move(cells);
    } else {
      ExplicitBounds bounds;
      for (const auto& x : b) bounds.boundaries.push_back(number_from_json(x));
      spec.kind = std::move(bounds);
    }
  } else {
    throw ParseError("unknown partition kind \"" + kind + "\"");
  }
  return spec;
} catch (const Json::exception& e) {
  throw ParseError(std::string("malformed partition spec: ") + e.what());
}

Json step_to_json(const FoldStep& step) {
  Json j;
  j["n"] = step.n;
  j["x"] = to_string(step.x);
  j["x_cell"] = step.x_cell;
  j["s"] = to_string(step.s);
  j["s_cell"] = step.s_cell;
  j["absorbed"] = step.absorbed;
  return j;
}

FoldStep step_from_json(const Json& j) try {
  FoldStep s;
  s.n = field(j, "n").get<std::size_t>();
  s.x = number_from_json(field(j, "x"));
  s.x_cell = field(j, "x_cell").get<CellIndex>();
  s.s = number_from_json(field(j, "s"));
  s.s_cell = field(j, "s_cell").get<CellIndex>();
  s.absorbed = field(j, "absorbed").get<bool>();
  return s;
} catch (const Json::exception& e) {
  throw ParseError(std::string("malformed trace step: ") + e.what());
}

void write_trace_jsonl(std::ostream& os, const FoldTrace& trace) {
  for (const auto& step : trace) os << step_to_json(step).dump() << '\n';
}

FoldTrace read_trace_jsonl(std::istream& is) {
  FoldTrace trace;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      trace.push_back(step_from_json(Json::parse(line)));
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return trace;
}

void write_trace_csv(std::ostream& os, const FoldTrace& trace) {
  os << "n,x,x_cell,s,s_cell,absorbed\n";
  for (const auto& s : trace) {
    os << s.n << ',' << to_string(s.x) << ',' << s.x_cell << ',' << to_string(s.s) << ','
       << s.s_cell << ',' << (s.absorbed ? "true" : "false") << '\n';
  }
}

Json verdict_to_json(const InertVerdict& v) {
  Json j;
  std::visit(overloaded{
                 [&](const InertAt& a) {
                   j["outcome"] = "inert";
                   j["N"] = a.step;
                   j["cell"] = a.cell;
                   j["value"] = to_string(a.value);
                   j["certified"] = a.certified;
                 },
                 [&](const NoVerdict& n) {
                   j["outcome"] = "no_verdict";
                   j["horizon"] = n.horizon;
                   j["cell_advances"] = n.cell_advances;
                 },
             },
             v);
  return j;
}

InertVerdict verdict_from_json(const Json& j) try {
  const std::string outcome = field(j, "outcome").get<std::string>();
  if (outcome == "inert") {
    return InertAt{field(j, "N").get<std::size_t>(), field(j, "cell").get<CellIndex>(),
                   number_from_json(field(j, "value")),
                   j.contains("certified") && j.at("certified").get<bool>()};
  }
  if (outcome == "no_verdict") {
    return NoVerdict{field(j, "horizon").get<std::size_t>(),
                     j.value("cell_advances", std::size_t{0})};
  }
  throw ParseError("unknown verdict outcome \"" + outcome + "\"");
} catch (const Json::exception& e) {
  throw ParseError(std::string("malformed verdict: ") + e.what());
}

Json report_to_json(const ValuationReport& r) {
  Json j;
  j["epsilon"] = to_string(r.epsilon);
  j["depth"] = r.depth;
  Json sums = Json::array();
  for (const auto& s : r.classical_partial_sums) sums.push_back(to_string(s));
  j["classical_partial_sums"] = sums;
  j["coarse_verdict"] = verdict_to_json(r.coarse_verdict);
  j["membership_verdict"] = verdict_to_json(r.membership_verdict);
  j["formula_index"] = r.formula_index;
  j["scan_index"] = r.scan_index ? Json(*r.scan_index) : Json(nullptr);
  j["agreement"] = r.agreement;
  return j;
}

Json sampled_to_json(const SampledValuation& s) {
  Json j;
  j["trials"] = s.trials;
  j["seed"] = s.seed;
  j["truncation"] = s.truncation;
  j["rng"] = std::string(kRngName);
  j["classical_sum"] = to_string(s.classical_sum);
  j["mean"] = to_string(s.mean);
  j["verdict"] = verdict_to_json(s.verdict);
  return j;
}

}  // namespace coarse
