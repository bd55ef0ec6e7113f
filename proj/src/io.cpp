#include "liebranch/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace liebranch {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

long long parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::string bracket(const Weight& w) {
  std::string s = "[";
  bool first = true;
  for (int c : w.coords) {
    s += (first ? "" : ",") + std::to_string(c);
    first = false;
  }
  for (const auto& z : w.central) {
    s += (first ? "" : ",") + format_rational(z);
    first = false;
  }
  return s + "]";
}

}  // namespace

IntVec parse_weight(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = trim(t.substr(1, t.size() - 2));
  IntVec out;
  if (t.empty()) return out;
  for (auto part : split(t, ',')) {
    long long v = parse_int(part, text);
    if (v < INT32_MIN || v > INT32_MAX) throw UsageError("weight entry out of range in '" + std::string(text) + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::vector<IntVec> parse_weights(std::string_view text) {
  std::vector<IntVec> out;
  for (auto part : split(text, ';')) out.push_back(parse_weight(part));
  return out;
}

std::string to_lie_text(const Decomposition& d) {
  if (d.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, m] : d.terms) {
    if (!s.empty()) s += " +";
    s += std::to_string(m) + "X" + bracket(w);
  }
  return s;
}

Decomposition parse_lie_text(std::string_view text, const LieType& type) {
  Decomposition d{type, {}};
  std::string_view t = trim(text);
  if (t == "0") return d;
  const int nc = type.torus_rank();
  for (auto term : split(t, '+')) {
    term = trim(term);
    if (term.empty()) continue;
    auto x = term.find("X[");
    if (x == std::string_view::npos || term.back() != ']') {
      throw UsageError("bad term '" + std::string(term) + "'");
    }
    long long m = parse_int(term.substr(0, x), term);
    std::string_view body = trim(term.substr(x + 2, term.size() - x - 3));
    std::vector<std::string_view> parts;
    if (!body.empty()) parts = split(body, ',');
    if (static_cast<int>(parts.size()) < nc) throw UsageError("term '" + std::string(term) + "' is too short");
    Weight w;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (static_cast<int>(i) < static_cast<int>(parts.size()) - nc) {
        w.coords.push_back(static_cast<int>(parse_int(parts[i], term)));
      } else {
        w.central.push_back(parse_rational(trim(parts[i])));
      }
    }
    d.terms[w] += m;
  }
  return d;
}

std::string to_json(const Decomposition& d, const LieType& g, const IntVec& input) {
  nlohmann::json j;
  j["g"] = g.name();
  j["weight"] = input;
  j["k"] = d.type.name();
  j["components"] = nlohmann::json::array();
  for (const auto& [w, m] : d.terms) {
    std::vector<std::string> central;
    for (const auto& z : w.central) central.push_back(format_rational(z));
    j["components"].push_back({{"mult", m}, {"weight", w.coords}, {"central", central}});
  }
  return j.dump(2);
}

JsonResult parse_json(std::string_view text) {
  try {
    auto j = nlohmann::json::parse(text);
    JsonResult r;
    r.g = LieType::parse(j.at("g").get<std::string>());
    r.weight = j.at("weight").get<IntVec>();
    r.decomposition.type = LieType::parse(j.at("k").get<std::string>());
    for (const auto& c : j.at("components")) {
      Weight w(c.at("weight").get<IntVec>());
      for (const auto& z : c.at("central")) w.central.push_back(parse_rational(z.get<std::string>()));
      r.decomposition.terms[w] += c.at("mult").get<long long>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad JSON result: ") + e.what());
  }
}

std::string render_matrix(const RestrictionSpec& spec) {
  std::ostringstream os;
  os << spec.g.name() << " -> " << spec.k.name() << "\n";
  for (const auto& row : spec.matrix.entries) {
    os << "[";
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << "]\n";
  }
  if (!spec.matrix.central_cols.empty()) {
    os << "central columns";
    for (int c : spec.matrix.central_cols) os << " " << c + 1;
    os << " over " << spec.matrix.central_den << "\n";
  }
  return os.str();
}

RestrictionSpec spec_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    RestrictionSpec spec;
    spec.g = LieType::parse(j.at("g").get<std::string>());
    spec.k = LieType::parse(j.at("k").get<std::string>());
    spec.matrix.entries = j.at("rows").get<IntMatrix>();
    spec.matrix.central_cols = j.value("central_cols", std::vector<int>{});
    spec.matrix.central_den = j.value("central_den", 1LL);
    spec.provenance = j.value("provenance", std::string("data"));
    spec.k_cartan = cartan_matrix(spec.k);
    spec.perm.resize(spec.k.semisimple_rank());
    for (int i = 0; i < spec.k.semisimple_rank(); ++i) spec.perm[i] = i;
    if (spec.matrix.rows() != spec.g.rank() || spec.matrix.cols() != spec.k.rank() ||
        spec.matrix.semisimple_cols() != spec.k.semisimple_rank()) {
      throw UsageError("restriction data does not match the ranks of g and k");
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad restriction data: ") + e.what());
  }
}

std::string spec_to_json(const RestrictionSpec& spec) {
  nlohmann::json j;
  j["g"] = spec.g.name();
  j["k"] = spec.k.name();
  j["rows"] = spec.matrix.entries;
  j["central_cols"] = spec.matrix.central_cols;
  j["central_den"] = spec.matrix.central_den;
  j["provenance"] = spec.provenance;
  return j.dump();
}

}  // namespace liebranch
