#include "liebranch/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "liebranch/io.hpp"
#include "liebranch/rules.hpp"

namespace liebranch {

namespace {

struct Options {
  std::string format = "lie";
  std::string out_path;

  std::string case_name;
  std::optional<int> m, p, q;
  std::string weight;
  std::string weights;
  std::string type;
  std::vector<int> cross;
  bool be = false;
};

CaseId case_from(const Options& o) {
  const std::string& name = o.case_name;
  const int count = case_param_count(name);
  std::vector<int> params;
  if (count == 1) {
    if (!o.m) throw UsageError("case " + name + " needs --m");
    params = {*o.m};
  } else if (count == 2) {
    if (!o.p || !o.q) throw UsageError("case " + name + " needs --p and --q");
    params = {*o.p, *o.q};
  } else if (o.m || o.p || o.q) {
    throw UsageError("case " + name + " takes no parameters");
  }
  return CaseId::make(name, params);
}

IntVec weight_for(const LieType& g, const std::string& text) {
  if (text.empty()) throw UsageError("missing --weight");
  IntVec w = parse_weight(text);
  if (static_cast<int>(w.size()) != g.semisimple_rank()) {
    throw UsageError("weight has " + std::to_string(w.size()) + " entries, " + g.name() + " needs " +
                     std::to_string(g.semisimple_rank()));
  }
  if (std::any_of(w.begin(), w.end(), [](int c) { return c < 0; })) {
    throw UsageError("weight entries must be nonnegative");
  }
  return w;
}

SimpleSubset crossed_from(const Options& o, int rank) {
  std::vector<int> c = o.cross;
  std::sort(c.begin(), c.end());
  if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw UsageError("a node is crossed twice");
  return SimpleSubset(c, rank);
}

std::string render(const Decomposition& d, const LieType& g, const IntVec& input, const Options& o) {
  if (o.format == "json") return to_json(d, g, input) + "\n";
  return to_lie_text(d) + "\n";
}

std::string run(const std::string& verb, const Options& o) {
  if (verb == "case") {
    RestrictionSpec spec = catalog_spec(case_from(o));
    IntVec w = weight_for(spec.g, o.weight);
    return render(branch(spec, Weight(w)), spec.g, w, o);
  }
  if (verb == "levi") {
    SimpleLieType g = LieType::parse(o.type).simple();
    IntVec w = weight_for(LieType{g}, o.weight);
    auto mode = o.be ? LeviOutput::baston_eastwood : LeviOutput::native;
    return render(levi_branch(g, crossed_from(o, g.rank()), Weight(w), mode), LieType{g}, w, o);
  }
  if (verb == "resmat") {
    RestrictionSpec spec;
    if (!o.case_name.empty()) {
      spec = catalog_spec(case_from(o));
    } else {
      if (o.type.empty()) throw UsageError("resmat needs a case name or --type with --cross");
      SimpleLieType g = LieType::parse(o.type).simple();
      spec = levi_spec(g, crossed_from(o, g.rank()));
    }
    if (o.format == "json") return spec_to_json(spec) + "\n";
    return render_matrix(spec);
  }
  if (verb == "tensor" || verb == "diag") {
    LieType t = LieType::parse(o.type);
    if (o.weights.empty()) throw UsageError("missing --weights");
    std::vector<Weight> rows;
    IntVec flat;
    for (const auto& text : parse_weights(o.weights)) {
      std::ostringstream s;
      for (std::size_t i = 0; i < text.size(); ++i) s << (i ? "," : "") << text[i];
      rows.emplace_back(weight_for(t, s.str()));
      flat.insert(flat.end(), text.begin(), text.end());
    }
    Decomposition d;
    if (verb == "tensor") {
      if (rows.size() != 2) throw UsageError("tensor needs exactly two weights");
      d = tensor(t, rows[0], rows[1]);
    } else {
      d = branch_diag(t.simple(), rows);
    }
    return render(d, t, flat, o);
  }
  // dim
  LieType t = LieType::parse(o.type);
  IntVec w = weight_for(t, o.weight);
  BigInt d = dim(t, Weight(w));
  if (o.format == "json") {
    nlohmann::json j{{"g", t.name()}, {"weight", w}, {"dim", d.str()}};
    return j.dump(2) + "\n";
  }
  return d.str() + "\n";
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Branching rules for compact simple Lie algebras", "liebranch"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"lie", "json"}));
  app.add_option("--out", o.out_path, "Write the result to a file");

  auto add_case_params = [&](CLI::App* s) {
    s->add_option("--m", o.m, "Case parameter m");
    s->add_option("--p", o.p, "Case parameter p");
    s->add_option("--q", o.q, "Case parameter q");
  };
  auto add_cross = [&](CLI::App* s) {
    s->add_option("--cross", o.cross, "Crossed node (repeatable)")->delimiter(',');
  };

  CLI::App* c = app.add_subcommand("case", "Branch through a named case");
  c->add_option("name", o.case_name, "Case name")->required();
  add_case_params(c);
  c->add_option("--weight", o.weight, "Highest weight, comma separated")->required();

  CLI::App* l = app.add_subcommand("levi", "Branch to a Levi subalgebra");
  l->add_option("--type", o.type, "Simple type of g")->required();
  add_cross(l);
  l->add_option("--weight", o.weight, "Highest weight")->required();
  l->add_flag("--be", o.be, "Report components in g's weight coordinates");

  CLI::App* r = app.add_subcommand("resmat", "Print a restriction matrix");
  r->add_option("name", o.case_name, "Case name");
  add_case_params(r);
  r->add_option("--type", o.type, "Simple type of g for a Levi matrix");
  add_cross(r);

  CLI::App* t = app.add_subcommand("tensor", "Tensor product of two irreducibles");
  t->add_option("--type", o.type, "Lie type")->required();
  t->add_option("--weights", o.weights, "Two weights separated by ';'")->required();

  CLI::App* d = app.add_subcommand("diag", "Diagonal branching of a product of copies");
  d->add_option("--type", o.type, "Simple Lie type")->required();
  d->add_option("--weights", o.weights, "Weights separated by ';'")->required();

  CLI::App* m = app.add_subcommand("dim", "Dimension of an irreducible");
  m->add_option("--type", o.type, "Lie type")->required();
  m->add_option("--weight", o.weight, "Highest weight")->required();

  for (CLI::App* s : {c, l, r, t, d, m}) s->fallthrough();

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << one_line(e.what()) << "\n";
    return kExitUsage;
  }

  try {
    const std::string verb = app.get_subcommands().front()->get_name();
    std::string result = run(verb, o);
    if (!o.out_path.empty()) {
      std::ofstream f(o.out_path);
      if (!f) throw UsageError("cannot open " + o.out_path + " for writing");
      f << result;
    } else {
      out << result;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << one_line(e.what()) << "\n";
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << one_line(e.what()) << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << one_line(e.what()) << "\n";
    return kExitInvariant;
  }
}

}  // namespace liebranch
