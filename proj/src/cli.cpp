#include "catpark/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "catpark/caterpillar.hpp"
#include "catpark/decomposition.hpp"
#include "catpark/generating_functions.hpp"
#include "catpark/tables.hpp"
#include "catpark/verify.hpp"

namespace catpark {

namespace {

using nlohmann::json;

/// A bad flag value or combination detected after parsing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr std::uint64_t kCliMaxObjects = 10'000'000;
constexpr std::size_t kCliMaxOrder = 40;

const std::map<std::string, OutputFormat> kFormats{
    {"text", OutputFormat::text}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};

struct Options {
  OutputFormat format = OutputFormat::text;
  std::uint64_t max_objects = kCliMaxObjects;
  std::size_t max_order = kCliMaxOrder;

  int m = 0;
  std::size_t n = 0;
  std::optional<int> k;
  std::optional<int> r;
  std::string kind = "u";
  std::string seq;
  std::string name;
  std::string form = "corrected";
  std::string source = "brute";
  int table_id = 0;

  std::string scope = "all";
  std::optional<int> verify_m;
  std::optional<std::size_t> verify_n;
  std::optional<std::size_t> order;
  std::string json_path;
  bool no_timing = false;
  std::string mutate = "none";
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->option_text("TEXT:{text,csv,json} [text]");
}

void add_max_objects(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-objects", o.max_objects, "Refuse enumerations larger than this")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

void add_m(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "Caterpillar regularity m >= 1")->required()->check(CLI::Range(1, 64));
}

BoundFamily family_from(const Options& o) {
  const int k = o.k.value_or(1);
  const int r = o.r.value_or(o.m - 1);
  if (k < 1) throw UsageError("--k must be >= 1");
  if (r < 0 || r > o.m - 1) throw UsageError("--r must lie in [0, m-1]");
  return BoundFamily(o.m, k, r);
}

ParkingSeq parse_seq(const std::string& text) {
  try {
    return ParkingSeq::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--seq: ") + e.what());
  }
}

/// n with |Cat_m(n)| = length, for sequences on caterpillar nodes.
int tree_size_for(std::size_t length, int m) {
  if (length == 0 || (length - 1) % static_cast<std::size_t>(m) != 0) {
    throw UsageError("--seq: length " + std::to_string(length) + " is not mn-m+1 for any n >= 1");
  }
  return static_cast<int>((length - 1) / static_cast<std::size_t>(m)) + 1;
}

json seq_json(const ParkingSeq& p) { return json(p.values()); }

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// ---- verbs ----------------------------------------------------------------

int cmd_enumerate(const Options& o, std::ostream& out) {
  std::vector<ParkingSeq> seqs;
  json family;
  if (o.kind == "u") {
    const BoundFamily f = family_from(o);
    seqs = enumerate_u_pk(o.n, f, o.max_objects);
    family = json{{"m", f.m()}, {"k", f.k()}, {"r", f.r()}};
  } else {
    if (o.k || o.r) throw UsageError(o.k ? "--k applies only to --kind u" : "--r applies only to --kind u");
    if (o.n < 1) throw UsageError("--n must be >= 1 for --kind tree");
    seqs = enumerate_caterpillar_pk(o.m, static_cast<int>(o.n), o.max_objects);
  }

  if (o.format == OutputFormat::json) {
    json rows = json::array();
    for (const auto& p : seqs) rows.push_back(seq_json(p));
    json j{{"kind", o.kind}, {"m", o.m}, {"n", o.n}, {"count", seqs.size()}, {"sequences", rows}};
    if (!family.is_null()) j["family"] = family;
    emit_json(out, j);
    return kExitOk;
  }
  if (o.format == OutputFormat::csv) {
    const std::size_t width = seqs.empty() ? 0 : seqs.front().size();
    for (std::size_t i = 1; i <= width; ++i) out << (i > 1 ? "," : "") << 'p' << i;
    out << '\n';
    for (const auto& p : seqs) out << p.to_csv() << '\n';
    return kExitOk;
  }
  for (const auto& p : seqs) out << p.to_display() << '\n';
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const BoundFamily f = family_from(o);
  const BigInt count = count_u_pk(o.n, f);
  switch (o.format) {
    case OutputFormat::json:
      emit_json(out, json{{"m", f.m()}, {"k", f.k()}, {"r", f.r()}, {"n", o.n}, {"count", to_string(count)}});
      break;
    case OutputFormat::csv:
      out << "m,k,r,n,count\n" << f.m() << ',' << f.k() << ',' << f.r() << ',' << o.n << ',' << count << '\n';
      break;
    case OutputFormat::text:
      out << count << '\n';
      break;
  }
  return kExitOk;
}

/// Ordered (name, value) pairs rendered by every format.
using Record = std::vector<std::pair<std::string, json>>;

void emit_record(const Record& record, OutputFormat format, std::ostream& out) {
  auto plain = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (format == OutputFormat::json) {
    json j = json::object();
    for (const auto& [key, value] : record) j[key] = value;
    emit_json(out, j);
  } else if (format == OutputFormat::csv) {
    out << "statistic,value\n";
    for (const auto& [key, value] : record) out << csv_cell(key) << ',' << csv_cell(plain(value)) << '\n';
  } else {
    for (const auto& [key, value] : record) out << key << ": " << plain(value) << '\n';
  }
}

int cmd_stats(const Options& o, std::ostream& out) {
  const ParkingSeq p = parse_seq(o.seq);
  Record record;
  if (o.kind == "u") {
    if (!is_u_pk(p, BoundFamily::canonical(o.m))) {
      throw UsageError("--seq: " + p.to_display() + " is not in PK(n; (1, m+1, 2m+1, ...))");
    }
    record.emplace_back("luck", u_luck(p, o.m));
    for (int j = 1; j <= o.m + 1; ++j) record.emplace_back("omega_" + std::to_string(j), u_omega(p, j));
    if (!p.empty()) {
      record.emplace_back("f", f_stat(p, o.m));
      record.emplace_back("g", g_stat(p, o.m));
      record.emplace_back("fixed_points", json(fixed_points(p, o.m).indices));
    }
  } else {
    const CaterpillarTree tree(o.m, tree_size_for(p.size(), o.m));
    if (p.values().back() > tree.node_count()) {
      throw UsageError("--seq: preference " + std::to_string(p.values().back()) + " exceeds the sink label " +
                       std::to_string(tree.sink()));
    }
    const ParkingOutcome outcome = simulate(tree, p);
    record.emplace_back("parked", outcome.all_parked());
    record.emplace_back("luck", outcome.lucky_set.size());
    for (int j = 1; j <= o.m; ++j) record.emplace_back("omega_" + std::to_string(j), omega_tree(p, j));
    record.emplace_back("lucky_cars", json(outcome.lucky_set));
    json assignment = json::array();
    for (const auto& a : outcome.assignment) assignment.push_back(a ? json(*a) : json(nullptr));
    record.emplace_back("assignment", assignment);
  }
  emit_record(record, o.format, out);
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const ParkingSeq p = parse_seq(o.seq);
  if (p.empty()) throw UsageError("--seq: the empty sequence has no decomposition");
  if (!is_u_pk(p, BoundFamily::canonical(o.m))) {
    throw UsageError("--seq: " + p.to_display() + " is not in PK(n; (1, m+1, 2m+1, ...))");
  }
  const auto d = decompose(p, o.m);
  if (o.format == OutputFormat::json) {
    json components = json::array();
    for (const auto& c : d.components) components.push_back(seq_json(c));
    emit_json(out, json{{"m", o.m}, {"p", seq_json(p)}, {"fixed_points", d.fixed_points.indices},
                        {"components", components}});
    return kExitOk;
  }
  Record record;
  for (std::size_t l = 0; l < d.fixed_points.indices.size(); ++l) {
    record.emplace_back("i_" + std::to_string(l + 1), d.fixed_points.indices[l]);
  }
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    record.emplace_back("p_" + std::to_string(j + 1),
                        o.format == OutputFormat::csv ? d.components[j].to_csv() : d.components[j].to_display());
  }
  emit_record(record, o.format, out);
  return kExitOk;
}

int cmd_map(const Options& o, std::ostream& out) {
  std::string input = o.seq;
  std::string output;
  json output_json;
  const int m = o.m;
  auto require_u = [&](const ParkingSeq& p) {
    if (!is_u_pk(p, BoundFamily::canonical(m))) {
      throw UsageError("--seq: " + p.to_display() + " is not in PK(n; (1, m+1, 2m+1, ...))");
    }
  };
  auto nonempty = [&](const ParkingSeq& p) {
    if (p.empty()) throw UsageError("--seq: --name " + o.name + " needs a nonempty sequence");
  };
  auto set_seq = [&](const ParkingSeq& p) {
    output = p.to_csv();
    output_json = seq_json(p);
  };

  if (o.name == "delattice") {
    try {
      set_seq(from_lattice_path(o.seq, m));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--seq: ") + e.what());
    }
  } else {
    const ParkingSeq p = parse_seq(o.seq);
    input = p.to_csv();
    if (o.name == "tau") {
      require_u(p);
      set_seq(tau(p, m));
    } else if (o.name == "eta" || o.name == "eta-inv") {
      require_u(p);
      nonempty(p);
      try {
        set_seq(o.name == "eta" ? eta(p, m) : eta_inv(p, m));
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--seq: ") + e.what());
      }
    } else if (o.name == "theta") {
      require_u(p);
      set_seq(theta(p, m, static_cast<int>(p.size())));
    } else if (o.name == "theta-inv") {
      try {
        set_seq(theta_inv(p, m, tree_size_for(p.size(), m)));
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        throw UsageError(std::string("--seq: ") + e.what());
      }
    } else {
      require_u(p);
      output = to_lattice_path(p, m);
      output_json = output;
    }
  }

  switch (o.format) {
    case OutputFormat::json:
      emit_json(out, json{{"map", o.name}, {"m", m}, {"input", input}, {"output", output_json}});
      break;
    case OutputFormat::csv:
      out << "input,output\n" << csv_cell(input) << ',' << csv_cell(output) << '\n';
      break;
    case OutputFormat::text:
      out << output << '\n';
      break;
  }
  return kExitOk;
}

int cmd_poly(const Options& o, std::ostream& out) {
  const Form form = o.form == "corrected" ? Form::corrected : Form::paper_literal;
  if (o.source == "brute" && o.form != "corrected") {
    throw UsageError("--form applies only to --source closed");
  }
  if (o.source == "closed" && o.n > o.max_order) {
    throw ResourceLimitError("--n " + std::to_string(o.n) + " exceeds --max-order " + std::to_string(o.max_order));
  }
  if (o.name == "multi" && o.source == "brute" && o.n == 0) {
    throw UsageError("--n must be >= 1 for --name multi --source brute");
  }

  MultiPoly poly;
  if (o.source == "brute") {
    if (o.name == "R") poly = r_poly_brute(o.m, o.n, o.max_objects);
    else if (o.name == "gamma") poly = gamma_poly_brute(o.m, o.n, o.max_objects);
    else poly = multi_stat_poly_brute(o.m, o.n, o.max_objects);
  } else {
    if (o.name == "R") poly = r_series_closed(o.m, o.n, form).coefficient(o.n);
    else if (o.name == "gamma") poly = gamma_series_closed(o.m, o.n, form).coefficient(o.n);
    else poly = multi_stat_series_closed(o.m, o.n, form).coefficient(o.n);
  }

  switch (o.format) {
    case OutputFormat::json: {
      json j{{"name", o.name}, {"m", o.m}, {"n", o.n}, {"source", o.source}, {"polynomial", poly.to_json()},
             {"text", poly.to_string()}};
      if (o.source == "closed") j["form"] = o.form;
      emit_json(out, j);
      break;
    }
    case OutputFormat::csv: {
      for (const auto& v : poly.variables()) out << csv_cell(v) << ',';
      out << "coefficient\n";
      for (const auto& [e, c] : poly.terms()) {
        for (auto x : e) out << x << ',';
        out << c << '\n';
      }
      break;
    }
    case OutputFormat::text:
      out << poly.to_string() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_tensor(const Options& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be >= 1");
  const JointCountTensor t = joint_count_tensor(o.m, o.n, o.max_objects);
  const auto violations = t.equal_sum_violations();
  if (o.format == OutputFormat::json) {
    json entries = json::array();
    for (const auto& [k, c] : t.entries) entries.push_back(json{{"k", k}, {"count", to_string(c)}});
    emit_json(out, json{{"m", o.m}, {"n", o.n}, {"entries", entries}, {"total", to_string(t.total())},
                        {"equal_sum_symmetric", violations.empty()},
                        {"mass_outside_positive_box", to_string(t.mass_outside_positive_box())}});
    return kExitOk;
  }
  if (o.format == OutputFormat::csv) {
    for (int i = 0; i <= o.m; ++i) out << 'k' << i << ',';
    out << "count\n";
    for (const auto& [k, c] : t.entries) {
      for (auto x : k) out << x << ',';
      out << c << '\n';
    }
    return kExitOk;
  }
  for (const auto& [k, c] : t.entries) {
    out << '(';
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? ", " : "") << k[i];
    out << "): " << c << '\n';
  }
  out << "total: " << t.total() << '\n';
  out << "equal-sum symmetric on [1, n]^" << (o.m + 1) << ": " << (violations.empty() ? "yes" : "no") << '\n';
  return kExitOk;
}

int cmd_tables(const Options& o, std::ostream& out) {
  out << reference_table(o.table_id).render(o.format);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions v;
  v.scope = o.scope;
  v.m = o.verify_m;
  v.n = o.verify_n;
  v.order = o.order;
  v.max_objects = o.max_objects;
  const auto mutation = parse_mutation(o.mutate);
  if (!mutation) throw UsageError("--mutate: unknown mutation '" + o.mutate + "'");
  v.mutation = *mutation;
  if (o.order && *o.order > o.max_order) {
    throw ResourceLimitError("--order " + std::to_string(*o.order) + " exceeds --max-order " +
                             std::to_string(o.max_order));
  }

  auto results = run_verification(v);
  if (o.no_timing) {
    for (auto& r : results) r.millis = 0;
  }
  json report = json::array();
  for (const auto& r : results) report.push_back(r.to_json());

  if (!o.json_path.empty()) {
    std::ofstream file(o.json_path);
    if (!file) throw UsageError("--json: cannot open '" + o.json_path + "' for writing");
    file << report.dump(2) << '\n';
  }

  std::map<CheckStatus, std::size_t> tally;
  for (const auto& r : results) ++tally[r.status];
  if (o.format == OutputFormat::json) {
    emit_json(out, report);
  } else if (o.format == OutputFormat::csv) {
    out << "identity,status,params,counterexample\n";
    for (const auto& r : results) {
      out << csv_cell(r.identity) << ',' << to_string(r.status) << ',' << csv_cell(r.params.dump()) << ','
          << csv_cell(r.counterexample ? r.counterexample->dump() : "") << '\n';
    }
  } else {
    for (const auto& r : results) {
      std::string params;
      for (const auto& [key, value] : r.params.items()) {
        params += (params.empty() ? "" : " ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
      }
      out << to_string(r.status) << std::string(9 - to_string(r.status).size(), ' ') << r.identity << "  " << params;
      if (r.counterexample) out << "  " << r.counterexample->dump();
      out << '\n';
    }
    out << "summary: " << tally[CheckStatus::pass] << " pass, " << tally[CheckStatus::fail] << " fail, "
        << tally[CheckStatus::erratum] << " erratum\n";
  }
  return verification_succeeded(results) ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Parking distributions on caterpillar trees: enumeration, bijections and generating functions",
               "catpark"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List PK(n; u) or the parking distributions on Cat_m(n)");
  add_m(enumerate, o);
  enumerate->add_option("--n", o.n, "Length")->required();
  enumerate->add_option("--kind", o.kind, "u: bounded sequences; tree: caterpillar distributions")
      ->check(CLI::IsMember({"u", "tree"}));
  enumerate->add_option("--k", o.k, "Bound family parameter k (default 1)");
  enumerate->add_option("--r", o.r, "Bound family parameter r (default m-1)");
  add_format(enumerate, o);
  add_max_objects(enumerate, o);

  auto* count = app.add_subcommand("count", "Count PK(n; u) for u_i = m(i+k-1)-r");
  add_m(count, o);
  count->add_option("--n", o.n, "Length")->required();
  count->add_option("--k", o.k, "Bound family parameter k (default 1)");
  count->add_option("--r", o.r, "Bound family parameter r (default m-1)");
  add_format(count, o);

  auto* stats = app.add_subcommand("stats", "Statistics of one sequence");
  add_m(stats, o);
  stats->add_option("--seq", o.seq, "Comma-separated sequence")->required();
  stats->add_option("--kind", o.kind, "u: bounded sequence; tree: preferences on Cat_m(n)")
      ->check(CLI::IsMember({"u", "tree"}));
  add_format(stats, o);

  auto* decomp = app.add_subcommand("decompose", "First-return decomposition");
  add_m(decomp, o);
  decomp->add_option("--seq", o.seq, "Comma-separated sequence")->required();
  add_format(decomp, o);

  auto* map = app.add_subcommand("map", "Apply a bijection");
  map->add_option("--name", o.name, "Bijection")
      ->required()
      ->check(CLI::IsMember({"tau", "eta", "eta-inv", "theta", "theta-inv", "lattice", "delattice"}));
  add_m(map, o);
  map->add_option("--seq", o.seq, "Comma-separated sequence, or an N/E word for delattice")->required();
  add_format(map, o);

  auto* poly = app.add_subcommand("poly", "Statistic polynomials");
  poly->add_option("--name", o.name, "R, gamma or multi")->required()->check(CLI::IsMember({"R", "gamma", "multi"}));
  add_m(poly, o);
  poly->add_option("--n", o.n, "Length")->required();
  poly->add_option("--source", o.source, "brute: enumeration; closed: series coefficient")
      ->check(CLI::IsMember({"brute", "closed"}));
  poly->add_option("--form", o.form, "Closed form variant")->check(CLI::IsMember({"corrected", "paper-literal"}));
  poly->add_option("--max-order", o.max_order, "Largest series order")->capture_default_str();
  add_format(poly, o);
  add_max_objects(poly, o);

  auto* tensor = app.add_subcommand("tensor", "Joint counts B_m(n, k_0, ..., k_m)");
  add_m(tensor, o);
  tensor->add_option("--n", o.n, "Length")->required();
  add_format(tensor, o);
  add_max_objects(tensor, o);

  auto* tables = app.add_subcommand("tables", "Reference tables");
  tables->add_option("--id", o.table_id, "Table id")->required()->check(CLI::Range(kFirstTableId, kLastTableId));
  add_format(tables, o);

  auto* verify = app.add_subcommand("verify", "Run the identity checks");
  verify->add_option("--scope", o.scope, "Which checks")->check(CLI::IsMember(verify_scopes()));
  verify->add_option("--m", o.verify_m, "Restrict to one m")->check(CLI::Range(1, 64));
  verify->add_option("--n", o.verify_n, "Largest length for enumeration checks");
  verify->add_option("--order", o.order, "Series truncation order");
  verify->add_option("--max-order", o.max_order, "Largest series order")->capture_default_str();
  verify->add_option("--json", o.json_path, "Also write the JSON report to this file");
  verify->add_flag("--no-timing", o.no_timing, "Report millis as 0");
  verify->add_option("--mutate", o.mutate, "Seed a formula mutation (smoke test)")
      ->check(CLI::IsMember(mutation_names()));
  add_format(verify, o);
  add_max_objects(verify, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*count) return cmd_count(o, out);
    if (*stats) return cmd_stats(o, out);
    if (*decomp) return cmd_decompose(o, out);
    if (*map) return cmd_map(o, out);
    if (*poly) return cmd_poly(o, out);
    if (*tensor) return cmd_tensor(o, out);
    if (*tables) return cmd_tables(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace catpark
