#include "walks/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "walks/algebraic.hpp"
#include "walks/bfile.hpp"
#include "walks/closed_forms.hpp"
#include "walks/data.hpp"
#include "walks/identities.hpp"
#include "walks/suites.hpp"

namespace walks::cli {

using nlohmann::json;

WalkModel RunConfig::model() const { return WalkModel(parse_lattice(lattice), parse_region(region), start); }

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

Point parse_point(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected i,j but got '" + text + "'");
  try {
    std::size_t a = 0, b = 0;
    const int i = std::stoi(s.substr(0, comma), &a);
    const int j = std::stoi(s.substr(comma + 1), &b);
    if (a != comma || b != s.size() - comma - 1) throw std::invalid_argument("");
    return {i, j};
  } catch (const std::exception&) {
    throw std::invalid_argument("expected i,j but got '" + text + "'");
  }
}

namespace {

Point point_from_json(const json& v) {
  if (v.is_string()) return parse_point(v.get<std::string>());
  if (v.is_array() && v.size() == 2) return {v[0].get<int>(), v[1].get<int>()};
  throw std::invalid_argument("expected \"i,j\" or [i, j]");
}

template <class T>
T nonnegative(const json& v, const char* key) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw std::invalid_argument(std::string("config key '") + key + "' must be a nonnegative integer");
  return v.get<T>();
}

}  // namespace

void apply_config(RunConfig& c, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "lattice") c.lattice = v.get<std::string>();
    else if (key == "region") c.region = v.get<std::string>();
    else if (key == "start") c.start = point_from_json(v);
    else if (key == "endpoint") c.endpoint = point_from_json(v);
    else if (key == "n") c.n = nonnegative<int>(v, "n");
    else if (key == "order") c.order = nonnegative<std::size_t>(v, "order");
    else if (key == "heavy-order") c.heavy_order = nonnegative<std::size_t>(v, "heavy-order");
    else if (key == "max-length") c.max_length = nonnegative<long>(v, "max-length");
    else if (key == "suite") c.suite = v.get<std::string>();
    else if (key == "ids") c.ids = v.get<std::vector<std::string>>();
    else if (key == "format") c.format = parse_format(v.get<std::string>());
    else if (key == "threads") c.threads = nonnegative<unsigned>(v, "threads");
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

namespace {

class UsageFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json model_json(const RunConfig& c) {
  return {{"lattice", c.lattice}, {"region", c.region}, {"start", {c.start.i, c.start.j}}};
}

json uni_terms(const UniSeries& s) {
  json out = json::array();
  for (std::size_t n = 0; n < s.order(); ++n)
    for (int e = s[n].low(); !s[n].is_zero() && e <= s[n].high(); ++e)
      if (sgn(s[n].coeff(e)) != 0) out.push_back({{"t", n}, {"x", e}, {"c", to_string(s[n].coeff(e))}});
  return out;
}

json scalar_terms(const ScalarSeries& s) {
  json out = json::array();
  for (std::size_t n = 0; n < s.order(); ++n) out.push_back(to_string(s[n]));
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_count(const RunConfig& c, bool upto, std::ostream& out) {
  const WalkModel model = c.model();
  if (c.endpoint) {
    const auto tables = count_walks_upto(model, c.n, std::max(1u, c.threads));
    if (c.format == Format::Text) {
      out << tables.back().at(*c.endpoint).get_str() << "\n";
    } else if (c.format == Format::Csv) {
      out << "n,i,j,count\n";
      for (const auto& t : tables)
        if (upto || t.n == c.n)
          out << t.n << "," << c.endpoint->i << "," << c.endpoint->j << "," << t.at(*c.endpoint).get_str() << "\n";
    } else {
      json j = {{"model", model_json(c)}, {"n", c.n}, {"endpoint", {c.endpoint->i, c.endpoint->j}},
                {"count", tables.back().at(*c.endpoint).get_str()}};
      if (upto) {
        json seq = json::array();
        for (const auto& t : tables) seq.push_back(t.at(*c.endpoint).get_str());
        j["by_length"] = seq;
      }
      print_json(out, j);
    }
    return Success;
  }
  std::vector<CountTable> tables = count_walks_upto(model, c.n, std::max(1u, c.threads));
  if (!upto) tables.erase(tables.begin(), tables.end() - 1);
  if (c.format == Format::Csv) {
    out << "n,i,j,count\n";
    for (const auto& t : tables)
      for (const auto& [p, v] : t.counts) out << t.n << "," << p.i << "," << p.j << "," << v.get_str() << "\n";
  } else if (c.format == Format::Text) {
    for (const auto& t : tables) {
      out << "n=" << t.n << " total=" << t.total().get_str() << "\n";
      for (const auto& [p, v] : t.counts) out << "  (" << p.i << "," << p.j << ") " << v.get_str() << "\n";
    }
  } else {
    json layers = json::array();
    for (const auto& t : tables) {
      json l = t;
      l["total"] = t.total().get_str();
      layers.push_back(l);
    }
    print_json(out, {{"model", model_json(c)}, {"tables", layers}});
  }
  return Success;
}

int cmd_series(const RunConfig& c, std::ostream& out) {
  const WalkModel model = c.model();
  if (c.endpoint) {
    const ScalarSeries s = endpoint_series(model, *c.endpoint, c.order);
    if (c.format == Format::Text) {
      out << to_text(s);
    } else if (c.format == Format::Csv) {
      out << "t,count\n";
      for (std::size_t n = 0; n < s.order(); ++n) out << n << "," << to_string(s[n]) << "\n";
    } else {
      print_json(out, {{"model", model_json(c)},
                       {"endpoint", {c.endpoint->i, c.endpoint->j}},
                       {"order", c.order},
                       {"coefficients", scalar_terms(s)}});
    }
    return Success;
  }
  const SeriesT s = generating_series(model, c.order);
  if (c.format == Format::Text) {
    out << to_text(s);
    return Success;
  }
  json terms = json::array();
  std::ostringstream csv;
  csv << "t,i,j,count\n";
  for (std::size_t n = 0; n < s.order(); ++n)
    for (const auto& [e, v] : s[n].terms()) {
      terms.push_back({{"t", n}, {"i", e.first}, {"j", e.second}, {"c", to_string(v)}});
      csv << n << "," << e.first << "," << e.second << "," << to_string(v) << "\n";
    }
  if (c.format == Format::Csv) out << csv.str();
  else print_json(out, {{"model", model_json(c)}, {"order", c.order}, {"terms", terms}});
  return Success;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  SuiteOptions o;
  o.order = c.order;
  o.heavy_order = c.heavy_order;
  o.max_length = c.max_length;
  o.ids = c.ids;
  o.threads = c.threads;
  std::vector<std::string> suites;
  if (c.suite == "all") {
    if (!c.ids.empty()) throw UsageFailure("--ids needs a single --suite");
    suites = suite_names();
  } else {
    if (std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end())
      throw UsageFailure("unknown suite '" + c.suite + "'");
    suites = {c.suite};
  }
  std::vector<SuiteReport> reports;
  for (const auto& s : suites) {
    try {
      reports.push_back(run_suite(s, o));
    } catch (const std::invalid_argument& e) {
      throw UsageFailure(e.what());
    }
  }
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.pass(); });
  if (c.format == Format::Json) {
    print_json(out, {{"pass", pass}, {"reports", reports}});
  } else {
    for (std::size_t k = 0; k < reports.size(); ++k) {
      std::string body = c.format == Format::Csv ? format_csv(reports[k]) : format_text(reports[k]);
      if (c.format == Format::Csv && k > 0) body.erase(0, body.find('\n') + 1);
      out << body;
    }
  }
  return pass ? Success : VerificationFailure;
}

int cmd_param(const RunConfig& c, const std::string& id, std::ostream& out) {
  const auto& cat = AlgebraicCatalog::builtin();
  const ParamEntry* entry = nullptr;
  try {
    entry = &cat.param(id);
  } catch (const std::exception& e) {
    throw UsageFailure(e.what());
  }
  const UniSeries value = eval_param(id, c.order);
  const auto diff = first_difference(value, param_target(id, c.order));
  if (c.format == Format::Text) {
    out << id << "  " << entry->anchor << "\n" << entry->expr.expression << "\n" << to_text(value);
    out << (diff ? "differs from the walk series at t^" + std::to_string(*diff) : "matches the walk series") << "\n";
  } else if (c.format == Format::Csv) {
    out << "t,x,c\n";
    for (const auto& term : uni_terms(value))
      out << term["t"].get<std::size_t>() << "," << term["x"].get<int>() << "," << term["c"].get<std::string>() << "\n";
  } else {
    json j = {{"id", id},
              {"anchor", entry->anchor},
              {"change", entry->change},
              {"expression", entry->expr.expression},
              {"order", c.order},
              {"terms", uni_terms(value)},
              {"matches_walks", !diff}};
    if (diff) j["first_mismatch"] = *diff;
    print_json(out, j);
  }
  return diff ? VerificationFailure : Success;
}

int cmd_oeis(const RunConfig& c, const std::string& path, std::ostream& out, std::ostream& err) {
  BFile file;
  try {
    file = load_bfile(path);
  } catch (const std::exception& e) {
    throw UsageFailure(e.what());
  }
  const WalkModel model = c.model();
  long reach = c.n;
  if (!file.entries.empty()) reach = std::max(reach, file.entries.back().first);
  if (c.n > 0) reach = std::min<long>(reach, c.n);
  std::vector<BigInt> values;
  const auto tables = count_walks_upto(model, static_cast<int>(reach), std::max(1u, c.threads));
  for (const auto& t : tables) values.push_back(c.endpoint ? t.at(*c.endpoint) : t.total());
  const BFileComparison cmp = compare_bfile(file, values);
  if (cmp.compared == 0) err << "warning: no b-file entries to compare\n";
  const bool ok = !cmp.mismatch;
  if (c.format == Format::Json) {
    json j = {{"model", model_json(c)},
              {"quantity", c.endpoint ? "endpoint" : "total"},
              {"compared", cmp.compared},
              {"agree", ok}};
    if (c.endpoint) j["endpoint"] = {c.endpoint->i, c.endpoint->j};
    if (cmp.first_index) j["range"] = {*cmp.first_index, *cmp.last_index};
    if (cmp.mismatch)
      j["mismatch"] = {{"n", *cmp.mismatch}, {"bfile", cmp.expected.get_str()}, {"computed", cmp.actual.get_str()}};
    print_json(out, j);
  } else if (c.format == Format::Csv) {
    out << "compared,first,last,mismatch,bfile,computed\n"
        << cmp.compared << "," << (cmp.first_index ? std::to_string(*cmp.first_index) : "") << ","
        << (cmp.last_index ? std::to_string(*cmp.last_index) : "") << ","
        << (cmp.mismatch ? std::to_string(*cmp.mismatch) : "") << "," << (ok ? "" : cmp.expected.get_str()) << ","
        << (ok ? "" : cmp.actual.get_str()) << "\n";
  } else if (ok) {
    out << "agree on " << cmp.compared << " entries";
    if (cmp.first_index) out << " (n = " << *cmp.first_index << ".." << *cmp.last_index << ")";
    out << "\n";
  } else {
    out << "mismatch at n = " << *cmp.mismatch << ": b-file " << cmp.expected.get_str() << ", computed "
        << cmp.actual.get_str() << "\n";
  }
  return ok ? Success : VerificationFailure;
}

/// c * sqrt(3) / (3^k Gamma(2/3)).
double three_quadrant_constant(const std::string& lattice) {
  const double g = std::tgamma(2.0 / 3.0);
  return lattice == "square" ? 32.0 * std::sqrt(3.0) / (27.0 * g) : 8.0 * std::sqrt(3.0) / (9.0 * g);
}

int cmd_asympt(const RunConfig& c, int step, std::ostream& out) {
  const WalkModel model = c.model();
  const std::vector<double> norm = normalized_totals(model, c.n, std::max(1u, c.threads));
  const double constant = three_quadrant_constant(c.lattice);
  const double base = static_cast<double>(model.steps.size());
  json rows = json::array();
  std::ostringstream text, csv;
  text << "# floating-point fast path; not exact\n" << std::setw(6) << "n" << std::setw(16) << "log10(total)"
       << std::setw(14) << "ratio" << std::setw(14) << "constant\n";
  csv << "n,log10_total,ratio,constant\n";
  for (int n = 0; n <= c.n; ++n) {
    if (n != c.n && n % std::max(step, 1) != 0) continue;
    const double log_total = std::log10(norm[n]) + n * std::log10(base);
    const double ratio = norm[n] * std::cbrt(static_cast<double>(n));
    rows.push_back({{"n", n}, {"log10_total", log_total}, {"ratio", ratio}});
    text << std::setw(6) << n << std::setw(16) << std::setprecision(8) << log_total << std::setw(14) << ratio
         << std::setw(14) << constant << "\n";
    csv << n << "," << std::setprecision(10) << log_total << "," << ratio << "," << constant << "\n";
  }
  if (c.format == Format::Text) out << text.str();
  else if (c.format == Format::Csv) out << csv.str();
  else
    print_json(out, {{"model", model_json(c)}, {"exact", false}, {"constant", constant}, {"rows", rows}});
  return Success;
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  const auto& alg = AlgebraicCatalog::builtin();
  json j;
  auto add = [&](const char* key, auto&& entries) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back({{"id", e.id}, {"anchor", e.anchor}});
    j[key] = arr;
  };
  add("identities", identity_catalog());
  add("closed-forms", ClosedFormCatalog::builtin().entries());
  add("params", alg.params());
  add("endpoints", alg.endpoints());
  add("values", alg.values());
  add("relations", alg.relations());
  if (c.format == Format::Json) {
    print_json(out, j);
  } else {
    if (c.format == Format::Csv) out << "kind,id,anchor\n";
    for (const auto& [kind, arr] : j.items())
      for (const auto& e : arr) {
        if (c.format == Format::Csv) out << kind << "," << e["id"].get<std::string>() << ",\"" << e["anchor"].get<std::string>() << "\"\n";
        else out << std::left << std::setw(14) << kind << std::setw(20) << e["id"].get<std::string>() << e["anchor"].get<std::string>() << "\n";
      }
  }
  return Success;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and verification of three-quadrant lattice walks", "walks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");

  std::string config_path, data_dir, format, lattice, region, start, endpoint, suite, ids, bfile, param_id;
  int n = 0, step = 50;
  std::size_t order = 0, heavy_order = 0;
  long max_length = 0;
  unsigned threads = 0;
  bool upto = false;

  app.add_option("--config", config_path, "JSON file with default settings")->check(CLI::ExistingFile);
  app.add_option("--data-dir", data_dir, "Directory with the shipped catalogs")->check(CLI::ExistingDirectory);
  auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto model_opts = [&](CLI::App* sub) {
    return std::vector<CLI::Option*>{
        sub->add_option("--lattice", lattice, "square | diagonal"),
        sub->add_option("--region", region, "quadrant | three-quadrant | wedge135 | half-plane | full-plane"),
        sub->add_option("--start", start, "Start point i,j"),
        sub->add_option("--threads", threads, "Worker threads"),
    };
  };

  auto* count = app.add_subcommand("count", "Endpoint counts of n-step walks");
  auto count_model = model_opts(count);
  auto* count_n = count->add_option("--n", n, "Walk length")->check(CLI::NonNegativeNumber);
  auto* count_ep = count->add_option("--endpoint", endpoint, "Report a single endpoint i,j");
  count->add_flag("--upto", upto, "Emit every length 0..n");

  auto* series = app.add_subcommand("series", "Generating series to a truncation order");
  auto series_model = model_opts(series);
  auto* series_order = series->add_option("--order", order, "Truncation order in t");
  auto* series_ep = series->add_option("--endpoint", endpoint, "Series of a single endpoint i,j");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* verify_suite = verify->add_option("--suite", suite, "all | identities | closed-forms | params | endpoints | quartics");
  auto* verify_order = verify->add_option("--order", order, "Truncation order in t");
  auto* verify_heavy = verify->add_option("--heavy-order", heavy_order, "Order for kernel-substitution identities");
  auto* verify_len = verify->add_option("--max-length", max_length, "Largest walk length for closed forms");
  auto* verify_ids = verify->add_option("--ids", ids, "Comma-separated entry ids");
  auto* verify_threads = verify->add_option("--threads", threads, "Worker threads");

  auto* param = app.add_subcommand("param", "Expand a catalogued parametrization");
  param->add_option("id", param_id, "Parametrization id")->required();
  auto* param_order = param->add_option("--order", order, "Truncation order in t");

  auto* oeis = app.add_subcommand("oeis", "Compare totals or an endpoint sequence with a b-file");
  oeis->add_option("bfile", bfile, "b-file path")->required();
  auto oeis_model = model_opts(oeis);
  auto* oeis_n = oeis->add_option("--n", n, "Largest index to compare (default: the whole file)");
  auto* oeis_ep = oeis->add_option("--endpoint", endpoint, "Compare the counts at i,j instead of totals");

  auto* asympt = app.add_subcommand("asympt", "Normalized totals against the three-quadrant constant");
  auto asympt_model = model_opts(asympt);
  auto* asympt_n = asympt->add_option("--n", n, "Largest length");
  asympt->add_option("--step", step, "Row spacing")->check(CLI::PositiveNumber);

  auto* catalog = app.add_subcommand("catalog", "List catalog entries");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Success;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return Success;
    }
    err << "error: " << e.what() << "\n";
    return UsageError;
  }

  CLI::App* sub = app.get_subcommands().front();

  try {
    if (!data_dir.empty()) set_data_dir(data_dir);
    RunConfig c;
    if (sub == asympt) c.n = 400;
    if (!config_path.empty()) apply_config(c, load_json(config_path));
    auto given = [](CLI::Option* o) { return o->count() > 0; };
    if (given(format_opt)) c.format = parse_format(format);
    auto model_flags = [&](const std::vector<CLI::Option*>& o) {
      if (given(o[0])) c.lattice = lattice;
      if (given(o[1])) c.region = region;
      if (given(o[2])) c.start = parse_point(start);
      if (given(o[3])) c.threads = threads;
      parse_lattice(c.lattice);
      parse_region(c.region);
    };
    if (sub == count) {
      model_flags(count_model);
      if (given(count_n)) c.n = n;
      if (given(count_ep)) c.endpoint = parse_point(endpoint);
      return cmd_count(c, upto, out);
    }
    if (sub == series) {
      model_flags(series_model);
      if (given(series_order)) c.order = order;
      if (given(series_ep)) c.endpoint = parse_point(endpoint);
      return cmd_series(c, out);
    }
    if (sub == verify) {
      if (given(verify_suite)) c.suite = suite;
      if (given(verify_order)) c.order = order;
      if (given(verify_heavy)) c.heavy_order = heavy_order;
      if (given(verify_len)) c.max_length = max_length;
      if (given(verify_threads)) c.threads = threads;
      if (given(verify_ids)) {
        c.ids.clear();
        std::stringstream ss(ids);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) c.ids.push_back(id);
      }
      return cmd_verify(c, out);
    }
    if (sub == param) {
      if (given(param_order)) c.order = order;
      return cmd_param(c, param_id, out);
    }
    if (sub == oeis) {
      model_flags(oeis_model);
      c.n = given(oeis_n) ? n : 0;
      if (given(oeis_ep)) c.endpoint = parse_point(endpoint);
      return cmd_oeis(c, bfile, out, err);
    }
    if (sub == asympt) {
      model_flags(asympt_model);
      if (given(asympt_n)) c.n = n;
      if (c.n < 0) throw UsageFailure("--n must be nonnegative");
      return cmd_asympt(c, step, out);
    }
    if (sub == catalog) return cmd_catalog(c, out);
    return UsageError;
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return UsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  }
}

}  // namespace walks::cli
