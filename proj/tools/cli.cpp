#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "nullcolor/bounds.hpp"
#include "nullcolor/certify.hpp"
#include "nullcolor/coloring.hpp"
#include "nullcolor/corpus.hpp"
#include "nullcolor/error.hpp"
#include "nullcolor/io.hpp"

namespace nullcolor::cli {

namespace {

using algebra::Field;
using io::json;

struct RunConfig {
  std::string command;
  std::optional<std::string> graph, lists, tree, field, edge, triangle, monomial, group, sizes, out;
  std::optional<unsigned> cap;
  std::optional<long long> S, n, d, t;
  std::optional<std::uint64_t> m;
  std::uint64_t budget = polys::kDefaultMonomialBudget;
  std::uint64_t seed = 1;
  std::uint64_t count = 20;
  int n_max = 10;
  bool totient = false;
  std::string format = "json";

  json to_json() const {
    auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
    return {{"command", command}, {"graph", opt(graph)},     {"lists", opt(lists)},   {"tree", opt(tree)},
            {"field", opt(field)}, {"edge", opt(edge)},      {"triangle", opt(triangle)},
            {"monomial", opt(monomial)}, {"group", opt(group)}, {"sizes", opt(sizes)}, {"out", opt(out)},
            {"cap", opt(cap)},     {"S", opt(S)},            {"n", opt(n)},           {"d", opt(d)},
            {"t", opt(t)},         {"m", opt(m)},            {"budget", budget},      {"seed", seed},
            {"count", count},      {"n_max", n_max},         {"totient", totient},    {"format", format}};
  }
};

[[noreturn]] void input_error(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

std::vector<long long> int_list(const std::string& text, std::size_t expected, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      input_error(std::string("--") + what + " expects comma-separated integers");
    }
  }
  if (expected && out.size() != expected)
    input_error(std::string("--") + what + " expects " + std::to_string(expected) + " integers");
  return out;
}

// Everything a command needs, resolved once from the config.
class Context {
 public:
  explicit Context(const RunConfig& cfg) : cfg_(cfg) {}

  const io::GraphDocument& graph() {
    if (!doc_) {
      if (!cfg_.graph) input_error("this command needs --graph");
      doc_ = io::graph_from_json(io::read_json_file(*cfg_.graph));
    }
    return *doc_;
  }

  /// --field, else the graph document's field, else the rationals.
  const Field& field() {
    if (!field_) {
      if (cfg_.field)
        field_ = Field::make(io::parse_field_spec(*cfg_.field));
      else if (cfg_.graph && graph().field)
        field_ = Field::make(*graph().field);
      else
        field_ = Field::rationals();
    }
    return *field_;
  }

  coloring::ListAssignment lists() {
    if (cfg_.lists) return io::lists_from_json(field(), io::read_json_file(*cfg_.lists));
    if (!field().is_finite()) input_error("--lists is required over the rationals");
    return coloring::ListAssignment::full(field(), graph().graph.order());
  }

  polys::FactorList labeled_factors() {
    const auto& doc = graph();
    const auto dec = doc.decoration(field());
    const auto lab = doc.labeling(field());
    return polys::decorated_factors(field(), doc.graph, dec, &lab);
  }

 private:
  const RunConfig& cfg_;
  std::optional<io::GraphDocument> doc_;
  std::optional<Field> field_;
};

json edges_json(const std::vector<graphs::Edge>& edges) {
  json j = json::array();
  for (const auto& e : edges) j.push_back({e.u, e.v});
  return j;
}

std::optional<bounds::WeakBound> weak_if_defined(long long S, long long n, long long d, long long t) {
  if (t < 2 || S < n + d) return std::nullopt;
  return bounds::af_weak_bound(S, n, d, t);
}

json weak_json(const std::optional<bounds::WeakBound>& w) {
  if (!w) return nullptr;
  return {{"t", w->t}, {"num", w->num}, {"den", w->den}};
}

// ---------------------------------------------------------------------------

json cmd_validate(Context& ctx) {
  const auto& doc = ctx.graph();
  const auto& g = doc.graph;
  const auto deg = graphs::degeneracy_order(g);
  json r = {{"n", g.order()},
            {"m", g.size()},
            {"connected", g.is_connected()},
            {"two_connected", graphs::is_two_connected(g)},
            {"triangle_free", g.is_triangle_free()},
            {"coloring_number", deg.coloring_number},
            {"degeneracy_order", deg.order}};
  if (doc.embedding) {
    const auto nt = doc.near_triangulation();
    r["near_triangulation"] = {{"boundary", nt.boundary},
                               {"interior", nt.interior},
                               {"full_triangulation", nt.is_full_triangulation()}};
  }
  return r;
}

json cmd_expand(Context& ctx, const RunConfig& cfg) {
  const auto f = ctx.labeled_factors();
  const auto poly = polys::expand_capped(f, cfg.cap ? std::optional<unsigned>(*cfg.cap) : std::nullopt, cfg.budget);
  json r = io::poly_to_json(poly);
  r["cap"] = cfg.cap ? json(*cfg.cap) : json(nullptr);
  return r;
}

json cmd_coeff(Context& ctx, const RunConfig& cfg) {
  if (!cfg.monomial) input_error("coeff needs --monomial");
  std::vector<unsigned> e;
  for (long long v : int_list(*cfg.monomial, 0, "monomial")) {
    if (v < 0) input_error("exponents are non-negative");
    e.push_back(static_cast<unsigned>(v));
  }
  const polys::ExponentVector m(std::move(e));
  const auto c = polys::coeff_of_monomial(ctx.labeled_factors(), m);
  return {{"monomial", io::monomial_to_json(m)},
          {"coefficient", io::element_to_json(ctx.field(), c)},
          {"nonzero", !ctx.field().is_zero(c)}};
}

json cmd_an_number(Context& ctx, const RunConfig& cfg) {
  const auto f = ctx.labeled_factors();
  const unsigned k = polys::an_number(f, cfg.budget);
  const auto top = f.top_degree_part();
  const auto poly = polys::expand_capped(top, std::optional<unsigned>(k), cfg.budget);
  const auto& [m, c] = *poly.terms().begin();
  return {{"an_number", k},
          {"witness", io::monomial_to_json(m)},
          {"coefficient", io::element_to_json(ctx.field(), c)},
          {"coloring_number", graphs::degeneracy_order(ctx.graph().graph).coloring_number}};
}

json cmd_nice(Context& ctx, const RunConfig& cfg) {
  if (!cfg.edge) input_error("nice-monomial needs --edge x,y");
  const auto xy = int_list(*cfg.edge, 2, "edge");
  const auto nt = ctx.graph().near_triangulation();
  const auto cert = certify::nice_monomial(ctx.field(), nt, static_cast<int>(xy[0]), static_cast<int>(xy[1]),
                                           ctx.graph().decoration(ctx.field()), cfg.budget);
  return {{"edge", xy}, {"certificate", io::certificate_to_json(ctx.field(), cert)}};
}

json cmd_triangle(Context& ctx, const RunConfig& cfg) {
  if (!cfg.triangle) input_error("triangle-monomial needs --triangle a,b,c");
  const auto t = int_list(*cfg.triangle, 3, "triangle");
  const auto nt = ctx.graph().near_triangulation();
  const std::array<int, 3> tri{static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2])};
  const auto cert = certify::triangle_deleted_monomial(ctx.field(), nt, tri, ctx.graph().decoration(ctx.field()),
                                                       std::nullopt, cfg.budget);
  return {{"triangle", t}, {"certificate", io::certificate_to_json(ctx.field(), cert)}};
}

json cmd_clique_sum(Context& ctx, const RunConfig& cfg) {
  if (!cfg.tree) input_error("clique-sum-monomial needs --tree");
  const auto tree = io::tree_from_json(io::read_json_file(*cfg.tree));
  const auto comp = graphs::compose(tree);
  const Field& field = ctx.field();
  const auto cert =
      certify::clique_sum_monomial(field, tree, polys::Decoration::standard(comp.graph, field), cfg.budget);
  return {{"graph", io::graph_to_json(comp.graph)},
          {"dropped", edges_json(comp.dropped)},
          {"max_degree", cert.monomial.max_degree()},
          {"certificate", io::certificate_to_json(field, cert)}};
}

json cmd_matching(Context& ctx, const RunConfig& cfg) {
  const auto& doc = ctx.graph();
  const auto res = certify::find_matching_at3(ctx.field(), doc.graph, doc.decoration(ctx.field()),
                                              certify::kMatchingSearchMaxOrder, cfg.budget);
  return {{"matching", edges_json(res.matching)}, {"certificate", io::certificate_to_json(ctx.field(), res.certificate)}};
}

json cmd_solve(Context& ctx, const RunConfig& cfg) {
  const auto f = ctx.labeled_factors();
  const auto lists = ctx.lists();
  const auto sol = coloring::cn_solve(f, lists, std::nullopt, cfg.budget);
  json point = json::array();
  for (const auto& x : sol.point) point.push_back(io::element_to_json(ctx.field(), x));
  return {{"point", point},
          {"witness", io::monomial_to_json(sol.witness)},
          {"satisfied", !ctx.field().is_zero(f.evaluate(sol.point))}};
}

json cmd_count(Context& ctx, const RunConfig& cfg) {
  const auto& doc = ctx.graph();
  const Field& field = ctx.field();
  const auto lists = ctx.lists();
  const auto lab = doc.labeling(field);
  const std::uint64_t count =
      coloring::count_colorings(field, doc.graph, doc.decoration(field), lab, lists, cfg.budget);
  const auto sizes = lists.sizes();
  long long S = 0, t = 0;
  for (auto s : sizes) {
    S += static_cast<long long>(s);
    t = std::max(t, static_cast<long long>(s));
  }
  const long long n = doc.graph.order(), m = static_cast<long long>(doc.graph.size());
  const auto weak = weak_if_defined(S, n, m, t);
  const auto weak_planar = n >= 3 ? weak_if_defined(S, n, 3 * n - 6, t) : std::nullopt;
  json labeling = json::array();
  for (const auto& [e, l] : lab.entries()) labeling.push_back(io::element_to_json(field, l));
  return {{"count", count},
          {"bound_weak", weak ? json(weak->to_string()) : json(nullptr)},
          {"bound_met", weak ? json(bounds::at_least(mpz_class(std::to_string(count)), *weak)) : json(nullptr)},
          {"bound_weak_planar", weak_planar ? json(weak_planar->to_string()) : json(nullptr)},
          {"bound_planar_met",
           weak_planar ? json(bounds::at_least(mpz_class(std::to_string(count)), *weak_planar)) : json(nullptr)},
          {"labeling", labeling}};
}

coloring::AbelianGroup parse_group(const RunConfig& cfg) {
  if (!cfg.group) input_error("this command needs --group m[,m2,...]");
  std::vector<std::uint32_t> orders;
  for (long long v : int_list(*cfg.group, 0, "group")) {
    if (v < 2) input_error("group factor orders are at least 2");
    orders.push_back(static_cast<std::uint32_t>(v));
  }
  return coloring::AbelianGroup(orders);
}

json cmd_adversary(Context& ctx, const RunConfig& cfg) {
  const auto& doc = ctx.graph();
  const auto group = parse_group(cfg);
  const auto lists = cfg.lists ? io::group_lists_from_json(io::read_json_file(*cfg.lists))
                               : coloring::full_group_lists(group, doc.graph.order());
  const auto res = coloring::adversarial_min(doc.graph, doc.orientation, group, lists);
  return {{"labeling", res.labeling}, {"min_count", res.min_count}, {"labelings_examined", res.labelings_examined}};
}

json cmd_embed(const RunConfig& cfg) {
  if (!cfg.m) input_error("embed-cyclic needs --m");
  const auto emb = coloring::cyclic_embed(*cfg.m, cfg.totient);
  return {{"m", emb.m},
          {"p", emb.p},
          {"totient", emb.totient},
          {"degree", emb.degree},
          {"field", io::field_to_json(emb.field)},
          {"field_size", *emb.field.size()},
          {"generator", io::element_to_json(emb.field, emb.generator)},
          {"generator_order", algebra::element_order(emb.field, emb.generator)}};
}

json cmd_bounds(Context& ctx, const RunConfig& cfg) {
  json r = {{"count", nullptr}, {"min_product", nullptr}, {"q", nullptr}, {"chain_holds", nullptr}};
  std::vector<std::uint64_t> sizes;
  long long S = 0, n = 0, d = 0, t = 0;
  std::optional<std::uint64_t> count;
  if (cfg.graph) {
    const auto f = ctx.labeled_factors();
    const auto lists = ctx.lists();
    count = bounds::count_nonzero_points(f, lists, cfg.budget);
    for (auto s : lists.sizes()) sizes.push_back(s);
    d = static_cast<long long>(ctx.graph().graph.size());
  } else if (cfg.sizes) {
    for (long long v : int_list(*cfg.sizes, 0, "sizes")) {
      if (v < 0) input_error("sizes are positive");
      sizes.push_back(static_cast<std::uint64_t>(v));
    }
  }
  if (!sizes.empty()) {
    n = static_cast<long long>(sizes.size());
    for (auto s : sizes) {
      S += static_cast<long long>(s);
      t = std::max(t, static_cast<long long>(s));
    }
  }
  if (cfg.S) S = *cfg.S;
  if (cfg.n) n = *cfg.n;
  if (cfg.d) d = *cfg.d;
  if (cfg.t) t = *cfg.t;
  if (sizes.empty() && !(cfg.S && cfg.n && cfg.d && cfg.t))
    input_error("bounds needs --graph, --sizes, or all of --S --n --d --t");

  const auto weak = bounds::af_weak_bound(S, n, d, t);
  r["S"] = S;
  r["n"] = n;
  r["d"] = d;
  r["t"] = t;
  r["weak_bound"] = weak_json(weak);
  r["weak_bound_value"] = weak.approx();
  r["weak_bound_text"] = weak.to_string();
  if (!sizes.empty()) {
    const auto mp = bounds::af_min_product(sizes, d);
    r["min_product"] = mp.bound.fits_ulong_p() ? json(mp.bound.get_ui()) : json(mp.bound.get_str());
    r["q"] = mp.q;
    bool chain = bounds::at_least(mp.bound, weak);
    if (count) {
      r["count"] = *count;
      chain = chain && mpz_class(std::to_string(*count)) >= mp.bound;
    }
    r["chain_holds"] = chain;
    if (count && *count > 0 && !chain) throw Error(ErrorCode::InvariantViolation, "count is below the Alon-Furedi bound");
  }
  return r;
}

json cmd_census(Context& ctx, const RunConfig& cfg) {
  if (cfg.n_max < 4 || cfg.n_max > 10) input_error("--n-max must be between 4 and 10");
  const Field field = cfg.field ? ctx.field() : Field::prime(5);
  const auto total = static_cast<std::int64_t>(cfg.count);
  std::vector<json> rows(static_cast<std::size_t>(total));
  std::vector<std::optional<Error>> failures(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      corpus::Rng rng(cfg.seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(i));
      const int n = 4 + static_cast<int>(corpus::draw(rng, static_cast<std::uint64_t>(cfg.n_max - 3)));
      const auto tri = corpus::random_triangulation(n, rng, n);
      const auto& g = tri.graph;
      const auto dec = corpus::random_decoration(field, g, rng);
      const int x = tri.boundary[0], y = tri.boundary[1];
      auto cert = certify::nice_monomial(field, tri, x, y, dec, cfg.budget);
      cert.monomial[x] += 1;
      const auto deleted = certify::triangle_deleted_monomial(
          field, tri, {tri.boundary[0], tri.boundary[1], tri.boundary[2]}, dec, std::nullopt, cfg.budget);
      const auto matching = certify::find_matching_at3(field, g, dec, certify::kMatchingSearchMaxOrder, cfg.budget);
      json row = {{"instance", i},
                  {"n", n},
                  {"m", g.size()},
                  {"coloring_number", graphs::degeneracy_order(g).coloring_number},
                  {"certificate_max_degree", cert.monomial.max_degree()},
                  {"trace_length", cert.trace.size()},
                  {"triangle_deleted_max_degree", deleted.monomial.max_degree()},
                  {"matching_size", matching.matching.size()},
                  {"count", nullptr},
                  {"weak_bound", nullptr},
                  {"bound_met", nullptr}};
      if (field.is_finite() && *field.size() >= 5) {
        std::uint64_t grid = 1;
        for (int v = 0; v < n; ++v) grid *= 5;
        if (grid <= 1'000'000) {
          // Five-element lists: the first five field elements at every vertex.
          auto elems = field.elements();
          elems.resize(5);
          const coloring::ListAssignment lists(std::vector<std::vector<algebra::FieldElement>>(n, elems));
          const auto lab = corpus::random_labeling(field, g, rng);
          const auto count = coloring::count_colorings(field, g, dec, lab, lists);
          const auto weak = bounds::af_weak_bound(5LL * n, n, static_cast<long long>(g.size()), 5);
          const bool met = bounds::at_least(mpz_class(std::to_string(count)), weak);
          row["count"] = count;
          row["weak_bound"] = weak.to_string();
          row["bound_met"] = met;
          if (!met) throw Error(ErrorCode::InvariantViolation, "coloring count below the weak bound");
        }
      }
      rows[static_cast<std::size_t>(i)] = std::move(row);
    } catch (const Error& e) {
      failures[static_cast<std::size_t>(i)] = e;
    }
  }
  for (std::size_t i = 0; i < failures.size(); ++i)
    if (failures[i]) throw Error(failures[i]->code(), "instance " + std::to_string(i) + ": " + failures[i]->what());
  return {{"field", io::field_to_json(field)}, {"rows", rows}};
}

// ---------------------------------------------------------------------------

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string to_csv(const json& result) {
  std::ostringstream os;
  for (const char* key : {"rows", "terms"}) {
    if (!result.contains(key) || !result.at(key).is_array()) continue;
    const auto& rows = result.at(key);
    std::vector<std::string> columns;
    for (const auto& row : rows)
      for (const auto& [k, v] : row.items())
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << (row.contains(columns[i]) ? csv_cell(row.at(columns[i])) : std::string());
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  for (const auto& [k, v] : result.items()) os << k << "," << csv_cell(v) << "\n";
  return os.str();
}

int exit_code_for(const Error& e) { return is_guarantee_violation(e.code()) ? 2 : 1; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Polynomial-method coloring certificates and counters", "nullcolor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(NULLCOLOR_VERSION));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "Field: p, p,k, or Q");
    sub->add_option("--budget", cfg.budget, "Monomial / grid budget");
    sub->add_option("--out", cfg.out, "Write the report here instead of standard output");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    return sub;
  };
  auto with_graph = [&](CLI::App* sub) {
    common(sub)->add_option("--graph", cfg.graph, "Graph JSON")->required();
    return sub;
  };

  with_graph(app.add_subcommand("validate", "Check a graph and its embedding"));
  with_graph(app.add_subcommand("expand", "Expand the decorated polynomial"))->add_option("--cap", cfg.cap, "Degree cap");
  with_graph(app.add_subcommand("coeff", "Coefficient of one monomial"))
      ->add_option("--monomial", cfg.monomial, "Comma-separated exponents")
      ->required();
  with_graph(app.add_subcommand("an-number", "Least per-variable degree of a top monomial"));
  with_graph(app.add_subcommand("nice-monomial", "Certificate for a boundary edge of a near-triangulation"))
      ->add_option("--edge", cfg.edge, "x,y")
      ->required();
  with_graph(app.add_subcommand("triangle-monomial", "Certificate with a triangle deleted"))
      ->add_option("--triangle", cfg.triangle, "a,b,c")
      ->required();
  common(app.add_subcommand("clique-sum-monomial", "Certificate for a clique-sum composition"))
      ->add_option("--tree", cfg.tree, "Clique-sum tree JSON")
      ->required();
  with_graph(app.add_subcommand("matching-at3", "Matching whose removal leaves degree bound 3"));
  with_graph(app.add_subcommand("solve", "Extract a coloring from the lists"))->add_option("--lists", cfg.lists, "Lists JSON");
  with_graph(app.add_subcommand("count", "Count colorings from the lists"))->add_option("--lists", cfg.lists, "Lists JSON");
  {
    auto* sub = with_graph(app.add_subcommand("adversary", "Worst group labeling by exhaustive search"));
    sub->add_option("--group", cfg.group, "Cyclic factor orders, e.g. 5 or 2,2")->required();
    sub->add_option("--lists", cfg.lists, "Group lists JSON (element indices)");
  }
  {
    auto* sub = common(app.add_subcommand("embed-cyclic", "Embed Z_m in a finite field"));
    sub->add_option("--m", cfg.m, "Group order")->required();
    sub->add_flag("--totient", cfg.totient, "Use degree phi(m) instead of the order of p mod m");
  }
  {
    auto* sub = common(app.add_subcommand("bounds", "Alon-Furedi bounds"));
    sub->add_option("--graph", cfg.graph, "Graph JSON (counts nonzero points of its polynomial)");
    sub->add_option("--lists", cfg.lists, "Lists JSON");
    sub->add_option("--sizes", cfg.sizes, "Comma-separated list sizes");
    sub->add_option("--S", cfg.S, "Sum of list sizes");
    sub->add_option("--n", cfg.n, "Number of variables");
    sub->add_option("--d", cfg.d, "Degree");
    sub->add_option("--t", cfg.t, "Largest list size");
  }
  {
    auto* sub = common(app.add_subcommand("census", "Sweep a seeded corpus of triangulations"));
    sub->add_option("--seed", cfg.seed, "Corpus seed");
    sub->add_option("--count", cfg.count, "Number of instances");
    sub->add_option("--n-max", cfg.n_max, "Largest order (4..10)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << NULLCOLOR_VERSION << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    Context ctx(cfg);
    const std::map<std::string, std::function<json()>> commands = {
        {"validate", [&] { return cmd_validate(ctx); }},
        {"expand", [&] { return cmd_expand(ctx, cfg); }},
        {"coeff", [&] { return cmd_coeff(ctx, cfg); }},
        {"an-number", [&] { return cmd_an_number(ctx, cfg); }},
        {"nice-monomial", [&] { return cmd_nice(ctx, cfg); }},
        {"triangle-monomial", [&] { return cmd_triangle(ctx, cfg); }},
        {"clique-sum-monomial", [&] { return cmd_clique_sum(ctx, cfg); }},
        {"matching-at3", [&] { return cmd_matching(ctx, cfg); }},
        {"solve", [&] { return cmd_solve(ctx, cfg); }},
        {"count", [&] { return cmd_count(ctx, cfg); }},
        {"adversary", [&] { return cmd_adversary(ctx, cfg); }},
        {"embed-cyclic", [&] { return cmd_embed(cfg); }},
        {"bounds", [&] { return cmd_bounds(ctx, cfg); }},
        {"census", [&] { return cmd_census(ctx, cfg); }},
    };
    const json result = commands.at(cfg.command)();
    const json report = {{"version", NULLCOLOR_VERSION}, {"config", cfg.to_json()}, {"result", result}};
    const std::string text = cfg.format == "csv" ? to_csv(result) : report.dump(2) + "\n";
    if (cfg.out) {
      std::ofstream file(*cfg.out);
      if (!file) input_error("cannot write " + *cfg.out);
      file << text;
    } else {
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nullcolor::cli
