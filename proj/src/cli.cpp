#include "dcup/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "dcup/diagram.hpp"
#include "dcup/dsl.hpp"
#include "dcup/movegraph.hpp"
#include "dcup/orientation.hpp"
#include "dcup/render.hpp"
#include "dcup/ringcalc.hpp"
#include "dcup/selftest.hpp"
#include "dcup/springer.hpp"
#include "dcup/tableaux.hpp"

namespace dcup {

namespace {

using ojson = nlohmann::ordered_json;

// Thrown when a self-check trips; maps to exit code 2.
struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  int jobs = 1;
};

bool json_mode(const std::string& fmt) { return fmt == "json"; }

void print_json(std::ostream& out, const ojson& j) { out << j.dump(2) << "\n"; }

CupFilter parse_cups(const std::string& s) {
  if (s == "max") return CupFilter::maximal();
  if (s == "any") return CupFilter::any();
  try {
    std::size_t used = 0;
    int n = std::stoi(s, &used);
    if (used == s.size() && n >= 0) return CupFilter::exact(n);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--cups takes a number, 'max' or 'any'");
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  q.canonicalize();
  return q;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

CupDiagram cup_from_text(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) return parse_dsl(text);
  if (j.is_string()) return parse_dsl(j.get<std::string>());
  return diagram_from_json(j);
}

ojson weights_json(const std::vector<Weight>& ws) {
  ojson a = ojson::array();
  for (const auto& w : ws) a.push_back(w.str());
  return a;
}

int cmd_enumerate(std::ostream& out, int k, const std::string& parity, const std::string& cups, const std::string& fmt) {
  if (k < 1) throw std::invalid_argument("--k must be at least 1");
  auto set = enumerate(k, parse_cups(cups), parse_parity(parity));
  if (json_mode(fmt)) {
    ojson j;
    j["k"] = k;
    j["parity"] = parity_name(set.parity);
    j["count"] = set.members.size();
    j["diagrams"] = ojson::array();
    for (const auto& d : set.members) j["diagrams"].push_back(d.encode());
    print_json(out, j);
  } else {
    for (const auto& d : set.members) out << d.encode() << "\n";
  }
  return 0;
}

int cmd_render(std::ostream& out, const std::string& dsl, const std::string& fmt) {
  out << render(parse_dsl(dsl), parse_format(fmt));
  return 0;
}

int cmd_movegraph(std::ostream& out, int k, const std::string& parity, bool dot, const std::string& fmt) {
  Parity p = parse_parity(parity);
  if (p == Parity::All) throw std::invalid_argument("--parity must be even or odd");
  const MoveGraph& mg = move_graph(k, p);
  if (dot) {
    out << mg.dot();
    return 0;
  }
  const auto& nodes = mg.nodes();
  if (json_mode(fmt)) {
    ojson j;
    j["k"] = k;
    j["parity"] = parity_name(p);
    j["nodes"] = ojson::array();
    for (std::size_t i : mg.total_order()) j["nodes"].push_back(nodes[i].encode());
    j["arrows"] = ojson::array();
    for (const auto& a : mg.arrows())
      j["arrows"].push_back({{"from", nodes[a.from].encode()}, {"to", nodes[a.to].encode()}, {"move", move_name(a.move.kind)}});
    print_json(out, j);
  } else {
    for (std::size_t i : mg.total_order()) out << nodes[i].encode() << "\n";
    for (const auto& a : mg.arrows())
      out << nodes[a.from].encode() << " -> " << nodes[a.to].encode() << " [" << move_name(a.move.kind) << "]\n";
  }
  return 0;
}

int cmd_distance(std::ostream& out, const std::string& sa, const std::string& sb, const std::string& fmt) {
  auto a = parse_dsl(sa);
  auto b = parse_dsl(sb);
  auto d = distance(a, b);
  if (json_mode(fmt)) {
    ojson j;
    j["a"] = a.encode();
    j["b"] = b.encode();
    if (d)
      j["distance"] = *d;
    else
      j["distance"] = nullptr;
    print_json(out, j);
  } else {
    out << (d ? std::to_string(*d) : std::string("inf")) << "\n";
  }
  return 0;
}

int cmd_orient(std::ostream& out, const std::string& scup, const std::string& scap, const std::string& fmt) {
  auto c = parse_dsl(scup);
  ojson list = ojson::array();
  if (scap.empty()) {
    for (const auto& w : orientations_of_cup(c)) list.push_back({{"weight", w.str()}, {"degree", degree(w, c)}});
  } else {
    auto b = parse_dsl(scap);
    if (b.k() != c.k()) throw std::invalid_argument("cap and cup have different vertex counts");
    for (const auto& o : orient_circle_diagram(star(b), c)) {
      list.push_back({{"weight", o.weight.str()},
                      {"degree", o.degree},
                      {"circles", o.decomposition.circles()},
                      {"clockwise_circles", o.clockwise_circles()}});
    }
  }
  if (json_mode(fmt)) {
    print_json(out, list);
  } else {
    for (const auto& e : list) out << e["weight"].get<std::string>() << " " << e["degree"].get<int>() << "\n";
  }
  return 0;
}

int cmd_cohomology(std::ostream& out, const std::string& which, int k, const std::string& t, int jobs,
                   const std::string& fmt) {
  if (k < 1) throw std::invalid_argument("--k must be at least 1");
  ojson j;
  j["k"] = k;
  if (which == "centre") {
    std::vector<std::size_t> sum;
    ojson per = ojson::object();
    for (Parity p : {Parity::Even, Parity::Odd}) {
      auto c = centre(k, p, false, jobs);
      ojson g = ojson::array();
      for (std::size_t d = 0; d < c.dims.size(); ++d) {
        if (c.dims[d] == 0) continue;
        g.push_back({{"degree", 2 * d}, {"dim", c.dims[d]}});
        if (sum.size() <= d) sum.resize(d + 1, 0);
        sum[d] += c.dims[d];
      }
      per[parity_name(p)] = g;
    }
    ojson g = ojson::array();
    std::size_t total = 0;
    for (std::size_t d = 0; d < sum.size(); ++d) {
      if (sum[d] == 0) continue;
      g.push_back({{"degree", 2 * d}, {"dim", sum[d]}});
      total += sum[d];
    }
    j["graded"] = g;
    j["by_parity"] = per;
    j["total"] = total;
    if (total != (std::size_t{1} << k)) throw InvariantFailure("centre dimension is not 2^k");
  } else {
    auto ring = presentation_ring(k);
    if (!ring.basis_verified) throw InvariantFailure("presentation basis failed to verify");
    ojson g = ojson::array();
    for (std::size_t d = 0; d < ring.graded.size(); ++d)
      if (ring.graded[d]) g.push_back({{"degree", 2 * d}, {"dim", ring.graded[d]}});
    ojson basis = ojson::array();
    for (Mask m : ring.basis) basis.push_back(monomial_name(m));
    j["graded"] = g;
    j["total"] = ring.dimension;
    j["basis"] = basis;
    if (!t.empty()) {
      Rational q = parse_rational(t);
      j["t"] = q.get_str();
      j["specialization_dim"] = equivariant_specialization(k, q);
    }
  }
  if (json_mode(fmt)) {
    print_json(out, j);
  } else {
    for (const auto& e : j["graded"]) out << "degree " << e["degree"].get<int>() << ": " << e["dim"].get<std::size_t>() << "\n";
    out << "total: " << j["total"].get<std::size_t>() << "\n";
    if (j.contains("specialization_dim"))
      out << "t=" << j["t"].get<std::string>() << ": " << j["specialization_dim"].get<std::size_t>() << "\n";
  }
  return 0;
}

int cmd_intersect(std::ostream& out, int k, const std::string& parity, const std::vector<int>& shape, int jobs,
                  const std::string& fmt) {
  Parity p = parse_parity(parity);
  if (p == Parity::All) throw std::invalid_argument("--parity must be even or odd");
  FixedPointTable t = shape.empty() ? fixed_point_table(k, p, jobs) : fixed_point_table(shape[0], shape[1], p, jobs);
  if (json_mode(fmt)) {
    ojson j;
    j["k"] = t.k;
    j["parity"] = parity_name(p);
    j["diagrams"] = ojson::array();
    for (const auto& d : t.diagrams) j["diagrams"].push_back(d.encode());
    j["cells"] = ojson::array();
    for (const auto& row : t.cells) {
      ojson r = ojson::array();
      for (const auto& cell : row) r.push_back(weights_json(cell));
      j["cells"].push_back(r);
    }
    print_json(out, j);
  } else {
    for (std::size_t x = 0; x < t.diagrams.size(); ++x)
      for (std::size_t y = 0; y < t.diagrams.size(); ++y) {
        out << t.diagrams[x].encode() << " | " << t.diagrams[y].encode() << " :";
        if (t.cells[x][y].empty()) out << " empty";
        for (const auto& w : t.cells[x][y]) out << " " << w.str();
        out << "\n";
      }
  }
  return 0;
}

CupDiagram to_hub(const std::string& from, const std::string& text, std::optional<int> parity) {
  if (from == "cup") return cup_from_text(text);
  auto j = nlohmann::json::parse(text);
  if (from == "adt") return to_cup(signed_from_json(j));
  if (from == "dt") return to_cup(cyc_inverse(tableau_from_json(j)));
  if (from == "bitab") return cup_of_bitableau(bitableau_from_json(j), parity);
  auto c = stable_to_cup(stable_from_json(j));
  return c;
}

ojson from_hub(const std::string& to, const CupDiagram& c) {
  if (to == "cup") return to_json(c);
  if (to == "adt") return to_json(from_cup(c));
  if (to == "dt") return to_json(cyc(from_cup(c)));
  if (to == "bitab") return to_json(bitableau_of_cup(c));
  auto ps = stables_of_cup(c);
  if (ps.empty()) throw std::invalid_argument(c.encode() + " has no s-table");
  if (ps.size() > 1) throw InvariantFailure(c.encode() + " has several s-tables");
  return to_json(ps.front());
}

int cmd_bijection(std::ostream& out, const std::string& from, const std::string& to, const std::string& path,
                  const std::string& parity, const std::string& fmt) {
  std::optional<int> par;
  if (!parity.empty()) {
    Parity p = parse_parity(parity);
    if (p != Parity::All) par = p == Parity::Even ? 0 : 1;
  }
  CupDiagram c = to_hub(from, read_input(path), par);
  ojson j = from_hub(to, c);
  if (to == "cup" && !json_mode(fmt))
    out << c.encode() << "\n";
  else
    print_json(out, j);
  return 0;
}

int cmd_selftest(std::ostream& out, int k_max, int jobs, const std::string& fmt) {
  if (k_max < 2) throw std::invalid_argument("--k-max must be at least 2");
  auto rep = run_selftest(k_max, jobs);
  if (json_mode(fmt)) {
    print_json(out, to_json(rep));
  } else {
    for (const auto& s : rep.suites) {
      out << (s.passed ? "ok   " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
      for (const auto& f : s.failures) out << "     " << f << "\n";
    }
  }
  if (!rep.passed()) throw InvariantFailure("self-test failed");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decorated cup diagrams, Springer fibre combinatorics and domino tableaux"};
  app.name("dcup");
  app.set_version_flag("--version", std::string("dcup ") + kVersion);
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomized checks; current checks are exhaustive and ignore it")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads for pair computations")->check(CLI::PositiveNumber)->capture_default_str();
  app.fallthrough();

  const std::vector<std::string> text_json{"text", "json"};
  std::string fmt = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format")->check(CLI::IsMember(text_json))->capture_default_str();
  };
  std::function<int()> action;

  int k = 0;
  std::string parity = "all";
  std::string cups = "max";
  auto* en = app.add_subcommand("enumerate", "List cup diagrams in canonical order");
  en->add_option("--k", k, "Number of vertices")->required();
  en->add_option("--parity", parity, "even, odd or all")->capture_default_str();
  en->add_option("--cups", cups, "Cup count: N, max or any")->capture_default_str();
  add_format(en);
  en->callback([&] { action = [&] { return cmd_enumerate(out, k, parity, cups, fmt); }; });

  std::string diagram, rformat = "ascii";
  auto* re = app.add_subcommand("render", "Draw a diagram");
  re->add_option("--diagram", diagram, "Diagram in the text notation")->required();
  re->add_option("--format", rformat, "ascii, tikz or json")
      ->check(CLI::IsMember({"ascii", "tikz", "json"}))
      ->capture_default_str();
  re->callback([&] { action = [&] { return cmd_render(out, diagram, rformat); }; });

  bool dot = false;
  auto* mg = app.add_subcommand("movegraph", "Arrows between maximal diagrams of one parity");
  mg->add_option("--k", k, "Number of vertices")->required();
  mg->add_option("--parity", parity, "even or odd")->required();
  mg->add_flag("--dot", dot, "Emit Graphviz DOT");
  add_format(mg);
  mg->callback([&] { action = [&] { return cmd_movegraph(out, k, parity, dot, fmt); }; });

  std::string da, db;
  auto* di = app.add_subcommand("distance", "Distance in the move graph");
  di->add_option("--a", da, "First diagram")->required();
  di->add_option("--b", db, "Second diagram")->required();
  add_format(di);
  di->callback([&] { action = [&] { return cmd_distance(out, da, db, fmt); }; });

  std::string ocup, ocap;
  auto* orc = app.add_subcommand("orient", "Orientations of a cup diagram or of a circle diagram");
  orc->add_option("--cup", ocup, "Cup diagram")->required();
  orc->add_option("--cap", ocap, "Cup diagram whose mirror image is the cap");
  add_format(orc);
  orc->callback([&] { action = [&] { return cmd_orient(out, ocup, ocap, fmt); }; });

  std::string which, tval;
  auto* co = app.add_subcommand("cohomology", "Centre dimensions or the presentation ring");
  co->add_option("which", which, "centre or springer")->required()->check(CLI::IsMember({"centre", "springer"}));
  co->add_option("--k", k, "Number of vertices")->required();
  co->add_option("--t", tval, "Specialize the equivariant parameter (springer only)");
  add_format(co);
  co->callback([&] { action = [&] { return cmd_cohomology(out, which, k, tval, g.jobs, fmt); }; });

  std::vector<int> shape;
  auto* in = app.add_subcommand("intersect", "Fixed points of pairwise component intersections");
  in->add_option("--k", k, "Number of vertices")->required();
  in->add_option("--parity", parity, "even or odd")->required();
  in->add_option("--shape", shape, "Jordan type r,s (only r = s = k is supported)")->expected(2)->delimiter(',');
  add_format(in);
  in->callback([&] {
    action = [&] {
      if (!shape.empty() && shape[0] == shape[1] && shape[0] != k) throw std::invalid_argument("--shape disagrees with --k");
      return cmd_intersect(out, k, parity, shape, g.jobs, fmt);
    };
  });

  const std::vector<std::string> kinds{"adt", "dt", "cup", "bitab", "stable"};
  std::string bfrom, bto, bpath, bparity;
  auto* bi = app.add_subcommand("bijection", "Convert between tableaux and cup diagrams");
  bi->add_option("--from", bfrom, "adt, dt, cup, bitab or stable")->required()->check(CLI::IsMember(kinds));
  bi->add_option("--to", bto, "adt, dt, cup, bitab or stable")->required()->check(CLI::IsMember(kinds));
  bi->add_option("--input", bpath, "Input file, '-' for stdin")->required();
  bi->add_option("--parity", bparity, "Dot parity of the preimage (bitab input)");
  add_format(bi);
  bi->callback([&] { action = [&] { return cmd_bijection(out, bfrom, bto, bpath, bparity, fmt); }; });

  int k_max = 0;
  auto* st = app.add_subcommand("selftest", "Run the invariant suites");
  st->add_option("--k-max", k_max, "Largest k to test (at least 2)")->required();
  add_format(st);
  st->callback([&] { action = [&] { return cmd_selftest(out, k_max, g.jobs, fmt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  try {
    return action ? action() : 1;
  } catch (const InvariantFailure& e) {
    err << "invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    // invalid_argument and friends derive from logic_error
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    err << "invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: bad JSON input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace dcup
