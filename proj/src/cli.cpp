#include "digitop/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "digitop/classifier.hpp"
#include "digitop/generators.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "digitop/io.hpp"
#include "digitop/simply_connected.hpp"

namespace digitop::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;

  DigitalSpace graph(const std::string& path) const { return read_graph(path, in); }

  void emit(const Json& doc) const { out << doc.dump(2) << '\n'; }
  void emit_line(const Json& doc) const { out << doc.dump() << '\n' << std::flush; }
};

int verdict_code(bool yes) { return yes ? kAffirmative : kNegative; }

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::string token;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ' || ch == '\n' || ch == '\t' || ch == '\r') {
      if (!token.empty()) out.push_back(token);
      token.clear();
    } else {
      token += ch;
    }
  }
  return out;
}

// A vertex subset: a JSON list of labels or whitespace/comma separated labels.
VertexSet parse_subset(const DigitalSpace& space, const std::string& text) {
  std::vector<std::string> labels;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
      labels = doc.get<std::vector<std::string>>();
    } catch (const Json::exception& e) {
      throw InputError(std::string("bad subset list: ") + e.what());
    }
  } else {
    labels = split_labels(text);
  }
  try {
    return space.set_of(labels);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

// Boundary map: a JSON object {"d-label": "e-label"} or lines "a b".
std::map<std::string, std::string> parse_map(const std::string& text) {
  std::map<std::string, std::string> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      for (const auto& [k, v] : Json::parse(text).items()) out[k] = v.get<std::string>();
    } catch (const Json::exception& e) {
      throw InputError(std::string("bad boundary map: ") + e.what());
    }
    return out;
  }
  std::istringstream lines(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) {
      throw InputError("boundary map line " + std::to_string(number) + ": expected two labels");
    }
    out[a] = b;
  }
  return out;
}

std::pair<std::string, std::string> parse_edge_option(const std::string& text) {
  auto parts = split_labels(text);
  if (parts.size() != 2) throw InputError("--edge expects u,v");
  return {parts[0], parts[1]};
}

Json trace_json(const ReductionTrace& trace) { return trace_to_json(trace.steps); }

int replay_certificate(const Context& ctx, const DigitalSpace& space, const Json& cert) {
  if (cert.is_object() && cert.contains("witnesses")) {
    std::size_t checked = 0;
    for (const auto& w : cert["witnesses"]) {
      ClosedCurve curve;
      Subgraph sub;
      try {
        for (const auto& l : w.at("curve")) curve.cycle.push_back(space.index_of(l.get<std::string>()));
        sub.vertices = space.set_of(w.at("vertices").get<std::vector<std::string>>());
        for (const auto& e : w.at("edges")) {
          sub.edges.emplace_back(space.index_of(e.at(0).get<std::string>()),
                                 space.index_of(e.at(1).get<std::string>()));
        }
      } catch (const Json::exception& e) {
        throw InputError(std::string("malformed witness: ") + e.what());
      } catch (const InputError&) {
        throw;
      } catch (const Error& e) {
        throw InputError(e.what());
      }
      if (!check_witness(space, curve, sub)) {
        ctx.emit(Json{{"valid", false}, {"witness", checked}, {"curve", w["curve"]}});
        return kNegative;
      }
      ++checked;
    }
    ctx.emit(Json{{"valid", true}, {"witnesses", checked}});
    return kAffirmative;
  }

  Json list = cert;
  if (cert.is_object()) {
    if (!cert.contains("trace")) throw InputError("certificate has neither \"trace\" nor \"witnesses\"");
    list = cert["trace"];
  }
  std::vector<Move> steps;
  try {
    steps = trace_from_json(list);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("malformed trace: ") + e.what());
  }
  try {
    DigitalSpace end = replay(space, steps);
    Json doc{{"valid", true}, {"steps", steps.size()}, {"end", to_json(end)}};
    if (cert.is_object() && cert.contains("end")) {
      const bool same = parse_json_graph(cert["end"]) == end;
      doc["end_matches"] = same;
      if (!same) {
        doc["valid"] = false;
        ctx.emit(doc);
        return kNegative;
      }
    }
    ctx.emit(doc);
    return kAffirmative;
  } catch (const ReplayError& e) {
    ctx.emit(Json{{"valid", false}, {"step", e.step()}, {"error", e.what()}});
    return kNegative;
  }
}

int sweep_poincare(const Context& ctx, int dim, std::size_t max_vertices, std::size_t skip,
                   const SearchCaps& caps) {
  std::map<std::string, std::size_t> tally{
      {"holds", 0}, {"vacuous", 0}, {"violated", 0}, {"unknown", 0}};
  std::size_t index = 0;
  std::size_t manifolds = 0;
  enumerate_connected_graphs(max_vertices, [&](const DigitalSpace& g) {
    const std::size_t at = index++;
    if (at < skip) return;
    if (!Recognizer(g).manifold(g.all(), dim)) return;
    ++manifolds;
    PoincareReport report = verify_poincare(g, dim, caps);
    ++tally[to_string(report.status)];
    Json line{{"index", at}, {"graph", to_json(g)}};
    line["report"] = to_json(report);
    ctx.emit_line(line);
  });
  Json summary{{"graphs", index}, {"skipped", std::min(skip, index)}, {"manifolds", manifolds}};
  for (const auto& [k, v] : tally) summary[k] = v;
  ctx.emit_line(Json{{"summary", summary}});
  ctx.err << "sweep: " << index << " connected graphs up to " << max_vertices << " vertices, "
          << manifolds << " " << dim << "-manifolds\n";
  if (tally["violated"] > 0) return kNegative;
  if (tally["unknown"] > 0) return kUnknown;
  return kAffirmative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Digital topology toolkit: contractibility, spheres, manifolds, simple connectedness"};
  app.name("digitop");
  app.require_subcommand(1);
  std::function<int()> action;

  struct {
    std::string certificate;
    int gen_dim = 0;
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    double p = 0.0;
    std::size_t enum_max = 0;
    std::string named;
    int dim = 0;
    std::size_t max_vertices = 0;
    std::size_t skip = 0;
  } opt;

  std::string graph_path = "-";
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "graph file (JSON or edge list); '-' reads stdin");
  };

  // classify
  {
    auto* sub = app.add_subcommand("classify", "report what kind of space a graph is");
    add_graph(sub);
    sub->callback([&] {
      action = [&] {
        Classification c = classify(ctx.graph(graph_path));
        ctx.emit(to_json(c));
        return verdict_code(static_cast<bool>(c));
      };
    });
  }

  // is-contractible
  {
    auto* sub = app.add_subcommand("is-contractible", "decide contractibility");
    add_graph(sub);
    auto* with_trace = sub->add_flag("--trace", "emit a replayable reduction certificate");
    sub->callback([&, with_trace] {
      action = [&, with_trace] {
        DigitalSpace g = ctx.graph(graph_path);
        ContractibilityVerdict v = is_contractible(g);
        Json doc{{"contractible", v.contractible}};
        if (v.contractible && *with_trace) doc["trace"] = trace_json(*v.trace);
        if (v.stuck_core) doc["stuck_core"] = labels_json(g, *v.stuck_core);
        ctx.emit(doc);
        return verdict_code(v.contractible);
      };
    });
  }

  // reduce
  {
    auto* sub = app.add_subcommand("reduce", "reduce a contractible space onto a contractible subspace");
    add_graph(sub);
    auto* onto = sub->add_option("--onto", "target vertices, comma separated")->required();
    sub->add_flag("--trace", "accepted for symmetry; the trace is always emitted");
    sub->callback([&, onto] {
      action = [&, onto] {
        DigitalSpace g = ctx.graph(graph_path);
        VertexSet target = parse_subset(g, onto->as<std::string>());
        auto trace = reduce_onto(g, target);
        Json doc{{"reducible", trace.has_value()}};
        if (trace) {
          doc["trace"] = trace_json(*trace);
          doc["end"] = to_json(trace->end);
        }
        ctx.emit(doc);
        return verdict_code(trace.has_value());
      };
    });
  }

  // replay
  {
    auto* sub = app.add_subcommand("replay", "validate a certificate against its graph");
    sub->add_option("certificate", opt.certificate, "trace list, is-contractible/reduce output, or simply-connected report")
        ->required();
    sub->add_option("--graph", graph_path, "graph the certificate refers to; '-' reads stdin");
    sub->callback([&] {
      action = [&] {
        const std::string text = read_text(opt.certificate, ctx.in);
        Json cert;
        try {
          cert = Json::parse(text);
        } catch (const Json::exception& e) {
          throw InputError(std::string("certificate is not JSON: ") + e.what());
        }
        return replay_certificate(ctx, ctx.graph(graph_path), cert);
      };
    });
  }

  // is-sphere / is-disk / is-manifold
  int n = 0;
  auto add_recognizer = [&](const std::string& name, const std::string& help,
                            std::function<Classification(const DigitalSpace&, int)> recognize,
                            bool boundary_flag) {
    auto* sub = app.add_subcommand(name, help);
    add_graph(sub);
    sub->add_option("--n", n, "dimension")->required()->check(CLI::NonNegativeNumber);
    CLI::Option* boundary = boundary_flag ? sub->add_flag("--boundary", "allow a boundary") : nullptr;
    sub->callback([&, recognize, boundary] {
      action = [&, recognize, boundary] {
        DigitalSpace g = ctx.graph(graph_path);
        Classification c = boundary && *boundary ? is_manifold_with_boundary(g, n) : recognize(g, n);
        ctx.emit(to_json(c));
        return verdict_code(static_cast<bool>(c));
      };
    });
  };
  add_recognizer("is-sphere", "decide whether a graph is a digital n-sphere", is_n_sphere, false);
  add_recognizer("is-disk", "decide whether a graph is a digital n-disk", is_n_disk, false);
  add_recognizer("is-manifold", "decide whether a graph is a digital n-manifold", is_n_manifold, true);

  // simply-connected
  SearchCaps caps;
  std::string mode_name;
  bool no_witnesses = false;
  {
    auto* sub = app.add_subcommand("simply-connected", "decide simple connectedness");
    add_graph(sub);
    sub->add_option("--mode", mode_name, "closed curves to test: induced or all (default: all up to 12 vertices)")
        ->check(CLI::IsMember({"induced", "all"}));
    sub->add_option("--max-curve-len", caps.max_length, "longest curve tested (default: vertex count)");
    sub->add_option("--budget", caps.budget, "candidate subgraphs per curve")->capture_default_str();
    sub->add_option("--max-failures", caps.max_failures, "stop after this many refuted curves (0 = never)")
        ->capture_default_str();
    sub->add_flag("--no-witnesses", no_witnesses, "omit witness subgraphs from the report");
    sub->callback([&] {
      action = [&] {
        DigitalSpace g = ctx.graph(graph_path);
        const CurveMode mode = mode_name.empty() ? default_curve_mode(g) : curve_mode_from_string(mode_name);
        if (caps.max_length != 0 && caps.max_length < 4) throw InputError("--max-curve-len must be >= 4");
        SimplyConnectedReport report = is_simply_connected(g, mode, caps);
        ctx.err << "simply-connected: mode=" << to_string(mode) << " max-curve-len=" << report.caps.max_length
                << " budget=" << caps.budget << " curves=" << report.curves_checked << "/"
                << report.curves_total << "\n";
        ctx.emit(to_json(g, report, !no_witnesses));
        switch (report.verdict) {
          case Verdict::simply_connected: return kAffirmative;
          case Verdict::not_simply_connected: return kNegative;
          case Verdict::unknown: return kUnknown;
        }
        return kUnknown;
      };
    });
  }

  // separate
  {
    auto* sub = app.add_subcommand("separate", "split the complement of a vertex subset");
    add_graph(sub);
    auto* by = sub->add_option("--by", "file listing the separating vertices")->required();
    sub->callback([&, by] {
      action = [&, by] {
        DigitalSpace g = ctx.graph(graph_path);
        VertexSet s = parse_subset(g, read_text(by->as<std::string>(), ctx.in));
        auto sep = find_separation(g, s);
        Json doc{{"separates", sep.has_value()}};
        if (sep) {
          doc["left"] = labels_json(g, sep->left);
          doc["partition"] = labels_json(g, sep->partition);
          doc["right"] = labels_json(g, sep->right);
        }
        ctx.emit(doc);
        return verdict_code(sep.has_value());
      };
    });
  }

  // glue
  std::string disk_d, disk_e;
  {
    auto* sub = app.add_subcommand("glue", "glue two n-disks along their boundaries");
    sub->add_option("d", disk_d, "first disk")->required();
    sub->add_option("e", disk_e, "second disk")->required();
    auto* map = sub->add_option("--map", "boundary map file: JSON object or 'a b' lines")->required();
    sub->callback([&, map] {
      action = [&, map] {
        DigitalSpace d = ctx.graph(disk_d);
        DigitalSpace e = ctx.graph(disk_e);
        auto boundary_map = parse_map(read_text(map->as<std::string>(), ctx.in));
        ctx.emit(to_json(glue_disks(d, e, boundary_map)));
        return kAffirmative;
      };
    });
  }

  // rtransform
  {
    auto* sub = app.add_subcommand("rtransform", "R-transformation on an edge, or its inverse");
    add_graph(sub);
    auto* edge = sub->add_option("--edge", "u,v")->required();
    auto* label = sub->add_option("--label", "label of the new point")->default_val("z");
    auto* inverse = sub->add_flag("--inverse", "undo: delete --point and restore the edge");
    auto* point = sub->add_option("--point", "point to remove when inverting");
    inverse->needs(point);
    point->needs(inverse);
    sub->callback([&, edge, label, inverse, point] {
      action = [&, edge, label, inverse, point] {
        DigitalSpace g = ctx.graph(graph_path);
        auto [u, v] = parse_edge_option(edge->as<std::string>());
        auto index = [&](const std::string& l) {
          auto i = g.find(l);
          if (!i) throw InputError("unknown vertex '" + l + "'");
          return *i;
        };
        DigitalSpace result = *inverse
                                  ? r_inverse(g, index(point->as<std::string>()), index(u), index(v))
                                  : r_transform(g, index(u), index(v), label->as<std::string>());
        ctx.emit(to_json(result));
        return kAffirmative;
      };
    });
  }

  // euler / betti
  {
    auto* sub = app.add_subcommand("euler", "Euler characteristic of the clique complex");
    add_graph(sub);
    sub->callback([&] {
      action = [&] {
        ctx.emit(Json(euler_characteristic(ctx.graph(graph_path))));
        return kAffirmative;
      };
    });
  }
  std::string field_name = "gf2";
  {
    auto* sub = app.add_subcommand("betti", "Betti numbers of the clique complex");
    add_graph(sub);
    sub->add_option("--field", field_name, "gf2 or q")->check(CLI::IsMember({"gf2", "q"}))->capture_default_str();
    sub->callback([&] {
      action = [&] {
        BettiVector b = betti_numbers(ctx.graph(graph_path), field_from_string(field_name));
        ctx.emit(Json(b.betti));
        return kAffirmative;
      };
    });
  }

  // gen
  {
    auto* gen = app.add_subcommand("gen", "generate graphs");
    gen->require_subcommand(1);
    auto* sphere = gen->add_subcommand("sphere", "minimal n-sphere");
    sphere->add_option("--n", opt.gen_dim, "dimension")->required()->check(CLI::Range(0, 31));
    sphere->callback([&] {
      action = [&] {
        ctx.emit(to_json(minimal_sphere(opt.gen_dim)));
        return kAffirmative;
      };
    });
    auto* disk = gen->add_subcommand("disk", "minimal n-disk");
    disk->add_option("--n", opt.gen_dim, "dimension")->required()->check(CLI::Range(0, 31));
    disk->callback([&] {
      action = [&] {
        ctx.emit(to_json(minimal_disk(opt.gen_dim)));
        return kAffirmative;
      };
    });

    auto* random = gen->add_subcommand("random", "seeded random graph");
    random->add_option("--seed", opt.seed)->required();
    random->add_option("--n", opt.vertices, "vertex count")->required()->check(CLI::Range(0, 64));
    random->add_option("--p", opt.p, "edge probability")->required()->check(CLI::Range(0.0, 1.0));
    random->callback([&] {
      action = [&] {
        ctx.emit(to_json(random_space(opt.seed, opt.vertices, opt.p)));
        return kAffirmative;
      };
    });

    auto* enumerate = gen->add_subcommand("enum", "all connected graphs up to isomorphism, one JSON per line");
    enumerate->add_option("--max", opt.enum_max, "largest vertex count")->required()->check(CLI::Range(1, 9));
    enumerate->callback([&] {
      action = [&] {
        enumerate_connected_graphs(opt.enum_max, [&](const DigitalSpace& g) { ctx.emit_line(to_json(g)); });
        return kAffirmative;
      };
    });

    auto* named_cmd = gen->add_subcommand("named", "icosahedron, torus4x4, cycle<k>, path<k>, complete<k>");
    named_cmd->add_option("name", opt.named)->required();
    named_cmd->callback([&] {
      action = [&] {
        ctx.emit(to_json(named_space(opt.named)));
        return kAffirmative;
      };
    });
  }

  // sweep
  {
    auto* sweep = app.add_subcommand("sweep", "exhaustive theorem sweeps");
    sweep->require_subcommand(1);
    auto* poincare = sweep->add_subcommand("poincare", "check 'simply connected n-manifold => n-sphere'");
    poincare->add_option("--dim", opt.dim)->required()->check(CLI::IsMember({2, 3}));
    poincare->add_option("--max-vertices", opt.max_vertices)->required()->check(CLI::Range(1, 9));
    poincare->add_option("--skip", opt.skip, "skip this many graphs of the enumeration")->default_val(0);
    poincare->add_option("--budget", caps.budget, "candidate subgraphs per curve")->capture_default_str();
    poincare->callback([&] {
      action = [&] { return sweep_poincare(ctx, opt.dim, opt.max_vertices, opt.skip, caps); };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    return action ? action() : kUsage;
  } catch (const InputError& e) {
    ctx.emit(Json{{"error", e.what()}});
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    ctx.emit(Json{{"error", e.what()}});
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    ctx.emit(Json{{"error", e.what()}});
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace digitop::cli
