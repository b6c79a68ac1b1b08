// Command-line front end: one verb per analysis problem.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zigzag/analysis.hpp"
#include "zigzag/decompose.hpp"
#include "zigzag/generator.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/parse_io.hpp"

using json = nlohmann::ordered_json;
using namespace zigzag;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // valid input, negative answer
constexpr int kExitInputError = 2; // parse/validation/usage failure
constexpr int kExitGuard = 3;      // oracle size cap or cross-check mismatch

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream file(path);
  if (!file) {
    throw Error(ErrorCode::SyntaxError, "cannot open '" + path + "'");
  }
  return read_stream(file);
}

Network load_network(const std::string& path, const std::string& format,
                     bool strict) {
  std::string fmt = format;
  if (fmt.empty()) {
    auto dot = path.rfind('.');
    std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    fmt = (ext == "nwk" || ext == "newick") ? "nwk" : "el";
  }
  Strictness s = strict ? Strictness::Binary : Strictness::AlmostBinary;
  std::string text = read_input(path);
  if (fmt == "nwk") return parse_enewick(text, s);
  if (fmt == "el") return parse_edge_list(text, s);
  throw Error(ErrorCode::SyntaxError, "unknown format '" + fmt + "'");
}

std::string arc_name(const Network& net, ArcId a) {
  return net.name(net.arc(a).tail) + ">" + net.name(net.arc(a).head);
}

void print_tree_line(std::ostream& out, const Network& net,
                     const SubdivisionTree& t, bool names) {
  bool first = true;
  for (ArcId a : t.arcs) {
    if (!first) out << ' ';
    if (names) {
      out << arc_name(net, a);
    } else {
      out << a;
    }
    first = false;
  }
  out << '\n';
}

json tree_to_json(const Network& net, const SubdivisionTree& t, bool names) {
  json arr = json::array();
  for (ArcId a : t.arcs) {
    if (names) {
      arr.push_back(arc_name(net, a));
    } else {
      arr.push_back(a);
    }
  }
  return arr;
}

std::vector<double> load_weights(const Network& net, const std::string& spec) {
  std::vector<double> w;
  if (spec.empty()) {
    // Fall back to the weights carried by the input arcs.
    w.reserve(net.arc_count());
    for (const Arc& a : net.arcs()) w.push_back(a.has_weight ? a.weight : 0.0);
    return w;
  }
  std::string text;
  {
    std::ifstream file(spec);
    if (file) {
      text = read_stream(file);
    } else {
      text = spec;  // inline list
    }
  }
  for (char& c : text) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(text);
  double x;
  while (in >> x) w.push_back(x);
  if (w.size() != net.arc_count()) {
    throw Error(ErrorCode::LengthMismatch,
                "expected " + std::to_string(net.arc_count()) +
                    " weights, got " + std::to_string(w.size()));
  }
  return w;
}

generator::Profile parse_profile(const std::string& text) {
  generator::Profile profile;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    char k = item[0];
    std::size_t size = 0;
    try {
      size = std::stoul(item.substr(1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::SyntaxError, "bad profile item '" + item + "'");
    }
    TrailKind kind;
    switch (k) {
      case 'N': case 'n': kind = TrailKind::NFence; break;
      case 'M': case 'm': kind = TrailKind::MFence; break;
      case 'W': case 'w': kind = TrailKind::WFence; break;
      case 'C': case 'c': kind = TrailKind::Crown; break;
      default:
        throw Error(ErrorCode::SyntaxError,
                    "bad profile item '" + item + "' (want N/M/W/C + size)");
    }
    profile.push_back({kind, size});
  }
  if (profile.empty()) {
    throw Error(ErrorCode::SyntaxError, "empty profile");
  }
  return profile;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zig-zag trail decomposition and subdivision-tree analysis "
               "for rooted phylogenetic networks"};
  app.require_subcommand(1);

  std::string input, format, weights_spec, overlay, profile_spec;
  bool as_json = false, names = false, strict = false, use_min = false;
  bool use_oracle = false;
  std::uint64_t seed = 0;
  std::size_t sample_n = 1, leaves = 0, reticulations = 0;
  std::optional<std::size_t> limit;
  ArcId attach_arc = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "network file ('-' for stdin)")
        ->required();
    cmd->add_option("--format", format, "input format: el or nwk");
    cmd->add_flag("--json", as_json, "machine-readable JSON output");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate");
  add_input(validate);
  validate->add_flag("--strict", strict, "require strictly binary degrees");

  auto* decomp = app.add_subcommand(
      "decompose", "report the maximal zig-zag trail decomposition");
  add_input(decomp);

  auto* check = app.add_subcommand("check", "decide tree-basedness");
  add_input(check);
  check->add_flag("--oracle", use_oracle, "cross-check with the oracles");

  auto* find = app.add_subcommand("find", "emit one subdivision tree");
  add_input(find);
  find->add_flag("--names", names, "print arcs as tail>head names");

  auto* dev = app.add_subcommand("deviation",
                                 "minimum leaves to attach (delta)");
  add_input(dev);
  dev->add_flag("--oracle", use_oracle, "cross-check with matching baseline");

  auto* cnt = app.add_subcommand("count", "number of subdivision trees");
  add_input(cnt);
  cnt->add_flag("--oracle", use_oracle, "cross-check with brute force");

  auto* enumerate = app.add_subcommand("enumerate",
                                       "stream all subdivision trees");
  add_input(enumerate);
  enumerate->add_option("--limit", limit, "stop after this many trees");
  enumerate->add_flag("--names", names, "print arcs as tail>head names");

  auto* opt = app.add_subcommand("optimize",
                                 "best-weight subdivision tree");
  add_input(opt);
  opt->add_option("--weights", weights_spec,
                  "weight file or inline comma-separated list "
                  "(default: weights from the input arcs)");
  opt->add_flag("--min", use_min, "minimize instead of maximize");
  opt->add_flag("--names", names, "print arcs as tail>head names");

  auto* sample = app.add_subcommand("sample",
                                    "uniform random subdivision trees");
  add_input(sample);
  sample->add_option("--n", sample_n, "number of draws")->required();
  sample->add_option("--seed", seed, "PRNG seed")->required();
  sample->add_flag("--names", names, "print arcs as tail>head names");

  auto* gen = app.add_subcommand("generate",
                                 "emit a network as an edge list");
  gen->add_option("--leaves", leaves, "number of leaves");
  gen->add_option("--reticulations", reticulations,
                  "number of reticulations");
  gen->add_option("--seed", seed, "PRNG seed");
  gen->add_option("--profile", profile_spec,
                  "trail profile, e.g. M2,M2,N1,W2 (overrides --leaves)");
  gen->add_flag("--json", as_json, "machine-readable JSON output");

  auto* attach = app.add_subcommand("attach-leaf",
                                    "subdivide an arc and hang a new leaf");
  add_input(attach);
  attach->add_option("--arc", attach_arc, "arc id to subdivide")->required();

  auto* dot = app.add_subcommand("export-dot", "Graphviz DOT output");
  add_input(dot);
  dot->add_option("--overlay", overlay, "trails or tree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*validate) {
      Network net = load_network(input, format, strict);
      std::size_t rets = 0;
      for (VertexId v = 0; v < net.vertex_count(); ++v) {
        if (net.is_reticulation(v)) ++rets;
      }
      if (as_json) {
        json doc;
        doc["vertices"] = net.vertex_count();
        doc["arcs"] = net.arc_count();
        doc["leaves"] = net.leaves().size();
        doc["reticulations"] = rets;
        doc["root"] = net.name(net.root());
        doc["strictly_binary"] = net.is_strictly_binary();
        std::cout << doc.dump() << '\n';
      } else {
        std::cout << "valid: " << net.vertex_count() << " vertices, "
                  << net.arc_count() << " arcs, " << net.leaves().size()
                  << " leaves, " << rets << " reticulations, root '"
                  << net.name(net.root()) << "', "
                  << (net.is_strictly_binary() ? "binary" : "almost-binary")
                  << '\n';
      }
      return kExitOk;
    }

    if (*decomp) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      if (as_json) {
        json trails = json::array();
        for (std::size_t i = 0; i < d.trails.size(); ++i) {
          const Trail& t = d.trails[i];
          json arcs = json::array();
          for (ArcId a : t.arcs) arcs.push_back(arc_name(net, a));
          trails.push_back({{"index", i},
                            {"kind", trail_kind_name(t.kind)},
                            {"size", t.size()},
                            {"closed", t.closed},
                            {"arcs", arcs}});
        }
        json doc;
        doc["trails"] = trails;
        doc["profile"] = {{"crown", d.count(TrailKind::Crown)},
                          {"n_fence", d.count(TrailKind::NFence)},
                          {"m_fence", d.count(TrailKind::MFence)},
                          {"w_fence", d.count(TrailKind::WFence)}};
        std::cout << doc.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < d.trails.size(); ++i) {
          const Trail& t = d.trails[i];
          std::cout << "trail " << i << ": " << trail_kind_name(t.kind)
                    << " size " << t.size() << ':';
          for (ArcId a : t.arcs) std::cout << ' ' << arc_name(net, a);
          std::cout << '\n';
        }
        std::cout << "profile: crown=" << d.count(TrailKind::Crown)
                  << " n=" << d.count(TrailKind::NFence)
                  << " m=" << d.count(TrailKind::MFence)
                  << " w=" << d.count(TrailKind::WFence) << '\n';
      }
      return kExitOk;
    }

    if (*check) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      bool based = is_tree_based(d);
      if (use_oracle) {
        bool oracle_based = oracle::deviation_via_matching(net) == 0;
        if (oracle_based != based) {
          std::cerr << "oracle mismatch: decomposition says "
                    << (based ? "tree-based" : "not tree-based")
                    << ", matching says the opposite\n";
          return kExitGuard;
        }
      }
      auto witnesses = w_fence_indices(d);
      if (as_json) {
        json doc;
        doc["tree_based"] = based;
        doc["witnesses"] = witnesses;
        std::cout << doc.dump() << '\n';
      } else if (based) {
        std::cout << "tree-based\n";
      } else {
        std::cout << "not tree-based (" << witnesses.size()
                  << " W-fence(s))\n";
      }
      return based ? kExitOk : kExitNegative;
    }

    if (*find) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      try {
        SubdivisionTree t = find_subdivision_tree(net, d);
        if (as_json) {
          json doc;
          doc["arcs"] = tree_to_json(net, t, false);
          doc["names"] = tree_to_json(net, t, true);
          std::cout << doc.dump() << '\n';
        } else {
          print_tree_line(std::cout, net, t, names);
        }
        return kExitOk;
      } catch (const NotTreeBased& e) {
        std::cerr << e.what() << '\n';
        return kExitNegative;
      }
    }

    if (*dev) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      DeviationReport rep = deviation(d);
      if (use_oracle &&
          rep.delta != oracle::deviation_via_matching(net)) {
        std::cerr << "oracle mismatch on deviation\n";
        return kExitGuard;
      }
      if (as_json) {
        json doc;
        doc["delta"] = rep.delta;
        doc["w_fences"] = rep.w_fence_count;
        std::cout << doc.dump() << '\n';
      } else {
        std::cout << rep.delta << '\n';
      }
      return kExitOk;
    }

    if (*cnt) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      mpz_class alpha = count(d);
      if (use_oracle) {
        auto sets = oracle::brute_force_admissible_sets(net);  // may throw
        if (mpz_class((unsigned long)sets.size()) != alpha) {
          std::cerr << "oracle mismatch on count\n";
          return kExitGuard;
        }
      }
      if (as_json) {
        json doc;
        doc["count"] = alpha.get_str();
        std::cout << doc.dump() << '\n';
      } else {
        std::cout << alpha.get_str() << '\n';
      }
      return kExitOk;
    }

    if (*enumerate) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      EnumerationCursor cursor(net, d);
      SubdivisionTree t;
      std::size_t emitted = 0;
      if (as_json) {
        json trees = json::array();
        while ((!limit || emitted < *limit) && cursor.next(t)) {
          trees.push_back(tree_to_json(net, t, names));
          ++emitted;
        }
        json doc;
        doc["trees"] = trees;
        doc["total"] = count(d).get_str();
        std::cout << doc.dump() << '\n';
      } else {
        while ((!limit || emitted < *limit) && cursor.next(t)) {
          print_tree_line(std::cout, net, t, names);
          ++emitted;
        }
      }
      return kExitOk;
    }

    if (*opt) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      std::vector<double> w = load_weights(net, weights_spec);
      try {
        OptimizeResult res = optimize(
            net, d, w, use_min ? Direction::Minimize : Direction::Maximize);
        if (as_json) {
          json doc;
          doc["score"] = res.score;
          doc["arcs"] = tree_to_json(net, res.tree, false);
          doc["names"] = tree_to_json(net, res.tree, true);
          std::cout << doc.dump() << '\n';
        } else {
          std::cout << "score " << format_weight(res.score) << '\n';
          print_tree_line(std::cout, net, res.tree, names);
        }
        return kExitOk;
      } catch (const NotTreeBased& e) {
        std::cerr << e.what() << '\n';
        return kExitNegative;
      }
    }

    if (*sample) {
      Network net = load_network(input, format, false);
      Decomposition d = decompose(net);
      try {
        auto trees = sample_uniform(net, d, seed, sample_n);
        if (as_json) {
          json arr = json::array();
          for (const auto& t : trees) arr.push_back(tree_to_json(net, t, names));
          json doc;
          doc["trees"] = arr;
          std::cout << doc.dump() << '\n';
        } else {
          for (const auto& t : trees) print_tree_line(std::cout, net, t, names);
        }
        return kExitOk;
      } catch (const NotTreeBased& e) {
        std::cerr << e.what() << '\n';
        return kExitNegative;
      }
    }

    if (*gen) {
      Network net = profile_spec.empty()
                        ? generator::random_network(leaves, reticulations, seed)
                        : generator::gadget_with_profile(
                              parse_profile(profile_spec));
      if (as_json) {
        json arcs = json::array();
        for (const Arc& a : net.arcs()) {
          json rec;
          rec["tail"] = net.name(a.tail);
          rec["head"] = net.name(a.head);
          if (a.has_weight) rec["weight"] = a.weight;
          arcs.push_back(rec);
        }
        json doc;
        doc["arcs"] = arcs;
        std::cout << doc.dump() << '\n';
      } else {
        std::cout << write_edge_list(net);
      }
      return kExitOk;
    }

    if (*attach) {
      Network net = load_network(input, format, false);
      std::cout << write_edge_list(generator::attach_leaf(net, attach_arc));
      return kExitOk;
    }

    if (*dot) {
      Network net = load_network(input, format, false);
      DotOverlay ov;
      Decomposition d;
      SubdivisionTree t;
      if (overlay == "trails") {
        d = decompose(net);
        ov.decomposition = &d;
      } else if (overlay == "tree") {
        d = decompose(net);
        t = find_subdivision_tree(net, d);  // NotTreeBased -> exit 1 below
        ov.tree = &t;
      } else if (!overlay.empty()) {
        throw Error(ErrorCode::SyntaxError,
                    "unknown overlay '" + overlay + "'");
      }
      std::cout << export_dot(net, ov);
      return kExitOk;
    }
  } catch (const NotTreeBased& e) {
    std::cerr << e.what() << '\n';
    return kExitNegative;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::TooLarge) {
      std::cerr << e.what() << '\n';
      return kExitGuard;
    }
    std::cerr << e.what() << '\n';
    return kExitInputError;
  }

  return kExitInputError;
}
