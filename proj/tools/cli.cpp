#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fricke/cosine_sums.hpp"
#include "fricke/orbit_graphs.hpp"
#include "fricke/parameter_maps.hpp"

namespace fricke::cli {

using nlohmann::json;

namespace {

constexpr std::array<std::uint64_t, 4> kReferenceCounters{48618911, 6213878, 54671104, 8197910};

bool same_omega(const Omega<CosSum>& a, const Omega<CosSum>& b) {
  return exactly_equal(a.wx, b.wx) && exactly_equal(a.wy, b.wy) && exactly_equal(a.wz, b.wz) &&
         exactly_equal(a.w4, b.w4);
}

std::string rational_text(const Rational& q) { return q.get_str(); }

json point_json(const Point3& p) { return json::array({value_json(p.x), value_json(p.y), value_json(p.z)}); }

json omega_json(const Omega<CosSum>& w) {
  return json::array({value_json(w.wx), value_json(w.wy), value_json(w.wz)});
}

json stats_json(const GraphStats& s) {
  return {{"selfLoops", {{"x", s.self_loops[0]}, {"y", s.self_loops[1]}, {"z", s.self_loops[2]}}},
          {"edges", {{"x", s.edges[0]}, {"y", s.edges[1]}, {"z", s.edges[2]}}},
          {"badPoints", s.bad_points},
          {"lambdaOrbits", s.lambda_orbits},
          {"cycles", s.cycles}};
}

// The orbit moved by a symmetry: into the table's omega form when it matches a
// row, otherwise into its canonical form.
struct Presented {
  Omega<CosSum> omega;
  std::vector<Point3> points;
  Point3 representative;
};

Presented present(const OrbitRecord& rec) {
  const auto& syms = Symmetry::all();
  std::size_t sym = rec.key.symmetry;
  std::optional<Point3> rep;
  if (rec.table_row) {
    const GoldenOrbit g = golden_orbit(exceptional_table().at(*rec.table_row - 1));
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (!same_omega(transform_omega(syms[i], rec.omega), g.omega)) continue;
      sym = i;
      const bool has_rep = std::any_of(rec.points.begin(), rec.points.end(), [&](const Point3& p) {
        return same_point(transform_point(syms[i], p), g.representative);
      });
      if (has_rep) {
        rep = g.representative;
        break;
      }
    }
  }
  Presented out;
  out.omega = transform_omega(syms[sym], rec.omega);
  for (const auto& p : rec.points) out.points.push_back(transform_point(syms[sym], p));
  std::sort(out.points.begin(), out.points.end(),
            [](const Point3& a, const Point3& b) { return compare_points(a, b) < 0; });
  out.representative = rep ? *rep : out.points.front();
  return out;
}

json orbit_json(const OrbitRecord& rec) {
  const Presented p = present(rec);
  json o;
  o["id"] = rec.table_row ? json(*rec.table_row) : json(nullptr);
  o["size"] = rec.size();
  o["omega"] = omega_json(p.omega);
  o["fourMinusOmega4"] = value_json((4 - p.omega.w4).reduced());
  o["representative"] = point_json(p.representative);
  o["representativeLabel"] = point_label(p.representative);
  o["source"] = {{"class", rec.source_class}, {"index", rec.source_index}};
  o["graph"] = stats_json(graph_stats(build_graph(p.points, p.omega)));
  return o;
}

Point3 parse_point(const json& arr) {
  Point3 p;
  for (int i = 0; i < 3; ++i) {
    const json& v = arr.at(i);
    p[i] = CosSum::parse(v.is_object() ? v.at("text").get<std::string>() : v.get<std::string>()).reduced();
  }
  return p;
}

CosSum parse_value(const json& v) {
  return CosSum::parse(v.is_object() ? v.at("text").get<std::string>() : v.get<std::string>()).reduced();
}

json theta_json(const Theta& t) {
  return json::array({rational_text(t.tx), rational_text(t.ty), rational_text(t.tz), rational_text(t.tinf)});
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("not a rational: " + text);
  }
  q.canonicalize();
  return q;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return json::parse(in);
}

}  // namespace

json value_json(const CosSum& v) {
  const CosSum r = v.reduced();
  return {{"text", r.to_string()}, {"value", r.to_double()}};
}

json search_json(const SearchResult& r, const SearchOptions& opts) {
  json doc;
  json counters = json::array();
  for (int c = 0; c < 4; ++c) {
    if (!opts.classes[c]) continue;
    const ClassStats& s = r.stats[c];
    counters.push_back({{"class", c + 1},
                        {"enumerated", s.enumerated},
                        {"reference", kReferenceCounters[c]},
                        {"matchesReference", s.enumerated == kReferenceCounters[c]},
                        {"kept", s.kept},
                        {"finite", s.finite},
                        {"cayley", s.cayley},
                        {"capExceeded", s.cap_exceeded},
                        {"distinct", s.distinct}});
  }
  json orbits = json::array();
  for (const auto& rec : r.exceptional) orbits.push_back(orbit_json(rec));
  std::array<std::size_t, 4> special{r.one_point_orbits, 0, 0, 0};
  for (const auto& h : r.special) ++special[static_cast<int>(h.match.type)];
  std::vector<OrbitRecord> copy = r.exceptional;
  const std::vector<int> missing = match_table(copy);
  doc["metadata"] = {{"verified", r.verified},
                     {"exactVerify", opts.exact_verify},
                     {"status", opts.exact_verify ? "verified" : "unverified"},
                     {"eps", opts.eps},
                     {"exceptionalCount", r.exceptional.size()},
                     {"discrepancies", r.discrepancies},
                     {"unmatchedTableRows", missing}};
  doc["counters"] = counters;
  doc["special"] = {{"I", special[0]}, {"II", special[1]}, {"III", special[2]}, {"IV", special[3]}};
  doc["orbits"] = orbits;
  return doc;
}

std::string search_csv(const SearchResult& r) {
  std::ostringstream out;
  out << "id,size,omegaX,omegaY,omegaZ,fourMinusOmega4,representative,class,index\n";
  for (const auto& rec : r.exceptional) {
    const Presented p = present(rec);
    out << (rec.table_row ? std::to_string(*rec.table_row) : "") << ',' << rec.size() << ','
        << p.omega.wx.to_string() << ',' << p.omega.wy.to_string() << ',' << p.omega.wz.to_string()
        << ',' << (4 - p.omega.w4).reduced().to_string() << ",\"" << point_label(p.representative)
        << "\"," << rec.source_class << ',' << rec.source_index << '\n';
  }
  return out.str();
}

json golden_json() {
  json rows = json::array();
  for (const TableRow& row : exceptional_table()) {
    rows.push_back({{"row", row.row},
                    {"size", row.size},
                    {"omega", {row.omega[0], row.omega[1], row.omega[2]}},
                    {"fourMinusOmega4", row.four_minus_omega4},
                    {"r", {row.r[0], row.r[1], row.r[2]}}});
  }
  return {{"rows", rows}};
}

std::vector<std::string> compare_to_golden(const json& golden, const std::vector<OrbitRecord>& orbits) {
  std::vector<std::string> diffs;
  std::vector<bool> used(orbits.size(), false);
  const auto& rows = golden.at("rows");
  for (const json& row : rows) {
    const int id = row.at("row").get<int>();
    const std::size_t size = row.at("size").get<std::size_t>();
    Omega<CosSum> w;
    w.wx = parse_value(row.at("omega").at(0));
    w.wy = parse_value(row.at("omega").at(1));
    w.wz = parse_value(row.at("omega").at(2));
    w.w4 = (4 - parse_value(row.at("fourMinusOmega4"))).reduced();
    Point3 r;
    for (int i = 0; i < 3; ++i) r[i] = CosSum::cos(RationalAngle::parse(row.at("r").at(i).get<std::string>()));
    std::optional<OrbitKey> key;
    if (fricke_residual(r, w).is_zero()) {
      if (auto rec = close_orbit(r, w, false)) key = rec->key;
    }
    bool matched = false;
    for (std::size_t i = 0; i < orbits.size() && !matched; ++i) {
      if (used[i] || orbits[i].size() != size) continue;
      if (!exactly_equal(orbits[i].omega.w4, w.w4)) continue;
      const bool omega_ok = std::any_of(Symmetry::all().begin(), Symmetry::all().end(), [&](const Symmetry& s) {
        return same_omega(transform_omega(s, orbits[i].omega), w);
      });
      if (!omega_ok) continue;
      if (key && !(*key == orbits[i].key)) continue;
      used[i] = matched = true;
    }
    if (!matched) {
      std::ostringstream msg;
      msg << "row " << id << ": no orbit of size " << size << " with omega (" << w.wx.to_string() << ','
          << w.wy.to_string() << ',' << w.wz.to_string() << "), 4-w4 = " << (4 - w.w4).reduced().to_string();
      if (!key) msg << " (representative not on the surface)";
      diffs.push_back(msg.str());
    }
  }
  if (rows.size() != orbits.size()) {
    diffs.push_back("golden has " + std::to_string(rows.size()) + " rows, search found " +
                    std::to_string(orbits.size()) + " orbits");
  }
  return diffs;
}

std::vector<OrbitRecord> orbits_from_search_json(const json& doc) {
  std::vector<OrbitRecord> out;
  for (const json& o : doc.at("orbits")) {
    Omega<CosSum> w;
    w.wx = parse_value(o.at("omega").at(0));
    w.wy = parse_value(o.at("omega").at(1));
    w.wz = parse_value(o.at("omega").at(2));
    w.w4 = (4 - parse_value(o.at("fourMinusOmega4"))).reduced();
    auto rec = close_orbit(parse_point(o.at("representative")), w, false);
    if (!rec) throw std::runtime_error("orbit in search output does not close");
    out.push_back(std::move(*rec));
  }
  return out;
}

// ---------------------------------------------------------------------------

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite orbits of the extended modular group on the Fricke cubic surface", "fricke"};
  app.require_subcommand(1);
  app.fallthrough();

  SearchOptions opts;
  if (const char* env = std::getenv("FRICKE_THREADS")) {
    try {
      opts.threads = static_cast<unsigned>(std::max(1, std::stoi(env)));
    } catch (const std::exception&) {
      err << "ignoring FRICKE_THREADS=" << env << '\n';
    }
  }
  bool no_exact = false;
  std::string format = "json";
  std::string out_path;
  app.add_option("--threads", opts.threads, "worker threads (default FRICKE_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps", opts.eps, "dictionary matching tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--no-exact-verify", no_exact, "skip the exact residual/closure pass");
  app.add_option("--format", format, "json, csv or dot")->check(CLI::IsMember({"json", "csv", "dot"}));
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  auto* search = app.add_subcommand("search", "run the full search");

  auto* verify = app.add_subcommand("verify", "compare search output with the table of exceptional orbits");
  std::string golden_path, input_path, write_golden;
  verify->add_option("--golden", golden_path, "golden JSON (default: embedded table)");
  verify->add_option("--input", input_path, "search JSON to check instead of running the search");
  verify->add_option("--write-golden", write_golden, "write the embedded table as JSON and exit");

  auto* graph = app.add_subcommand("graph", "orbit graph of a table row");
  int graph_id = 0;
  graph->add_option("id", graph_id, "table row 1..45")->required()->check(CLI::Range(1, 45));

  auto* cosine = app.add_subcommand("cosine", "irreducible vanishing cosine sums");
  int cos_n = 0;
  std::string dens = "60";
  bool unity = false;
  cosine->add_option("--n", cos_n, "number of terms")->required()->check(CLI::Range(1, 6));
  cosine->add_option("--dens", dens, "\"D\" for divisors of D, \"<=B\" for all denominators up to B");
  cosine->add_flag("--unity", unity, "sums of roots of unity with common denominator D");

  auto* theta = app.add_subcommand("theta", "rational theta for a table row");
  int theta_id = 0, max_den = 30;
  theta->add_option("--orbit", theta_id, "table row 1..45")->required()->check(CLI::Range(1, 45));
  theta->add_option("--max-den", max_den, "denominator bound")->check(CLI::Range(1, 200));

  auto* cayley = app.add_subcommand("cayley", "Cayley orbit of a rational angle pair");
  std::string ry, rz;
  cayley->add_option("--ry", ry)->required();
  cayley->add_option("--rz", rz)->required();

  auto* bt = app.add_subcommand("bt", "apply a Backlund transformation to theta");
  std::string bt_text, theta_text;
  bt->add_option("--name", bt_text, "s_x s_y s_z s_inf s_delta r_x r_y r_z P_xy P_yz, or a word")->required();
  bt->add_option("--theta", theta_text, "a,b,c,d")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  opts.exact_verify = !no_exact;

  try {
    // the tolerance must separate dictionary values
    const double gap = dictionaries().s4.min_gap();
    if (!(opts.eps < gap / 2)) {
      err << "--eps must be below half the minimal dictionary gap (" << gap / 2 << ")\n";
      return kUsage;
    }

    if (search->parsed()) {
      SearchResult r;
      try {
        r = full_search(opts);
      } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kInternal;
      }
      if (format == "csv") {
        emit(search_csv(r), out_path, out);
      } else {
        emit(dump(search_json(r, opts)), out_path, out);
      }
      if (r.discrepancies != 0 || (opts.exact_verify && !r.verified)) {
        err << "exact verification failed (" << r.discrepancies << " discrepancies)\n";
        return kInternal;
      }
      return kOk;
    }

    if (verify->parsed()) {
      if (!write_golden.empty()) {
        emit(dump(golden_json()), write_golden, out);
        return kOk;
      }
      const json golden = golden_path.empty() ? golden_json() : read_json(golden_path);
      std::vector<OrbitRecord> orbits;
      if (!input_path.empty()) {
        orbits = orbits_from_search_json(read_json(input_path));
      } else {
        SearchResult r = full_search(opts);
        if (r.discrepancies != 0) {
          err << "search had " << r.discrepancies << " discrepancies\n";
          return kInternal;
        }
        orbits = std::move(r.exceptional);
      }
      const auto diffs = compare_to_golden(golden, orbits);
      json report = {{"rows", golden.at("rows").size()}, {"orbits", orbits.size()}, {"mismatches", diffs}};
      emit(dump(report), out_path, out);
      for (const auto& d : diffs) err << d << '\n';
      return diffs.empty() ? kOk : kMismatch;
    }

    if (graph->parsed()) {
      const GoldenOrbit g = golden_orbit(exceptional_table().at(graph_id - 1));
      auto rec = close_orbit(g.representative, g.omega, false);
      if (!rec) return kInternal;
      rec->table_row = graph_id;
      const Presented p = present(*rec);
      const ColoredGraph cg = build_graph(p.points, p.omega);
      std::vector<std::string> labels;
      for (const auto& q : p.points) labels.push_back(point_label(q));
      if (format == "json") {
        json j = orbit_json(*rec);
        j["points"] = labels;
        emit(dump(j), out_path, out);
      } else {
        emit(export_dot(cg, labels, "orbit" + std::to_string(graph_id)), out_path, out);
      }
      return kOk;
    }

    if (cosine->parsed()) {
      json list = json::array();
      if (unity) {
        for (const auto& t : enumerate_unity_sums(cos_n, std::stoll(dens))) {
          json phis = json::array();
          for (const auto& q : t.phis) phis.push_back(rational_text(q));
          list.push_back({{"phi", phis}, {"family", t.family}});
        }
      } else {
        for (const auto& t : enumerate(cos_n, DenominatorSpec::parse(dens))) {
          json phis = json::array();
          for (const auto& q : t.phis) phis.push_back(rational_text(q));
          json entry = {{"phi", phis}, {"family", family_name(t.family.family)}};
          if (t.family.phi) entry["parameter"] = rational_text(*t.family.phi);
          list.push_back(entry);
        }
      }
      emit(dump({{"n", cos_n}, {"dens", dens}, {"count", list.size()}, {"tuples", list}}), out_path, out);
      return kOk;
    }

    if (theta->parsed()) {
      const GoldenOrbit g = golden_orbit(exceptional_table().at(theta_id - 1));
      json list = json::array();
      for (const Theta& t : theta_candidates(g.omega, max_den)) list.push_back(theta_json(t));
      emit(dump({{"orbit", theta_id},
                 {"solution", theta_id},
                 {"omega", omega_json(g.omega)},
                 {"fourMinusOmega4", value_json((4 - g.omega.w4).reduced())},
                 {"maxDen", max_den},
                 {"theta", list}}),
           out_path, out);
      return kOk;
    }

    if (cayley->parsed()) {
      const OrbitRecord rec = cayley_orbit(parse_rational(ry), parse_rational(rz));
      const Omega<CosSum> zero{0, 0, 0, 0};
      json pts = json::array();
      bool on_cubic = true;
      for (const auto& p : rec.points) {
        pts.push_back(point_label(p));
        on_cubic = on_cubic && fricke_residual(p, zero).is_zero();
      }
      emit(dump({{"ry", ry}, {"rz", rz}, {"size", rec.size()}, {"points", pts}, {"onCayleyCubic", on_cubic}}),
           out_path, out);
      return on_cubic ? kOk : kInternal;
    }

    if (bt->parsed()) {
      std::vector<BT> word;
      std::istringstream words(bt_text);
      std::string w;
      while (words >> w) {
        auto b = parse_bt(w);
        if (!b) {
          err << "unknown transformation: " << w << '\n';
          return kUsage;
        }
        word.push_back(*b);
      }
      if (word.empty()) {
        err << "empty transformation\n";
        return kUsage;
      }
      const Theta t = Theta::parse(theta_text);
      const Theta image = apply_word(word, t);
      Omega<CosSum> w_image = omega_from_theta(t);
      for (auto it = word.rbegin(); it != word.rend(); ++it) w_image = apply_bt(*it, w_image);
      const Omega<CosSum> w_before = omega_from_theta(t);
      const Omega<CosSum> w_after = omega_from_theta(image);
      emit(dump({{"name", bt_text},
                 {"theta", theta_json(t)},
                 {"image", theta_json(image)},
                 {"omega", omega_json(w_before)},
                 {"omega4", value_json(w_before.w4)},
                 {"imageOmega", omega_json(w_after)},
                 {"omegaColumnAgrees", same_omega(w_image, w_after)}}),
           out_path, out);
      return kOk;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace fricke::cli
