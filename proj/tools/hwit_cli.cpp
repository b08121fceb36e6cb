#include <CLI11.hpp>

#include <hwit/errors.hpp>
#include <hwit/json_io.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hwit::Json;

// Exit codes: 0 ok, 1 identity failure (with dump), 2 parse/input error,
// 3 singular form, 4 unsupported splitting field.
constexpr int kOk = 0;
constexpr int kIdentityFailure = 1;
constexpr int kParseFailure = 2;

struct Report {
  Json json;
  std::vector<std::string> text;
  int exit_code = kOk;

  void line(std::string s) { text.push_back(std::move(s)); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hwit::ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw hwit::ParseError(what + ": " + e.what());
  }
}

hwit::Int parse_int(const std::string& text, const std::string& what) {
  const hwit::Rat r = hwit::parse_rat(text);
  if (hwit::den(r) != 1) throw hwit::ParseError(what + " must be an integer, got " + text);
  return hwit::num(r);
}

std::string rat_rows_text(const hwit::Mat<hwit::Rat>& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += hwit::to_string(m(r, c));
    }
    s += "]";
  }
  return s + "]";
}

std::string flag_text(bool ok) { return ok ? "ok" : "FAILED"; }

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

hwit::DiagonalForm diagonal_from_csv(const std::string& csv) {
  const std::vector<hwit::Rat> entries = hwit::parse_rat_csv(csv);
  for (const hwit::Rat& e : entries)
    if (e == 0) throw hwit::SingularFormError("diagonal entry 0 makes the form singular");
  return hwit::DiagonalForm(entries);
}

// ---- invariants ----

Report cmd_invariants(const std::string& diag_csv, const std::string& gram_text, bool) {
  Report out;
  out.json["command"] = "invariants";
  if (diag_csv.empty() == gram_text.empty())
    throw hwit::ParseError("invariants needs exactly one of --diag, --gram");

  hwit::QuadraticForm q = [&] {
    if (!diag_csv.empty()) {
      const hwit::DiagonalForm d = diagonal_from_csv(diag_csv);
      out.json["input"]["diag"] = to_json(d);
      out.line("q = " + d.str());
      return hwit::QuadraticForm::from_diagonal(d);
    }
    hwit::QuadraticForm g = hwit::parse_gram(parse_json_text(gram_text, "bad --gram"));
    out.json["input"]["gram"] = to_json(g.gram());
    out.line("q = Gram " + rat_rows_text(g.gram()));
    return g;
  }();

  const hwit::LocalData data = hwit::local_data(q);
  const hwit::BrauerClass w2q = hwit::w2(q);
  out.json["rank"] = data.rank;
  out.json["w1"] = data.det_class.str();
  out.json["w2"] = w2q.str();
  out.json["local"] = to_json(data);

  out.line("rank = " + std::to_string(data.rank));
  out.line("w1 = " + data.det_class.str());
  out.line("w2 = " + w2q.str());
  out.line("signature = (" + std::to_string(data.signature.first) + "," +
           std::to_string(data.signature.second) + ")");
  std::string hasse = "hasse:";
  for (const auto& [place, sign] : data.hasse_signs)
    hasse += " " + place.str() + ":" + (sign == 1 ? "+1" : "-1");
  out.line(std::move(hasse));
  return out;
}

// ---- twist ----

Report cmd_twist(const std::string& diag_csv, const std::string& swap_d,
                 const std::string& cocycle_path, bool json_mode) {
  Report out;
  out.json["command"] = "twist";
  if (swap_d.empty() == cocycle_path.empty())
    throw hwit::ParseError("twist needs exactly one of --quadratic-swap, --cocycle");

  auto make = [&]() -> std::pair<hwit::DiagonalForm, hwit::OrthCocycle> {
    if (!swap_d.empty()) {
      if (diag_csv.empty())
        throw hwit::ParseError("--quadratic-swap needs --diag");
      const hwit::DiagonalForm q = diagonal_from_csv(diag_csv);
      if (q.rank() < 2 || q.entries()[0] != q.entries()[1])
        throw hwit::ParseError(
            "--quadratic-swap exchanges the first two coordinates, so the form "
            "needs rank >= 2 with equal first two entries");
      const hwit::Int d = parse_int(swap_d, "--quadratic-swap");
      hwit::Mat<hwit::Rat> m = hwit::Mat<hwit::Rat>::identity(q.rank());
      m(0, 0) = m(1, 1) = hwit::Rat(0);
      m(0, 1) = m(1, 0) = hwit::Rat(1);
      out.json["input"]["diag"] = to_json(q);
      out.json["input"]["cocycle"] = Json{{"kind", "quadratic-swap"}, {"d", d.str()}};
      out.line("q = " + q.str());
      out.line("cocycle: quadratic swap over Q(√" + d.str() + ")");
      return {q, hwit::quadratic_cocycle(q, d, m)};
    }
    hwit::OrthCocycle c =
        hwit::parse_cocycle(parse_json_text(read_file(cocycle_path), "bad cocycle JSON"));
    hwit::DiagonalForm q = c.form();
    if (!diag_csv.empty() && !(diagonal_from_csv(diag_csv) == q))
      throw hwit::ParseError("--diag disagrees with the form in the cocycle file");
    out.json["input"]["diag"] = to_json(q);
    out.json["input"]["cocycle"] = Json{{"kind", "file"}, {"path", cocycle_path}};
    out.line("q = " + q.str());
    out.line("cocycle: " + cocycle_path);
    return {q, std::move(c)};
  };
  auto [q, c] = make();

  const hwit::Cor62Report rep = hwit::verify_cor62(q, c);
  out.json["report"] = to_json(rep);

  const hwit::DiagonalForm twisted_diag =
      hwit::diagonalize(rep.twisted, hwit::PivotStrategy::kFirstNonzeroDiagonal).diag;
  out.line("q_α = " + twisted_diag.str());
  out.line("twisted Gram = " + rat_rows_text(rep.twisted.gram()));
  out.line("δ¹ = " + rep.d1.str());
  out.line("δ² = " + rep.d2.str());
  out.line("w1: " + rep.w1_base.str() + " -> " + rep.w1_twisted.str() +
           "   identity i: " + flag_text(rep.identity_i));
  out.line("w2: " + rep.w2_base.str() + " -> " + rep.w2_twisted.str() +
           "   identity ii: " + flag_text(rep.identity_ii));
  out.line("two-route δ²: " + rep.d2.str() + " vs " + rep.invariant_route_d2.str() + ": " +
           flag_text(rep.two_route_match));

  if (!(rep.identity_i && rep.identity_ii && rep.two_route_match)) {
    out.exit_code = kIdentityFailure;
    if (!json_mode) out.line("identity failure dump:\n" + out.json.dump(2));
  }
  return out;
}

// ---- verify ----

Report cmd_verify(const std::string& grid, std::size_t forms, std::uint64_t seed,
                  std::size_t robustness, bool json_mode) {
  Report out;
  out.json["command"] = "verify";
  if (grid != "default") throw hwit::ParseError("unknown grid '" + grid + "' (have: default)");
  hwit::GridOptions opts;
  opts.min_forms = forms;
  opts.seed = seed;
  opts.robustness_cells = robustness;
  out.json["input"] =
      Json{{"grid", grid}, {"forms", forms}, {"seed", seed}, {"robustness", robustness}};

  const hwit::GridReport rep = hwit::run_cor62_grid(opts);
  out.json["report"] = to_json(rep);

  out.line("grid: " + grid + ", forms = " + std::to_string(rep.forms));
  out.line(pad("twist", 8) + pad("cells", 8) + pad("id-i", 8) + pad("id-ii", 8) +
           pad("2-route", 9) + "bridge");
  auto row = [&](const std::string& label, const hwit::GridTally& t) {
    out.line(pad(label, 8) + pad(std::to_string(t.cells), 8) +
             pad(std::to_string(t.identity_i), 8) + pad(std::to_string(t.identity_ii), 8) +
             pad(std::to_string(t.two_route), 9) + std::to_string(t.bridge));
  };
  for (const auto& [d, tally] : rep.by_twist) row(std::to_string(d), tally);
  row("total", rep.total);
  out.line("robustness: " + std::to_string(rep.robustness_pass) + "/" +
           std::to_string(rep.robustness_cells));

  if (rep.all_pass()) {
    out.line("result: PASS (0 failures)");
  } else {
    out.exit_code = kIdentityFailure;
    out.line("result: FAIL (" + std::to_string(rep.failure_count) + " failures)");
    if (!json_mode)
      for (const hwit::GridFailure& f : rep.failures) {
        Json dump;
        dump["form"] = to_json(f.form);
        dump["twist"] = f.twist;
        dump["isometry"] = to_json(f.isometry);
        dump["what"] = f.what;
        dump["report"] = to_json(f.report);
        out.line("counterexample: " + dump.dump(2));
      }
  }
  return out;
}

// ---- traceform ----

Report cmd_traceform(const std::string& coeffs_csv, bool) {
  Report out;
  out.json["command"] = "traceform";
  const std::vector<hwit::Rat> coeffs = hwit::parse_rat_csv(coeffs_csv);
  Json echo = Json::array();
  for (const hwit::Rat& c : coeffs) echo.push_back(hwit::to_string(c));
  out.json["input"]["coefficients"] = std::move(echo);
  out.line("coefficients (leading first) = " + coeffs_csv);

  const hwit::QuadraticForm tf = hwit::trace_form(coeffs);
  const hwit::DiagonalForm diag =
      hwit::diagonalize(tf, hwit::PivotStrategy::kFirstNonzeroDiagonal).diag;
  const hwit::LocalData data = hwit::local_data(tf);
  const hwit::BrauerClass w2q = hwit::w2(tf);

  out.json["gram"] = to_json(tf.gram());
  out.json["diagonal"] = to_json(diag);
  out.json["rank"] = data.rank;
  out.json["w1"] = data.det_class.str();
  out.json["w2"] = w2q.str();
  out.json["local"] = to_json(data);

  out.line("Gram = " + rat_rows_text(tf.gram()));
  out.line("diagonal = " + diag.str());
  out.line("w1 = " + data.det_class.str());
  out.line("w2 = " + w2q.str());
  out.line("signature = (" + std::to_string(data.signature.first) + "," +
           std::to_string(data.signature.second) + ")");
  return out;
}

// ---- universal ----

Report cmd_universal(const std::string& w1_text, const std::string& w2_csv, bool) {
  Report out;
  out.json["command"] = "universal";
  const hwit::Int w1_rep = parse_int(w1_text, "--w1");
  if (w1_rep == 0) throw hwit::ParseError("--w1 must be a nonzero integer");
  const hwit::SquareClass w1q{w1_rep};

  std::vector<hwit::Place> places;
  if (!w2_csv.empty()) {
    std::size_t start = 0;
    while (start <= w2_csv.size()) {
      const std::size_t comma = w2_csv.find(',', start);
      const std::string tok =
          w2_csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok == "inf" || tok == "∞")
        places.push_back(hwit::Place::infinite());
      else
        places.push_back(hwit::Place::prime(parse_int(tok, "--w2 place")));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  const hwit::BrauerClass w2q{std::move(places)};

  out.json["input"] = Json{{"w1", w1q.str()}, {"w2", w2q.str()}};
  out.line("w1 = " + w1q.str() + ", w2 = " + w2q.str());

  const hwit::UniversalElement det = hwit::det_class(w1q);
  const hwit::UniversalElement cq = hwit::cq_class(w1q, w2q);
  const hwit::TruncatedUnit sq = hwit::s_q_unit(w1q, w2q);
  const bool ok = hwit::check_sq_identity(w1q, w2q);

  out.json["det_class"] = det.str();
  out.json["cq_class"] = cq.str();
  out.json["s_q"] = sq.str();
  out.json["s_q_identity"] = ok;

  out.line("det[q] = " + det.str());
  out.line("[C_q] = " + cq.str());
  out.line("s_q = " + sq.str());
  out.line("s_q identity: " + flag_text(ok));
  if (!ok) out.exit_code = kIdentityFailure;
  return out;
}

// ---- groupcoh ----

Report cmd_groupcoh(unsigned cyclic, unsigned elementary, unsigned dihedral,
                    const std::string& table_path, bool) {
  Report out;
  out.json["command"] = "groupcoh";
  const int given = (cyclic > 0) + (elementary > 0) + (dihedral > 0) + !table_path.empty();
  if (given != 1)
    throw hwit::ParseError(
        "groupcoh needs exactly one of --cyclic, --elementary, --dihedral, --table");

  hwit::Group g;
  std::string label;
  if (cyclic > 0) {
    g = hwit::FiniteGroup::cyclic(cyclic);
    label = "cyclic(" + std::to_string(cyclic) + ")";
    out.json["input"] = Json{{"kind", "cyclic"}, {"n", cyclic}};
  } else if (elementary > 0) {
    g = hwit::FiniteGroup::elementary_abelian(elementary);
    label = "elementary abelian (Z/2)^" + std::to_string(elementary);
    out.json["input"] = Json{{"kind", "elementary"}, {"k", elementary}};
  } else if (dihedral > 0) {
    g = hwit::FiniteGroup::dihedral(dihedral);
    label = "dihedral(" + std::to_string(dihedral) + ")";
    out.json["input"] = Json{{"kind", "dihedral"}, {"n", dihedral}};
  } else {
    g = hwit::parse_group(parse_json_text(read_file(table_path), "bad group JSON"));
    label = "table " + table_path;
    out.json["input"] = Json{{"kind", "table"}, {"path", table_path}};
  }

  const std::size_t h0 = hwit::cohomology_dim(g, 0);
  const std::size_t h1 = hwit::cohomology_dim(g, 1);
  const std::size_t h2 = hwit::cohomology_dim(g, 2);
  out.json["order"] = g->order();
  out.json["h0"] = h0;
  out.json["h1"] = h1;
  out.json["h2"] = h2;

  out.line("group: " + label + ", order " + std::to_string(g->order()));
  out.line("dim H0 = " + std::to_string(h0));
  out.line("dim H1 = " + std::to_string(h1));
  out.line("dim H2 = " + std::to_string(h2));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Hasse-Witt invariants, Galois twists and their boundary classes"};
  app.require_subcommand(1);

  int exit_code = kOk;
  auto dispatch = [&](bool json_mode, auto&& make_report) {
    const auto start = std::chrono::steady_clock::now();
    Report rep = make_report();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (json_mode) {
      std::cout << rep.json.dump(2) << "\n";
      std::cerr << "elapsed: " << ms << " ms\n";  // stderr keeps stdout comparable
    } else {
      for (const std::string& l : rep.text) std::cout << l << "\n";
      std::cout << "elapsed: " << ms << " ms\n";
    }
    exit_code = rep.exit_code;
  };

  // invariants
  auto* inv = app.add_subcommand("invariants", "rank, w1, w2, signature and local data");
  auto inv_diag = std::make_shared<std::string>();
  auto inv_gram = std::make_shared<std::string>();
  auto inv_json = std::make_shared<bool>(false);
  inv->add_option("--diag", *inv_diag, "diagonal entries, e.g. 2,6");
  inv->add_option("--gram", *inv_gram, "Gram matrix JSON, e.g. [[0,1],[1,0]]");
  inv->add_flag("--json", *inv_json, "canonical JSON output");
  inv->callback([&, inv_diag, inv_gram, inv_json] {
    dispatch(*inv_json, [&] { return cmd_invariants(*inv_diag, *inv_gram, *inv_json); });
  });

  // twist
  auto* tw = app.add_subcommand("twist", "twisted form, delta1, delta2 and both identities");
  auto tw_diag = std::make_shared<std::string>();
  auto tw_swap = std::make_shared<std::string>();
  auto tw_file = std::make_shared<std::string>();
  auto tw_json = std::make_shared<bool>(false);
  tw->add_option("--diag", *tw_diag, "diagonal entries, e.g. 1,1");
  tw->add_option("--quadratic-swap", *tw_swap,
                 "d for the swap cocycle over Q(sqrt d) (first two coordinates)");
  tw->add_option("--cocycle", *tw_file, "cocycle JSON file");
  tw->add_flag("--json", *tw_json, "canonical JSON output");
  tw->callback([&, tw_diag, tw_swap, tw_file, tw_json] {
    dispatch(*tw_json, [&] { return cmd_twist(*tw_diag, *tw_swap, *tw_file, *tw_json); });
  });

  // verify
  auto* ver = app.add_subcommand("verify", "run the acceptance grid and print the matrix");
  auto ver_grid = std::make_shared<std::string>("default");
  auto ver_forms = std::make_shared<std::size_t>(200);
  auto ver_seed = std::make_shared<std::uint64_t>(20260814);
  auto ver_rob = std::make_shared<std::size_t>(30);
  auto ver_json = std::make_shared<bool>(false);
  ver->add_option("--grid", *ver_grid, "grid name (default)");
  ver->add_option("--forms", *ver_forms, "minimum distinct forms");
  ver->add_option("--seed", *ver_seed, "sampling seed");
  ver->add_option("--robustness", *ver_rob, "cells rerun with flipped signs/extra radicand");
  ver->add_flag("--json", *ver_json, "canonical JSON output");
  ver->callback([&, ver_grid, ver_forms, ver_seed, ver_rob, ver_json] {
    dispatch(*ver_json, [&] {
      return cmd_verify(*ver_grid, *ver_forms, *ver_seed, *ver_rob, *ver_json);
    });
  });

  // traceform
  auto* tf = app.add_subcommand("traceform", "trace form of Q[x]/(f) and its invariants");
  auto tf_coeffs = std::make_shared<std::string>();
  auto tf_json = std::make_shared<bool>(false);
  tf->add_option("coefficients", *tf_coeffs, "leading-first, e.g. 1,0,-3 for x^2-3")
      ->required();
  tf->add_flag("--json", *tf_json, "canonical JSON output");
  tf->callback([&, tf_coeffs, tf_json] {
    dispatch(*tf_json, [&] { return cmd_traceform(*tf_coeffs, *tf_json); });
  });

  // universal
  auto* uni = app.add_subcommand("universal", "det[q], [C_q], s_q in the truncated ring");
  auto uni_w1 = std::make_shared<std::string>();
  auto uni_w2 = std::make_shared<std::string>();
  auto uni_json = std::make_shared<bool>(false);
  uni->add_option("--w1", *uni_w1, "square class representative, e.g. 3")->required();
  uni->add_option("--w2", *uni_w2, "ramified places, e.g. 2,3 or 2,inf (default: none)");
  uni->add_flag("--json", *uni_json, "canonical JSON output");
  uni->callback([&, uni_w1, uni_w2, uni_json] {
    dispatch(*uni_json, [&] { return cmd_universal(*uni_w1, *uni_w2, *uni_json); });
  });

  // groupcoh
  auto* gc = app.add_subcommand("groupcoh", "dim H^n(G, F2) for n <= 2");
  auto gc_cyclic = std::make_shared<unsigned>(0);
  auto gc_elem = std::make_shared<unsigned>(0);
  auto gc_dihedral = std::make_shared<unsigned>(0);
  auto gc_table = std::make_shared<std::string>();
  auto gc_json = std::make_shared<bool>(false);
  gc->add_option("--cyclic", *gc_cyclic, "Z/n");
  gc->add_option("--elementary", *gc_elem, "(Z/2)^k");
  gc->add_option("--dihedral", *gc_dihedral, "dihedral group of order 2n");
  gc->add_option("--table", *gc_table, "multiplication table JSON file");
  gc->add_flag("--json", *gc_json, "canonical JSON output");
  gc->callback([&, gc_cyclic, gc_elem, gc_dihedral, gc_table, gc_json] {
    dispatch(*gc_json, [&] {
      return cmd_groupcoh(*gc_cyclic, *gc_elem, *gc_dihedral, *gc_table, *gc_json);
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseFailure;
  } catch (const hwit::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const hwit::SingularFormError& e) {
    std::cerr << "singular form: " << e.what() << "\n";
    return 3;
  } catch (const hwit::UnsupportedSplittingField& e) {
    std::cerr << "unsupported splitting field: " << e.what() << "\n";
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
