#include "expcircle/cli.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "expcircle/circle_cells.hpp"
#include "expcircle/degrees.hpp"
#include "expcircle/errors.hpp"
#include "expcircle/groups.hpp"
#include "expcircle/version.hpp"

namespace expcircle {

namespace {

namespace fs = std::filesystem;

Json int_to_json_lossless(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();  // decimal string once past int64 range
}

Json groups_to_json(const std::vector<HomologyGroup>& hs) {
  Json arr = Json::array();
  for (const HomologyGroup& h : hs) arr.push_back(homology_to_json(h));
  return arr;
}

Json matrix_to_json(const IntMat& M) {
  Json rows = Json::array();
  for (long i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < M.cols(); ++j) row.push_back(int_to_json(M(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Uniform rational in {0/den, ..., den/den}.
Rat random_rat(std::mt19937& rng, long den) {
  return make_rat(static_cast<long>(rng() % static_cast<unsigned>(den + 1)), den);
}

// Strictly positive barycentric weights with denominator-bounded entries.
BarycentricPoint random_interior_point(std::mt19937& rng, long n) {
  std::vector<Rat> w;
  Rat total = make_rat(0);
  for (long i = 0; i < n; ++i) {
    Rat v = make_rat(1 + static_cast<long>(rng() % 97u), 1);
    w.push_back(v);
    total += v;
  }
  for (Rat& v : w) v /= total;
  return BarycentricPoint{std::move(w)};
}

PrismPoint random_prism_point(std::mt19937& rng, long k) {
  std::vector<Rat> a;
  for (long i = 0; i < k - 1; ++i)
    a.push_back(make_rat(static_cast<long>(rng() % 96u), 97));  // < 1: off the fake face
  std::sort(a.begin(), a.end());
  Rat t = random_rat(rng, 97);
  return PrismPoint{std::move(a), std::move(t)};
}

bool prism_roundtrips(std::mt19937& rng, long k, int trips) {
  for (int i = 0; i < trips; ++i) {
    PrismPoint p = random_prism_point(rng, k);
    PrismPoint q = simplex_to_prism(prism_to_simplex(p));
    if (q.a != p.a || q.t != p.t) return false;
  }
  return true;
}

bool fake_face_raises(long k) {
  std::vector<Rat> x(static_cast<std::size_t>(k), make_rat(1, 2));
  x.front() = make_rat(0);
  x.back() = make_rat(1);
  std::sort(x.begin(), x.end());
  try {
    simplex_to_prism(SimplexPoint{std::move(x)});
  } catch (const FakeFaceError&) {
    return true;
  }
  return false;
}

long monodromy_order(long k) {
  std::vector<Rat> start;
  for (long i = 1; i < k; ++i) start.push_back(make_rat(i, k + 1));
  std::vector<Rat> a = start;
  for (long m = 1; m <= k; ++m) {
    a = monodromy_phi(a);
    if (a == start) return m;
  }
  return 0;  // no return inside k steps
}

Json build_homology_rows(long max_k) {
  Json rows = Json::array();
  for (long k = 1; k <= max_k; ++k) {
    ChainComplex C = boundary_matrices(exp_cell_complex(k));
    std::vector<HomologyGroup> hs = homology_all(C);
    long sd = sphere_dimension(k);
    bool match = hs == sphere_homology(sd, C.top_dimension());
    Json row;
    row["k"] = k;
    row["groups"] = groups_to_json(hs);
    row["sphere_dim"] = sd;
    row["euler"] = euler_characteristic(C);
    row["match"] = match && euler_characteristic(C) == 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json build_inclusion_rows(long max_k) {
  Json rows = Json::array();
  for (long l = 1; l <= 5 && 2 * l <= max_k; ++l) {
    long kf = 2 * l - 1, kt = 2 * l;
    ChainComplex Cf = boundary_matrices(exp_cell_complex(kf));
    ChainComplex Ct = boundary_matrices(exp_cell_complex(kt));
    IntMat M = induced_map_on_homology(Cf, Ct, inclusion_chain_map(kf, kt), kf);
    Json row;
    row["l"] = l;
    row["k_from"] = kf;
    row["k_to"] = kt;
    row["matrix"] = matrix_to_json(M);
    row["match"] = M.rows() == 1 && M.cols() == 1 && M(0, 0) == 2;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json build_expcupone_rows(long max_k) {
  Json rows = Json::array();
  for (long k = 1; k <= std::min(max_k, 10L); ++k) {
    ChainComplex C = boundary_matrices(expcupone_cell_complex(k));
    std::vector<HomologyGroup> hs = homology_all(C);
    hs[0].rank -= 1;  // reduced homology
    bool match = true;
    for (long i = 0; i <= C.top_dimension(); ++i) {
      HomologyGroup expect;
      if (k % 2 == 0 && i == k - 1) expect.rank = 1;
      if (hs[static_cast<std::size_t>(i)] != expect) match = false;
    }
    Json row;
    row["k"] = k;
    row["reduced"] = groups_to_json(hs);
    if (k % 2 == 0 && k >= 2) {
      ChainComplex D = boundary_matrices(exp_cell_complex(k - 1));
      std::vector<IntMat> f = union_basepoint_chain_map(k);
      bool union_ok = false;
      try {
        IntMat M = induced_map_on_homology(D, C, f, k - 1);
        union_ok = f[static_cast<std::size_t>(k - 1)] == IntMat::Ones(1, 1) && M.rows() == 1 &&
                   M.cols() == 1 && M(0, 0) == 1;
      } catch (const NotAChainMapError&) {
        union_ok = false;
      }
      row["union_map_match"] = union_ok;
      match = match && union_ok;
    } else {
      row["union_map_match"] = nullptr;
    }
    row["match"] = match;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json build_degree_section(long max_k, unsigned long long budget) {
  Json grid = Json::array();
  for (long k : {1L, 3L, 5L, 7L}) {
    if (k > max_k) break;
    for (long d : {1L, 2L, 3L}) {
      Json row;
      row["k"] = k;
      row["d"] = d;
      Int f = degree_formula(k, d);
      row["formula"] = int_to_json_lossless(f);
      try {
        Int o = degree_oracle(k, d, budget);
        row["oracle"] = int_to_json_lossless(o);
        row["match"] = o == f;
      } catch (const BudgetExceededError&) {
        row["oracle"] = nullptr;
        row["match"] = nullptr;
      }
      grid.push_back(std::move(row));
    }
  }
  Json inverse = Json::array();
  for (long k : {1L, 3L, 5L, 7L, 9L}) {
    if (k > max_k) break;
    Int f = degree_formula(k, -1);
    Int o = degree_oracle_inverse(k);
    Json row;
    row["k"] = k;
    row["formula"] = int_to_json_lossless(f);
    row["oracle"] = int_to_json_lossless(o);
    row["match"] = o == f;
    inverse.push_back(std::move(row));
  }
  Json out;
  out["grid"] = std::move(grid);
  out["inverse"] = std::move(inverse);
  return out;
}

Json build_groups_section(long max_k) {
  Json g;
  Json comp = Json::array();
  for (long k = 2; k <= std::min(max_k, 8L); ++k) {
    GroupPresentation G = complement_group(k);
    AbelianGroup ab = abelianization(G);
    Json row;
    row["k"] = k;
    row["presentation"] = presentation_to_json(G);
    row["abelianization"] = homology_to_json(ab);
    bool is_z = ab.rank == 1 && ab.torsion.empty();
    if (k >= 3 && k <= 5) {
      LaurentPolynomial alex = fox_alexander(G);
      row["alexander"] = laurent_to_json(alex);
      Int at1 = laurent_evaluate(alex, Int(1));
      row["match"] = is_z && (at1 == 1 || at1 == -1);
    } else {
      row["alexander"] = nullptr;
      row["match"] = is_z;
    }
    comp.push_back(std::move(row));
  }
  g["complement"] = std::move(comp);
  if (max_k >= 3) {
    GroupPresentation P = pi1_exp3();
    AbelianGroup ab = abelianization(P);
    GroupPresentation T = tietze_simplify(P);
    Json p;
    p["presentation"] = presentation_to_json(P);
    p["abelianization"] = homology_to_json(ab);
    p["tietze_empty"] = T.generators.empty() && T.relators.empty();
    p["match"] = ab.rank == 0 && ab.torsion.empty() && T.generators.empty() && T.relators.empty();
    g["pi1_exp3"] = std::move(p);

    SeifertData left{0, 0, {make_rat(1, 2), make_rat(-1, 3)}};
    SeifertData right{0, 0, {make_rat(1, 2), make_rat(-2, 3)}};
    Json s;
    Json sols = Json::array();
    for (long a : seifert_alpha_solutions()) sols.push_back(a);
    s["alpha_solutions"] = std::move(sols);
    bool rev_eq = seifert_equivalent(seifert_reverse(left), right);
    s["reverse_equivalent"] = rev_eq;
    s["euler_left"] = rat_to_string(seifert_euler_number(left));
    s["euler_right"] = rat_to_string(seifert_euler_number(right));
    s["match"] = rev_eq && seifert_euler_number(left) == make_rat(1, 6) &&
                 seifert_euler_number(right) == make_rat(-1, 6);
    g["seifert"] = std::move(s);

    Json tw = Json::array();
    for (auto [p0, q0] : {std::pair<long, long>{1, 3}, {1, 1}, {0, 1}}) {
      SurfaceCurve c = dehn_twist(SurfaceCurve{p0, q0});
      Json row;
      row["p"] = p0;
      row["q"] = q0;
      row["image_p"] = c.p;
      row["image_q"] = c.q;
      tw.push_back(std::move(row));
    }
    g["dehn"] = std::move(tw);
  } else {
    g["pi1_exp3"] = nullptr;
    g["seifert"] = nullptr;
    g["dehn"] = nullptr;
  }
  return g;
}

Json build_prism_rows(long max_k) {
  Json rows = Json::array();
  for (long k = 2; k <= std::min(max_k, 8L); ++k) {
    std::mt19937 rng(7001u + static_cast<unsigned>(k));
    bool rt = prism_roundtrips(rng, k, 25);
    bool ff = fake_face_raises(k);
    long order = monodromy_order(k);
    int sign = monodromy_orientation_sign(k);
    int expect_sign = k % 2 == 0 ? -1 : 1;
    Json row;
    row["k"] = k;
    row["roundtrips"] = 25;
    row["roundtrip_ok"] = rt;
    row["fake_face_raises"] = ff;
    row["phi_order"] = order;
    row["orientation_sign"] = sign;
    row["match"] = rt && ff && order == k && sign == expect_sign;
    rows.push_back(std::move(row));
  }
  return rows;
}

Json build_retraction_section(long max_k) {
  Json edge = Json::array();
  for (long n = 3; n <= std::min(max_k, 5L); ++n) {
    std::mt19937 rng(8101u + static_cast<unsigned>(n));
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      BarycentricPoint w = random_interior_point(rng, n);
      BarycentricPoint end = composed_edge_retraction(w, make_rat(1));
      for (long j = 0; j + 2 < n; ++j)
        if (end.weights[static_cast<std::size_t>(j)] != 0) ok = false;
    }
    Json row;
    row["n"] = n;
    row["points"] = 25;
    row["endpoint_on_last_edge"] = ok;
    row["match"] = ok;
    edge.push_back(std::move(row));
  }
  Json star = Json::array();
  for (long k = 3; k <= std::min(max_k, 4L); ++k) {
    std::mt19937 rng(8201u + static_cast<unsigned>(k));
    bool lands = true;
    for (int i = 0; i < 25 && lands; ++i) {
      BarycentricPoint w = random_interior_point(rng, k);
      if (!on_star_graph(star_retraction(w, make_rat(1)))) lands = false;
    }
    Json row;
    row["k"] = k;
    row["points"] = 25;
    row["lands_on_star"] = lands;
    row["match"] = lands;
    star.push_back(std::move(row));
  }
  Json out;
  out["edge"] = std::move(edge);
  out["star"] = std::move(star);
  return out;
}

bool section_all_match(const Json& rows) {
  for (const Json& row : rows)
    if (row.contains("match") && row["match"].is_boolean() && !row["match"].get<bool>())
      return false;
  return true;
}

// ---- markdown rendering

std::string fmt_entry(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string groups_list_to_string(const Json& arr) {
  std::string out = "[";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += homology_group_to_string(homology_from_json(arr[i]));
  }
  return out + "]";
}

void render_table(std::ostream& os, const std::vector<std::string>& headers,
                  const std::vector<std::vector<std::string>>& body) {
  os << "|";
  for (const std::string& h : headers) os << " " << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < headers.size(); ++i) os << " --- |";
  os << "\n";
  for (const auto& row : body) {
    os << "|";
    for (const std::string& cell : row) os << " " << cell << " |";
    os << "\n";
  }
}

std::string render_homology_md(const Json& r) {
  std::ostringstream os;
  long k = r["k"].get<long>();
  os << "# Homology of exp_" << k << "\n\n";
  std::vector<std::vector<std::string>> body;
  const Json& gs = r["groups"];
  for (std::size_t i = 0; i < gs.size(); ++i)
    body.push_back({std::to_string(i), homology_group_to_string(homology_from_json(gs[i]))});
  render_table(os, {"i", "H_i"}, body);
  os << "\nsphere dimension: " << r["sphere_dim"].get<long>() << "\n";
  os << "verdict: " << (r["match"].get<bool>() ? "MATCH" : "MISMATCH") << " (S^"
     << r["sphere_dim"].get<long>() << ")\n";
  return os.str();
}

std::string render_degree_md(const Json& r) {
  std::ostringstream os;
  os << "# Degree of the power map on exp_" << r["k"].get<long>() << "\n\n";
  os << "k: " << r["k"].get<long>() << "\n";
  os << "d: " << r["d"].get<long>() << "\n";
  os << "formula: " << fmt_entry(r["formula"]) << "\n";
  os << "oracle: " << fmt_entry(r["oracle"]) << "\n";
  if (r["match"].is_null())
    os << "verdict: FORMULA ONLY\n";
  else
    os << "verdict: " << (r["match"].get<bool>() ? "MATCH" : "MISMATCH") << "\n";
  return os.str();
}

std::string render_report_md(const Json& r) {
  std::ostringstream os;
  os << "# Verification dossier\n\n";
  os << "version: " << r["version"].get<std::string>() << "\n";
  os << "max k: " << r["config"]["max_k"].get<long>() << "\n";
  os << "oracle budget: " << r["config"]["budget"].get<std::uint64_t>() << "\n";

  os << "\n## Homology\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["homology"])
      body.push_back({std::to_string(row["k"].get<long>()), groups_list_to_string(row["groups"]),
                      "S^" + std::to_string(row["sphere_dim"].get<long>()),
                      std::to_string(row["euler"].get<long>()), fmt_entry(row["match"])});
    render_table(os, {"k", "H_*", "sphere", "euler", "match"}, body);
  }

  os << "\n## Inclusion on top homology\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["inclusion"])
      body.push_back({std::to_string(row["l"].get<long>()),
                      std::to_string(row["k_from"].get<long>()),
                      std::to_string(row["k_to"].get<long>()), row["matrix"].dump(),
                      fmt_entry(row["match"])});
    render_table(os, {"l", "from", "to", "induced", "match"}, body);
  }

  os << "\n## Subsets containing the basepoint\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["expcupone"])
      body.push_back({std::to_string(row["k"].get<long>()),
                      groups_list_to_string(row["reduced"]), fmt_entry(row["union_map_match"]),
                      fmt_entry(row["match"])});
    render_table(os, {"k", "reduced H_*", "union map", "match"}, body);
  }

  os << "\n## Power-map degrees\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["degrees"]["grid"])
      body.push_back({std::to_string(row["k"].get<long>()), std::to_string(row["d"].get<long>()),
                      fmt_entry(row["formula"]), fmt_entry(row["oracle"]),
                      fmt_entry(row["match"])});
    render_table(os, {"k", "d", "formula", "oracle", "match"}, body);
    os << "\n### Inversion\n\n";
    std::vector<std::vector<std::string>> inv;
    for (const Json& row : r["degrees"]["inverse"])
      inv.push_back({std::to_string(row["k"].get<long>()), fmt_entry(row["formula"]),
                     fmt_entry(row["oracle"]), fmt_entry(row["match"])});
    render_table(os, {"k", "formula", "oracle", "match"}, inv);
  }

  os << "\n## Fundamental groups\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["groups"]["complement"]) {
      std::string alex = row["alexander"].is_null()
                             ? "-"
                             : laurent_to_string(laurent_from_json(row["alexander"]));
      body.push_back({std::to_string(row["k"].get<long>()),
                      homology_group_to_string(homology_from_json(row["abelianization"])), alex,
                      fmt_entry(row["match"])});
    }
    render_table(os, {"k", "abelianization", "alexander", "match"}, body);
    if (!r["groups"]["pi1_exp3"].is_null()) {
      const Json& p = r["groups"]["pi1_exp3"];
      os << "\npi_1(exp_3) abelianization: "
         << homology_group_to_string(homology_from_json(p["abelianization"]))
         << "; tietze reaches the empty presentation: " << fmt_entry(p["tietze_empty"])
         << "; match: " << fmt_entry(p["match"]) << "\n";
    }
    if (!r["groups"]["seifert"].is_null()) {
      const Json& s = r["groups"]["seifert"];
      os << "\nSeifert alpha solutions: " << s["alpha_solutions"].dump()
         << "; reverse equivalent: " << fmt_entry(s["reverse_equivalent"])
         << "; Euler numbers: " << s["euler_left"].get<std::string>() << ", "
         << s["euler_right"].get<std::string>() << "; match: " << fmt_entry(s["match"]) << "\n";
    }
    if (!r["groups"]["dehn"].is_null()) {
      os << "\n### Dehn twists\n\n";
      std::vector<std::vector<std::string>> tw;
      for (const Json& row : r["groups"]["dehn"])
        tw.push_back({"(" + std::to_string(row["p"].get<long>()) + ", " +
                          std::to_string(row["q"].get<long>()) + ")",
                      "(" + std::to_string(row["image_p"].get<long>()) + ", " +
                          std::to_string(row["image_q"].get<long>()) + ")"});
      render_table(os, {"curve", "twist image"}, tw);
    }
  }

  os << "\n## Prism model\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["prism"])
      body.push_back({std::to_string(row["k"].get<long>()), fmt_entry(row["roundtrip_ok"]),
                      fmt_entry(row["fake_face_raises"]),
                      std::to_string(row["phi_order"].get<long>()),
                      std::to_string(row["orientation_sign"].get<int>()),
                      fmt_entry(row["match"])});
    render_table(os, {"k", "round trips", "fake face", "phi order", "sign", "match"}, body);
  }

  os << "\n## Retractions\n\n";
  {
    std::vector<std::vector<std::string>> body;
    for (const Json& row : r["retractions"]["edge"])
      body.push_back({std::to_string(row["n"].get<long>()), fmt_entry(row["endpoint_on_last_edge"]),
                      fmt_entry(row["match"])});
    render_table(os, {"n", "endpoint on last edge", "match"}, body);
    os << "\n";
    std::vector<std::vector<std::string>> st;
    for (const Json& row : r["retractions"]["star"])
      st.push_back({std::to_string(row["k"].get<long>()), fmt_entry(row["lands_on_star"]),
                    fmt_entry(row["match"])});
    render_table(os, {"k", "lands on star graph", "match"}, st);
  }

  os << "\nall sections match: " << fmt_entry(r["all_match"]) << "\n";
  return os.str();
}

// ---- cache

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

fs::path cache_directory() {
  if (const char* env = std::getenv("EXPCIRCLE_CACHE_DIR")) return fs::path(env);
  if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "expcircle";
  return fs::temp_directory_path() / "expcircle-cache";
}

std::string cache_key(const std::string& canonical) {
  std::uint64_t h = fnv1a(canonical + "|v=" + kVersion);
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

// Envelope; absent or unreadable entries are recomputed.
bool cache_load(const std::string& key, int& exit_code, std::string& payload) {
  std::ifstream in(cache_directory() / (key + ".json"), std::ios::binary);
  if (!in) return false;
  try {
    Json env = Json::parse(in);
    exit_code = env.at("exit").get<int>();
    payload = env.at("payload").get<std::string>();
    return true;
  } catch (...) {
    return false;
  }
}

void cache_store(const std::string& key, int exit_code, const std::string& payload) {
  std::error_code ec;
  fs::path dir = cache_directory();
  fs::create_directories(dir, ec);
  if (ec) return;  // the cache is best-effort
  Json env;
  env["exit"] = exit_code;
  env["payload"] = payload;
  fs::path tmp = dir / (key + ".tmp" + std::to_string(static_cast<long>(::getpid())));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << env.dump();
    if (!out) return;
  }
  fs::rename(tmp, dir / (key + ".json"), ec);
  if (ec) fs::remove(tmp, ec);
}

// Writes payload to the path (or stdout); returns false on I/O failure.
bool emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return false;
  out << payload;
  out.flush();
  return static_cast<bool>(out);
}

struct CommandResult {
  int exit_code = kExitOk;
  std::string payload;
};

CommandResult run_homology(long k, const std::string& format) {
  Json r = homology_report(k);
  CommandResult res;
  res.payload = format == "md" ? render_markdown(r) : r.dump(2) + "\n";
  res.exit_code = r["match"].get<bool>() ? kExitOk : kExitMismatch;
  return res;
}

CommandResult run_degree(long k, long d, bool oracle, unsigned long long budget,
                         const std::string& format) {
  Json r = degree_report(k, d, oracle, budget);
  CommandResult res;
  res.payload = format == "md" ? render_markdown(r) : r.dump(2) + "\n";
  res.exit_code = kExitOk;
  if (r["match"].is_boolean() && !r["match"].get<bool>()) res.exit_code = kExitMismatch;
  return res;
}

CommandResult run_report(long max_k, unsigned long long budget, const std::string& format) {
  Json r = full_report(max_k, budget);
  CommandResult res;
  res.payload = format == "md" ? render_markdown(r) : r.dump(2) + "\n";
  res.exit_code = r["all_match"].get<bool>() ? kExitOk : kExitMismatch;
  return res;
}

}  // namespace

std::string homology_group_to_string(const HomologyGroup& h) {
  std::string out;
  if (h.rank == 1) {
    out = "Z";
  } else if (h.rank > 1) {
    out = "Z^" + std::to_string(h.rank);
  }
  for (const Int& t : h.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  if (out.empty()) out = "0";
  return out;
}

std::string laurent_to_string(const LaurentPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.coeffs) {
    Int a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Json homology_report(long k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  ChainComplex C = boundary_matrices(exp_cell_complex(k));
  std::vector<HomologyGroup> hs = homology_all(C);
  long sd = sphere_dimension(k);
  Json r;
  r["schema"] = "expcircle-homology/1";
  r["k"] = k;
  r["groups"] = groups_to_json(hs);
  r["sphere_dim"] = sd;
  r["match"] = hs == sphere_homology(sd, C.top_dimension());
  return r;
}

Json degree_report(long k, long d, bool oracle, unsigned long long budget) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  Json r;
  r["schema"] = "expcircle-degree/1";
  r["k"] = k;
  r["d"] = d;
  Int f = degree_formula(k, d);
  r["formula"] = int_to_json_lossless(f);
  if (oracle) {
    Int o = d == -1 ? degree_oracle_inverse(k) : degree_oracle(k, d, budget);
    r["oracle"] = int_to_json_lossless(o);
    r["match"] = o == f;
  } else {
    r["oracle"] = nullptr;
    r["match"] = nullptr;
  }
  return r;
}

Json full_report(long max_k, unsigned long long budget) {
  if (max_k < 1) throw std::invalid_argument("max k must be at least 1");
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  Json r;
  r["schema"] = "expcircle-report/1";
  r["version"] = kVersion;
  Json cfg;
  cfg["max_k"] = max_k;
  cfg["budget"] = static_cast<std::uint64_t>(budget);
  r["config"] = std::move(cfg);
  r["homology"] = build_homology_rows(max_k);
  r["inclusion"] = build_inclusion_rows(max_k);
  r["expcupone"] = build_expcupone_rows(max_k);
  r["degrees"] = build_degree_section(max_k, budget);
  r["groups"] = build_groups_section(max_k);
  r["prism"] = build_prism_rows(max_k);
  r["retractions"] = build_retraction_section(max_k);

  bool all = section_all_match(r["homology"]) && section_all_match(r["inclusion"]) &&
             section_all_match(r["expcupone"]) && section_all_match(r["degrees"]["grid"]) &&
             section_all_match(r["degrees"]["inverse"]) &&
             section_all_match(r["groups"]["complement"]) && section_all_match(r["prism"]) &&
             section_all_match(r["retractions"]["edge"]) &&
             section_all_match(r["retractions"]["star"]);
  if (!r["groups"]["pi1_exp3"].is_null())
    all = all && r["groups"]["pi1_exp3"]["match"].get<bool>();
  if (!r["groups"]["seifert"].is_null()) all = all && r["groups"]["seifert"]["match"].get<bool>();
  r["all_match"] = all;
  return r;
}

std::string render_markdown(const Json& report) {
  const std::string schema = report.at("schema").get<std::string>();
  if (schema == "expcircle-homology/1") return render_homology_md(report);
  if (schema == "expcircle-degree/1") return render_degree_md(report);
  if (schema == "expcircle-report/1") return render_report_md(report);
  throw std::invalid_argument("unknown report schema: " + schema);
}

int run_cli(int argc, char** argv) {
  CLI::App app{"exact invariants of finite subset spaces of the circle"};
  app.require_subcommand(1);

  long k = 0, d = 0, max_k = 0;
  bool oracle = false, want_json = false, want_md = false;
  unsigned long long budget = kDefaultOracleBudget;
  std::string format = "json", out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "md"}));
    cmd->add_flag("--json", want_json, "shorthand for --format json");
    cmd->add_flag("--md", want_md, "shorthand for --format md");
    cmd->add_option("--out", out_path, "write the report to this path instead of stdout");
  };

  CLI::App* hom = app.add_subcommand("homology", "integral homology of exp_k with sphere verdict");
  hom->add_option("--k", k, "number of points")->required();
  add_common(hom);

  CLI::App* deg = app.add_subcommand("degree", "degree of the d-th power map on exp_k");
  deg->add_option("--k", k, "number of points")->required();
  deg->add_option("--d", d, "power map exponent")->required();
  deg->add_flag("--oracle", oracle, "also run the enumeration oracle (k odd, d >= 1 or d = -1)");
  deg->add_option("--budget", budget, "maximum tuples the oracle may enumerate");
  add_common(deg);

  CLI::App* rep = app.add_subcommand("report", "full verification dossier up to max k");
  rep->add_option("--max-k", max_k, "largest k in the dossier")->required();
  rep->add_option("--budget", budget, "maximum tuples the oracle may enumerate");
  add_common(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  if (want_json && want_md) {
    std::cerr << "error: --json and --md are mutually exclusive\n";
    return kExitBadArgs;
  }
  if (want_json) format = "json";
  if (want_md) format = "md";

  try {
    CommandResult res;
    std::string key;
    if (hom->parsed()) {
      if (k < 1) throw std::invalid_argument("k must be at least 1");
      key = cache_key("homology|k=" + std::to_string(k) + "|format=" + format);
      if (!cache_load(key, res.exit_code, res.payload)) {
        res = run_homology(k, format);
        cache_store(key, res.exit_code, res.payload);
      }
    } else if (deg->parsed()) {
      if (k < 1) throw std::invalid_argument("k must be at least 1");
      if (oracle && (k % 2 == 0 || (d < 1 && d != -1)))
        throw std::invalid_argument("the oracle needs k odd and d >= 1 or d = -1");
      key = cache_key("degree|k=" + std::to_string(k) + "|d=" + std::to_string(d) +
                      "|oracle=" + (oracle ? "1" : "0") + "|budget=" + std::to_string(budget) +
                      "|format=" + format);
      if (!cache_load(key, res.exit_code, res.payload)) {
        res = run_degree(k, d, oracle, budget, format);
        cache_store(key, res.exit_code, res.payload);
      }
    } else {
      if (max_k < 1) throw std::invalid_argument("max k must be at least 1");
      if (budget < 1) throw std::invalid_argument("budget must be at least 1");
      key = cache_key("report|max_k=" + std::to_string(max_k) +
                      "|budget=" + std::to_string(budget) + "|format=" + format);
      if (!cache_load(key, res.exit_code, res.payload)) {
        res = run_report(max_k, budget, format);
        cache_store(key, res.exit_code, res.payload);
      }
    }
    if (!emit(res.payload, out_path)) {
      std::cerr << "error: cannot write output to " << (out_path.empty() ? "stdout" : out_path)
                << "\n";
      return kExitIo;
    }
    return res.exit_code;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace expcircle
