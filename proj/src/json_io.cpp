#include "expcircle/json_io.hpp"

#include <stdexcept>
#include <string>

namespace expcircle {

Json int_to_json(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer too large for JSON number");
  return static_cast<std::int64_t>(v.get_si());
}

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  return Int(static_cast<long>(j.get<std::int64_t>()));
}

Json subset_to_json(const FiniteSubset& s) {
  Json arr = Json::array();
  for (const CirclePoint& p : s.points()) arr.push_back(rat_to_string(p.angle()));
  return arr;
}

FiniteSubset subset_from_json(const Json& j, long capacity) {
  std::vector<CirclePoint> pts;
  for (const Json& e : j) pts.emplace_back(rat_from_string(e.get<std::string>()));
  return FiniteSubset(std::move(pts), capacity);
}

Json chain_to_json(const ChainComplex& c) {
  Json out;
  out["ranks"] = c.ranks;
  Json bnds = Json::array();
  for (const IntMat& B : c.boundaries) {
    Json rows = Json::array();
    for (long i = 0; i < B.rows(); ++i) {
      Json row = Json::array();
      for (long j = 0; j < B.cols(); ++j) row.push_back(int_to_json(B(i, j)));
      rows.push_back(std::move(row));
    }
    bnds.push_back(std::move(rows));
  }
  out["boundaries"] = std::move(bnds);
  return out;
}

ChainComplex chain_from_json(const Json& j) {
  ChainComplex c;
  c.ranks = j.at("ranks").get<std::vector<long>>();
  const Json& bnds = j.at("boundaries");
  if (bnds.size() != c.ranks.size())
    throw std::invalid_argument("boundary count does not match rank count");
  for (std::size_t i = 0; i < c.ranks.size(); ++i) {
    long rows = i == 0 ? 0 : c.ranks[i - 1];
    long cols = c.ranks[i];
    IntMat B(rows, cols);
    const Json& rj = bnds[i];
    if (static_cast<long>(rj.size()) != rows)
      throw std::invalid_argument("boundary row count mismatch");
    for (long r = 0; r < rows; ++r) {
      if (static_cast<long>(rj[static_cast<std::size_t>(r)].size()) != cols)
        throw std::invalid_argument("boundary column count mismatch");
      for (long cidx = 0; cidx < cols; ++cidx)
        B(r, cidx) = int_from_json(rj[static_cast<std::size_t>(r)][static_cast<std::size_t>(cidx)]);
    }
    c.boundaries.push_back(std::move(B));
  }
  c.validate();
  return c;
}

Json homology_to_json(const HomologyGroup& h) {
  Json out;
  out["rank"] = h.rank;
  Json tor = Json::array();
  for (const Int& t : h.torsion) tor.push_back(int_to_json(t));
  out["torsion"] = std::move(tor);
  return out;
}

HomologyGroup homology_from_json(const Json& j) {
  HomologyGroup h;
  h.rank = j.at("rank").get<long>();
  for (const Json& t : j.at("torsion")) h.torsion.push_back(int_from_json(t));
  return h;
}

Json presentation_to_json(const GroupPresentation& G) {
  Json out;
  out["gens"] = G.generators;
  Json rels = Json::array();
  for (const Word& r : G.relators) {
    Json rel = Json::array();
    // Run-length merge consecutive powers of the same generator.
    const std::vector<int>& ls = r.letters();
    for (std::size_t i = 0; i < ls.size();) {
      int gen = std::abs(ls[i]) - 1;
      long exp = 0;
      std::size_t k = i;
      while (k < ls.size() && std::abs(ls[k]) == std::abs(ls[i])) {
        exp += ls[k] > 0 ? 1 : -1;
        ++k;
      }
      rel.push_back(Json::array({G.generators[static_cast<std::size_t>(gen)], exp}));
      i = k;
    }
    rels.push_back(std::move(rel));
  }
  out["rels"] = std::move(rels);
  return out;
}

GroupPresentation presentation_from_json(const Json& j) {
  GroupPresentation G;
  G.generators = j.at("gens").get<std::vector<std::string>>();
  for (const Json& rel : j.at("rels")) {
    Word w;
    for (const Json& term : rel) {
      const std::string& name = term[0].get_ref<const std::string&>();
      long exp = term[1].get<long>();
      auto it = std::find(G.generators.begin(), G.generators.end(), name);
      if (it == G.generators.end())
        throw std::invalid_argument("relator references unknown generator: " + name);
      int gen = static_cast<int>(it - G.generators.begin());
      w = w * Word::power(gen, exp);
    }
    G.relators.push_back(std::move(w));
  }
  G.validate();
  return G;
}

Json laurent_to_json(const LaurentPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.coeffs) out[std::to_string(e)] = int_to_json(c);
  return out;
}

LaurentPolynomial laurent_from_json(const Json& j) {
  LaurentPolynomial p;
  for (const auto& [key, val] : j.items()) p.add_term(std::stol(key), int_from_json(val));
  return p;
}

Json seifert_to_json(const SeifertData& m) {
  Json out;
  out["genus"] = m.genus;
  out["boundary"] = m.boundary_count;
  out["slopes"] = rat_vector_to_json(m.slopes);
  return out;
}

SeifertData seifert_from_json(const Json& j) {
  SeifertData m;
  m.genus = j.at("genus").get<long>();
  m.boundary_count = j.at("boundary").get<long>();
  m.slopes = rat_vector_from_json(j.at("slopes"));
  return m;
}

Json rat_vector_to_json(const std::vector<Rat>& v) {
  Json arr = Json::array();
  for (const Rat& r : v) arr.push_back(rat_to_string(r));
  return arr;
}

std::vector<Rat> rat_vector_from_json(const Json& j) {
  std::vector<Rat> out;
  for (const Json& e : j) out.push_back(rat_from_string(e.get<std::string>()));
  return out;
}

}  // namespace expcircle
