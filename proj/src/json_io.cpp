#include "ptopo/json_io.hpp"

namespace ptopo {

using nlohmann::json;

json to_json(const Composition& c) { return json(c.parts); }

json to_json(const KnapsackPartition& kp) {
  return json{{"lambda", kp.lambda}, {"m", kp.m}};
}

json to_json(const FinitePoset& p) {
  json covers = json::array();
  for (auto [x, y] : p.cover_relations()) covers.push_back(json::array({x, y}));
  return json{{"elements", p.labels}, {"covers", covers}};
}

json to_json(const OrderedComplex& k) {
  json faces = json::array();
  for (const auto& lvl : k.by_blocks)
    for (const Osp& f : lvl) faces.push_back(f.to_string());
  return json{{"n", k.n}, {"faces", faces}};
}

json to_json(const HomologyProfile& hp) {
  json betti = json::array();
  json torsion = json::array();
  for (size_t i = 0; i < hp.betti.size(); ++i) {
    betti.push_back(hp.betti[i]);
    json t = json::array();
    if (i < hp.torsion.size())
      for (const Int& v : hp.torsion[i]) t.push_back(v.str());
    torsion.push_back(t);
  }
  return json{{"lowest_dim", -1}, {"betti", betti}, {"torsion", torsion}};
}

json to_json(const MorseMatching& m) {
  json arr = json::array();
  std::vector<const Osp*> faces;
  for (const auto& lvl : m.complex.by_blocks)
    for (const Osp& f : lvl) faces.push_back(&f);
  for (const Osp* f : faces) {
    const MatchDecision& d = m.decisions.at(*f);
    json e{{"face", f->to_string()}};
    switch (d.status) {
      case MatchStatus::Critical:
        e["status"] = "critical";
        break;
      case MatchStatus::MatchedUp:
        e["status"] = "up";
        e["partner"] = d.partner.to_string();
        e["edge_type"] = d.edge_type;
        break;
      case MatchStatus::MatchedDown:
        e["status"] = "down";
        e["partner"] = d.partner.to_string();
        e["edge_type"] = d.edge_type;
        break;
    }
    arr.push_back(std::move(e));
  }
  return arr;
}

json to_json(const ChainElement& x) {
  json obj = json::object();
  for (const auto& [f, v] : x.coeff) obj[f.to_string()] = v;
  return obj;
}

}  // namespace ptopo
