#include "quartsum/render.hpp"

#include <array>
#include <sstream>

namespace quartsum {

namespace {

bool trace_verified(const DerivationTrace& t) {
  const std::array<Integer, 2> lhs{t.quartet.a1(), t.quartet.b1()};
  const std::array<Integer, 2> rhs{t.quartet.a2(), t.quartet.b2()};
  return verify_identity(lhs, rhs);
}

}  // namespace

Json to_json(const Quartet& q) {
  Json out;
  out["a1"] = q.a1().str();
  out["b1"] = q.b1().str();
  out["a2"] = q.a2().str();
  out["b2"] = q.b2().str();
  out["sum"] = q.common_sum().str();
  return out;
}

Json to_json(const DerivationTrace& t) {
  Json out;
  out["b"] = to_string(t.b);
  out["f"] = to_string(t.f);
  out["g"] = to_string(t.g);
  out["z"] = to_string(t.z);
  out["k"] = to_string(t.k);
  out["x_ratio"] = to_string(t.x_ratio);
  out["y_ratio"] = to_string(t.y_ratio);
  out["x"] = t.x.str();
  out["y"] = t.y.str();
  out["p"] = t.p.str();
  out["q"] = t.q.str();
  out["r"] = t.r.str();
  out["s"] = t.s.str();
  out["A"] = t.A.str();
  out["B"] = t.B.str();
  out["C"] = t.C.str();
  out["D"] = t.D.str();
  out["quartet"] = to_json(t.quartet);
  out["verified"] = trace_verified(t);
  return out;
}

Json to_json(std::span<const SearchHit> hits) {
  Json out = Json::array();
  for (const SearchHit& hit : hits) {
    Json pairs = Json::array();
    for (const auto& [a, b] : hit.pairs) pairs.push_back(Json::array({a.str(), b.str()}));
    Json entry;
    entry["sum"] = hit.sum.str();
    entry["pairs"] = std::move(pairs);
    out.push_back(std::move(entry));
  }
  return out;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string to_string(const Quartet& q) {
  return q.a1().str() + "^4 + " + q.b1().str() + "^4 = " + q.a2().str() + "^4 + " +
         q.b2().str() + "^4";
}

std::string render_text(const DerivationTrace& t) {
  std::ostringstream out;
  auto line = [&out](const char* name, const std::string& value) {
    out << name << " = " << value << '\n';
  };
  line("b", to_string(t.b));
  line("f", to_string(t.f));
  line("g", to_string(t.g));
  line("z", to_string(t.z));
  line("k", to_string(t.k));
  line("x", t.x.str() + "  (from " + to_string(t.x_ratio) + ")");
  line("y", t.y.str() + "  (from " + to_string(t.y_ratio) + ")");
  line("p", t.p.str());
  line("q", t.q.str());
  line("r", t.r.str());
  line("s", t.s.str());
  line("A", t.A.str());
  line("B", t.B.str());
  line("C", t.C.str());
  line("D", t.D.str());
  line("quartet", to_string(t.quartet));
  line("lhs", t.quartet.a1().str() + "," + t.quartet.b1().str());
  line("rhs", t.quartet.a2().str() + "," + t.quartet.b2().str());
  line("sum", t.quartet.common_sum().str());
  line("verified", trace_verified(t) ? "true" : "false");
  return out.str();
}

std::string render_text(std::span<const SearchHit> hits) {
  std::ostringstream out;
  for (const SearchHit& hit : hits) {
    out << hit.sum.str();
    for (const auto& [a, b] : hit.pairs) out << " = " << a.str() << "^4 + " << b.str() << "^4";
    out << '\n';
  }
  out << "# " << hits.size() << (hits.size() == 1 ? " hit" : " hits") << '\n';
  return out.str();
}

}  // namespace quartsum
