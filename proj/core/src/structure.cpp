#include "so32/structure.hpp"

#include <charconv>

namespace so32 {
namespace {

using G = Generator;

BracketRelation rel(G a, G b, std::vector<BracketRelation::Term> rhs, const char* group) {
  return BracketRelation{a, b, std::move(rhs), group};
}

std::vector<BracketRelation> build_relations() {
  return {
      // so(2,1) of K
      rel(G::K3, G::Kp, {{1, G::Kp}}, "so21_K"),
      rel(G::K3, G::Km, {{-1, G::Km}}, "so21_K"),
      rel(G::Kp, G::Km, {{-2, G::K3}}, "so21_K"),
      // so(3) of J
      rel(G::J3, G::Jp, {{1, G::Jp}}, "so3_J"),
      rel(G::J3, G::Jm, {{-1, G::Jm}}, "so3_J"),
      rel(G::Jp, G::Jm, {{2, G::J3}}, "so3_J"),
      // so(2,1) of R
      rel(G::Rp, G::Rm, {{-4, G::R3}}, "so21_R"),
      rel(G::R3, G::Rp, {{2, G::Rp}}, "so21_R"),
      rel(G::R3, G::Rm, {{-2, G::Rm}}, "so21_R"),
      // so(2,1) of S
      rel(G::Sp, G::Sm, {{-4, G::S3}}, "so21_S"),
      rel(G::S3, G::Sp, {{2, G::Sp}}, "so21_S"),
      rel(G::S3, G::Sm, {{-2, G::Sm}}, "so21_S"),
      // crossed J-K
      rel(G::Jp, G::Kp, {{1, G::Rp}}, "cross"),
      rel(G::Jm, G::Km, {{-1, G::Rm}}, "cross"),
      rel(G::Jm, G::Kp, {{1, G::Sp}}, "cross"),
      rel(G::Jp, G::Km, {{-1, G::Sm}}, "cross"),
      rel(G::J3, G::Kp, {}, "cross"),
      rel(G::J3, G::Km, {}, "cross"),
      rel(G::J3, G::K3, {}, "cross"),
      // crossed J-R
      rel(G::Jp, G::Rp, {}, "cross"),
      rel(G::Jm, G::Rm, {}, "cross"),
      rel(G::Jm, G::Rp, {{2, G::Kp}}, "cross"),
      rel(G::Jp, G::Rm, {{-2, G::Km}}, "cross"),
      rel(G::J3, G::Rp, {{1, G::Rp}}, "cross"),
      rel(G::J3, G::Rm, {{-1, G::Rm}}, "cross"),
      // crossed J-S
      rel(G::Jp, G::Sp, {{2, G::Kp}}, "cross"),
      rel(G::Jm, G::Sm, {{-2, G::Km}}, "cross"),
      rel(G::Jm, G::Sp, {}, "cross"),
      rel(G::Jp, G::Sm, {}, "cross"),
      rel(G::J3, G::Sp, {{-1, G::Sp}}, "cross"),
      rel(G::J3, G::Sm, {{1, G::Sm}}, "cross"),
      // crossed K-R
      rel(G::Kp, G::Rp, {}, "cross"),
      rel(G::Km, G::Rm, {}, "cross"),
      rel(G::Km, G::Rp, {{2, G::Jp}}, "cross"),
      rel(G::Kp, G::Rm, {{-2, G::Jm}}, "cross"),
      rel(G::K3, G::Rp, {{1, G::Rp}}, "cross"),
      rel(G::K3, G::Rm, {{-1, G::Rm}}, "cross"),
      // crossed K-S
      rel(G::Kp, G::Sp, {}, "cross"),
      rel(G::Km, G::Sm, {}, "cross"),
      rel(G::Km, G::Sp, {{2, G::Jm}}, "cross"),
      rel(G::Kp, G::Sm, {{-2, G::Jp}}, "cross"),
      rel(G::K3, G::Sp, {{1, G::Sp}}, "cross"),
      rel(G::K3, G::Sm, {{-1, G::Sm}}, "cross"),
      // crossed R-S
      rel(G::Rp, G::Sp, {}, "cross"),
      rel(G::Rm, G::Sm, {}, "cross"),
      rel(G::Rm, G::Sp, {}, "cross"),
      rel(G::Rp, G::Sm, {}, "cross"),
  };
}

std::string number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

}  // namespace

std::string BracketRelation::formula() const {
  std::string out = "[" + std::string(name(lhs)) + "," + std::string(name(rhs)) + "] = ";
  if (result.empty()) return out + "0";
  bool first = true;
  for (const Term& t : result) {
    if (!first) out += t.coeff < 0 ? " - " : " + ";
    else if (t.coeff < 0) out += "-";
    const double mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (mag != 1.0) out += number(mag) + " ";
    out += name(t.generator);
    first = false;
  }
  return out;
}

const std::vector<BracketRelation>& structure_relations() {
  static const std::vector<BracketRelation> relations = build_relations();
  return relations;
}

SparseOperator relation_rhs(const BracketRelation& rel, Truncation trunc) {
  SparseOperator out = SparseOperator::zero(trunc);
  for (const auto& t : rel.result) out = out + t.coeff * generator(t.generator, trunc);
  return out;
}

}  // namespace so32
