#include "hurwitz/cli/record.hpp"

#include <stdexcept>

#include "hurwitz/error.hpp"

#ifndef HURWITZ_VERSION
#define HURWITZ_VERSION "0.0.0"
#endif

namespace hurwitz::cli {

const char* const kToolVersion = HURWITZ_VERSION;

namespace {

json perm_list(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& p : perms) out.push_back(p.to_string());
  return out;
}

json optional_witness(const std::optional<HurwitzWitness>& w) {
  return w ? to_json(*w) : json(nullptr);
}

}  // namespace

json record_header(const std::string& command, const std::string& input) {
  return json{{"tool", "hurwitz"}, {"version", kToolVersion}, {"command", command}, {"input", input}};
}

json to_json(const HurwitzWitness& witness) {
  return json{{"degree", witness.degree},
              {"alpha", witness.alpha.to_string()},
              {"gammas", perm_list(witness.gammas)},
              {"row_order", witness.row_order}};
}

json to_json(const Certificate& c) {
  json out{{"relation_ok", c.relation_ok},
           {"row_types_ok", c.row_types_ok},
           {"transitive", c.transitive},
           {"primitive", c.primitive},
           {"euler_char", c.euler_char},
           {"row_permutation_applied", c.row_permutation_applied},
           {"all_ok", c.all_ok()}};
  out["witness_block"] = c.witness_block ? json(*c.witness_block) : json(nullptr);
  return out;
}

json to_json(const Classification& c) {
  return json{{"verdict", to_string(c.verdict)},
              {"case", to_string(c.realizable_case)},
              {"reason", to_string(c.reason)},
              {"tag", c.to_string()},
              {"detail", c.detail}};
}

json to_json(const SearchBounds& b) {
  return json{{"max_degree", b.max_degree}, {"max_rows", b.max_rows}, {"element_cap", b.element_cap},
              {"root_cap", b.root_cap}};
}

json to_json(const RealizationSurvey& s) {
  return json{{"gamma_tuples", s.gamma_tuples},
              {"square_products", s.square_products},
              {"witnesses", s.witnesses},
              {"intransitive", s.intransitive},
              {"transitive_primitive", s.transitive_primitive},
              {"transitive_imprimitive", s.transitive_imprimitive},
              {"sample_intransitive", optional_witness(s.sample_intransitive)},
              {"sample_primitive", optional_witness(s.sample_primitive)},
              {"sample_imprimitive", optional_witness(s.sample_imprimitive)}};
}

json to_json(const InvolutionSurvey& s) {
  json out{{"degree", s.degree},
           {"pairs_examined", s.pairs_examined},
           {"transitive_pairs", s.transitive_pairs},
           {"imprimitive_pairs", s.imprimitive_pairs},
           {"canonical_block_pairs", s.canonical_block_pairs},
           {"conjugate_to_canonical", s.conjugate_to_canonical},
           {"confirmed", s.confirmed()}};
  out["sample"] = s.sample ? json::array({s.sample->first.to_string(), s.sample->second.to_string()}) : json(nullptr);
  out["sample_block"] = s.sample_block ? json(*s.sample_block) : json(nullptr);
  return out;
}

HurwitzWitness witness_from_json(const json& record) {
  const json& w = record.contains("witness") ? record.at("witness") : record;
  try {
    HurwitzWitness out;
    out.degree = w.at("degree").get<int>();
    if (out.degree < 1) throw std::invalid_argument("degree must be positive");
    out.alpha = Permutation::parse(out.degree, w.at("alpha").get<std::string>());
    for (const auto& g : w.at("gammas")) out.gammas.push_back(Permutation::parse(out.degree, g.get<std::string>()));
    if (w.contains("row_order")) {
      out.row_order = w.at("row_order").get<std::vector<int>>();
    } else {
      for (std::size_t i = 0; i < out.gammas.size(); ++i) out.row_order.push_back(static_cast<int>(i));
    }
    return out;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed witness record: ") + e.what());
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string("malformed permutation in witness record: ") + e.what());
  }
}

}  // namespace hurwitz::cli
