// Copyright 2026 The cartier library developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// JSON adapters (nlohmann::json via ADL) for the report types, plus the CSV
// writers that do not already live with their subject module.

#pragma once

#include <ostream>
#include <string>

#include "json.hpp"

#include "cartier/codes.hpp"
#include "cartier/curves.hpp"
#include "cartier/engine.hpp"

namespace cartier {

inline void to_json(nlohmann::json& j, const RankReport& r) {
  j = nlohmann::json{{"method", r.method}, {"p", r.p},       {"s", r.s},
                     {"t", r.t},           {"genus", r.genus}, {"rank", r.rank},
                     {"a_number", r.a_number}};
  j["basis_mode"] = r.basis_mode ? nlohmann::json(*r.basis_mode) : nlohmann::json(nullptr);
  j["h_range"] = r.h_range ? nlohmann::json(*r.h_range) : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const AllRoutes& a) {
  j = nlohmann::json{{"nabla", a.nabla},
                     {"congruence", a.congruence},
                     {"closed", a.closed},
                     {"congruence_half", a.congruence_half},
                     {"congruence_full", a.congruence_full},
                     {"h_ranges_agree", a.h_ranges_agree},
                     {"consistent", a.consistent}};
}

inline void to_json(nlohmann::json& j, const RankTableRow& r) {
  j = nlohmann::json{{"p", r.p},
                     {"s", r.s},
                     {"genus", r.genus},
                     {"rank_closed", r.rank_closed},
                     {"a_closed", r.a_closed}};
  j["matrix_rank"] = r.matrix_rank ? nlohmann::json(*r.matrix_rank) : nlohmann::json(nullptr);
}

inline void to_json(nlohmann::json& j, const HyperellipticReport& r) {
  j = nlohmann::json{{"genus", r.genus},           {"rank_cm", r.rank_cm},
                     {"a_cm", r.a_cm},             {"rank_nabla", r.rank_nabla},
                     {"a_nabla", r.a_nabla},       {"routes_agree", r.routes_agree}};
}

inline void to_json(nlohmann::json& j, const ConjectureReport& r) {
  j = nlohmann::json{{"ell", r.ell},
                     {"r", r.r},
                     {"genus", r.genus},
                     {"a_conjectured", r.a_conjectured},
                     {"a_computed", r.a_computed},
                     {"a_nabla", r.a_nabla},
                     {"routes_agree", r.routes_agree},
                     {"agrees", r.agrees}};
}

inline void to_json(nlohmann::json& j, const MaximalityReport& r) {
  j = nlohmann::json{{"field_order", r.field_order},
                     {"count", r.count},
                     {"hasse_weil_bound", r.hasse_weil_bound},
                     {"maximal", r.maximal}};
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
  j = nlohmann::json{{"n", r.n},
                     {"k", r.k},
                     {"m", r.m},
                     {"genus", r.genus},
                     {"a_number", r.a_number},
                     {"goppa_bound", r.goppa_bound},
                     {"improved_bound", r.improved_bound},
                     {"singleton_bound", r.singleton_bound},
                     {"chain_ok", r.chain_ok}};
  j["exact_d"] = r.exact_d ? nlohmann::json(*r.exact_d) : nlohmann::json(nullptr);
}

inline void write_rank_table_csv(std::ostream& os, const std::vector<RankTableRow>& rows) {
  os << "p,s,genus,rank_closed,a_closed,matrix_rank\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.s << ',' << r.genus << ',' << r.rank_closed << ',' << r.a_closed << ',';
    if (r.matrix_rank) os << *r.matrix_rank;
    os << '\n';
  }
}

}  // namespace cartier
