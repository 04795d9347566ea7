#pragma once

#include <doctest.h>

#include "selberg/matcore/json_io.hpp"
#include "selberg/matcore/random.hpp"

namespace testing {

inline selberg::SymMatrix sym(const char* json) { return selberg::sym_from_json(nlohmann::json::parse(json)); }
inline selberg::Matrix mat(const char* json) { return selberg::matrix_from_json(nlohmann::json::parse(json)); }

inline selberg::Isometry corpus_a() { return selberg::Isometry::from(mat(R"([["1/2","1/2",0],["1/2","-1/2",1],["1/2","-1/2",-1]])")); }
inline selberg::Isometry corpus_b() { return selberg::Isometry::from(mat(R"([["-1/2",1,"1/2"],["-1/2",-1,"1/2"],["1/2",0,"1/2"]])")); }
inline selberg::Isometry corpus_c() { return selberg::Isometry::from(mat(R"([[-1,"1/2","-1/2"],[0,"1/2","1/2"],[1,"1/2","-1/2"]])")); }

inline selberg::Rational q(const char* s) { return selberg::parse_rational(s); }

}  // namespace testing
