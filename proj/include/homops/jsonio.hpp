#ifndef HOMOPS_JSONIO_HPP
#define HOMOPS_JSONIO_HPP

#include "json.hpp"

#include "homops/abgroup.hpp"
#include "homops/chains.hpp"
#include "homops/moorecalc.hpp"
#include "homops/opsclassify.hpp"
#include "homops/verify.hpp"

namespace homops::jsonio {

using json = nlohmann::ordered_json;

// Numbers are emitted as json integers when they fit in 64 bits and as
// decimal strings otherwise; readers must accept both.
json int_json(const Int& v);
Int int_from_json(const json& v);

json group_json(const FgAbGroup& g);
json order_json(const Order& o);

json matrix_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& v);  // array of rows or {"entries": ...}

json complex_json(const chains::ChainComplex& c);
chains::ChainComplex complex_from_json(const json& v);

json uct_json(const moore::UctSequence& seq);
json kunneth_json(const chains::KunnethReport& rep);
json suite_json(const verify::SuiteResult& s);
json classification_json(const ops::ClassificationReport& rep);

}  // namespace homops::jsonio

#endif
