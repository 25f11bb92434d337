#ifndef RECIP_JSONIO_HPP
#define RECIP_JSONIO_HPP

#include <json.hpp>

#include <string>

#include "recip/mfd.hpp"
#include "recip/network.hpp"
#include "recip/realization.hpp"

namespace recip {

using nlohmann::json;

// Rationals serialize losslessly: plain integer when the denominator is 1,
// otherwise the string "p/q".
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json ratmat_to_json(const RatMat& m);          // row-major nested arrays
RatMat ratmat_from_json(const json& j);

// {"rows": m, "cols": n, "entries": [[[c0, c1, ...], ...], ...]}
json polymat_to_json(const PolyMatrix& m);
PolyMatrix polymat_from_json(const json& j);

// {"Q": <polymatrix>, "P": <polymatrix>}
json mfd_to_json(const LeftMFD& h);
LeftMFD mfd_from_json(const json& j);

// {"A": [[...]], "B": [[...]], "C": [[...]], "D": [[...]], "sigma": [...]}
// The sigma array carries the state weights; plain +-1 entries give the
// textbook signature-matrix realization.
json realization_to_json(const SignatureRealization& sr);
SignatureRealization realization_from_json(const json& j);

json network_to_json(const NetworkData& d);
NetworkData network_from_json(const json& j);

json load_json_file(const std::string& path);  // throws with a location message

}  // namespace recip

#endif
