#pragma once

#include <optional>

#include "schub/certificate.hpp"
#include "schub/connectivity.hpp"
#include "schub/kunneth.hpp"
#include "schub/schubert.hpp"

namespace schub {

/* Coefficients are emitted as JSON numbers when they fit in 64 bits and as
 * decimal strings beyond; both forms are accepted on input. */
Json coeff_to_json(const Int& c);
Int coeff_from_json(const Json& j);

Json box_to_json(const Box& box);
Box box_from_json(const Json& j);

Json space_to_json(const ProductSpace& space);
ProductSpace space_from_json(const Json& j);

std::vector<int> int_vector_from_json(const Json& j, const char* what);

Json class_to_json(const SchubertClass& c);
/* Accepts {"box": ..., "terms": [...]} or bare {"terms": [...]} resolved
 * against `ambient`; duplicate partitions are summed. */
SchubertClass class_from_json(const Json& j, std::optional<Box> ambient = {});

Json biclass_to_json(const BiSchubertClass& c);
BiSchubertClass biclass_from_json(const Json& j, std::optional<Box> ambient = {});

Json mpclass_to_json(const MultiProjClass& c);
MultiProjClass mpclass_from_json(const Json& j, std::optional<ProductSpace> ambient = {});

Json certificate_to_json(const Certificate& cert);

/* Variety nodes are either a bare class object or {"class": ..., "dim": ...,
 * "irreducible": ..., "complete": ...}. */
GrassData grass_data_from_json(const Json& j, const Box& ambient, const std::string& label);
MultiProjData mp_data_from_json(const Json& j, const ProductSpace& ambient,
                                const std::string& label);

Json error_to_json(const std::string& code, const std::string& message);

}  // namespace schub
