#pragma once

#include "iips/core/json_io.hpp"
#include "iips/rol/identities.hpp"
#include "iips/rol/reverse_order.hpp"

namespace iips::rol {

using exact::Json;

Json greville_to_json(const GrevilleFlags& g);
Json rol_report_to_json(const RolReport& r);
Json identity_instance_to_json(const IdentityInstance& inst);

}  // namespace iips::rol
