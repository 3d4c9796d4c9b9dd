#include "aop/braid.hpp"
#include "aop/cactus.hpp"
#include "aop/error.hpp"
#include "aop/operad.hpp"

namespace aop {

OperadPtr make_operad(std::string_view name) {
  if (name == "trivial") return make_trivial();
  if (name == "sym") return make_symmetric();
  if (name == "braid") return make_braid();
  if (name == "cactus") return make_cactus();
  throw InputError("unknown operad '" + std::string(name) + "' (expected trivial, sym, braid or cactus)");
}

}  // namespace aop
