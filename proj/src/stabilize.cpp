#include "braidfloer/diagram.hpp"
#include "braidfloer/errors.hpp"

namespace bfh {

int stabilizeHexagons(Diagram& d) {
  (void)d;
  throw InvariantError("stabilization not implemented yet");
}

}  // namespace bfh
