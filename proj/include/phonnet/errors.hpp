#pragma once

#include <stdexcept>

namespace phonnet {

// Base class for all recoverable library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PHONNET_DEFINE_ERROR(NAME) \
  class NAME : public Error {      \
   public:                         \
    using Error::Error;            \
  }

PHONNET_DEFINE_ERROR(InvalidInput);
PHONNET_DEFINE_ERROR(UntokenizableInput);
PHONNET_DEFINE_ERROR(EmptyAfterStripping);
PHONNET_DEFINE_ERROR(EmptyLexicon);
PHONNET_DEFINE_ERROR(DuplicateInsert);
PHONNET_DEFINE_ERROR(MissingRemove);
PHONNET_DEFINE_ERROR(DegenerateVariance);
PHONNET_DEFINE_ERROR(NoInterLayerLinks);
PHONNET_DEFINE_ERROR(DisconnectedScope);
PHONNET_DEFINE_ERROR(StuckChain);
PHONNET_DEFINE_ERROR(LayerExhausted);
PHONNET_DEFINE_ERROR(SlotStarvation);
PHONNET_DEFINE_ERROR(Unbracketable);
PHONNET_DEFINE_ERROR(CalibrationError);
PHONNET_DEFINE_ERROR(MissingSeries);

#undef PHONNET_DEFINE_ERROR

}  // namespace phonnet
