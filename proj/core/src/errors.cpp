#include "coinslide/errors.hpp"

namespace coinslide {

std::string_view reason_code(IllegalReason reason) noexcept {
  switch (reason) {
    case IllegalReason::NoSuchCoin:
      return "no-such-coin";
    case IllegalReason::TargetNotLower:
      return "target-not-lower";
    case IllegalReason::TargetOccupiedOrJump:
      return "target-occupied-or-jump";
    case IllegalReason::PushDepthOutOfRange:
      return "push-depth-out-of-range";
    case IllegalReason::WrongVariant:
      return "wrong-variant";
  }
  return "illegal-move";
}

}  // namespace coinslide
