#ifndef QTRAJ_CONSTANTS_HPP
#define QTRAJ_CONSTANTS_HPP

#include "qtraj/errors.hpp"

namespace qtraj {

/// Physical constants in naturalized units (hbar = m = 1 by default).
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0))
      throw InvalidInputError("PhysicalConstants: hbar and mass must be positive");
  }
};

}  // namespace qtraj

#endif
