#pragma once

#include <stdexcept>
#include <string>

namespace twinkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TWINKIT_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                                \
    public:                                                                    \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {}   \
    }

// coxeter / gcm
TWINKIT_DEFINE_ERROR(IndexOutOfRange);
TWINKIT_DEFINE_ERROR(InvalidGcm);
TWINKIT_DEFINE_ERROR(InvalidCoxeterMatrix);

// building_core
TWINKIT_DEFINE_ERROR(RegionTooSmall);
TWINKIT_DEFINE_ERROR(NotABuilding);
TWINKIT_DEFINE_ERROR(NotSpherical);
TWINKIT_DEFINE_ERROR(NotOpposite);
TWINKIT_DEFINE_ERROR(NotInApartment);
TWINKIT_DEFINE_ERROR(BadGeometry);

// matrix_groups
TWINKIT_DEFINE_ERROR(InvalidField);
TWINKIT_DEFINE_ERROR(NotSpecialLinear);
TWINKIT_DEFINE_ERROR(NotInBigCell);
TWINKIT_DEFINE_ERROR(WrongCell);
TWINKIT_DEFINE_ERROR(LengthCondition);
TWINKIT_DEFINE_ERROR(NotSwapping);

// kac_moody
TWINKIT_DEFINE_ERROR(WindowTooLarge);
TWINKIT_DEFINE_ERROR(NotInvariant);
TWINKIT_DEFINE_ERROR(WindowExceeded);
TWINKIT_DEFINE_ERROR(NotRankTwoFinite);

// classification
TWINKIT_DEFINE_ERROR(NotATree);
TWINKIT_DEFINE_ERROR(TooSmall);
TWINKIT_DEFINE_ERROR(NotTwoSpherical);
TWINKIT_DEFINE_ERROR(NotThick);

// io
TWINKIT_DEFINE_ERROR(MalformedInput);

#undef TWINKIT_DEFINE_ERROR

} // namespace twinkit
