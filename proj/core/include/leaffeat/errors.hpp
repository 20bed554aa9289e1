#pragma once

#include <stdexcept>
#include <string>

namespace leaffeat {

/// Base class for all errors raised by the library. Catching this is enough
/// to isolate a failing image inside a batch run.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define LEAFFEAT_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                       \
    public:                                                           \
        explicit Name(const std::string& what = #Name) : Error(what) {} \
    }

// image processing
LEAFFEAT_DEFINE_ERROR(InvalidKernel);
LEAFFEAT_DEFINE_ERROR(DegenerateHistogram);
LEAFFEAT_DEFINE_ERROR(EmptyForeground);
LEAFFEAT_DEFINE_ERROR(InvalidSize);

// contour / geometry
LEAFFEAT_DEFINE_ERROR(NoContour);
LEAFFEAT_DEFINE_ERROR(DegenerateContour);
LEAFFEAT_DEFINE_ERROR(DegenerateHull);
LEAFFEAT_DEFINE_ERROR(DegenerateRegion);

// texture
LEAFFEAT_DEFINE_ERROR(InsufficientPixels);

// scagnostics
LEAFFEAT_DEFINE_ERROR(TooFewPoints);
LEAFFEAT_DEFINE_ERROR(DegenerateAxis);
LEAFFEAT_DEFINE_ERROR(AllOutliers);

// projection
LEAFFEAT_DEFINE_ERROR(TooFewRows);
LEAFFEAT_DEFINE_ERROR(InvalidK);
LEAFFEAT_DEFINE_ERROR(NeedTwoClasses);
LEAFFEAT_DEFINE_ERROR(DegenerateClass);

// pipeline / io
LEAFFEAT_DEFINE_ERROR(MissingLabel);
LEAFFEAT_DEFINE_ERROR(EmptyDataset);
LEAFFEAT_DEFINE_ERROR(BatchFailed);
LEAFFEAT_DEFINE_ERROR(IoError);

/// Division-by-zero style degeneracies in derived features, tagged with the
/// feature name that could not be computed.
class DegenerateFeature : public Error {
public:
    explicit DegenerateFeature(const std::string& feature)
        : Error("DegenerateFeature: " + feature), feature_(feature) {}
    const std::string& feature() const { return feature_; }

private:
    std::string feature_;
};

#undef LEAFFEAT_DEFINE_ERROR

}  // namespace leaffeat
