#pragma once

#include <stdexcept>
#include <string>

namespace amink {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Geometry construction
class DegenerateInput : public Error { public: using Error::Error; };
class OriginNotInterior : public Error { public: using Error::Error; };
class NonPositiveScale : public Error { public: using Error::Error; };
class NonConvexSet : public Error { public: using Error::Error; };

// Grid operations
class EmptySource : public Error { public: using Error::Error; };
class MismatchedField : public Error { public: using Error::Error; };
class DegenerateSplit : public Error { public: using Error::Error; };

// Functionals
class TooManyLevels : public Error { public: using Error::Error; };

// Study harness
class TooFewSamples : public Error { public: using Error::Error; };
class UnknownShape : public Error { public: using Error::Error; };
class BadConfig : public Error { public: using Error::Error; };
class IoFailure : public Error { public: using Error::Error; };

}  // namespace amink
