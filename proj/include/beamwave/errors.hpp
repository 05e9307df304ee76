#ifndef BEAMWAVE_ERRORS_HPP
#define BEAMWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace beamwave {

/// Numerical failure (bracketing, integration, convergence).
class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation requested at (or too close to) a discontinuity of L.
class discontinuity_error : public numeric_error {
public:
    explicit discontinuity_error(const std::string& msg) : numeric_error(msg) {}
};

/// A root or level was not bracketed by the supplied interval.
class bracket_error : public numeric_error {
public:
    explicit bracket_error(const std::string& msg) : numeric_error(msg) {}
};

/// Overdetermined-system consistency failure (signals a bogus root).
class consistency_error : public numeric_error {
public:
    explicit consistency_error(const std::string& msg) : numeric_error(msg) {}
};

} // namespace beamwave

#endif
