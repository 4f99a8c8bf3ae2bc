#ifndef QUINTIC_REPORT_HPP
#define QUINTIC_REPORT_HPP

#include <optional>
#include <string>

#include "quintic/qseries.hpp"

namespace quintic {

/// Result record of one identity verification.
struct IdentityReport {
    std::string name;
    std::string anchor;  // short human description of the identity
    Rational order = Rational(0);
    bool pass = false;
    std::optional<Rational> first_fail;  // first failing exponent, if any
    std::string notes;

    /// JSON object as a string: {"schema":1,"name":...,...}.
    std::string to_json() const;
    /// One-line human-readable summary.
    std::string str() const;
};

/// Compare two series to the given order and package the outcome.
IdentityReport compare_series(const std::string& name, const std::string& anchor,
                              const QSeries& lhs, const QSeries& rhs, const Rational& order);

}  // namespace quintic

#endif
