#pragma once

#include "nerontrace/component_group.hpp"
#include "nerontrace/snf.hpp"

#include <optional>
#include <string>

namespace nerontrace {

// Machine-readable report with canonical key order, so equal reports are
// byte-equal.  Exact integers are carried as decimal strings; absent
// quantities are null.
std::string report_to_json(const TraceReport& report,
                           const std::optional<QPartReport>& qcheck = std::nullopt);

// Human-readable rendering of the same data.
std::string report_to_text(const TraceReport& report,
                           const std::optional<QPartReport>& qcheck = std::nullopt);

// Standalone renderings of an oracle report, for the qcheck subcommand.
std::string qcheck_to_json(const QPartReport& report);
std::string qcheck_to_text(const QPartReport& report);

} // namespace nerontrace
