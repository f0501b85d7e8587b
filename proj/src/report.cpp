#include "grasspack/report.hpp"

#include <sstream>

namespace grasspack {

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << subject_ << "\n";
    for (const auto& c : checks_) {
        os << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    for (const auto& [k, v] : data_) os << "  " << k << " = " << v << "\n";
    return os.str();
}

}  // namespace grasspack
