#include "qgl2/report.hpp"
namespace qgl2 {
std::string IdentityReport::str(bool) const { return ""; }
}
