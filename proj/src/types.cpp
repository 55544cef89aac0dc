#include "escape/types.hpp"

#include <cmath>
#include <sstream>

namespace escape {

RobinParameter::RobinParameter(double eta) : eta_(eta) {
  if (!std::isfinite(eta)) {
    throw std::domain_error("RobinParameter: finite eta required; use dirichlet_limit()");
  }
}

RobinParameter RobinParameter::dirichlet_limit() {
  RobinParameter p;
  p.dirichlet_ = true;
  return p;
}

double RobinParameter::eta() const {
  if (dirichlet_) throw std::logic_error("RobinParameter: eta() on the Dirichlet limit");
  return eta_;
}

std::string RobinParameter::label() const {
  if (dirichlet_) return "inf";
  std::ostringstream os;
  os << eta_;
  return os.str();
}

}  // namespace escape
