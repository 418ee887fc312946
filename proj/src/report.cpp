#include "gammalab/report.hpp"

#include <sstream>

namespace gammalab {

  namespace {
    std::string tuple(std::span<Element const>    elements,
                      std::span<GammaIndex const> gammas) {
      std::ostringstream os;
      os << '(';
      for (std::size_t i = 0; i < elements.size(); ++i) {
        os << (i ? "," : "") << elements[i].index + 1;
      }
      if (!gammas.empty()) {
        os << ';';
        for (std::size_t i = 0; i < gammas.size(); ++i) {
          os << (i ? "," : "") << 'g' << gammas[i].index + 1;
        }
      }
      os << ')';
      return os.str();
    }
  }  // namespace

  std::string describe(std::span<Element const> elements) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements.size(); ++i) {
      os << (i ? "," : "") << elements[i].index + 1;
    }
    os << '}';
    return os.str();
  }

  std::string describe(CrispSubset const& A) {
    return describe(A.members());
  }

  std::string describe(Ifs const& A) {
    std::ostringstream os;
    os << "mu=(";
    for (std::size_t x = 0; x < A.size(); ++x) {
      os << (x ? "," : "") << A.mu(x);
    }
    os << ") nu=(";
    for (std::size_t x = 0; x < A.size(); ++x) {
      os << (x ? "," : "") << A.nu(x);
    }
    os << ')';
    return os.str();
  }

  std::string describe(LawWitness const& w) {
    std::ostringstream os;
    os << tuple(w.elements, w.gammas) << ": ";
    if (w.rhs) {
      os << w.lhs.index + 1 << (w.violated() ? " != " : " == ")
         << w.rhs->index + 1;
    } else {
      os << w.lhs.index + 1 << " has no factorization";
    }
    return os.str();
  }

  std::string describe(IntraRegularWitness const& w) {
    std::ostringstream os;
    os << "a=" << w.a.index + 1 << " x=" << w.x.index + 1
       << " y=" << w.y.index + 1 << " (g" << w.alpha.index + 1 << ",g"
       << w.beta.index + 1 << ",g" << w.gamma.index + 1 << ')';
    return os.str();
  }

  std::string describe(CrispWitness const& w) {
    std::ostringstream os;
    os << crisp_kind_name(w.clause) << ' ' << tuple(w.factors, w.gammas)
       << " -> " << w.result.index + 1 << " not in set";
    return os.str();
  }

  std::string describe(IfsWitness const& w) {
    std::ostringstream os;
    bool const mu = w.component == Component::mu;
    os << ifs_kind_name(w.clause) << ' ' << (mu ? "mu" : "nu") << ' '
       << tuple(w.elements, w.gammas) << " -> " << w.target.index + 1 << ": "
       << w.observed << (mu ? " < " : " > ") << w.bound;
    if (w.compositions) {
      os << " (A o d = " << w.compositions->first
         << ", d o A = " << w.compositions->second << ')';
    }
    return os.str();
  }

  std::string describe(IfsDifference const& d) {
    std::ostringstream os;
    os << (d.in_mu ? "mu" : "nu") << " differs at " << d.at.index + 1 << ": "
       << d.left << " vs " << d.right;
    return os.str();
  }

}  // namespace gammalab
