#include "cyclepack/rational.hpp"

namespace cyclepack {

Rational parse_pq(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int p(s.substr(0, slash));
        Int q(s.substr(slash + 1));
        CYCLEPACK_REQUIRE(q > 0, BadInput, "rational denominator must be positive");
        return Rational(p, q);
    } catch (const std::exception&) {
        fail(ErrorKind::BadInput, "invalid rational: " + s);
    }
}

} // namespace cyclepack
