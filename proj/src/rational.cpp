#include "locstat/rational.hpp"

#include "locstat/util.hpp"

namespace locstat {

std::string rat_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rat_parse(std::string_view s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s)));
        }
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den == 0) throw ValidationError("zero denominator in rational literal");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ValidationError("malformed rational literal '" + std::string(s) + "': " + e.what());
    }
}

}  // namespace locstat
