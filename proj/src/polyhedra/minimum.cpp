#include "ptsynth/minimum.hpp"

#include <stdexcept>

namespace ptsynth {

const Rational& Minimum::value() const {
    if (infinite_) throw std::logic_error("Minimum::value on infinity");
    return value_;
}

Strictness Minimum::strictness() const {
    if (infinite_) throw std::logic_error("Minimum::strictness on infinity");
    return strictness_;
}

std::strong_ordering Minimum::operator<=>(const Minimum& other) const {
    if (infinite_ || other.infinite_) {
        if (infinite_ && other.infinite_) return std::strong_ordering::equal;
        return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(value_, other.value_);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (strictness_ == other.strictness_) return std::strong_ordering::equal;
    return strictness_ == Strictness::Attained ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
}

std::string Minimum::to_string() const {
    if (infinite_) return "infinity";
    return "(" + value_.get_str() + (strictness_ == Strictness::Attained ? ", =)" : ", >)");
}

int compare_minimum(const Minimum& a, const Minimum& b) {
    auto o = a <=> b;
    return o < 0 ? -1 : o > 0 ? 1 : 0;
}

}  // namespace ptsynth
