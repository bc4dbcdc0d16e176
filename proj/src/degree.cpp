#include "autonomy/degree.hpp"

#include <exception>

#include "autonomy/errors.hpp"

namespace autonomy {

std::string DegreeValue::to_string() const {
    return infinite_ ? std::string("infinity") : std::to_string(value_);
}

DegreeValue DegreeValue::parse(const std::string& text) {
    if (text == "infinity") return infinity();
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size() || v < 0)
        throw ValidationError("not a degree value: '" + text + "'");
    return DegreeValue(v);
}

}  // namespace autonomy
