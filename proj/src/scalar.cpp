#include "hopfq/scalar.hpp"

#include "hopfq/errors.hpp"

#include <cctype>

namespace hopfq {

Scalar parse_scalar(std::string_view text) {
    // Validate by hand first: mpq's own parser accepts whitespace and
    // bases we do not want in structure files.
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    auto is_int = [&](std::string_view s) {
        if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
        return is_digits(s);
    };
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    // The denominator is unsigned by grammar; signs live on the numerator.
    if (!is_int(num) || !is_digits(den))
        throw ParseError("malformed rational literal: \"" + std::string(text) + "\"");
    mpq_class value(std::string(num) + "/" + std::string(den));
    if (value.get_den() == 0)
        throw ParseError("zero denominator in rational literal: \"" + std::string(text) + "\"");
    value.canonicalize();
    return value;
}

std::string scalar_str(const Scalar& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

} // namespace hopfq
