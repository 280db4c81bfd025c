#include <hyperform/error.hpp>
#include <hyperform/rational.hpp>

#include <cctype>

namespace hyperform {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        fail(ErrorKind::validation, "malformed rational \"" + std::string(text) + "\" (expected p or p/q)");
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) fail(ErrorKind::validation, "zero denominator in \"" + std::string(text) + "\"");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

int sign(const Rational& q) { return sgn(q); }

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) fail(ErrorKind::dimension, "dot product of vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace hyperform
