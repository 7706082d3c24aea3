#include "vapprox/value.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace vapprox {

Value::Value(long num, long den) {
    if (den == 0) throw Error("value with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

const mpq_class& Value::rational() const {
    if (inf_) throw Error("infinite value has no rational representative");
    return q_;
}

long Value::to_long() const {
    if (!is_integer()) throw Error("value " + str() + " is not an integer");
    if (!q_.get_num().fits_slong_p()) throw Error("value out of machine range");
    return q_.get_num().get_si();
}

Value Value::operator-() const {
    if (inf_) throw Error("negation of infinity");
    return Value(mpq_class(-q_));
}

Value operator+(const Value& a, const Value& b) {
    if (a.inf_ || b.inf_) return Value::infinity();
    return Value(mpq_class(a.q_ + b.q_));
}

Value operator-(const Value& a, const Value& b) {
    if (b.inf_) throw Error("subtraction of infinity");
    if (a.inf_) return a;
    return Value(mpq_class(a.q_ - b.q_));
}

Value operator*(const Value& a, const mpq_class& k) {
    if (a.inf_) {
        if (sgn(k) > 0) return a;
        if (sgn(k) == 0) return Value(0);
        throw Error("negative multiple of infinity");
    }
    return Value(mpq_class(a.q_ * k));
}

Value operator/(const Value& a, const mpq_class& k) {
    if (sgn(k) == 0) throw Error("value divided by zero");
    if (a.inf_) {
        if (sgn(k) > 0) return a;
        throw Error("negative multiple of infinity");
    }
    return Value(mpq_class(a.q_ / k));
}

bool operator==(const Value& a, const Value& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
    return a.q_ == b.q_;
}

std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Value::str() const {
    if (inf_) return "inf";
    return q_.get_str();
}

Value Value::parse(const std::string& raw) {
    std::string text;
    std::copy_if(raw.begin(), raw.end(), std::back_inserter(text),
                 [](unsigned char c) { return !std::isspace(c); });
    if (text == "inf" || text == "+inf" || text == "oo") return infinity();
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                           [](unsigned char c) { return std::isdigit(c); });
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw Error("malformed value '" + raw + "'");
    if (num[0] == '+') num.erase(0, 1);
    if (den[0] == '+') den.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw Error("value with zero denominator: '" + raw + "'");
    return Value(mpq_class(n, d));
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

}  // namespace vapprox
