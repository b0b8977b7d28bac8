#include "eacp/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace eacp {

namespace {

Rational parse_rational(const Json& v, const std::string& pointer) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (!v.is_string()) throw InputError(pointer, "expected a rational string \"p/q\"");
    try {
        return Scalar::from_string(v.get<std::string>()).to_rational();
    } catch (const std::invalid_argument& e) {
        throw InputError(pointer, e.what());
    }
}

/// Decimal strings and rational strings are both accepted for floats.
long double parse_real(const Json& v, const std::string& pointer) {
    if (v.is_number()) return v.get<long double>();
    if (!v.is_string()) throw InputError(pointer, "expected a number");
    const std::string s = v.get<std::string>();
    if (s.find('/') != std::string::npos) return parse_rational(v, pointer).get_d();
    std::size_t used = 0;
    long double x = 0;
    try {
        x = std::stold(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw InputError(pointer, "malformed decimal '" + s + "'");
    return x;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

std::string real_string(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", x);
    return buf;
}

const Json& member(const Json& obj, const char* key, const std::string& pointer) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError(pointer, std::string("missing field \"") + key + "\"");
    return *it;
}

}  // namespace

Field field_from_json(const Json& doc) {
    if (!doc.contains("field")) return Field::rational();
    const Json& f = doc["field"];
    if (!f.is_string()) throw InputError("/field", "expected a field name");
    const std::string name = f.get<std::string>();
    try {
        if (name == "rational") return Field::rational();
        if (name == "gaussian") return Field::gaussian();
        if (name == "quadratic") {
            const Json& d = member(doc, "d", "");
            if (!d.is_number_integer()) throw InputError("/d", "radicand must be an integer");
            return Field::quadratic(d.get<long>());
        }
        if (name == "float") {
            if (!doc.contains("epsilon")) return Field::certified_float();
            return Field::certified_float(parse_rational(doc["epsilon"], "/epsilon"));
        }
    } catch (const FieldError& e) {
        throw InputError("/field", e.what());
    }
    throw InputError("/field", "unknown field '" + name + "'");
}

Scalar scalar_from_json(const Json& v, const Field& field, const std::string& pointer) {
    switch (field.kind) {
        case FieldKind::Rational:
            if (v.is_object()) throw InputError(pointer, "non-rational value in a rational algebra");
            return Scalar(parse_rational(v, pointer));
        case FieldKind::Gaussian:
            if (!v.is_object()) return Scalar(parse_rational(v, pointer)).lift(field);
            return Scalar::gaussian(v.contains("re") ? parse_rational(v["re"], pointer + "/re") : Rational(0),
                                    v.contains("im") ? parse_rational(v["im"], pointer + "/im") : Rational(0));
        case FieldKind::Quadratic:
            if (!v.is_object()) return Scalar(parse_rational(v, pointer)).lift(field);
            if (v.contains("d") && (!v["d"].is_number_integer() || v["d"].get<long>() != field.d))
                throw InputError(pointer + "/d", "radicand does not match the algebra field");
            return Scalar::quadratic(v.contains("a") ? parse_rational(v["a"], pointer + "/a") : Rational(0),
                                     v.contains("b") ? parse_rational(v["b"], pointer + "/b") : Rational(0), field.d);
        case FieldKind::Float: {
            Complex z;
            if (v.is_object())
                z = {v.contains("re") ? parse_real(v["re"], pointer + "/re") : 0.0L,
                     v.contains("im") ? parse_real(v["im"], pointer + "/im") : 0.0L};
            else
                z = {parse_real(v, pointer), 0.0L};
            return Scalar::approx(z, field.eps);
        }
    }
    throw InputError(pointer, "unsupported field");
}

Json scalar_to_json(const Scalar& s) {
    const Field& f = s.field();
    switch (f.kind) {
        case FieldKind::Rational: return rational_string(s.a());
        case FieldKind::Gaussian:
            if (s.b() == 0) return rational_string(s.a());
            return Json{{"re", rational_string(s.a())}, {"im", rational_string(s.b())}};
        case FieldKind::Quadratic:
            if (s.b() == 0) return rational_string(s.a());
            return Json{{"a", rational_string(s.a())}, {"b", rational_string(s.b())}, {"d", f.d}};
        case FieldKind::Float: {
            Complex z = s.approx_value();
            if (z.imag() == 0) return real_string(z.real());
            return Json{{"re", real_string(z.real())}, {"im", real_string(z.imag())}};
        }
    }
    return nullptr;
}

Algebra algebra_from_json(const Json& doc) {
    if (!doc.is_object()) throw InputError("", "algebra file must hold a JSON object");
    Field field = field_from_json(doc);
    const Json& A = member(doc, "A", "");
    const Json& b = member(doc, "b", "");
    if (!A.is_array() || A.empty()) throw InputError("/A", "expected a non-empty array of rows");
    const std::size_t n = A.size();
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n)
            throw InputError("/n", "n does not match the number of rows of A");
    }
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string p = "/A/" + std::to_string(i);
        if (!A[i].is_array()) throw InputError(p, "expected a row array");
        if (A[i].size() != n)
            throw InputError(p, "ragged row: " + std::to_string(A[i].size()) + " entries, expected " + std::to_string(n));
        Vector row;
        for (std::size_t j = 0; j < n; ++j) row.push_back(scalar_from_json(A[i][j], field, p + "/" + std::to_string(j)));
        rows.push_back(std::move(row));
    }
    if (!b.is_array() || b.size() != n)
        throw InputError("/b", "expected an array of " + std::to_string(n) + " entries");
    Vector bv;
    for (std::size_t j = 0; j < n; ++j) bv.push_back(scalar_from_json(b[j], field, "/b/" + std::to_string(j)));
    std::optional<std::string> label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw InputError("/label", "expected a string");
        label = doc["label"].get<std::string>();
    }
    try {
        // Keep the declared field even when every entry happens to be rational.
        for (auto& row : rows)
            for (auto& s : row) s = s.lift(field);
        for (auto& s : bv) s = s.lift(field);
        return new_algebra(rows, bv, label);
    } catch (const FieldError& e) {
        throw InputError("/field", e.what());
    }
}

Json algebra_to_json(const Algebra& alg) {
    Json out;
    out["n"] = alg.n();
    const Field& f = alg.field();
    switch (f.kind) {
        case FieldKind::Rational: out["field"] = "rational"; break;
        case FieldKind::Gaussian: out["field"] = "gaussian"; break;
        case FieldKind::Quadratic:
            out["field"] = "quadratic";
            out["d"] = f.d;
            break;
        case FieldKind::Float:
            out["field"] = "float";
            out["epsilon"] = rational_string(f.eps);
            break;
    }
    out["A"] = matrix_to_json(alg.A());
    out["b"] = vector_to_json(alg.b());
    if (alg.label()) out["label"] = *alg.label();
    return out;
}

Algebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("", "cannot open algebra file '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("", std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_json(doc);
}

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i)));
    return out;
}

Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Json element_to_json(const Element& x) { return Json{{"h", vector_to_json(x.alpha())}, {"r", scalar_to_json(x.beta())}}; }

Element element_from_json(const Json& v, const Field& field, std::size_t n, const std::string& pointer) {
    if (!v.is_object()) throw InputError(pointer, "expected {\"h\": [...], \"r\": ...}");
    const Json& h = member(v, "h", pointer);
    if (!h.is_array() || h.size() != n)
        throw InputError(pointer + "/h", "expected " + std::to_string(n) + " coefficients");
    Vector alpha;
    for (std::size_t i = 0; i < n; ++i) alpha.push_back(scalar_from_json(h[i], field, pointer + "/h/" + std::to_string(i)));
    return Element(std::move(alpha), scalar_from_json(member(v, "r", pointer), field, pointer + "/r"));
}

namespace {

class ElementParser {
public:
    ElementParser(const std::string& text, std::size_t n) : s_(text), n_(n) {}

    Element run() {
        if (n_ == 0) fail("n must be at least 1");
        Element out = Element::zero(n_);
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        bool first = true;
        bool any_term = false;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            term(out, sign, any_term);
        }
        return out;
    }

private:
    const std::string& s_;
    std::size_t n_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("offset " + std::to_string(pos_), what + " in '" + s_ + "'");
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::string digits() {
        std::string d;
        while (digit()) d.push_back(s_[pos_++]);
        return d;
    }

    void term(Element& out, int sign, bool& any_term) {
        Rational coef(sign);
        bool has_coef = false;
        if (digit()) {
            std::string num = digits();
            std::string den = "1";
            skip();
            if (peek() == '/') {
                ++pos_;
                skip();
                if (!digit()) fail("expected a denominator");
                den = digits();
            }
            if (Integer(den, 10) == 0) fail("zero denominator");
            coef *= Rational(Integer(num, 10), Integer(den, 10));
            coef.canonicalize();
            has_coef = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                skip();
                if (peek() != 'h' && peek() != 'r') fail("expected a generator after '*'");
            }
        }
        if (peek() == 'r') {
            ++pos_;
            out = out + Element(Vector(n_, Scalar(0)), Scalar(coef));
        } else if (peek() == 'h') {
            ++pos_;
            std::size_t i = 1;
            if (digit()) {
                std::string d = digits();
                if (d.size() > 9) fail("generator index out of range");
                i = std::stoul(d);
                if (i < 1 || i > n_) fail("h" + d + " is not a generator (n = " + std::to_string(n_) + ")");
            } else if (n_ != 1) {
                fail("bare 'h' is only allowed when n = 1");
            }
            out = out + Scalar(coef) * Element::h(n_, i);
        } else if (has_coef && (peek() == '\0' || peek() == '+' || peek() == '-')) {
            if (!any_term && coef == 0 && peek() == '\0') {
                any_term = true;
                return;  // the literal "0"
            }
            fail("constant terms are not elements");
        } else {
            fail("expected a coefficient or generator");
        }
        if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') fail("unexpected character");
        any_term = true;
    }
};

}  // namespace

Element parse_element(const std::string& text, std::size_t n) { return ElementParser(text, n).run(); }

std::string format_element(const Element& x) {
    std::ostringstream out;
    bool first = true;
    const std::size_t n = x.n();
    for (std::size_t i = 1; i <= n + 1; ++i) {
        const Scalar& c = x.coeff(i);
        if (c.is_zero()) continue;
        const std::string gen = i == n + 1 ? "r" : (n == 1 ? "h" : "h" + std::to_string(i));
        std::string cs;
        bool negative = false;
        if (c.is_rational()) {
            Rational q = c.to_rational();
            negative = q < 0;
            if (negative) q = -q;
            if (q != 1) cs = q.get_str() + " ";
        } else {
            cs = "(" + c.to_string() + ") ";
        }
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        out << cs << gen;
        first = false;
    }
    return first ? "0" : out.str();
}

}  // namespace eacp
