#include "superdix/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace superdix {

InputError::InputError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                              : what),
      line_(line),
      column_(column) {}

namespace {

// Values are elements of U(g), or scalars when no algebra is attached.
struct Value {
    std::optional<PBWElement> element;
    Scalar scalar;

    [[nodiscard]] bool is_scalar() const { return !element || element->degree() == 0; }
    [[nodiscard]] Scalar as_scalar() const {
        if (!element) return scalar;
        Scalar s(0);
        for (const auto& [e, c] : element->terms()) s += c;
        return s;
    }
};

class ExprParser {
public:
    ExprParser(const std::string& text, AlgebraPtr alg) : s_(text), alg_(std::move(alg)) {}

    Value parse() {
        Value v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw InputError(msg, 1, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Value constant(const Scalar& c) const {
        if (alg_) return {PBWElement::constant(alg_, c), Scalar(0)};
        return {std::nullopt, c};
    }
    Value add(const Value& a, const Value& b, bool minus) const {
        if (alg_) return {minus ? *a.element - *b.element : *a.element + *b.element, Scalar(0)};
        return {std::nullopt, minus ? a.scalar - b.scalar : a.scalar + b.scalar};
    }
    Value mul(const Value& a, const Value& b) const {
        if (alg_) return {multiply(*a.element, *b.element), Scalar(0)};
        return {std::nullopt, a.scalar * b.scalar};
    }

    Value expr() {
        skip();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        Value v = term();
        if (negate) v = add(constant(Scalar(0)), v, true);
        for (;;) {
            if (accept('+'))
                v = add(v, term(), false);
            else if (accept('-'))
                v = add(v, term(), true);
            else
                return v;
        }
    }

    Value term() {
        Value v = factor();
        for (;;) {
            if (accept('*')) {
                v = mul(v, factor());
            } else if (accept('/')) {
                std::size_t at = pos_;
                Value d = factor();
                if (!d.is_scalar()) {
                    pos_ = at;
                    fail("division by a non-scalar");
                }
                Scalar den = d.as_scalar();
                if (den.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v = mul(v, constant(den.inverse()));
            } else {
                return v;
            }
        }
    }

    Value factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '-') {
            ++pos_;
            return add(constant(Scalar(0)), factor(), true);
        }
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return power_of(v);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Scalar(Rational(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '\''))
                ++pos_;
            std::string id = s_.substr(start, pos_ - start);
            if (id == "sqrt") {
                expect('(');
                std::size_t at = pos_;
                Value r = expr();
                expect(')');
                if (!r.is_scalar()) {
                    pos_ = at;
                    fail("sqrt of a non-scalar");
                }
                Scalar rad = r.as_scalar();
                if (rad.is_zero()) return constant(Scalar(0));
                return power_of(constant(adjoin_sqrt(rad)));
            }
            if (!alg_) {
                pos_ = start;
                fail("unknown identifier '" + id + "' in a scalar");
            }
            auto idx = alg_->index_of(id);
            if (!idx) {
                pos_ = start;
                fail("unknown identifier '" + id + "'");
            }
            return power_of({PBWElement::generator(alg_, *idx), Scalar(0)});
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Value power_of(Value base) {
        if (!accept('^')) return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        unsigned long n = std::stoul(s_.substr(start, pos_ - start));
        Value out = constant(Scalar(1));
        for (unsigned long i = 0; i < n; ++i) out = mul(out, base);
        return out;
    }

    std::string s_;
    AlgebraPtr alg_;
    std::size_t pos_ = 0;
};

Scalar json_scalar(const nlohmann::ordered_json& v, const std::string& where) {
    if (v.is_number_integer()) return Scalar(Rational(mpz_class(v.dump())));
    if (v.is_string()) {
        try {
            return parse_scalar(v.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    throw InputError(where + ": scalar must be an integer or a string");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_string()) throw InputError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

Scalar parse_scalar(const std::string& text) { return ExprParser(text, nullptr).parse().as_scalar(); }

PBWElement parse_element(const AlgebraPtr& alg, const std::string& text) {
    if (!alg) throw std::invalid_argument("parse_element: no algebra");
    return *ExprParser(text, alg).parse().element;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string msg = e.what();
        throw InputError("JSON syntax error: " + msg.substr(msg.find(':') + 2), line, column);
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_json_text(ss.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

AlgebraPtr algebra_from_json(const Json& j) {
    std::string name = string_field(j, "name", "algebra");
    const Json& gens = field(j, "generators", "algebra");
    if (!gens.is_array() || gens.empty()) throw InputError("algebra: 'generators' must be a nonempty array");
    std::vector<std::string> labels;
    std::vector<Parity> par;
    std::map<std::string, std::size_t> index;
    for (const auto& g : gens) {
        std::string id = string_field(g, "id", "generator");
        std::string p = string_field(g, "parity", "generator " + id);
        if (p != "even" && p != "odd") throw InputError("generator " + id + ": parity must be \"even\" or \"odd\"");
        if (!index.emplace(id, labels.size()).second) throw InputError("duplicate generator id '" + id + "'");
        labels.push_back(id);
        par.push_back(p == "even" ? Parity::Even : Parity::Odd);
    }
    std::size_t n = labels.size();
    auto lookup = [&](const std::string& id, const std::string& where) {
        auto it = index.find(id);
        if (it == index.end()) throw InputError(where + ": undeclared generator '" + id + "'");
        return it->second;
    };
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, zero_vector(n)));
    std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
    if (j.contains("brackets")) {
        const Json& br = j.at("brackets");
        if (!br.is_array()) throw InputError("algebra: 'brackets' must be an array");
        for (const auto& b : br) {
            std::string l = string_field(b, "left", "bracket");
            std::string r = string_field(b, "right", "bracket");
            std::string where = "bracket [" + l + ", " + r + "]";
            std::size_t i = lookup(l, where), k = lookup(r, where);
            const Json& val = field(b, "value", where);
            if (!val.is_object()) throw InputError(where + ": 'value' must be an object");
            Vector v = zero_vector(n);
            for (const auto& [id, c] : val.items()) v[lookup(id, where)] = json_scalar(c, where);
            Vector partner = Scalar(-sign_of(par[i], par[k])) * v;
            if (given[i][k] && table[i][k] != v) throw InputError(where + ": given twice with different values");
            if (given[k][i] && table[k][i] != partner)
                throw InputError(where + ": inconsistent with [" + r + ", " + l + "] (superskewsymmetry)");
            table[i][k] = v;
            table[k][i] = partner;
            given[i][k] = given[k][i] = true;
        }
    }
    AlgebraPtr alg;
    try {
        alg = make_algebra(name, labels, par, table);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("algebra: ") + e.what());
    }
    ValidationReport rep = validate(*alg);
    if (!rep.ok) throw AxiomViolation("algebra " + name + " violates " + rep.axiom + ": " + rep.message);
    return alg;
}

AlgebraPtr load_algebra(const std::filesystem::path& path) {
    Json j = read_json_file(path);
    try {
        return algebra_from_json(j);
    } catch (const AxiomViolation& e) {
        throw AxiomViolation(path.string() + ": " + e.what());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json vector_to_json(const SuperLieAlgebra& alg, const Vector& v) {
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[alg.labels()[i]] = v[i].to_string();
    return out;
}

Json algebra_to_json(const SuperLieAlgebra& alg) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        gens.push_back({{"id", alg.labels()[i]}, {"parity", to_string(alg.parity(i))}});
    Json brackets = Json::array();
    for (std::size_t i = 0; i < alg.dim(); ++i)
        for (std::size_t k = i; k < alg.dim(); ++k) {
            if (alg.bracket_zero(i, k)) continue;
            brackets.push_back({{"left", alg.labels()[i]},
                                {"right", alg.labels()[k]},
                                {"value", vector_to_json(alg, alg.bracket_basis(i, k))}});
        }
    return {{"name", alg.name()}, {"generators", gens}, {"brackets", brackets}};
}

Functional functional_from_json(const SuperLieAlgebra& alg, const Json& j) {
    if (j.contains("algebra") && (!j.at("algebra").is_string() || j.at("algebra").get<std::string>() != alg.name()))
        throw InputError("functional: written for algebra " + j.at("algebra").dump() + ", not " + alg.name());
    const Json& values = field(j, "values", "functional");
    if (!values.is_object()) throw InputError("functional: 'values' must be an object");
    Vector c = zero_vector(alg.dim());
    for (const auto& [id, v] : values.items()) {
        auto idx = alg.index_of(id);
        if (!idx) throw InputError("functional: undeclared generator '" + id + "'");
        c[*idx] = json_scalar(v, "functional value of " + id);
    }
    try {
        return Functional(alg, c);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("functional: ") + e.what());
    }
}

Functional load_functional(const SuperLieAlgebra& alg, const std::filesystem::path& path) {
    Json j = read_json_file(path);
    try {
        return functional_from_json(alg, j);
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json functional_to_json(const SuperLieAlgebra& alg, const Functional& lambda) {
    return {{"algebra", alg.name()}, {"values", vector_to_json(alg, lambda.coeffs())}};
}

Json radicands_json(const std::vector<Scalar>& values) {
    std::set<std::size_t> levels;
    std::vector<Scalar> pending = values;
    while (!pending.empty()) {
        Scalar v = pending.back();
        pending.pop_back();
        const auto& c = v.coefficients();
        for (std::size_t idx = 0; idx < c.size(); ++idx) {
            if (sgn(c[idx]) == 0) continue;
            for (std::size_t bit = 0; (std::size_t{1} << bit) <= idx; ++bit)
                if (((idx >> bit) & 1U) && levels.insert(bit).second) pending.push_back(Tower::global().radicand(bit));
        }
    }
    Json out = Json::array();
    for (std::size_t l : levels) out.push_back(Tower::global().radicand(l).to_string());
    return out;
}

}  // namespace superdix
