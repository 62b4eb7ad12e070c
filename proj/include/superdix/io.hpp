#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "superdix/algebra.hpp"
#include "superdix/pbw.hpp"

namespace superdix {

/// Malformed or semantically invalid input; line and column are 1-based, 0 when unknown.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed algebra file whose brackets break an axiom.
class AxiomViolation : public InputError {
public:
    using InputError::InputError;
};

using Json = nlohmann::ordered_json;

/// Scalar expression: integers, fractions, sqrt(...), parentheses, + - * /.
Scalar parse_scalar(const std::string& text);
/// Element expression over the labels of alg, straightened into PBW normal form.
PBWElement parse_element(const AlgebraPtr& alg, const std::string& text);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

/// Generators in file order, skewsymmetric completion, validated.
AlgebraPtr algebra_from_json(const Json& j);
AlgebraPtr load_algebra(const std::filesystem::path& path);
Json algebra_to_json(const SuperLieAlgebra& alg);

Functional functional_from_json(const SuperLieAlgebra& alg, const Json& j);
Functional load_functional(const SuperLieAlgebra& alg, const std::filesystem::path& path);
Json functional_to_json(const SuperLieAlgebra& alg, const Functional& lambda);

Json vector_to_json(const SuperLieAlgebra& alg, const Vector& v);
/// Tower radicands the given values depend on (nested radicands included), in level order.
Json radicands_json(const std::vector<Scalar>& values);

}  // namespace superdix
