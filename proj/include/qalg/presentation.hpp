#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/field.hpp"

namespace qalg {

struct FieldSpec {
    enum class Kind { rationals, prime_field };
    Kind kind = Kind::rationals;
    std::int64_t p = 0;

    std::string str() const {
        return kind == Kind::rationals ? "Q" : "F" + std::to_string(p);
    }
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct Arrow {
    std::string name;
    int source = 0;  // vertex index
    int target = 0;
    int degree = 1;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int n() const { return static_cast<int>(vertices.size()); }
    int vertex_index(const std::string& label) const;  // -1 if unknown
    int arrow_index(const std::string& name) const;    // -1 if unknown
};

// Exact coefficient literal as written in a document; bound to a concrete
// field only when an algebra is built.
struct CoeffLit {
    std::int64_t num = 1;
    std::int64_t den = 1;
};

struct RelationTerm {
    CoeffLit coeff;
    std::vector<int> path;  // arrow indices, composition left to right
};

struct Relation {
    std::vector<RelationTerm> terms;
};

struct Options {
    int path_cap = 32;
};

struct Presentation {
    FieldSpec field;
    Quiver quiver;
    std::vector<Relation> relations;
    Options options;

    int path_degree(const std::vector<int>& path) const;
    int path_source(const std::vector<int>& path) const;
    int path_target(const std::vector<int>& path) const;
};

bool is_prime(std::int64_t p);

// "a", "-a", or "a/b" into an exact coefficient literal.
CoeffLit parse_coeff_text(const std::string& text);

// Parses an algebra-description document (UTF-8 JSON). Throws parse_error
// with a position or context on any malformed input.
Presentation parse_presentation(const std::string& text);
Presentation parse_presentation_file(const std::filesystem::path& path);

// Canonical serialization: parse(canonical_text(p)) reproduces p exactly.
std::string canonical_text(const Presentation& p);

// Binds coefficient literals to a concrete scalar field.
template <scalar_field K>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
    static bool matches(const FieldSpec& fs) { return fs.kind == FieldSpec::Kind::rationals; }
    Rational from_lit(const CoeffLit& c) const { return Rational(c.num, c.den); }
    Rational one() const { return Rational(1); }
};

template <>
struct FieldCtx<Fp> {
    std::int64_t p = 0;
    static bool matches(const FieldSpec& fs) { return fs.kind == FieldSpec::Kind::prime_field; }
    Fp from_lit(const CoeffLit& c) const {
        const Fp den(c.den, p);
        if (den.is_zero()) throw validation_error("coefficient denominator divisible by field characteristic");
        return Fp(c.num, p) / den;
    }
    Fp one() const { return Fp(1, p); }
};

// Dispatches f on the scalar type matching the field spec.
template <class F>
decltype(auto) with_field(const FieldSpec& fs, F&& f) {
    if (fs.kind == FieldSpec::Kind::rationals) return f(FieldCtx<Rational>{});
    return f(FieldCtx<Fp>{fs.p});
}

}  // namespace qalg
