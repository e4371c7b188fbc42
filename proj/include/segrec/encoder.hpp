#pragma once

#include "segrec/arrangement.hpp"
#include "segrec/graph.hpp"
#include "segrec/parse_error.hpp"

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segrec {

class MissingVariable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Power product of variables, as (variable index, exponent) sorted by index.
using Monomial = std::vector<std::pair<int, int>>;

/// Polynomial with integer coefficients; zero terms are never stored.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT(google-explicit-constructor)
    static Polynomial variable(int index);
    static Polynomial constant(const mpz_class& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    [[nodiscard]] const std::map<Monomial, mpz_class>& terms() const { return terms_; }
    void add_term(const Monomial& m, const mpz_class& c);
    [[nodiscard]] Rational evaluate(const std::vector<Rational>& values) const;
    [[nodiscard]] int max_variable() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    std::map<Monomial, mpz_class> terms_;
};

enum class Relation { Zero, Positive, NonNegative, NonZero };

/// Boolean tree over polynomial sign atoms.
struct Formula {
    enum class Op { Atom, And, Or, Not };
    Op op = Op::And;
    Polynomial poly;
    Relation rel = Relation::Zero;
    std::vector<Formula> args;

    static Formula atom(Polynomial p, Relation r);
    static Formula all(std::vector<Formula> fs);
    static Formula any(std::vector<Formula> fs);
    static Formula negate(Formula f);

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// Named top-level conjunct.
struct Constraint {
    std::string tag;
    Formula formula;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct PolySystem {
    std::vector<std::string> variables;
    std::vector<Constraint> constraints;  // all must hold

    [[nodiscard]] int index_of(const std::string& name) const;
    friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

/// Variable names: "<label>.x1", "<label>.y1", "<label>.x2", "<label>.y2" per vertex.
PolySystem encode_unit(const LabeledGraph& g);

/// Variable names "<label>.x<i>", "<label>.y<i>" for the k+2 points of each polyline.
PolySystem encode_polyline(const LabeledGraph& g, int k);

/// Variables "m<i>", "b<i>" for line y = m<i> x + b<i> of pseudoline i.
PolySystem encode_stretchability(const WiringDiagram& w);

/// Closed-segment intersection of pq and rs as a formula.
Formula intersection_formula(const Polynomial px, const Polynomial py, const Polynomial qx, const Polynomial qy,
                             const Polynomial rx, const Polynomial ry, const Polynomial sx, const Polynomial sy);

using Assignment = std::map<std::string, Rational>;

bool evaluate(const PolySystem& sys, const Assignment& values);
bool evaluate(const Formula& f, const std::vector<Rational>& values);

/// Tags of the constraints that fail.
std::vector<std::string> violated(const PolySystem& sys, const Assignment& values);

/// Assignment for encode_unit / encode_polyline variables read off a drawing.
Assignment flatten(const ObjectMap& objects);

/// Assignment for encode_stretchability: line of pseudoline i is L.lines[left_order(L)[i-1]].
Assignment flatten(const LineArrangement& L);

std::string emit_smtlib(const PolySystem& sys);
PolySystem parse_smtlib(const std::string& text);

std::string emit_json(const PolySystem& sys);
PolySystem parse_json(const std::string& text);

}  // namespace segrec
