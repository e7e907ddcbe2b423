#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "roundsleek/bounded_real.hpp"

namespace roundsleek {

// Structural tag describing how a LazyReal was produced. When two values
// carry comparable tags, comparisons can be settled exactly instead of by
// interval refinement; NoForm values always go through refinement.
struct ExactForm {
    enum class Kind { NoForm, Rat, SqrtRat, Phi };
    Kind kind = Kind::NoForm;
    Rat value;        // Rat: the value itself; SqrtRat: the radicand
    std::string phi;  // Phi: registered transform name
    std::shared_ptr<const ExactForm> inner;  // Phi: argument form

    static ExactForm none() { return {}; }
    static ExactForm rational(const Rat& v) { return {Kind::Rat, v, {}, nullptr}; }
    static ExactForm sqrt_rat(const Rat& radicand) { return {Kind::SqrtRat, radicand, {}, nullptr}; }
    static ExactForm phi_of(const std::string& name, const ExactForm& arg) {
        return {Kind::Phi, Rat(0), name, std::make_shared<const ExactForm>(arg)};
    }
};

enum class Ordering { Less, Equal, Greater, Unknown };

// A real number presented as a refinable enclosure: eval(prec) returns an
// interval of width at most 2^-prec (besides being correct at every prec).
// Enclosures from successive calls are intersected, so refinement only ever
// narrows what the value is known to be.
class LazyReal {
public:
    LazyReal();  // exact zero
    explicit LazyReal(const Rat& v);
    LazyReal(std::function<BoundedReal(int)> eval, ExactForm form);

    static LazyReal sqrt_of(const Rat& q);

    BoundedReal enclosure(int prec) const;
    const ExactForm& form() const;
    // Exact rational value when the form proves one; nullopt otherwise.
    std::optional<Rat> exact_rat() const;
    std::string str() const;

private:
    struct State;
    std::shared_ptr<State> state_;
};

LazyReal operator+(const LazyReal& a, const LazyReal& b);
LazyReal operator-(const LazyReal& a, const LazyReal& b);
LazyReal operator*(const Rat& c, const LazyReal& a);
LazyReal lz_min(const LazyReal& a, const LazyReal& b);
LazyReal lz_max(const LazyReal& a, const LazyReal& b);
LazyReal lz_abs(const LazyReal& a);

// Three-way comparison. Structural fast paths decide exactly whenever the
// forms allow; otherwise enclosures are refined on an escalating schedule up
// to prec_cap, and Unknown is returned only if they still overlap there.
Ordering compare(const LazyReal& a, const LazyReal& b, int prec_cap = 128);
Ordering compare(const LazyReal& a, const Rat& b, int prec_cap = 128);

// Structural comparison on forms alone; nullopt when the tags don't line up.
std::optional<Ordering> compare_forms(const ExactForm& a, const ExactForm& b);

// Exact rational square of the value when the form proves one (Rat or
// SqrtRat); nullopt otherwise.
std::optional<Rat> lz_exact_square(const LazyReal& v);

}  // namespace roundsleek
