#include "roundsleek/lazy_real.hpp"

#include <limits>

namespace roundsleek {

struct LazyReal::State {
    std::function<BoundedReal(int)> eval;
    BoundedReal cur;
    int cur_prec = -1;
    ExactForm form;
};

namespace {

constexpr int kExactPrec = std::numeric_limits<int>::max();

}  // namespace

LazyReal::LazyReal() : LazyReal(Rat(0)) {}

LazyReal::LazyReal(const Rat& v) : state_(std::make_shared<State>()) {
    state_->cur = BoundedReal(v);
    state_->cur_prec = kExactPrec;
    state_->form = ExactForm::rational(v);
}

LazyReal::LazyReal(std::function<BoundedReal(int)> eval, ExactForm form)
    : state_(std::make_shared<State>()) {
    state_->eval = std::move(eval);
    state_->cur = state_->eval(0);
    state_->cur_prec = 0;
    state_->form = std::move(form);
}

LazyReal LazyReal::sqrt_of(const Rat& q) {
    if (auto exact = rat_sqrt_exact(q)) return LazyReal(*exact);
    return LazyReal([q](int prec) { return sqrt_enclosure(q, prec); }, ExactForm::sqrt_rat(q));
}

BoundedReal LazyReal::enclosure(int prec) const {
    State& s = *state_;
    if (prec <= s.cur_prec || s.cur.exact()) return s.cur;
    s.cur = s.cur.meet(s.eval(prec));
    s.cur_prec = prec;
    return s.cur;
}

const ExactForm& LazyReal::form() const { return state_->form; }

std::optional<Rat> LazyReal::exact_rat() const {
    if (state_->form.kind == ExactForm::Kind::Rat) return state_->form.value;
    return std::nullopt;
}

std::string LazyReal::str() const {
    if (auto v = exact_rat()) return rat_str(*v);
    return enclosure(16).str();
}

LazyReal operator+(const LazyReal& a, const LazyReal& b) {
    auto ra = a.exact_rat();
    auto rb = b.exact_rat();
    if (ra && rb) return LazyReal(*ra + *rb);
    return LazyReal(
        [a, b](int prec) { return a.enclosure(prec + 1) + b.enclosure(prec + 1); },
        ExactForm::none());
}

LazyReal operator-(const LazyReal& a, const LazyReal& b) {
    auto ra = a.exact_rat();
    auto rb = b.exact_rat();
    if (ra && rb) return LazyReal(*ra - *rb);
    return LazyReal(
        [a, b](int prec) { return a.enclosure(prec + 1) - b.enclosure(prec + 1); },
        ExactForm::none());
}

LazyReal operator*(const Rat& c, const LazyReal& a) {
    if (c == 0) return LazyReal(Rat(0));
    if (auto ra = a.exact_rat()) return LazyReal(c * *ra);
    Rat mag = rat_abs(c);
    int extra = 1;
    while (rat_pow2(extra) < mag) ++extra;
    return LazyReal(
        [c, a, extra](int prec) { return BoundedReal(c) * a.enclosure(prec + extra); },
        ExactForm::none());
}

LazyReal lz_min(const LazyReal& a, const LazyReal& b) {
    auto ra = a.exact_rat();
    auto rb = b.exact_rat();
    if (ra && rb) return LazyReal(rat_min(*ra, *rb));
    return LazyReal(
        [a, b](int prec) { return br_min(a.enclosure(prec), b.enclosure(prec)); },
        ExactForm::none());
}

LazyReal lz_max(const LazyReal& a, const LazyReal& b) {
    auto ra = a.exact_rat();
    auto rb = b.exact_rat();
    if (ra && rb) return LazyReal(rat_max(*ra, *rb));
    return LazyReal(
        [a, b](int prec) { return br_max(a.enclosure(prec), b.enclosure(prec)); },
        ExactForm::none());
}

LazyReal lz_abs(const LazyReal& a) {
    if (auto ra = a.exact_rat()) return LazyReal(rat_abs(*ra));
    return LazyReal([a](int prec) { return br_abs(a.enclosure(prec)); }, ExactForm::none());
}

namespace {

Ordering cmp_rat(const Rat& a, const Rat& b) {
    if (a < b) return Ordering::Less;
    if (a > b) return Ordering::Greater;
    return Ordering::Equal;
}

Ordering flip(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return o;
}

// Rational v against sqrt(q) for non-square q, so the root is irrational and
// equality is impossible.
Ordering cmp_rat_sqrt(const Rat& v, const Rat& q) {
    if (v <= 0) return Ordering::Less;
    return v * v < q ? Ordering::Less : Ordering::Greater;
}

}  // namespace

std::optional<Ordering> compare_forms(const ExactForm& a, const ExactForm& b) {
    using K = ExactForm::Kind;
    if (a.kind == K::Rat && b.kind == K::Rat) return cmp_rat(a.value, b.value);
    if (a.kind == K::SqrtRat && b.kind == K::SqrtRat) return cmp_rat(a.value, b.value);
    if (a.kind == K::Rat && b.kind == K::SqrtRat) return cmp_rat_sqrt(a.value, b.value);
    if (a.kind == K::SqrtRat && b.kind == K::Rat) return flip(cmp_rat_sqrt(b.value, a.value));
    // Registered transforms are strictly increasing and fix 0, so same-name
    // applications compare as their arguments and zero tests pass through.
    if (a.kind == K::Phi && b.kind == K::Phi && a.phi == b.phi)
        return compare_forms(*a.inner, *b.inner);
    if (a.kind == K::Phi && b.kind == K::Rat && b.value == 0)
        return compare_forms(*a.inner, ExactForm::rational(Rat(0)));
    if (a.kind == K::Rat && a.value == 0 && b.kind == K::Phi)
        return compare_forms(ExactForm::rational(Rat(0)), *b.inner);
    return std::nullopt;
}

Ordering compare(const LazyReal& a, const LazyReal& b, int prec_cap) {
    if (auto o = compare_forms(a.form(), b.form())) return *o;
    int prec = 0;
    while (true) {
        BoundedReal ea = a.enclosure(prec);
        BoundedReal eb = b.enclosure(prec);
        if (ea.hi() < eb.lo()) return Ordering::Less;
        if (eb.hi() < ea.lo()) return Ordering::Greater;
        if (ea.exact() && eb.exact()) return Ordering::Equal;
        if (prec >= prec_cap) return Ordering::Unknown;
        prec = prec == 0 ? 4 : prec * 2;
        if (prec > prec_cap) prec = prec_cap;
    }
}

Ordering compare(const LazyReal& a, const Rat& b, int prec_cap) {
    return compare(a, LazyReal(b), prec_cap);
}

std::optional<Rat> lz_exact_square(const LazyReal& v) {
    const ExactForm& f = v.form();
    if (f.kind == ExactForm::Kind::Rat) return f.value * f.value;
    if (f.kind == ExactForm::Kind::SqrtRat) return f.value;
    return std::nullopt;
}

}  // namespace roundsleek
