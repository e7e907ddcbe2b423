#include "roundsleek/bounded_real.hpp"

#include <stdexcept>

namespace roundsleek {

BoundedReal::BoundedReal(const Rat& lo, const Rat& hi) : lo_(lo), hi_(hi) {
    if (lo_ > hi_) throw std::invalid_argument("BoundedReal: lo > hi");
}

BoundedReal BoundedReal::meet(const BoundedReal& o) const {
    Rat l = rat_max(lo_, o.lo_);
    Rat h = rat_min(hi_, o.hi_);
    if (l > h) throw std::invalid_argument("BoundedReal::meet: disjoint enclosures");
    return BoundedReal(l, h);
}

std::string BoundedReal::str() const {
    if (exact()) return rat_str(lo_);
    return "[" + rat_str(lo_) + ", " + rat_str(hi_) + "]";
}

BoundedReal operator+(const BoundedReal& a, const BoundedReal& b) {
    return BoundedReal(a.lo() + b.lo(), a.hi() + b.hi());
}

BoundedReal operator-(const BoundedReal& a, const BoundedReal& b) {
    return BoundedReal(a.lo() - b.hi(), a.hi() - b.lo());
}

BoundedReal operator*(const BoundedReal& a, const BoundedReal& b) {
    Rat c1 = a.lo() * b.lo(), c2 = a.lo() * b.hi(), c3 = a.hi() * b.lo(), c4 = a.hi() * b.hi();
    return BoundedReal(rat_min(rat_min(c1, c2), rat_min(c3, c4)),
                       rat_max(rat_max(c1, c2), rat_max(c3, c4)));
}

BoundedReal br_min(const BoundedReal& a, const BoundedReal& b) {
    return BoundedReal(rat_min(a.lo(), b.lo()), rat_min(a.hi(), b.hi()));
}

BoundedReal br_max(const BoundedReal& a, const BoundedReal& b) {
    return BoundedReal(rat_max(a.lo(), b.lo()), rat_max(a.hi(), b.hi()));
}

BoundedReal br_abs(const BoundedReal& a) {
    if (a.lo() >= 0) return a;
    if (a.hi() <= 0) return BoundedReal(-a.hi(), -a.lo());
    return BoundedReal(Rat(0), rat_max(-a.lo(), a.hi()));
}

BoundedReal br_square(const BoundedReal& a) {
    BoundedReal m = br_abs(a);
    return BoundedReal(m.lo() * m.lo(), m.hi() * m.hi());
}

BoundedReal sqrt_enclosure(const Rat& q, int prec) {
    if (q < 0) throw std::invalid_argument("sqrt_enclosure: negative radicand");
    if (q == 0) return BoundedReal(Rat(0));
    if (auto exact = rat_sqrt_exact(q)) return BoundedReal(*exact);

    // Upper Newton iterates, rounded up at a prec-dependent dyadic grid.
    // Finer grids and longer runs only tighten, so enclosures nest in prec.
    const int bits = prec + 8;
    const Rat target = rat_pow2(-prec);
    Rat hi = (q + 1) / 2;
    Rat lo = q / hi;
    for (int iter = 0; iter < 256 && hi - lo > target; ++iter) {
        Rat next = rat_round_up_dyadic((hi + q / hi) / 2, bits);
        if (next < hi) hi = next;
        lo = q / hi;
    }
    return BoundedReal(rat_round_down_dyadic(lo, bits), hi);
}

BoundedReal sqrt_enclosure(const BoundedReal& v, int prec) {
    Rat lo = v.lo() < 0 ? Rat(0) : v.lo();
    return BoundedReal(sqrt_enclosure(lo, prec).lo(), sqrt_enclosure(v.hi(), prec).hi());
}

namespace {

// 2*atanh(u) for u in [0,1/2), i.e. log((1+u)/(1-u)), by the odd series with
// an explicit geometric tail bound. Partial sums rise and sum+tail falls, so
// longer runs nest.
BoundedReal two_atanh(const Rat& u, const Rat& tail_target) {
    if (u == 0) return BoundedReal(Rat(0));
    Rat u2 = u * u;
    Rat term = u;
    Rat sum = 0;
    int j = 0;
    while (true) {
        sum += term / (2 * j + 1);
        Rat next = term * u2;
        Rat tail = (next / (2 * j + 3)) / (1 - u2);
        if (tail <= tail_target / 2) return BoundedReal(2 * sum, 2 * (sum + tail));
        term = next;
        ++j;
        if (j > 20000) throw std::invalid_argument("two_atanh: no convergence");
    }
}

} // namespace

BoundedReal log1p_enclosure(const Rat& t, int prec) {
    if (t < 0) throw std::invalid_argument("log1p_enclosure: negative argument");
    if (t == 0) return BoundedReal(Rat(0));
    Rat m = 1 + t;
    int k = 0;
    while (m >= 2) {
        m /= 2;
        ++k;
    }
    const Rat piece = rat_pow2(-(prec + 8));
    BoundedReal r = two_atanh((m - 1) / (m + 1), piece);
    if (k > 0) {
        BoundedReal log2 = two_atanh(Rat(1, 3), piece);
        r = r + BoundedReal(Rat(k)) * log2;
    }
    const int bits = prec + 16;
    return BoundedReal(rat_round_down_dyadic(r.lo(), bits), rat_round_up_dyadic(r.hi(), bits));
}

BoundedReal log1p_enclosure(const BoundedReal& v, int prec) {
    Rat lo = v.lo() < 0 ? Rat(0) : v.lo();
    return BoundedReal(log1p_enclosure(lo, prec).lo(), log1p_enclosure(v.hi(), prec).hi());
}

} // namespace roundsleek
