#include "roundsleek/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace roundsleek {

std::optional<Rat> rat_parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::size_t slash = text.find('/');
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) return std::nullopt;
            Rat q(text);
            q.canonicalize();
            return q;
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        mpz_class d(den);
        if (d == 0) return std::nullopt;
        Rat q(mpz_class(num), d);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rat_decimal(const Rat& q, int digits) {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpz_class num = q.get_num() * scale;
    mpz_class quot;
    mpz_tdiv_q(quot.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    bool neg = quot < 0;
    mpz_class mag = neg ? mpz_class(-quot) : quot;
    std::string s = mag.get_str();
    while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    return (neg ? "-" : "") + s;
}

Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

Rat rat_pow2(int e) {
    Rat q = 1;
    if (e >= 0) {
        mpz_class n = 1;
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), e);
        q = Rat(n);
    } else {
        mpz_class d = 1;
        mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), -e);
        q = Rat(1, d);
    }
    q.canonicalize();
    return q;
}

Rat rat_floor(const Rat& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return Rat(f);
}

int ceil_log2_inverse(const Rat& q) {
    if (q <= 0) throw std::invalid_argument("ceil_log2_inverse: nonpositive");
    int k = 0;
    Rat p = 1;
    while (p > q) {
        p /= 2;
        ++k;
        if (k > 4096) throw std::invalid_argument("ceil_log2_inverse: value too small");
    }
    return k;
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rat(0);
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

Rat rat_round_down_dyadic(const Rat& q, int bits) {
    Rat scaled = q * rat_pow2(bits);
    return rat_floor(scaled) * rat_pow2(-bits);
}

Rat rat_round_up_dyadic(const Rat& q, int bits) {
    return -rat_round_down_dyadic(-q, bits);
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace roundsleek
