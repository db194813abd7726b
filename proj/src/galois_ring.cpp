#include "chaincodes/galois_ring.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

#include "poly_parse.hpp"

namespace chaincodes {

namespace {

std::uint32_t reduce_mod(long long v, std::uint32_t mod) {
    long long r = v % static_cast<long long>(mod);
    if (r < 0) r += mod;
    return static_cast<std::uint32_t>(r);
}

void check_elem(const GaloisRingSpec& spec, const GaloisRingElem& a) {
    if (a.coeffs.size() != static_cast<std::size_t>(spec.degree))
        throw std::invalid_argument("Galois ring element does not match the ring degree");
}

int gf2_degree(std::uint32_t p) {
    int d = -1;
    while (p >> (d + 1)) ++d;
    return d;
}

std::uint32_t gf2_mod(std::uint32_t a, std::uint32_t b) {
    int db = gf2_degree(b);
    for (int d = gf2_degree(a); d >= db; d = gf2_degree(a)) a ^= b << (d - db);
    return a;
}

}  // namespace

std::uint32_t GaloisRingSpec::residue_modulus() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < modulus.size(); ++i)
        if (modulus[i] & 1u) mask |= 1u << i;
    return mask;
}

bool gf2_irreducible(std::uint32_t poly) {
    int d = gf2_degree(poly);
    if (d < 1) return false;
    for (std::uint32_t g = 2; gf2_degree(g) <= d / 2; ++g)
        if (gf2_mod(poly, g) == 0) return false;
    return true;
}

std::vector<std::uint32_t> default_modulus(int m) {
    if (m < 1 || m > 16) throw std::invalid_argument("degree m must lie in [1, 16]");
    if (m == 1) return {0, 1};
    if (m == 2) return {1, 1, 1};
    for (std::uint32_t low = 1; low < (1u << m); low += 2) {
        std::uint32_t poly = low | (1u << m);
        if (gf2_irreducible(poly)) {
            std::vector<std::uint32_t> f(m + 1);
            for (int i = 0; i <= m; ++i) f[i] = (poly >> i) & 1u;
            return f;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

GaloisRingSpec make_galois_ring(int exponent, int degree, std::vector<std::uint32_t> modulus) {
    if (exponent < 1 || exponent > 20) throw std::invalid_argument("exponent s must lie in [1, 20]");
    if (degree < 1 || degree > 16) throw std::invalid_argument("degree m must lie in [1, 16]");
    if (modulus.empty()) modulus = default_modulus(degree);
    if (modulus.size() != static_cast<std::size_t>(degree) + 1)
        throw std::invalid_argument("modulus must have degree exactly m");
    GaloisRingSpec spec{exponent, degree, {}};
    for (auto c : modulus) spec.modulus.push_back(c % spec.characteristic());
    if (spec.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!gf2_irreducible(spec.residue_modulus()))
        throw std::invalid_argument("modulus is not irreducible mod 2");
    return spec;
}

GaloisRingSpec parse_galois_ring(const std::string& text) {
    static const std::regex re(R"(\s*GR\(\s*2\s*\^\s*(\d+)\s*,\s*(\d+)\s*(?:;\s*([^)]*))?\)\s*)");
    std::smatch mt;
    if (!std::regex_match(text, mt, re)) throw std::invalid_argument("malformed Galois ring spec: " + text);
    int s = std::stoi(mt[1]);
    int m = std::stoi(mt[2]);
    std::vector<std::uint32_t> f;
    if (mt[3].matched && !mt[3].str().empty()) {
        auto coeffs = detail::parse_int_poly(mt[3], 'x');
        for (auto c : coeffs) f.push_back(reduce_mod(c, 1u << s));
    }
    return make_galois_ring(s, m, f);
}

std::string to_string(const GaloisRingSpec& spec) {
    std::ostringstream os;
    os << "GR(2^" << spec.exponent << "," << spec.degree << ";";
    bool first = true;
    for (int i = spec.degree; i >= 0; --i) {
        std::uint32_t c = spec.modulus[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0 || c != 1) os << c;
        if (i > 0 && c != 1) os << "*";
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    os << ")";
    return os.str();
}

GaloisRingElem gr_zero(const GaloisRingSpec& spec) { return {std::vector<std::uint32_t>(spec.degree, 0)}; }

GaloisRingElem gr_one(const GaloisRingSpec& spec) { return gr_from_int(spec, 1); }

GaloisRingElem gr_from_int(const GaloisRingSpec& spec, long long value) {
    GaloisRingElem r = gr_zero(spec);
    r.coeffs[0] = reduce_mod(value, spec.characteristic());
    return r;
}

GaloisRingElem gr_from_coeffs(const GaloisRingSpec& spec, const std::vector<long long>& coeffs) {
    // Reduce an arbitrary-degree integer polynomial modulo f and 2^s.
    std::vector<long long> work(coeffs);
    const long long mod = spec.characteristic();
    for (auto& c : work) c = reduce_mod(c, mod);
    for (int d = static_cast<int>(work.size()) - 1; d >= spec.degree; --d) {
        long long c = work[d];
        if (c == 0) continue;
        work[d] = 0;
        for (int i = 0; i < spec.degree; ++i)
            work[d - spec.degree + i] = reduce_mod(work[d - spec.degree + i] - c * spec.modulus[i], mod);
    }
    GaloisRingElem r = gr_zero(spec);
    for (int i = 0; i < spec.degree && i < static_cast<int>(work.size()); ++i) r.coeffs[i] = reduce_mod(work[i], mod);
    return r;
}

GaloisRingElem gr_add(const GaloisRingSpec& spec, const GaloisRingElem& a, const GaloisRingElem& b) {
    check_elem(spec, a);
    check_elem(spec, b);
    GaloisRingElem r = a;
    const std::uint32_t mask = spec.characteristic() - 1;
    for (int i = 0; i < spec.degree; ++i) r.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) & mask;
    return r;
}

GaloisRingElem gr_neg(const GaloisRingSpec& spec, const GaloisRingElem& a) {
    check_elem(spec, a);
    GaloisRingElem r = a;
    const std::uint32_t mask = spec.characteristic() - 1;
    for (auto& c : r.coeffs) c = (spec.characteristic() - c) & mask;
    return r;
}

GaloisRingElem gr_sub(const GaloisRingSpec& spec, const GaloisRingElem& a, const GaloisRingElem& b) {
    return gr_add(spec, a, gr_neg(spec, b));
}

GaloisRingElem gr_mul(const GaloisRingSpec& spec, const GaloisRingElem& a, const GaloisRingElem& b) {
    check_elem(spec, a);
    check_elem(spec, b);
    const int m = spec.degree;
    std::vector<long long> prod(2 * m - 1, 0);
    const long long mod = spec.characteristic();
    for (int i = 0; i < m; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + 1LL * a.coeffs[i] * b.coeffs[j]) % mod;
    }
    return gr_from_coeffs(spec, prod);
}

GaloisRingElem gr_pow(const GaloisRingSpec& spec, const GaloisRingElem& a, unsigned long long k) {
    GaloisRingElem result = gr_one(spec);
    GaloisRingElem base = a;
    while (k) {
        if (k & 1) result = gr_mul(spec, result, base);
        base = gr_mul(spec, base, base);
        k >>= 1;
    }
    return result;
}

bool gr_is_zero(const GaloisRingElem& a) {
    for (auto c : a.coeffs)
        if (c) return false;
    return true;
}

ResidueElem residue(const GaloisRingSpec& spec, const GaloisRingElem& a) {
    check_elem(spec, a);
    ResidueElem r = 0;
    for (int i = 0; i < spec.degree; ++i)
        if (a.coeffs[i] & 1u) r |= 1u << i;
    return r;
}

bool gr_is_unit(const GaloisRingSpec& spec, const GaloisRingElem& a) { return residue(spec, a) != 0; }

GaloisRingElem gr_inv(const GaloisRingSpec& spec, const GaloisRingElem& a) {
    if (!gr_is_unit(spec, a)) throw std::domain_error("element is not a unit");
    // The unit group has order (2^m - 1) 2^{m(s-1)}.
    unsigned long long order = ((1ULL << spec.degree) - 1) << (spec.degree * (spec.exponent - 1));
    return gr_pow(spec, a, order - 1);
}

GaloisRingElem teichmuller_lift(const GaloisRingSpec& spec, ResidueElem r) {
    if (r >> spec.degree) throw std::invalid_argument("residue out of range");
    GaloisRingElem x = gr_zero(spec);
    for (int i = 0; i < spec.degree; ++i) x.coeffs[i] = (r >> i) & 1u;
    const unsigned long long q = 1ULL << spec.degree;
    for (int it = 0; it + 1 < spec.exponent; ++it) x = gr_pow(spec, x, q);
    return x;
}

std::string to_string(const GaloisRingSpec& spec, const GaloisRingElem& a) {
    check_elem(spec, a);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < spec.degree; ++i) {
        std::uint32_t c = a.coeffs[i];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

GaloisRingElem parse_galois_elem(const GaloisRingSpec& spec, const std::string& text) {
    return gr_from_coeffs(spec, detail::parse_int_poly(text, 'x'));
}

ResidueElem gf_mul(ResidueElem a, ResidueElem b, int m, std::uint32_t fbar) {
    std::uint32_t r = 0;
    for (int i = 0; i < m; ++i)
        if ((b >> i) & 1u) r ^= a << i;
    for (int d = 2 * m - 2; d >= m; --d)
        if ((r >> d) & 1u) r ^= fbar << (d - m);
    return r;
}

}  // namespace chaincodes
