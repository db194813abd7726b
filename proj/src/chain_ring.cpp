#include "chaincodes/chain_ring.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

#include "poly_parse.hpp"

namespace chaincodes {

namespace {

void check_elem(const ChainRingSpec& spec, const ChainRingElem& a) {
    if (a.coeffs.size() != static_cast<std::size_t>(spec.kappa))
        throw std::invalid_argument("chain ring element does not match the ring");
}

/// Reduces the coefficients of y^i, i >= t, modulo 2^{s-1}.
void canonicalize(const ChainRingSpec& spec, ChainRingElem& a) {
    const std::uint32_t low_mask = (spec.galois.characteristic() >> 1) - 1;
    for (int i = spec.tee; i < spec.kappa; ++i)
        for (auto& c : a.coeffs[i].coeffs) c &= low_mask;
}

/// Multiplies polynomials in y and reduces with y^kappa = -2 g(y); no canonical truncation.
ChainRingElem raw_mul(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b) {
    const auto& gr = spec.galois;
    const int k = spec.kappa;
    std::vector<GaloisRingElem> prod(2 * k - 1, gr_zero(gr));
    for (int i = 0; i < k; ++i) {
        if (gr_is_zero(a.coeffs[i])) continue;
        for (int j = 0; j < k; ++j) prod[i + j] = gr_add(gr, prod[i + j], gr_mul(gr, a.coeffs[i], b.coeffs[j]));
    }
    const GaloisRingElem minus_two = gr_from_int(gr, -2);
    for (int d = 2 * k - 2; d >= k; --d) {
        if (gr_is_zero(prod[d])) continue;
        GaloisRingElem c = gr_mul(gr, prod[d], minus_two);
        prod[d] = gr_zero(gr);
        for (int j = 0; j < k; ++j) prod[d - k + j] = gr_add(gr, prod[d - k + j], gr_mul(gr, c, spec.tail[j]));
    }
    prod.resize(k);
    return ChainRingElem{prod};
}

UAdicCoords peel(const ChainRingSpec& spec, const ChainRingElem& a) {
    const auto& gr = spec.galois;
    UAdicCoords d(spec.e, 0);
    ChainRingElem x = a;
    const ChainRingElem y_top = cr_u_power(spec, spec.kappa - 1);
    for (int i = 0; i < spec.e; ++i) {
        const ResidueElem r = residue(gr, x.coeffs[0]);
        d[i] = r;
        if (i + 1 == spec.e) break;
        x.coeffs[0] = gr_sub(gr, x.coeffs[0], teichmuller_lift(gr, r));
        GaloisRingElem half = x.coeffs[0];
        for (auto& c : half.coeffs) c >>= 1;
        ChainRingElem next = cr_zero(spec);
        for (int j = 1; j < spec.kappa; ++j) next.coeffs[j - 1] = x.coeffs[j];
        ChainRingElem corr = raw_mul(spec, raw_mul(spec, spec.tail_inverse, cr_from_galois(spec, half)), y_top);
        x = cr_sub(spec, next, corr);
    }
    return d;
}

}  // namespace

ChainRingSpec make_ring(const GaloisRingSpec& galois, int kappa, int tee, const std::vector<GaloisRingElem>& tail) {
    if (kappa < 3 || kappa % 2 == 0) throw std::invalid_argument("kappa must be odd and at least 3");
    if (tee < 1 || tee > kappa) throw std::invalid_argument("t must lie in [1, kappa]");
    if (galois.exponent < 2) throw std::invalid_argument("the Galois ring exponent must be at least 2");
    if (tail.empty() || static_cast<int>(tail.size()) > kappa)
        throw std::invalid_argument("g(y) must have degree below kappa");
    ChainRingSpec spec;
    spec.galois = galois;
    spec.kappa = kappa;
    spec.tee = tee;
    spec.tail = tail;
    spec.tail.resize(kappa, gr_zero(galois));
    for (const auto& c : spec.tail)
        if (c.coeffs.size() != static_cast<std::size_t>(galois.degree))
            throw std::invalid_argument("g(y) coefficient does not match the Galois ring");
    if (!gr_is_unit(galois, spec.tail[0])) throw std::invalid_argument("g(0) must be a unit");
    spec.e = kappa * (galois.exponent - 1) + tee;
    if (galois.degree * spec.e > 30) throw std::invalid_argument("ring too large: m e must not exceed 30");
    spec.s_half = spec.e / 2;
    spec.theta_e = spec.e % 2;
    spec.kappa_1 = (kappa - 1) / 2;

    ChainRingElem g{spec.tail};
    canonicalize(spec, g);
    // |R*| = (q - 1) q^{e-1}.
    const unsigned long long units = ((1ULL << galois.degree) - 1) << (galois.degree * (spec.e - 1));
    spec.tail_inverse = cr_pow(spec, g, units - 1);
    if (!(cr_mul(spec, spec.tail_inverse, g) == cr_one(spec)))
        throw std::logic_error("failed to invert g(y)");

    const UAdicCoords two = to_u_adic(spec, cr_from_int(spec, 2));
    for (int i = 0; i < kappa && i < spec.e; ++i)
        if (two[i] != 0) throw std::invalid_argument("the element 2 must have u-valuation kappa");
    if (kappa >= spec.e || two[kappa] == 0) throw std::invalid_argument("the element 2 must have u-valuation kappa");
    spec.eta.assign(two.begin() + kappa, two.end());
    return spec;
}

ChainRingSpec make_ring(const GaloisRingSpec& galois, int kappa, int tee, const std::vector<long long>& tail) {
    std::vector<GaloisRingElem> t;
    for (auto c : tail) t.push_back(gr_from_int(galois, c));
    return make_ring(galois, kappa, tee, t);
}

ChainRingSpec parse_chain_ring(const std::string& text) {
    static const std::regex re(
        R"(\s*CR\(\s*2\s*\^\s*(\d+)\s*,\s*(\d+)\s*;\s*(\d+)\s*,\s*(\d+)\s*(?:;\s*([^)]*))?\)\s*)");
    std::smatch mt;
    if (!std::regex_match(text, mt, re)) throw std::invalid_argument("malformed chain ring spec: " + text);
    const int s = std::stoi(mt[1]);
    const int m = std::stoi(mt[2]);
    const int kappa = std::stoi(mt[3]);
    const int tee = std::stoi(mt[4]);
    std::vector<long long> g{1};
    if (mt[5].matched && !mt[5].str().empty()) g = detail::parse_int_poly(mt[5], 'y');
    return make_ring(make_galois_ring(s, m), kappa, tee, g);
}

std::vector<std::string> preset_names() { return {"R4,1", "R5,1", "R6,2", "R8,2"}; }

ChainRingSpec preset_ring(const std::string& name) {
    const std::vector<long long> one{1};
    if (name == "R4,1") return make_ring(make_galois_ring(2, 1), 3, 1, one);
    if (name == "R5,1") return make_ring(make_galois_ring(2, 1), 3, 2, one);
    if (name == "R6,2") return make_ring(make_galois_ring(2, 2), 3, 3, one);
    if (name == "R8,2") return make_ring(make_galois_ring(3, 2), 3, 2, one);
    throw std::invalid_argument("unknown preset ring: " + name);
}

std::string to_string(const ChainRingSpec& spec) {
    std::ostringstream os;
    os << "CR(2^" << spec.galois.exponent << "," << spec.galois.degree << ";" << spec.kappa << "," << spec.tee << ";";
    bool first = true;
    for (int i = spec.kappa - 1; i >= 0; --i) {
        if (gr_is_zero(spec.tail[i])) continue;
        if (!first) os << "+";
        first = false;
        const std::string c = to_string(spec.galois, spec.tail[i]);
        const bool unit_coeff = c == "1";
        if (i == 0 || !unit_coeff) os << (c.find('+') != std::string::npos && i > 0 ? "(" + c + ")" : c);
        if (i > 0 && !unit_coeff) os << "*";
        if (i >= 1) os << "y";
        if (i >= 2) os << "^" << i;
    }
    os << ") [e=" << spec.e << "]";
    return os.str();
}

ChainRingElem cr_zero(const ChainRingSpec& spec) {
    return ChainRingElem{std::vector<GaloisRingElem>(spec.kappa, gr_zero(spec.galois))};
}

ChainRingElem cr_one(const ChainRingSpec& spec) { return cr_from_int(spec, 1); }

ChainRingElem cr_from_int(const ChainRingSpec& spec, long long value) {
    return cr_from_galois(spec, gr_from_int(spec.galois, value));
}

ChainRingElem cr_from_galois(const ChainRingSpec& spec, const GaloisRingElem& a) {
    ChainRingElem r = cr_zero(spec);
    r.coeffs[0] = a;
    canonicalize(spec, r);
    return r;
}

ChainRingElem cr_u_power(const ChainRingSpec& spec, int k) {
    if (k < 0) throw std::invalid_argument("negative power of u");
    ChainRingElem y = cr_zero(spec);
    y.coeffs[1] = gr_one(spec.galois);
    ChainRingElem r = cr_one(spec);
    for (int i = 0; i < k; ++i) r = cr_mul(spec, r, y);
    return r;
}

ChainRingElem cr_add(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b) {
    check_elem(spec, a);
    check_elem(spec, b);
    ChainRingElem r = a;
    for (int i = 0; i < spec.kappa; ++i) r.coeffs[i] = gr_add(spec.galois, a.coeffs[i], b.coeffs[i]);
    canonicalize(spec, r);
    return r;
}

ChainRingElem cr_neg(const ChainRingSpec& spec, const ChainRingElem& a) {
    check_elem(spec, a);
    ChainRingElem r = a;
    for (auto& c : r.coeffs) c = gr_neg(spec.galois, c);
    canonicalize(spec, r);
    return r;
}

ChainRingElem cr_sub(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b) {
    return cr_add(spec, a, cr_neg(spec, b));
}

ChainRingElem cr_mul(const ChainRingSpec& spec, const ChainRingElem& a, const ChainRingElem& b) {
    check_elem(spec, a);
    check_elem(spec, b);
    ChainRingElem r = raw_mul(spec, a, b);
    canonicalize(spec, r);
    return r;
}

ChainRingElem cr_pow(const ChainRingSpec& spec, const ChainRingElem& a, unsigned long long k) {
    ChainRingElem result = cr_one(spec);
    ChainRingElem base = a;
    while (k) {
        if (k & 1) result = cr_mul(spec, result, base);
        base = cr_mul(spec, base, base);
        k >>= 1;
    }
    return result;
}

ChainRingElem cr_inv(const ChainRingSpec& spec, const ChainRingElem& a) {
    if (cr_residue(spec, a) == 0) throw std::domain_error("element is not a unit");
    const unsigned long long units = ((1ULL << spec.m()) - 1) << (spec.m() * (spec.e - 1));
    return cr_pow(spec, a, units - 1);
}

bool cr_is_zero(const ChainRingElem& a) {
    for (const auto& c : a.coeffs)
        if (!gr_is_zero(c)) return false;
    return true;
}

ResidueElem cr_residue(const ChainRingSpec& spec, const ChainRingElem& a) {
    check_elem(spec, a);
    return residue(spec.galois, a.coeffs[0]);
}

UAdicCoords to_u_adic(const ChainRingSpec& spec, const ChainRingElem& a) {
    check_elem(spec, a);
    return peel(spec, a);
}

ChainRingElem from_u_adic(const ChainRingSpec& spec, const UAdicCoords& coords) {
    if (coords.size() > static_cast<std::size_t>(spec.e)) throw std::invalid_argument("too many u-adic coordinates");
    ChainRingElem r = cr_zero(spec);
    ChainRingElem upow = cr_one(spec);
    ChainRingElem y = cr_zero(spec);
    y.coeffs[1] = gr_one(spec.galois);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= spec.q()) throw std::invalid_argument("u-adic coordinate out of range");
        if (coords[i] != 0)
            r = cr_add(spec, r, cr_mul(spec, upow, cr_from_galois(spec, teichmuller_lift(spec.galois, coords[i]))));
        upow = cr_mul(spec, upow, y);
    }
    return r;
}

int u_valuation(const ChainRingSpec& spec, const ChainRingElem& a) {
    const UAdicCoords d = to_u_adic(spec, a);
    for (int i = 0; i < spec.e; ++i)
        if (d[i] != 0) return i;
    return spec.e;
}

ChainRingElem truncate_elem(const ChainRingSpec& spec, const ChainRingElem& a, int level) {
    if (level < 1 || level > spec.e) throw std::invalid_argument("truncation level out of range");
    UAdicCoords d = to_u_adic(spec, a);
    d.resize(level);
    return from_u_adic(spec, d);
}

std::string to_string(const ChainRingSpec& spec, const ChainRingElem& a) {
    check_elem(spec, a);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < spec.kappa; ++i) {
        if (gr_is_zero(a.coeffs[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(spec.galois, a.coeffs[i]) << ")";
        if (i >= 1) os << "*y";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

ChainRing::ChainRing(ChainRingSpec spec) : spec_(std::move(spec)) {
    const int m = spec_.m();
    q_ = spec_.q();
    bits_ = m;
    if (bits_ * spec_.e > 24) throw std::invalid_argument("ring too large for table arithmetic (m e > 24)");
    if (spec_.kappa * m > 8) throw std::invalid_argument("table arithmetic needs kappa m <= 8");
    if (spec_.galois.exponent > 7) throw std::invalid_argument("table arithmetic needs s <= 7");
    size_ = 1u << (bits_ * spec_.e);

    lane_count_ = spec_.kappa * m;
    int offset = 0;
    for (int i = 0; i < spec_.kappa; ++i) {
        const int lane_bits = i < spec_.tee ? spec_.galois.exponent : spec_.galois.exponent - 1;
        for (int j = 0; j < m; ++j) {
            lane_modulus_.push_back(1u << lane_bits);
            lane_offset_.push_back(offset);
            lane_mask_ |= static_cast<std::uint64_t>((1u << lane_bits) - 1) << (8 * (i * m + j));
            offset += lane_bits;
        }
    }
    if (offset != bits_ * spec_.e) throw std::logic_error("lane layout does not match ring size");

    auto pack = [&](const ChainRingElem& x) {
        std::uint64_t lanes = 0;
        for (int i = 0; i < spec_.kappa; ++i)
            for (int j = 0; j < m; ++j)
                lanes |= static_cast<std::uint64_t>(x.coeffs[i].coeffs[j]) << (8 * (i * m + j));
        return lanes;
    };

    // Lanes of u^i T(d) for every position i and digit d; lanes of a general element are their sums.
    std::vector<std::uint64_t> term(static_cast<std::size_t>(spec_.e) * q_);
    ChainRingElem upow = cr_one(spec_);
    const ChainRingElem y = cr_u_power(spec_, 1);
    for (int i = 0; i < spec_.e; ++i) {
        for (std::uint32_t d = 0; d < q_; ++d)
            term[i * q_ + d] = pack(cr_mul(spec_, upow, cr_from_galois(spec_, teichmuller_lift(spec_.galois, d))));
        upow = cr_mul(spec_, upow, y);
    }
    lanes_.assign(size_, 0);
    for (Elem a = 1; a < size_; ++a) {
        // Highest nonzero digit position.
        int top = spec_.e - 1;
        while (digit(a, top) == 0) --top;
        const Elem rest = a & ((1u << (bits_ * top)) - 1);
        lanes_[a] = ((lanes_[rest] + term[top * q_ + digit(a, top)]) & lane_mask_);
    }
    elem_of_dense_.assign(size_, 0);
    std::vector<bool> seen(size_, false);
    for (Elem a = 0; a < size_; ++a) {
        std::uint64_t dense = 0;
        for (int k = 0; k < lane_count_; ++k) dense |= ((lanes_[a] >> (8 * k)) & 0xffu) << lane_offset_[k];
        if (seen[dense]) throw std::logic_error("u-adic coordinates are not unique");
        seen[dense] = true;
        elem_of_dense_[dense] = a;
    }

    fmul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    finv_.assign(q_, 0);
    const std::uint32_t fbar = spec_.galois.residue_modulus();
    for (std::uint32_t a = 0; a < q_; ++a)
        for (std::uint32_t b = 0; b < q_; ++b) {
            fmul_[a * q_ + b] = gf_mul(a, b, m, fbar);
            if (fmul_[a * q_ + b] == 1) finv_[a] = b;
        }

    if (size_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(size_) * size_);
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b) add_table_[a * size_ + b] = elem_of_lanes((lanes_[a] + lanes_[b]) & lane_mask_);
    }
}

ChainRing::Elem ChainRing::elem_of_lanes(std::uint64_t lanes) const {
    std::uint64_t dense = 0;
    for (int k = 0; k < lane_count_; ++k) dense |= ((lanes >> (8 * k)) & 0xffu) << lane_offset_[k];
    return elem_of_dense_[dense];
}

ChainRing::Elem ChainRing::add(Elem a, Elem b) const {
    if (!add_table_.empty()) return add_table_[a * size_ + b];
    return elem_of_lanes((lanes_[a] + lanes_[b]) & lane_mask_);
}

ChainRing::Elem ChainRing::neg(Elem a) const {
    if (a == 0) return 0;
    std::uint64_t moduli = 0;
    for (int k = 0; k < lane_count_; ++k) moduli |= static_cast<std::uint64_t>(lane_modulus_[k]) << (8 * k);
    return elem_of_lanes((moduli - lanes_[a]) & lane_mask_);
}

ChainRing::Elem ChainRing::scale(ResidueElem d, Elem b) const {
    Elem r = 0;
    for (int i = 0; i < spec_.e; ++i) r |= static_cast<Elem>(fmul(d, digit(b, i))) << (bits_ * i);
    return r;
}

ChainRing::Elem ChainRing::mul(Elem a, Elem b) const {
    Elem r = 0;
    for (int i = 0; i < spec_.e; ++i) {
        const ResidueElem d = digit(a, i);
        if (d == 0) continue;
        r = add(r, shift_up(scale(d, b), i));
    }
    return r;
}

ChainRing::Elem ChainRing::inverse(Elem unit) const {
    if (digit(unit, 0) == 0) throw std::domain_error("element is not a unit");
    // Newton iteration x <- x (2 - a x) doubles the u-adic precision.
    Elem x = finv(digit(unit, 0));
    const Elem two = from_elem(cr_from_int(spec_, 2));
    for (int prec = 1; prec < spec_.e; prec *= 2) x = mul(x, sub(two, mul(unit, x)));
    return x;
}

int ChainRing::valuation(Elem a) const {
    if (a == 0) return spec_.e;
    int v = 0;
    while (digit(a, v) == 0) ++v;
    return v;
}

ChainRing::Elem ChainRing::from_digits(const UAdicCoords& d) const {
    if (d.size() > static_cast<std::size_t>(spec_.e)) throw std::invalid_argument("too many u-adic coordinates");
    Elem r = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] >= q_) throw std::invalid_argument("u-adic coordinate out of range");
        r |= d[i] << (bits_ * i);
    }
    return r;
}

UAdicCoords ChainRing::to_digits(Elem a) const {
    UAdicCoords d(spec_.e);
    for (int i = 0; i < spec_.e; ++i) d[i] = digit(a, i);
    return d;
}

ChainRingElem ChainRing::to_elem(Elem a) const { return from_u_adic(spec_, to_digits(a)); }

ChainRing::Elem ChainRing::from_elem(const ChainRingElem& x) const { return from_digits(to_u_adic(spec_, x)); }

std::string ChainRing::format(Elem a) const {
    std::ostringstream os;
    for (int i = 0; i < spec_.e; ++i) os << (i ? "," : "") << digit(a, i);
    return os.str();
}

ChainRingPtr make_chain_ring(const ChainRingSpec& spec) { return std::make_shared<const ChainRing>(spec); }

}  // namespace chaincodes
