#include "gfc/polyrat.hpp"

namespace gfc {

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::variable(const Field& f) {
    return Polynomial(f, {FieldElement::zero(f), FieldElement::one(f)});
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t e) {
    std::vector<FieldElement> v(e + 1, FieldElement::zero(c.field()));
    v[e] = c;
    return Polynomial(c.field(), std::move(v));
}

FieldElement Polynomial::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return FieldElement::zero(field_);
}

FieldElement Polynomial::leading() const {
    if (c_.empty()) return FieldElement::zero(field_);
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), FieldElement::zero(field_));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<FieldElement> v(std::max(c_.size(), o.c_.size()), FieldElement::zero(field_));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial::zero(field_);
    std::vector<FieldElement> v(c_.size() + o.c_.size() - 1, FieldElement::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    }
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    Polynomial r(*this);
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < o.degree()) return {Polynomial::zero(field_), r};
    std::vector<FieldElement> q(r.degree() - o.degree() + 1, FieldElement::zero(field_));
    FieldElement lead_inv = o.leading().inverse();
    while (!r.is_zero() && r.degree() >= o.degree()) {
        std::size_t shift = r.degree() - o.degree();
        FieldElement f = r.leading() * lead_inv;
        q[shift] = f;
        r = r - Polynomial::monomial(f, shift) * o;
    }
    return {Polynomial(field_, std::move(q)), r};
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial::zero(field_);
    std::vector<FieldElement> v(c_.size() - 1, FieldElement::zero(field_));
    for (std::size_t i = 1; i < c_.size(); ++i)
        v[i - 1] = c_[i] * FieldElement::from_int(field_, i % field_->p);
    return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::pow(std::uint64_t e) const {
    Polynomial result = Polynomial::one(field_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

Polynomial Polynomial::pth_root() const {
    const std::uint32_t p = field_->p;
    if (is_zero()) return *this;
    std::vector<FieldElement> v(degree() / p + 1, FieldElement::zero(field_));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % p != 0)
            fail(errc::not_a_pth_power,
                 "exponent " + std::to_string(i) + " not divisible by " + std::to_string(p));
        v[i / p] = c_[i].pth_root();
    }
    return Polynomial(field_, std::move(v));
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return FieldElement::zero(field_).to_string();
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].to_string();
    }
    return s;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Polynomial parse_polynomial(const Field& f, const std::string& text) {
    // flat residue list, split into chunks of m residues per coefficient
    std::vector<std::uint32_t> flat;
    std::string item;
    for (std::size_t pos = 0;;) {
        auto comma = text.find(',', pos);
        item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            flat.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            fail(errc::parse_error, "bad polynomial residue '" + item + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (flat.size() % f->m != 0)
        fail(errc::parse_error, "polynomial needs a multiple of " + std::to_string(f->m) +
                                    " residues");
    std::vector<FieldElement> coeffs;
    for (std::size_t i = 0; i < flat.size(); i += f->m)
        coeffs.emplace_back(f, std::vector<std::uint32_t>(flat.begin() + i,
                                                          flat.begin() + i + f->m));
    return Polynomial(f, std::move(coeffs));
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.field())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::division_by_zero, "zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial::one(num_.field());
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    FieldElement lead_inv = den_.leading().inverse();
    num_ = num_ * lead_inv;
    den_ = den_ * lead_inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) fail(errc::division_by_zero, "division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(const FieldElement& s) const {
    return RationalFunction(num_ * s, den_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::derivative(std::uint32_t times) const {
    RationalFunction r = *this;
    for (std::uint32_t i = 0; i < times; ++i) {
        Polynomial n = r.num_.derivative() * r.den_ - r.num_ * r.den_.derivative();
        Polynomial d = r.den_ * r.den_;
        r = RationalFunction(std::move(n), std::move(d));
    }
    return r;
}

RationalFunction RationalFunction::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    return RationalFunction(num_.pow(static_cast<std::uint64_t>(e)),
                            den_.pow(static_cast<std::uint64_t>(e)));
}

RationalFunction RationalFunction::pth_root() const {
    // reduced form with monic denominator: f/g is a p-th power iff f and g are
    return RationalFunction(num_.pth_root(), den_.pth_root());
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return num_.to_string() + "|" + den_.to_string();
}

RationalFunction parse_rational(const Field& f, const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) return RationalFunction(parse_polynomial(f, text));
    return RationalFunction(parse_polynomial(f, text.substr(0, bar)),
                            parse_polynomial(f, text.substr(bar + 1)));
}

} // namespace gfc
