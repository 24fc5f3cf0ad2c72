#include "gfc/curve.hpp"

#include <sstream>

namespace gfc {

long long curve_genus(std::uint32_t k, std::uint32_t n) {
    long long kpow = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) kpow *= k;
    long long excess = static_cast<long long>(k - 1) * (n - 1) - 2;
    // k^{n-1} * excess is always even: for odd k the factor (k-1)(n-1)-2 is even
    return 1 + kpow * excess / 2;
}

Polynomial CurveSpec::branch_polynomial(std::uint32_t j) const {
    Polynomial zk = Polynomial::monomial(FieldElement::one(field), k);
    return zk + Polynomial::constant(deltas.at(j - 3));
}

RationalFunction CurveSpec::relation_value(std::uint32_t j) const {
    return RationalFunction(-branch_polynomial(j));
}

bool CurveSpec::same_as(const CurveSpec& o) const {
    if (!field->same_as(*o.field) || k != o.k || n != o.n) return false;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        if (lambdas[i] != o.lambdas[i]) return false;
    return true;
}

Curve make_curve(Field field, std::uint32_t k, std::uint32_t n,
                 std::vector<FieldElement> lambdas) {
    if (k < 2 || n < 2) fail(errc::out_of_range, "need k >= 2 and n >= 2");
    if (k % field->p == 0)
        fail(errc::k_not_coprime_to_p, "k = " + std::to_string(k) +
                                           " shares the characteristic " +
                                           std::to_string(field->p));
    if (lambdas.size() != n - 2)
        fail(errc::lambda_degenerate, "expected " + std::to_string(n - 2) +
                                          " lambda values, got " +
                                          std::to_string(lambdas.size()));
    const FieldElement zero = FieldElement::zero(field);
    const FieldElement one = FieldElement::one(field);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (lambdas[i] == zero || lambdas[i] == one)
            fail(errc::lambda_degenerate, "lambda_" + std::to_string(i + 1) + " in {0,1}");
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (lambdas[i] == lambdas[j])
                fail(errc::lambda_degenerate, "lambda_" + std::to_string(i + 1) +
                                                  " = lambda_" + std::to_string(j + 1));
    }

    auto spec = std::make_shared<CurveSpec>();
    spec->field = std::move(field);
    spec->k = k;
    spec->n = n;
    spec->deltas.push_back(one);
    for (const auto& l : lambdas) spec->deltas.push_back(l);
    spec->lambdas = std::move(lambdas);
    spec->genus = curve_genus(k, n);
    // inverse of p modulo k, by scan (k is small; gcd(p,k) = 1 was checked)
    std::uint32_t pk = spec->field->p % k;
    spec->p_inv_mod_k = 1;
    for (std::uint32_t x = 1; x < k; ++x)
        if (pk * x % k == 1) {
            spec->p_inv_mod_k = x;
            break;
        }
    return spec;
}

Curve parse_curve(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) parts.push_back(item);
    if (parts.size() < 3) fail(errc::parse_error, "curve description needs field;k;n[;lambdas]");
    Field f = parse_field(parts[0]);
    std::uint32_t k = 0, n = 0;
    try {
        k = static_cast<std::uint32_t>(std::stoul(parts[1]));
        n = static_cast<std::uint32_t>(std::stoul(parts[2]));
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad k or n in '" + text + "'");
    }
    std::vector<FieldElement> lambdas;
    if (parts.size() > 3 && !parts[3].empty()) {
        std::vector<std::uint32_t> flat;
        std::stringstream ls(parts[3]);
        while (std::getline(ls, item, ',')) {
            try {
                flat.push_back(static_cast<std::uint32_t>(std::stoul(item)));
            } catch (const std::exception&) {
                fail(errc::parse_error, "bad lambda residue '" + item + "'");
            }
        }
        if (flat.size() % f->m != 0)
            fail(errc::parse_error, "lambda list needs a multiple of " +
                                        std::to_string(f->m) + " residues");
        for (std::size_t i = 0; i < flat.size(); i += f->m)
            lambdas.emplace_back(
                f, std::vector<std::uint32_t>(flat.begin() + i, flat.begin() + i + f->m));
    }
    return make_curve(f, k, n, std::move(lambdas));
}

std::string curve_to_string(const Curve& c) {
    std::string s = field_to_string(c->field) + ";" + std::to_string(c->k) + ";" +
                    std::to_string(c->n);
    if (!c->lambdas.empty()) {
        s += ";";
        for (std::size_t i = 0; i < c->lambdas.size(); ++i) {
            if (i) s += ",";
            s += c->lambdas[i].to_string();
        }
    }
    return s;
}

FunctionFieldElement FunctionFieldElement::one(const Curve& c) {
    return from_rational(c, RationalFunction::one(c->field));
}

FunctionFieldElement FunctionFieldElement::from_rational(const Curve& c,
                                                         const RationalFunction& r) {
    FunctionFieldElement e(c);
    if (!r.is_zero()) e.terms_.emplace(Key(c->n - 1, 0), r);
    return e;
}

FunctionFieldElement FunctionFieldElement::z_map(const Curve& c) {
    return from_rational(c, RationalFunction::variable(c->field));
}

FunctionFieldElement FunctionFieldElement::generator(const Curve& c, std::uint32_t j) {
    if (j < 3 || j > c->n + 1) fail(errc::out_of_range, "generator index out of range");
    Key key(c->n - 1, 0);
    key[j - 3] = 1;
    return term(c, std::move(key), RationalFunction::one(c->field));
}

FunctionFieldElement FunctionFieldElement::term(const Curve& c, Key key,
                                                const RationalFunction& r) {
    if (key.size() != c->n - 1) fail(errc::out_of_range, "exponent vector has wrong length");
    FunctionFieldElement e(c);
    RationalFunction coeff = r;
    for (std::size_t i = 0; i < key.size(); ++i) {
        std::uint32_t carries = key[i] / c->k;
        key[i] %= c->k;
        if (carries)
            coeff = coeff * c->relation_value(static_cast<std::uint32_t>(i + 3)).pow(carries);
    }
    if (!coeff.is_zero()) e.terms_.emplace(std::move(key), std::move(coeff));
    return e;
}

void FunctionFieldElement::add_term(const Key& key, const RationalFunction& r) {
    if (r.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, r);
        return;
    }
    it->second = it->second + r;
    if (it->second.is_zero()) terms_.erase(it);
}

void FunctionFieldElement::check_compatible(const FunctionFieldElement& o) const {
    if (!curve_ || !o.curve_) fail(errc::curve_mismatch, "detached function field element");
    if (curve_ == o.curve_ || curve_->same_as(*o.curve_)) return;
    fail(errc::curve_mismatch, "elements of different curves");
}

FunctionFieldElement FunctionFieldElement::operator-() const {
    FunctionFieldElement r(*this);
    for (auto& [key, coeff] : r.terms_) coeff = -coeff;
    return r;
}

FunctionFieldElement FunctionFieldElement::operator+(const FunctionFieldElement& o) const {
    check_compatible(o);
    FunctionFieldElement r(*this);
    for (const auto& [key, coeff] : o.terms_) r.add_term(key, coeff);
    return r;
}

FunctionFieldElement FunctionFieldElement::operator-(const FunctionFieldElement& o) const {
    check_compatible(o);
    FunctionFieldElement r(*this);
    for (const auto& [key, coeff] : o.terms_) r.add_term(key, -coeff);
    return r;
}

FunctionFieldElement FunctionFieldElement::operator*(const FunctionFieldElement& o) const {
    check_compatible(o);
    FunctionFieldElement r(curve_);
    const std::uint32_t k = curve_->k;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key key(ka.size());
            RationalFunction coeff = ca * cb;
            for (std::size_t i = 0; i < ka.size(); ++i) {
                std::uint32_t e = ka[i] + kb[i];
                if (e >= k) {
                    e -= k; // exponents are < k each, so at most one reduction
                    coeff = coeff * curve_->relation_value(static_cast<std::uint32_t>(i + 3));
                }
                key[i] = e;
            }
            r.add_term(key, coeff);
        }
    }
    return r;
}

FunctionFieldElement FunctionFieldElement::operator*(const RationalFunction& s) const {
    FunctionFieldElement r(curve_);
    if (s.is_zero()) return r;
    for (const auto& [key, coeff] : terms_) r.terms_.emplace(key, coeff * s);
    return r;
}

FunctionFieldElement FunctionFieldElement::operator*(const FieldElement& s) const {
    return *this * RationalFunction::constant(s);
}

bool FunctionFieldElement::operator==(const FunctionFieldElement& o) const {
    check_compatible(o);
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt)
        if (it->first != jt->first || it->second != jt->second) return false;
    return true;
}

FunctionFieldElement FunctionFieldElement::pow(std::uint64_t e) const {
    FunctionFieldElement result = one(curve_);
    FunctionFieldElement base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1u;
    }
    return result;
}

FunctionFieldElement FunctionFieldElement::derivative() const {
    FunctionFieldElement r(curve_);
    const Field& f = curve_->field;
    RationalFunction zk1(Polynomial::monomial(FieldElement::one(f), curve_->k - 1));
    for (const auto& [key, coeff] : terms_) {
        // (s y^b)' = (s' + s z^{k-1} sum_j b_j / (delta_j + z^k)) y^b
        RationalFunction logpart = RationalFunction::zero(f);
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            RationalFunction inv_branch(
                Polynomial::constant(FieldElement::from_int(f, key[i])),
                curve_->branch_polynomial(static_cast<std::uint32_t>(i + 3)));
            logpart = logpart + inv_branch;
        }
        RationalFunction d = coeff.derivative() + coeff * zk1 * logpart;
        r.add_term(key, d);
    }
    return r;
}

FunctionFieldElement FunctionFieldElement::pth_root() const {
    FunctionFieldElement r(curve_);
    const std::uint32_t k = curve_->k;
    const std::uint32_t p = curve_->field->p;
    for (const auto& [key, coeff] : terms_) {
        Key root_key(key.size());
        RationalFunction adjusted = coeff;
        for (std::size_t i = 0; i < key.size(); ++i) {
            std::uint32_t b = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(curve_->p_inv_mod_k) * key[i] % k);
            root_key[i] = b;
            std::uint32_t carries = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(p) * b / k);
            if (carries)
                adjusted = adjusted /
                           curve_->relation_value(static_cast<std::uint32_t>(i + 3)).pow(carries);
        }
        r.add_term(root_key, adjusted.pth_root());
    }
    return r;
}

FunctionFieldElement FunctionFieldElement::inverse_single_term() const {
    if (terms_.size() != 1) fail(errc::out_of_range, "inverse of a non-single-term element");
    const auto& [key, coeff] = *terms_.begin();
    if (coeff.is_zero()) fail(errc::division_by_zero, "inverse of zero");
    FunctionFieldElement r = from_rational(curve_, coeff.inverse());
    const std::uint32_t k = curve_->k;
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] == 0) continue;
        Key gen_key(key.size(), 0);
        gen_key[i] = k - key[i];
        auto factor = term(curve_, gen_key,
                           curve_->relation_value(static_cast<std::uint32_t>(i + 3)).inverse());
        r = r * factor;
    }
    return r;
}

std::string FunctionFieldElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, coeff] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + coeff.to_string() + ")";
        for (std::size_t i = 0; i < key.size(); ++i)
            if (key[i]) s += "*y" + std::to_string(i + 3) + "^" + std::to_string(key[i]);
    }
    return s;
}

std::vector<FieldElement> moduli_transform(const std::vector<FieldElement>& lambdas,
                                           LambdaMove move) {
    std::vector<FieldElement> out;
    if (lambdas.empty()) return out;
    const Field& f = lambdas.front().field();
    const FieldElement one = FieldElement::one(f);
    if (move == LambdaMove::invert) {
        for (const auto& l : lambdas) {
            if (l.is_zero()) fail(errc::degenerate_transform, "lambda = 0 has no inverse");
            out.push_back(l.inverse());
        }
        return out;
    }
    const FieldElement& last = lambdas.back();
    FieldElement d0 = last - one;
    if (d0.is_zero()) fail(errc::degenerate_transform, "lambda_{n-2} = 1");
    out.push_back(last / d0);
    for (std::size_t i = 0; i + 1 < lambdas.size(); ++i) {
        FieldElement d = last - lambdas[i];
        if (d.is_zero()) fail(errc::degenerate_transform, "coincident lambda values");
        out.push_back(last / d);
    }
    return out;
}

} // namespace gfc
