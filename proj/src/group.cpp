#include "reesyl/group.hpp"

#include <sstream>
#include <stdexcept>

namespace reesyl {

GroupElem ReeSylow::mul(const GroupElem& x, const GroupElem& y) const {
    const Fq& F = *F_;
    const Fe s1_3th = F.pow_3theta(y.t1);
    GroupElem r;
    r.t1 = F.add(x.t1, y.t1);
    // t3 + s3 - t1 s1^(3h)
    r.t3 = F.sub(F.add(x.t3, y.t3), F.mul(x.t1, s1_3th));
    // t4 + s4 + t1 s1^(3h+1) - t1^2 s1^(3h) - t3 s1
    Fe v = F.add(x.t4, y.t4);
    v = F.add(v, F.mul(x.t1, F.mul(s1_3th, y.t1)));
    v = F.sub(v, F.mul(F.mul(x.t1, x.t1), s1_3th));
    v = F.sub(v, F.mul(x.t3, y.t1));
    r.t4 = v;
    return r;
}

GroupElem ReeSylow::inv(const GroupElem& x) const {
    const Fq& F = *F_;
    const Fe t1_3th = F.pow_3theta(x.t1);
    GroupElem r;
    r.t1 = F.neg(x.t1);
    r.t3 = F.neg(F.add(x.t3, F.mul(t1_3th, x.t1)));
    // -t4 + t1^(3h+2) - t1 t3
    r.t4 = F.sub(F.sub(F.mul(t1_3th, F.mul(x.t1, x.t1)), x.t4), F.mul(x.t1, x.t3));
    return r;
}

GroupElem ReeSylow::commutator(const GroupElem& x, const GroupElem& y) const {
    const Fq& F = *F_;
    const Fe g = F.pow_3theta(x.t1); // t1^(3h)
    const Fe h = F.pow_3theta(y.t1); // s1^(3h)
    GroupElem r;
    r.t1 = 0;
    r.t3 = F.sub(F.mul(g, y.t1), F.mul(x.t1, h));
    // (t1 s1^(3h+1) - t1^(3h+1) s1) + (t1^(3h) s1^2 - t1^2 s1^(3h)) + (t1 s3 - t3 s1)
    Fe v = F.sub(F.mul(x.t1, F.mul(h, y.t1)), F.mul(g, F.mul(x.t1, y.t1)));
    v = F.add(v, F.sub(F.mul(g, F.mul(y.t1, y.t1)), F.mul(F.mul(x.t1, x.t1), h)));
    v = F.add(v, F.sub(F.mul(x.t1, y.t3), F.mul(x.t3, y.t1)));
    r.t4 = v;
    return r;
}

GroupElem ReeSylow::conjugate(const GroupElem& x, const GroupElem& by) const {
    const Fq& F = *F_;
    const Fe g = F.pow_3theta(x.t1);  // t1^(3h)
    const Fe h = F.pow_3theta(by.t1); // s1^(3h)
    GroupElem r;
    r.t1 = x.t1;
    r.t3 = F.add(x.t3, F.sub(F.mul(x.t1, h), F.mul(g, by.t1)));
    // t4 + (t1^2 s1^(3h) + t1^(3h) s1^2) + t1^(3h+1) s1 + (t3 s1 - t1 s3)
    Fe v = F.add(x.t4, F.add(F.mul(F.mul(x.t1, x.t1), h), F.mul(g, F.mul(by.t1, by.t1))));
    v = F.add(v, F.mul(F.mul(g, x.t1), by.t1));
    v = F.add(v, F.sub(F.mul(x.t3, by.t1), F.mul(x.t1, by.t3)));
    r.t4 = v;
    return r;
}

GroupElem ReeSylow::pow(GroupElem x, std::uint64_t n) const {
    GroupElem r = identity();
    while (n) {
        if (n & 1) r = mul(r, x);
        x = mul(x, x);
        n >>= 1;
    }
    return r;
}

std::uint64_t ReeSylow::order_of(const GroupElem& x) const {
    GroupElem acc = x;
    std::uint64_t k = 1;
    const std::uint64_t cap = order();
    while (acc != identity()) {
        acc = mul(acc, x);
        if (++k > cap) throw std::logic_error("order_of did not terminate");
    }
    return k;
}

std::vector<GroupElem> ReeSylow::enumerate() const {
    const std::uint64_t q = F_->q();
    if (q > 243) throw std::length_error("group enumeration capped at q <= 243");
    std::vector<GroupElem> out;
    out.reserve(q * q * q);
    for (Fe t1 = 0; t1 < q; ++t1)
        for (Fe t3 = 0; t3 < q; ++t3)
            for (Fe t4 = 0; t4 < q; ++t4) out.push_back({t1, t3, t4});
    return out;
}

std::uint64_t ReeSylow::elem_index(const GroupElem& x) const {
    const std::uint64_t q = F_->q();
    return (static_cast<std::uint64_t>(x.t1) * q + x.t3) * q + x.t4;
}

GroupElem ReeSylow::elem_at(std::uint64_t idx) const {
    const std::uint64_t q = F_->q();
    GroupElem x;
    x.t4 = static_cast<Fe>(idx % q);
    idx /= q;
    x.t3 = static_cast<Fe>(idx % q);
    x.t1 = static_cast<Fe>(idx / q);
    return x;
}

std::string ReeSylow::to_string(const GroupElem& x) const {
    return "Y(" + F_->to_string(x.t1) + ";" + F_->to_string(x.t3) + ";" +
           F_->to_string(x.t4) + ")";
}

GroupElem ReeSylow::parse(const std::string& text) const {
    if (text.size() < 4 || text.substr(0, 2) != "Y(" || text.back() != ')')
        throw std::invalid_argument("group element must look like Y(<t1>;<t3>;<t4>)");
    std::string inner = text.substr(2, text.size() - 3);
    std::istringstream is(inner);
    std::string part;
    std::vector<Fe> coords;
    while (std::getline(is, part, ';')) coords.push_back(F_->parse(part));
    if (coords.size() != 3)
        throw std::invalid_argument("group element needs three coordinates");
    return {coords[0], coords[1], coords[2]};
}

} // namespace reesyl
