#include "reesyl/classes.hpp"

#include <algorithm>
#include <stdexcept>

namespace reesyl {

Fe Classes::sigma_t(Fe t, Fe s) const {
    if (t == 0) throw std::domain_error("sigma_t requires t != 0");
    const Fq& F = *F_;
    return F.sub(F.mul(t, F.pow_3theta(s)), F.mul(F.pow_3theta(t), s));
}

std::vector<Fe> Classes::sigma_image(Fe t) const {
    const std::uint64_t q = F_->q();
    std::vector<char> seen(q, 0);
    std::vector<Fe> image;
    for (Fe s = 0; s < q; ++s) {
        const Fe v = sigma_t(t, s);
        if (!seen[v]) {
            seen[v] = 1;
            image.push_back(v);
        }
    }
    std::sort(image.begin(), image.end());
    return image;
}

std::vector<Fe> Classes::transversal(Fe t) const {
    const Fq& F = *F_;
    const std::uint64_t q = F.q();
    const std::vector<Fe> image = sigma_image(t);
    std::vector<char> in_image(q, 0);
    for (Fe v : image) in_image[v] = 1;

    std::vector<char> covered(q, 0);
    std::vector<Fe> reps;
    for (Fe s = 0; s < q && reps.size() < q / image.size(); ++s) {
        if (covered[s]) continue;
        reps.push_back(s);
        for (Fe v : image) covered[F.add(s, v)] = 1;
    }
    return reps;
}

ClassRecord Classes::class_of(const GroupElem& x) const {
    const Fq& F = *F_;
    const std::uint64_t q = F.q();
    ClassRecord rec;
    if (x.t1 == 0 && x.t3 == 0) {
        rec.members = {x}; // identity and the central c(t4*) are singletons
    } else if (x.t1 == 0) {
        rec.members.reserve(q);
        for (Fe s4 = 0; s4 < q; ++s4) rec.members.push_back({0, x.t3, s4});
    } else {
        const std::vector<Fe> image = sigma_image(x.t1);
        rec.members.reserve(image.size() * q);
        for (Fe w : image) {
            const Fe t3 = F.add(x.t3, w);
            for (Fe s4 = 0; s4 < q; ++s4) rec.members.push_back({x.t1, t3, s4});
        }
        std::sort(rec.members.begin(), rec.members.end(),
                  [](const GroupElem& a, const GroupElem& b) { return lex_less(a, b); });
    }
    rec.representative = rec.members.front();
    return rec;
}

std::vector<ClassRecord> Classes::all_classes_bruteforce() const {
    const std::uint64_t q = F_->q();
    if (q > 27) throw std::length_error("brute-force class scan capped at q <= 27");
    const ReeSylow& U = *U_;
    const std::uint64_t n = U.order();

    std::vector<char> visited(n, 0);
    std::vector<ClassRecord> classes;
    for (std::uint64_t seed = 0; seed < n; ++seed) {
        if (visited[seed]) continue;
        const GroupElem x = U.elem_at(seed);
        std::vector<char> in_class(n, 0);
        ClassRecord rec;
        for (std::uint64_t gi = 0; gi < n; ++gi) {
            const GroupElem y = U.conjugate(x, U.elem_at(gi));
            const std::uint64_t yi = U.elem_index(y);
            if (!in_class[yi]) {
                in_class[yi] = 1;
                visited[yi] = 1;
                rec.members.push_back(y);
            }
        }
        std::sort(rec.members.begin(), rec.members.end(),
                  [](const GroupElem& a, const GroupElem& b) { return lex_less(a, b); });
        rec.representative = rec.members.front();
        classes.push_back(std::move(rec));
    }
    std::sort(classes.begin(), classes.end(), [&U](const ClassRecord& a, const ClassRecord& b) {
        return U.elem_index(a.representative) < U.elem_index(b.representative);
    });
    return classes;
}

SuperclassPartition Classes::superclass_partition() const {
    const Fq& F = *F_;
    const std::uint64_t q = F.q();
    if (q > 243) throw std::length_error("superclass partition capped at q <= 243");
    const ReeSylow& U = *U_;
    const std::uint64_t n = U.order();

    SuperclassPartition P;
    P.parts.push_back({{SuperKind::C0, 0}, U.identity(), {U.identity()}});
    for (Fe t1 = 1; t1 < q; ++t1) {
        SuperclassPart part;
        part.label = {SuperKind::C1, t1};
        for (Fe t3 : transversal(t1)) {
            ClassRecord cls = class_of({t1, t3, 0});
            part.members.insert(part.members.end(), cls.members.begin(), cls.members.end());
        }
        std::sort(part.members.begin(), part.members.end(),
                  [](const GroupElem& a, const GroupElem& b) { return lex_less(a, b); });
        part.representative = part.members.front();
        P.parts.push_back(std::move(part));
    }
    for (Fe t3 = 1; t3 < q; ++t3) {
        SuperclassPart part;
        part.label = {SuperKind::C3, t3};
        part.members = class_of(ReeSylow::b(t3)).members;
        part.representative = part.members.front();
        P.parts.push_back(std::move(part));
    }
    for (Fe t4 = 1; t4 < q; ++t4)
        P.parts.push_back({{SuperKind::C4, t4}, ReeSylow::c(t4), {ReeSylow::c(t4)}});

    P.part_id.assign(n, -1);
    for (std::size_t pi = 0; pi < P.parts.size(); ++pi)
        for (const GroupElem& g : P.parts[pi].members) {
            const std::uint64_t gi = U.elem_index(g);
            if (P.part_id[gi] != -1)
                throw std::logic_error("superclass parts overlap at " + U.to_string(g));
            P.part_id[gi] = static_cast<std::int32_t>(pi);
        }
    for (std::uint64_t gi = 0; gi < n; ++gi)
        if (P.part_id[gi] == -1)
            throw std::logic_error("superclass parts do not cover the group");
    return P;
}

std::string Classes::label_to_string(const SuperclassLabel& l) const {
    switch (l.kind) {
        case SuperKind::C0: return "C0";
        case SuperKind::C1: return "C1(" + F_->to_string(l.t) + ")";
        case SuperKind::C3: return "C3(" + F_->to_string(l.t) + ")";
        case SuperKind::C4: return "C4(" + F_->to_string(l.t) + ")";
    }
    return "?";
}

} // namespace reesyl
