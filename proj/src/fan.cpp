#include "torloc/fan.hpp"

#include <algorithm>
#include <set>

namespace torloc {

Fan Fan::from_maximal_cones(std::size_t ambient, std::vector<Cone> maximal) {
    Fan fan;
    fan.ambient_ = ambient;
    fan.maximal_ = std::move(maximal);
    require(!fan.maximal_.empty(), "fan needs at least one maximal cone");
    for (const Cone& c : fan.maximal_)
        require(c.ambient() == ambient, "fan: cone ambient rank mismatch");

    for (std::size_t i = 0; i < fan.maximal_.size(); ++i)
        for (std::size_t j = i + 1; j < fan.maximal_.size(); ++j) {
            const Cone& a = fan.maximal_[i];
            const Cone& b = fan.maximal_[j];
            if (a == b) throw NotAFanError("duplicate maximal cone");
            if (a.contains_cone(b) || b.contains_cone(a))
                throw NotAFanError("maximal cone contained in another");
            std::vector<Vec> rays = intersect_cones(a, b);
            for (const Vec& r : rays) {
                bool ga = std::binary_search(a.generators().begin(), a.generators().end(), r);
                bool gb = std::binary_search(b.generators().begin(), b.generators().end(), r);
                if (!ga || !gb)
                    throw NotAFanError("cones " + a.to_string() + " and " + b.to_string() +
                                       " do not intersect in a common face");
            }
            Cone shared = Cone::from_generators(ambient, rays);
            if (!a.has_face(shared) || !b.has_face(shared))
                throw NotAFanError("intersection of " + a.to_string() + " and " + b.to_string() +
                                   " is not a face of both");
        }

    // face closure
    std::set<Cone> all;
    for (const Cone& c : fan.maximal_)
        for (const Cone& f : c.faces()) all.insert(f);
    fan.cones_.assign(all.begin(), all.end());
    std::sort(fan.cones_.begin(), fan.cones_.end(), [](const Cone& a, const Cone& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a < b;
    });

    fan.containing_.resize(fan.cones_.size());
    for (std::size_t ci = 0; ci < fan.cones_.size(); ++ci)
        for (std::size_t mi = 0; mi < fan.maximal_.size(); ++mi)
            if (fan.maximal_[mi].contains_cone(fan.cones_[ci]))
                fan.containing_[ci].push_back(mi);

    // completeness: pure of top dimension, every ridge in exactly two maximal
    // cones, and the ridge graph connected
    if (ambient == 0) {
        fan.complete_ = true;
        return fan;
    }
    bool pure = true;
    for (const Cone& c : fan.maximal_)
        if (c.dim() != ambient) pure = false;
    bool ridges_ok = pure;
    std::vector<std::vector<std::size_t>> adjacency(fan.maximal_.size());
    if (pure) {
        for (std::size_t ci = 0; ci < fan.cones_.size(); ++ci) {
            if (fan.cones_[ci].dim() != ambient - 1) continue;
            const auto& owners = fan.containing_[ci];
            if (owners.size() != 2) {
                ridges_ok = false;
                continue;
            }
            adjacency[owners[0]].push_back(owners[1]);
            adjacency[owners[1]].push_back(owners[0]);
        }
    }
    bool connected = false;
    if (ridges_ok) {
        std::vector<bool> seen(fan.maximal_.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t visited = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : adjacency[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++visited;
                    stack.push_back(w);
                }
        }
        connected = visited == fan.maximal_.size();
    }
    fan.complete_ = pure && ridges_ok && connected;
    return fan;
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i].dim() == d) out.push_back(i);
    return out;
}

std::optional<std::size_t> Fan::find_cone(const Cone& c) const {
    for (std::size_t i = 0; i < cones_.size(); ++i)
        if (cones_[i] == c) return i;
    return std::nullopt;
}

Cone Fan::common_face(std::size_t i, std::size_t j) const {
    const std::vector<Vec>& ga = maximal_[i].generators();
    const std::vector<Vec>& gb = maximal_[j].generators();
    std::vector<Vec> shared;
    std::set_intersection(ga.begin(), ga.end(), gb.begin(), gb.end(), std::back_inserter(shared));
    return Cone::from_generators(ambient_, shared);
}

std::vector<Vec> Fan::rays() const {
    std::vector<Vec> out;
    for (std::size_t i : cones_of_dim(1)) out.push_back(cones_[i].generators()[0]);
    return out;
}

bool Fan::all_maximal_unimodular() const {
    for (const Cone& c : maximal_)
        if (!c.is_unimodular()) return false;
    return true;
}

StarFan star_quotient_fan(const Fan& fan, const Cone& tau, std::uint64_t section_twist) {
    std::optional<std::size_t> ti = fan.find_cone(tau);
    require(ti.has_value(), "star_quotient_fan: tau is not a cone of the fan");

    StarFan out;
    out.quotient =
        quotient_lattice_allow_trivial(fan.ambient(), tau.generators(), section_twist);
    const std::size_t m = out.quotient.quotient_rank();

    std::vector<Cone> quotient_cones;
    for (std::size_t mi : fan.maximal_containing(*ti)) {
        std::vector<Vec> projected;
        for (const Vec& g : fan.maximal_cones()[mi].generators()) {
            Vec p = out.quotient.project(g);
            if (!is_zero_vec(p)) projected.push_back(primitive_of(p));
        }
        quotient_cones.push_back(Cone::from_generators(m, projected));
        out.source_maximal.push_back(mi);
    }
    out.fan = make_fan(m, std::move(quotient_cones));
    return out;
}

}  // namespace torloc
