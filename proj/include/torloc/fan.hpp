#pragma once

#include <memory>

#include "torloc/cone.hpp"

namespace torloc {

// Fan given by maximal cones.  Validation checks that any two listed cones
// intersect in a common face; the face closure and completeness flag are
// computed eagerly so a constructed fan is immutable and safe to share.
class Fan {
public:
    // Throws NotAFanError when the common-face condition fails.
    static Fan from_maximal_cones(std::size_t ambient, std::vector<Cone> maximal);

    std::size_t ambient() const { return ambient_; }
    const std::vector<Cone>& maximal_cones() const { return maximal_; }
    const std::vector<Cone>& cones() const { return cones_; }  // full face closure, canonical order
    bool is_complete() const { return complete_; }

    // indices into cones() with dim == d / codim == k, in canonical order
    std::vector<std::size_t> cones_of_dim(std::size_t d) const;
    std::vector<std::size_t> cones_of_codim(std::size_t k) const {
        return cones_of_dim(ambient_ - k);
    }

    // maximal-cone indices whose cone contains the given face
    const std::vector<std::size_t>& maximal_containing(std::size_t cone_index) const {
        return containing_[cone_index];
    }

    // index into cones() of a cone equal to c; nullopt if absent
    std::optional<std::size_t> find_cone(const Cone& c) const;

    // common face of two maximal cones (cone generated by the shared rays)
    Cone common_face(std::size_t i, std::size_t j) const;

    // primitive generators of the rays, canonical order
    std::vector<Vec> rays() const;

    bool all_maximal_unimodular() const;

private:
    std::size_t ambient_ = 0;
    std::vector<Cone> maximal_;
    std::vector<Cone> cones_;
    std::vector<std::vector<std::size_t>> containing_;
    bool complete_ = false;
};

using FanPtr = std::shared_ptr<const Fan>;

inline FanPtr make_fan(std::size_t ambient, std::vector<Cone> maximal) {
    return std::make_shared<Fan>(Fan::from_maximal_cones(ambient, std::move(maximal)));
}

// Star/quotient fan: the projections to N / (N ^ span tau) of the cones of
// `fan` containing tau, together with the quotient map used.  tau must be a
// cone of the fan.  Complete fans have complete star fans.
struct StarFan {
    FanPtr fan;                            // the quotient fan
    QuotientMap quotient;
    std::vector<std::size_t> source_maximal;  // index of the source maximal cone per quotient maximal cone
};

StarFan star_quotient_fan(const Fan& fan, const Cone& tau, std::uint64_t section_twist = 0);

}  // namespace torloc
