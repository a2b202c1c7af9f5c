#include "twinkit/thin_building.hpp"

#include "twinkit/errors.hpp"

namespace twinkit {

ThinTwinBuilding::ThinTwinBuilding(CoxeterSystem sys, std::optional<int> cap) : sys_(std::move(sys)), cap_(cap) {
    const auto info = sys_.parabolic_info(GeneratorSet::all(sys_.rank()));
    if (!cap) {
        if (!info.finite) throw NotSpherical("infinite Weyl group needs a length cap");
    } else if (*cap < 0) {
        throw RegionTooSmall("negative length cap");
    }
    // A cap at or beyond l(w_0) covers the whole group and certifies everything.
    if (cap && info.finite && *cap > info.longest->length()) cap_.reset();
    const int radius = cap ? *cap : info.longest->length();
    for (auto& level : sys_.enumerate_upto(radius))
        for (auto& w : level) {
            index_.emplace(w, static_cast<int>(chambers_.size()));
            chambers_.push_back(std::move(w));
        }
}

CoxeterElement ThinTwinBuilding::delta(const CoxeterElement& x, const CoxeterElement& y) const {
    return sys_.multiply(sys_.inverse(x), y);
}

CoxeterElement ThinTwinBuilding::distance(Sign, int x, int y) const { return delta(element(x), element(y)); }

CoxeterElement ThinTwinBuilding::codistance(const Chamber& x, const Chamber& y) const {
    if (x.sign == y.sign) throw BadGeometry("codistance needs chambers in opposite halves");
    return delta(element(x.index), element(y.index));
}

std::string ThinTwinBuilding::chamber_label(const Chamber& c) const {
    return std::string(sign_name(c.sign)) + to_string(element(c.index));
}

std::string ThinTwinBuilding::name() const {
    std::string n = "thin";
    if (cap_) n += " cap " + std::to_string(*cap_);
    return n;
}

std::optional<int> ThinTwinBuilding::index_of(const CoxeterElement& w) const {
    if (auto it = index_.find(w); it != index_.end()) return it->second;
    return std::nullopt;
}

} // namespace twinkit
