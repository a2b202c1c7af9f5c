#pragma once

#include <map>
#include <optional>

#include "twinkit/building.hpp"

namespace twinkit {

/// Two copies of W with delta(x, y) = x^-1 y on each half and delta*(v, w) = v^-1 w across.
/// Infinite W is viewed through the ball of radius `cap` around the identity.
class ThinTwinBuilding final : public TwinBuildingModel {
public:
    explicit ThinTwinBuilding(CoxeterSystem sys, std::optional<int> cap = std::nullopt);

    const CoxeterSystem& type() const override { return sys_; }
    int chamber_count(Sign) const override { return static_cast<int>(chambers_.size()); }
    CoxeterElement distance(Sign, int x, int y) const override;
    CoxeterElement codistance(const Chamber& x, const Chamber& y) const override;
    std::string chamber_label(const Chamber& c) const override;
    std::optional<int> length_cap() const override { return cap_; }
    std::string name() const override;

    CoxeterElement delta(const CoxeterElement& x, const CoxeterElement& y) const;
    CoxeterElement codelta(const CoxeterElement& x, const CoxeterElement& y) const { return delta(x, y); }

    const CoxeterElement& element(int index) const { return chambers_.at(static_cast<std::size_t>(index)); }
    std::optional<int> index_of(const CoxeterElement& w) const;

private:
    CoxeterSystem sys_;
    std::optional<int> cap_;
    std::vector<CoxeterElement> chambers_;
    std::map<CoxeterElement, int> index_;
};

} // namespace twinkit
