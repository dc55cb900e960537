#include "stableset/solution_family.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "stableset/errors.hpp"

namespace stableset {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

void require_disjoint_nonempty(std::size_t n, const std::vector<AltSet>& components) {
    AltSet seen(n);
    for (const auto& c : components) {
        if (c.universe() != n) throw Error("component universe does not match family");
        if (c.empty()) throw Error("product-form component must be non-empty");
        if (c.intersects(seen)) throw Error("product-form components must be disjoint");
        seen |= c;
    }
}

}  // namespace

std::string_view to_string(FamilyForm form) {
    switch (form) {
        case FamilyForm::Explicit: return "EXPLICIT";
        case FamilyForm::OnePerComponent: return "ONE_PER_COMPONENT";
        case FamilyForm::SubsetOfRepresentatives: return "SUBSET_OF_REPRESENTATIVES";
        case FamilyForm::UnionsOfComponents: return "UNIONS_OF_COMPONENTS";
    }
    return "EXPLICIT";
}

FamilyForm family_form_from_string(std::string_view name) {
    for (auto form : {FamilyForm::Explicit, FamilyForm::OnePerComponent,
                      FamilyForm::SubsetOfRepresentatives, FamilyForm::UnionsOfComponents}) {
        if (to_string(form) == name) return form;
    }
    throw Error("unknown family form '" + std::string(name) + "'");
}

SolutionFamily::SolutionFamily(FamilyForm form, std::size_t n, std::vector<AltSet> parts)
    : form_(form), n_(n), parts_(std::move(parts)) {}

SolutionFamily SolutionFamily::explicit_family(std::size_t n, std::vector<AltSet> members) {
    for (const auto& m : members) {
        if (m.universe() != n) throw Error("member universe does not match family");
        if (m.empty()) throw EmptySolution();
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return SolutionFamily(FamilyForm::Explicit, n, std::move(members));
}

SolutionFamily SolutionFamily::one_per_component(std::size_t n, std::vector<AltSet> components) {
    require_disjoint_nonempty(n, components);
    return SolutionFamily(FamilyForm::OnePerComponent, n, std::move(components));
}

SolutionFamily SolutionFamily::subset_of_representatives(std::size_t n,
                                                         std::vector<AltSet> components) {
    require_disjoint_nonempty(n, components);
    return SolutionFamily(FamilyForm::SubsetOfRepresentatives, n, std::move(components));
}

SolutionFamily SolutionFamily::unions_of_components(std::size_t n, std::vector<AltSet> components) {
    require_disjoint_nonempty(n, components);
    return SolutionFamily(FamilyForm::UnionsOfComponents, n, std::move(components));
}

std::uint64_t SolutionFamily::count() const {
    switch (form_) {
        case FamilyForm::Explicit:
            return parts_.size();
        case FamilyForm::OnePerComponent: {
            if (parts_.empty()) return 0;
            std::uint64_t c = 1;
            for (const auto& p : parts_) c = saturating_mul(c, p.count());
            return c;
        }
        case FamilyForm::SubsetOfRepresentatives: {
            std::uint64_t c = 1;
            for (const auto& p : parts_) c = saturating_mul(c, p.count() + 1);
            return c == kSaturated ? c : c - 1;
        }
        case FamilyForm::UnionsOfComponents: {
            if (parts_.size() >= 64) return kSaturated;
            return (std::uint64_t{1} << parts_.size()) - 1;
        }
    }
    return 0;
}

bool SolutionFamily::contains(const AltSet& v) const {
    if (v.universe() != n_ || v.empty()) return false;
    switch (form_) {
        case FamilyForm::Explicit:
            return std::binary_search(parts_.begin(), parts_.end(), v);
        case FamilyForm::OnePerComponent:
        case FamilyForm::SubsetOfRepresentatives: {
            AltSet covered(n_);
            for (const auto& p : parts_) {
                const std::size_t hit = (v & p).count();
                if (hit > 1) return false;
                if (hit == 0 && form_ == FamilyForm::OnePerComponent) return false;
                covered |= p;
            }
            return v.is_subset_of(covered);
        }
        case FamilyForm::UnionsOfComponents: {
            AltSet covered(n_);
            for (const auto& p : parts_) {
                if (p.intersects(v)) {
                    if (!p.is_subset_of(v)) return false;
                    covered |= p;
                }
            }
            return covered == v;
        }
    }
    return false;
}

void SolutionFamily::for_each(const std::function<bool(const AltSet&)>& f) const {
    if (form_ == FamilyForm::Explicit) {
        for (const auto& m : parts_) {
            if (!f(m)) return;
        }
        return;
    }
    if (parts_.empty()) return;

    // Odometer over per-component choices. choice[i] indexes into the
    // options of component i; for optional forms option 0 means "none".
    const bool optional = form_ != FamilyForm::OnePerComponent;
    std::vector<std::vector<AltSet>> options(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (optional) options[i].emplace_back(n_);
        if (form_ == FamilyForm::UnionsOfComponents) {
            options[i].push_back(parts_[i]);
        } else {
            parts_[i].for_each([&](AltId x) { options[i].push_back(AltSet::single(n_, x)); });
        }
    }
    std::vector<std::size_t> choice(parts_.size(), 0);
    while (true) {
        AltSet member(n_);
        for (std::size_t i = 0; i < parts_.size(); ++i) member |= options[i][choice[i]];
        if (!member.empty() && !f(member)) return;

        std::size_t i = parts_.size();
        while (i > 0) {
            --i;
            if (++choice[i] < options[i].size()) break;
            choice[i] = 0;
            if (i == 0) return;
        }
    }
}

std::vector<AltSet> SolutionFamily::members(std::uint64_t limit) const {
    const std::uint64_t total = count();
    if (total > limit) {
        throw LimitExceeded("family materialization", static_cast<std::size_t>(total),
                            static_cast<std::size_t>(limit));
    }
    std::vector<AltSet> out;
    out.reserve(static_cast<std::size_t>(total));
    for_each([&](const AltSet& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<AltSet> SolutionFamily::sorted_members(std::uint64_t limit) const {
    auto out = members(limit);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stableset
