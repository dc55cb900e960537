#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "stableset/alt_set.hpp"

namespace stableset {

enum class FamilyForm {
    /// Members listed one by one.
    Explicit,
    /// Exactly one alternative from every component.
    OnePerComponent,
    /// At most one alternative from every component, at least one overall.
    SubsetOfRepresentatives,
    /// Non-empty unions of whole components.
    UnionsOfComponents,
};

std::string_view to_string(FamilyForm form);
FamilyForm family_form_from_string(std::string_view name);

/// A family of non-empty alternative sets, kept in product form when a
/// characterization allows it. Iteration visits members in lexicographic
/// order of the per-component choices (component 0 varies slowest, and
/// "no choice" sorts before any alternative).
class SolutionFamily {
public:
    SolutionFamily() = default;

    static SolutionFamily explicit_family(std::size_t n, std::vector<AltSet> members);
    static SolutionFamily one_per_component(std::size_t n, std::vector<AltSet> components);
    static SolutionFamily subset_of_representatives(std::size_t n, std::vector<AltSet> components);
    static SolutionFamily unions_of_components(std::size_t n, std::vector<AltSet> components);

    FamilyForm form() const { return form_; }
    std::size_t universe() const { return n_; }
    /// Components for product forms, members for the explicit form.
    const std::vector<AltSet>& parts() const { return parts_; }

    /// Number of members; saturates at UINT64_MAX.
    std::uint64_t count() const;
    bool empty() const { return count() == 0; }
    bool contains(const AltSet& v) const;

    /// Calls f on every member; stops early when f returns false.
    void for_each(const std::function<bool(const AltSet&)>& f) const;

    /// All members in iteration order. Throws LimitExceeded above `limit`.
    std::vector<AltSet> members(std::uint64_t limit = 1u << 20) const;
    /// All members in ascending binary-mask order.
    std::vector<AltSet> sorted_members(std::uint64_t limit = 1u << 20) const;

    bool operator==(const SolutionFamily& other) const = default;

private:
    SolutionFamily(FamilyForm form, std::size_t n, std::vector<AltSet> parts);

    FamilyForm form_ = FamilyForm::Explicit;
    std::size_t n_ = 0;
    std::vector<AltSet> parts_;
};

}  // namespace stableset
