"""Combinatorial enumeration of singular-fiber configurations.

Every relatively minimal elliptic fibration arising from a degree-1 du Val
del Pezzo surface has total Euler number 12, so the possible configurations
for a given constant j-value are the multisets of compatible fiber types
whose Euler numbers sum to 12.  For fibrations with an In* fiber and no In
fiber the additional constraint is that the total du Val rank stays <= 8
(the Picard rank of the surface is at least 1).

Enumeration never decides realizability: configurations that the literature
excludes are annotated, not filtered.
"""

from __future__ import annotations

from .kodaira import FiberConfiguration, KodairaType, fiber_properties

# Fiber types compatible with each constant j-value (pole-free types only).
J_CLASS_TYPES = {
    "zero": ("II*", "IV*", "I0*", "IV", "II"),
    "value1728": ("III*", "I0*", "III"),
    "generic": ("I0*",),
}


def _types_for(tags: tuple[str, ...]) -> list[KodairaType]:
    types: list[KodairaType] = []
    for tag in tags:
        if tag == "In*":
            # chi(In*) = 6 + n <= 12 bounds the parameter
            types.extend(KodairaType("In*", n) for n in range(1, 7))
        elif tag == "In":
            types.extend(KodairaType("In", n) for n in range(1, 13))
        else:
            types.append(KodairaType(tag))
    return types


def _multisets(types: list[KodairaType], chi_target: int, rank_cap: int):
    """All count vectors over `types` with total chi = chi_target and total
    du Val rank <= rank_cap."""
    chis = [fiber_properties(t).chi for t in types]
    ranks = [fiber_properties(t).rank for t in types]
    found: list[dict[KodairaType, int]] = []

    def descend(index: int, chi_left: int, rank_left: int, picked: dict):
        if chi_left == 0:
            found.append(dict(picked))
            return
        if index == len(types):
            return
        chi, rank = chis[index], ranks[index]
        max_count = chi_left // chi
        if rank > 0:
            max_count = min(max_count, rank_left // rank)
        for count in range(max_count, -1, -1):
            if count:
                picked[types[index]] = count
            descend(index + 1, chi_left - count * chi, rank_left - count * rank, picked)
            picked.pop(types[index], None)

    descend(0, chi_target, rank_cap, {})
    return found


def _sorted_configurations(counts_list) -> list[FiberConfiguration]:
    configs = [FiberConfiguration.from_counts(c) for c in counts_list]
    configs.sort(key=lambda fc: tuple(
        (t.sort_key(), count) for t, count in fc.entries
    ))
    return configs


def enumerate_isotrivial(j_class: str, rank_cap: int = 8) -> list[FiberConfiguration]:
    """All fiber configurations of an isotrivial fibration with the given
    constant j-class ("zero", "value1728" or "generic")."""
    if j_class not in J_CLASS_TYPES:
        raise ValueError(
            f"j_class must be one of {sorted(J_CLASS_TYPES)}, got {j_class!r}"
        )
    if rank_cap > 8:
        raise ValueError("rank_cap cannot exceed 8 for degree-1 surfaces")
    types = _types_for(J_CLASS_TYPES[j_class])
    return _sorted_configurations(_multisets(types, 12, rank_cap))


def enumerate_instar_without_in(rank_cap: int = 8) -> list[FiberConfiguration]:
    """Configurations containing some In* (n >= 1) but no In, with total
    chi = 12 and total du Val rank <= rank_cap."""
    tags = ("II", "III", "IV", "I0*", "In*", "IV*", "III*", "II*")
    types = _types_for(tags)
    counts_list = [
        counts
        for counts in _multisets(types, 12, rank_cap)
        if any(t.tag == "In*" for t in counts)
    ]
    return _sorted_configurations(counts_list)


def miranda_exclusions() -> tuple[FiberConfiguration, ...]:
    """Degenerate In*-configurations that pass the chi and rank counts but are
    not realized by any rational elliptic surface (curated list)."""
    mk = FiberConfiguration.from_counts
    return (
        mk({KodairaType("In*", 2): 1, KodairaType("IV"): 1}),
        mk({KodairaType("In*", 3): 1, KodairaType("III"): 1}),
        mk({KodairaType("In*", 4): 1, KodairaType("II"): 1}),
    )


def is_miranda_excluded(config: FiberConfiguration) -> bool:
    key = config.multiset()
    return any(key == excluded.multiset() for excluded in miranda_exclusions())
