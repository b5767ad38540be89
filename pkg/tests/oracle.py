"""Independent brute-force reference for the recommendation probabilities.

Deliberately shares no code with the engine: observation counts come from
direct loops over example interaction sets, and the reaction distribution is
recomputed from first principles (superset counting, per-state export/undo
ratios, proportional scaling when the raw mass exceeds one).
"""

from __future__ import annotations


def observations(example_sets: list[frozenset], state: frozenset) -> int:
    count = 0
    for interactions in example_sets:
        if state.issubset(interactions):
            count += 1
    return count


def reaction_distribution(
    example_sets: list[frozenset],
    state: frozenset,
    all_interactions: list,
    export_count: int = 0,
    undo_count: int = 0,
) -> dict:
    total = observations(example_sets, state)
    assert total > 0, "oracle queried on an unobserved state"
    accepts = {}
    for interaction in all_interactions:
        if interaction in state:
            continue
        target = observations(example_sets, state | {interaction})
        if target > 0:
            accepts[interaction] = target / total
    export = export_count / total
    undo = undo_count / total
    mass = sum(accepts.values()) + export + undo
    if mass > 1.0:
        accepts = {i: p / mass for i, p in accepts.items()}
        export /= mass
        undo /= mass
    ignore = 1.0 - sum(accepts.values()) - export - undo
    return {"accepts": accepts, "export": export, "undo": undo, "ignore": ignore}
