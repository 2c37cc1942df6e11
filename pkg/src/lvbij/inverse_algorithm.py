"""Inverse of the bijection, built clump by clump.

A weakly decreasing weight splits into clumps (maximal runs with adjacent
gaps at most 1).  From each clump a maximal-length subsequence with gaps at
least 2 becomes the first column of a diagram; the rest of the clump recurses
with the opposite anchoring, and its rows attach to the unique first-column
entry within distance 1 on the prescribed side.
"""

from .core import OmegaPair, _int_tuple
from .diagrams import WeightDiagram, concat, e_inverse, kappa, shape_class
from .seq_algorithm import _check_eps

__all__ = [
    "InternalConsistencyError",
    "clumps",
    "majuscule_extract",
    "alg_B",
    "gamma_inverse",
]


class InternalConsistencyError(RuntimeError):
    """An invariant the construction relies on failed to hold."""


def _check_dominant(lam) -> tuple[int, ...]:
    lam = _int_tuple(lam)
    if not lam:
        raise ValueError("the input weight must be non-empty")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"the input weight must be weakly decreasing, got {list(lam)}")
    return lam


def clumps(lam) -> tuple[tuple[int, ...], ...]:
    """Split a weakly decreasing sequence at every gap of 2 or more."""
    lam = _check_dominant(lam)
    out = []
    start = 0
    for i in range(1, len(lam)):
        if lam[i - 1] - lam[i] >= 2:
            out.append(lam[start:i])
            start = i
    out.append(lam[start:])
    return tuple(out)


def majuscule_extract(clump, eps: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Longest subsequence with gaps >= 2 anchored at the clump's first entry
    (eps = -1) or last entry (eps = +1), plus the sorted remainder.

    Greedy scanning from the anchor is maximal here because within a clump
    adjacent gaps are at most 1.  When equal values qualify, the occurrence
    closest to the anchor is taken; the remainder is re-sorted, so the choice
    only fixes determinism of the intermediate state.
    """
    _check_eps(eps)
    clump = _check_dominant(clump)
    taken = []
    if eps == -1:
        last = None
        for idx, value in enumerate(clump):
            if idx == 0:
                taken.append(idx)
                last = value
            elif value <= last - 2:
                taken.append(idx)
                last = value
    else:
        last = None
        for idx in reversed(range(len(clump))):
            value = clump[idx]
            if idx == len(clump) - 1:
                taken.append(idx)
                last = value
            elif value >= last + 2:
                taken.append(idx)
                last = value
        taken.reverse()
    taken_set = set(taken)
    extracted = tuple(clump[i] for i in taken)
    remainder = tuple(sorted((clump[i] for i in range(len(clump)) if i not in taken_set), reverse=True))
    return extracted, remainder


def alg_B(lam, eps: int = -1) -> WeightDiagram:
    """Build the right-hand diagram of the pair from a weakly decreasing weight."""
    _check_eps(eps)
    lam = _check_dominant(lam)
    pieces = []
    for clump in clumps(lam):
        first_col, remainder = majuscule_extract(clump, eps)
        rows = [[v] for v in first_col]
        if remainder:
            sub = alg_B(remainder, -eps)
            used = set()
            for sub_row in sub.rows:
                matches = [i for i, v in enumerate(first_col) if sub_row[0] - v in (0, eps)]
                if len(matches) != 1:
                    raise InternalConsistencyError(
                        f"row {list(sub_row)} has {len(matches)} attachment targets in {list(first_col)}"
                    )
                target = matches[0]
                if target in used:
                    raise InternalConsistencyError(
                        f"two rows attach to first-column entry {first_col[target]}"
                    )
                used.add(target)
                rows[target].extend(sub_row)
        pieces.append(WeightDiagram(rows))
    return concat(*pieces)


def gamma_inverse(lam) -> OmegaPair:
    """The inverse bijection: undo the column shift, then read off shape and row data."""
    lam = _check_dominant(lam)
    X = e_inverse(alg_B(lam, -1))
    return OmegaPair(shape_class(X), kappa(X))
