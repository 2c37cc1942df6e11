"""Weight-diagrams form of the forward map.

One call fills the first column of both output diagrams, splits the surviving
rows into branches (one per distinct first-column entry), adjusts each
branch's residual input to account for the other branches, recurses with the
opposite rounding mode, and splices the branch outputs back in.
"""

from dataclasses import dataclass

from .core import validate_omega_pair, _int_tuple
from .diagrams import DiagramPair, WeightDiagram, eta
from .seq_algorithm import (
    column_seq,
    inverse_permutation,
    ranking,
    _check_eps,
    _check_permutation,
    _check_rows,
)

__all__ = [
    "BranchPlan",
    "row_survival",
    "row_partition",
    "branch_plan",
    "alg_W",
    "gamma_via_diagrams",
]


def _check_weakly_decreasing(iota) -> tuple[int, ...]:
    iota = _int_tuple(iota)
    if any(iota[i] < iota[i + 1] for i in range(len(iota) - 1)):
        raise ValueError(f"iota must be weakly decreasing, got {list(iota)}")
    return iota


def row_survival(alpha, sigma, iota) -> tuple[tuple[int, int], ...]:
    """Branch and position of each row; position 0 marks a non-surviving row.

    Row i goes to branch x = number of distinct iota values among the first i
    entries; it survives iff its length exceeds 1, and its position counts the
    surviving rows with the same iota value so far.
    """
    alpha = _int_tuple(alpha)
    iota = _check_weakly_decreasing(iota)
    if len(alpha) != len(iota):
        raise ValueError("alpha and iota must have equal length")
    sigma = _check_permutation(sigma, len(alpha))
    inv = inverse_permutation(sigma)
    out = []
    branch = 0
    survivors_in_branch = 0
    for i, value in enumerate(iota, start=1):
        if i == 1 or value != iota[i - 2]:
            branch += 1
            survivors_in_branch = 0
        if alpha[inv[i - 1] - 1] > 1:
            survivors_in_branch += 1
            out.append((branch, survivors_in_branch))
        else:
            out.append((branch, 0))
    return tuple(out)


def row_partition(alpha, iota) -> tuple[tuple[int, int], ...]:
    """Like row_survival but counting every row, with no survival filtering."""
    alpha = _int_tuple(alpha)
    iota = _check_weakly_decreasing(iota)
    if len(alpha) != len(iota):
        raise ValueError("alpha and iota must have equal length")
    out = []
    branch = 0
    rows_in_branch = 0
    for i, value in enumerate(iota, start=1):
        if i == 1 or value != iota[i - 2]:
            branch += 1
            rows_in_branch = 0
        rows_in_branch += 1
        out.append((branch, rows_in_branch))
    return tuple(out)


@dataclass(frozen=True)
class BranchPlan:
    """Everything one recursion level decides before making its recursive calls."""

    sigma: tuple[int, ...]
    iota: tuple[int, ...]
    assignments: tuple[tuple[int, int], ...]  # row_survival output, per top-level row
    k: int  # number of branches, empty ones included
    survivor_rows: tuple[tuple[int, ...], ...]  # per branch: top-level rows, in position order
    sub_alpha: tuple[tuple[int, ...], ...]
    sub_nu: tuple[tuple[int, ...], ...]
    sub_nu_hat: tuple[tuple[int, ...], ...]  # sub_nu with the cross-branch correction
    total_counts: tuple[int, ...]  # per branch: count of all rows, surviving or not


def branch_plan(alpha, nu, eps: int = -1) -> BranchPlan:
    """Rank and fill the first column, then sort the surviving rows into branches."""
    _check_eps(eps)
    alpha, nu = _check_rows(alpha, nu)
    sigma = ranking(eps, alpha, nu)
    inv = inverse_permutation(sigma)
    iota = column_seq(eps, alpha, nu, sigma)
    assignments = row_survival(alpha, sigma, iota)
    k = len(set(iota))

    survivor_rows: list[list[int]] = [[] for _ in range(k)]
    total_counts = [0] * k
    seen = set()
    for i, (x, pos) in enumerate(assignments, start=1):
        total_counts[x - 1] += 1
        if pos > 0:
            if (x, pos) in seen:
                raise AssertionError(f"row assignment ({x}, {pos}) is not injective")
            seen.add((x, pos))
            survivor_rows[x - 1].append(i)

    sub_alpha = [
        tuple(alpha[inv[i - 1] - 1] - 1 for i in rows) for rows in survivor_rows
    ]
    sub_nu = [
        tuple(nu[inv[i - 1] - 1] - iota[i - 1] for i in rows) for rows in survivor_rows
    ]
    sub_nu_hat = []
    for x in range(k):
        corrected = []
        for a, v in zip(sub_alpha[x], sub_nu[x]):
            v -= sum(min(a, b) for xp in range(x) for b in sub_alpha[xp])
            v += sum(min(a, b) for xp in range(x + 1, k) for b in sub_alpha[xp])
            corrected.append(v)
        sub_nu_hat.append(tuple(corrected))

    return BranchPlan(
        sigma=sigma,
        iota=iota,
        assignments=assignments,
        k=k,
        survivor_rows=tuple(tuple(rows) for rows in survivor_rows),
        sub_alpha=tuple(sub_alpha),
        sub_nu=tuple(sub_nu),
        sub_nu_hat=tuple(sub_nu_hat),
        total_counts=tuple(total_counts),
    )


def _alg_W(alpha: tuple[int, ...], nu: tuple[int, ...], eps: int) -> tuple[list[list[int]], list[list[int]]]:
    ell = len(alpha)
    plan = branch_plan(alpha, nu, eps)
    x_rows = [[plan.iota[i]] for i in range(ell)]
    y_rows = [[plan.iota[i] + ell - 2 * (i + 1) + 1] for i in range(ell)]

    star = []  # per branch: column counts of its sub_alpha
    for sub in plan.sub_alpha:
        width = max(sub, default=0)
        star.append([sum(1 for a in sub if a >= j) for j in range(1, width + 1)])

    for x in range(plan.k):
        if not plan.survivor_rows[x]:
            continue
        sub_x, sub_y = _alg_W(plan.sub_alpha[x], plan.sub_nu_hat[x], -eps)
        for pos, i in enumerate(plan.survivor_rows[x]):
            for jp, value in enumerate(sub_x[pos], start=1):
                offset = sum(star[xp][jp - 1] for xp in range(x) if jp <= len(star[xp]))
                offset -= sum(
                    star[xp][jp - 1] for xp in range(x + 1, plan.k) if jp <= len(star[xp])
                )
                x_rows[i - 1].append(value + offset)
            y_rows[i - 1].extend(sub_y[pos])

    if __debug__:
        # a branch may arrange its own rows freely, so only the multiset of
        # row lengths is pinned down
        assert sorted(len(r) for r in x_rows) == sorted(alpha), "wrong shape-class"
    return x_rows, y_rows


def alg_W(alpha, nu, eps: int = -1) -> DiagramPair:
    """Build the diagram pair for any positive row lengths (in any order).

    The left diagram has shape-class dom(alpha); the right diagram is its
    image under the column shift map.
    """
    _check_eps(eps)
    alpha, nu = _check_rows(alpha, nu)
    x_rows, y_rows = _alg_W(alpha, nu, eps)
    return DiagramPair(WeightDiagram(x_rows), WeightDiagram(y_rows))


def gamma_via_diagrams(alpha, nu) -> tuple[int, ...]:
    """The forward bijection read off the right output diagram."""
    alpha, nu = validate_omega_pair(alpha, nu)
    pair = alg_W(alpha.parts, nu, -1)
    return eta(pair.right)
