"""Exact solvers: minimum dominating set, minimum tropical dominating set,
rainbow dominating set existence and counting.

All searches are iterative deepening on the solution size, branching on the
lowest-indexed undominated vertex over its closed neighbourhood in increasing
vertex id. That makes witnesses deterministic. A node budget converts runaway
instances into BudgetExceededError instead of hangs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError
from .graph import ColouredGraph

DEFAULT_BUDGET = 10**8

DOMINATION = "DOMINATION"
TROPICAL_DOMINATION = "TROPICAL_DOMINATION"


@dataclass(frozen=True)
class SolveResult:
    kind: str
    value: int
    witness: frozenset[int]
    explored: int


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget):
        self.nodes = 0
        self.budget = budget

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceededError(f"node budget {self.budget} exhausted")


def _iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_dominating(g: ColouredGraph) -> list[int]:
    """Greedy max-coverage dominating set; tie-break smallest vertex id."""
    covered = 0
    chosen = []
    while covered != g.full_mask:
        best_v, best_gain = None, -1
        for v in g.vertices:
            gain = (g.closed_mask[v - 1] & ~covered).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        covered |= g.closed_mask[best_v - 1]
    return chosen


def _complete_colours(g: ColouredGraph, chosen: list[int]) -> list[int]:
    """Add the lowest-id vertex of each colour missing from chosen."""
    present = {g.colour[v - 1] for v in chosen}
    out = list(chosen)
    for k in range(1, g.c + 1):
        if k not in present:
            out.append(min(g.colour_class(k)))
    return out


def _dominator_intersection(g: ColouredGraph, undominated: int) -> int:
    """Bitmask of vertices that dominate every undominated vertex."""
    cand = g.full_mask
    for i in _iter_bits(undominated):
        cand &= g.closed_mask[i]
        if not cand:
            break
    return cand


def _search(g: ColouredGraph, k: int, tropical: bool, counter: _Counter):
    """Depth-first search for a (tropical) dominating set of size <= k.

    Returns the witness as a vertex list or None. Completeness: any target set
    must hit the closed neighbourhood of the lowest undominated vertex, and
    once domination is achieved the missing colours are filled greedily.
    """
    closed = g.closed_mask
    full = g.full_mask
    max_cover = max(m.bit_count() for m in closed)

    def dfs(covered: int, colours: int, chosen: list[int]):
        counter.tick()
        remaining = k - len(chosen)
        if tropical:
            missing = g.c - colours.bit_count()
        else:
            missing = 0
        if covered == full:
            if missing <= remaining:
                return _complete_colours(g, chosen) if tropical else list(chosen)
            return None
        if remaining == 0:
            return None
        undominated = full & ~covered
        if remaining * max_cover < undominated.bit_count() or remaining < missing:
            return None
        if remaining == 1:
            cand = _dominator_intersection(g, undominated)
            if tropical and missing == 1:
                miss_colour = next(
                    kk for kk in range(1, g.c + 1) if not colours >> (kk - 1) & 1
                )
                cand &= g.colour_mask[miss_colour - 1]
            elif missing > 1:
                return None
            if cand:
                v = (cand & -cand).bit_length()
                return _complete_colours(g, chosen + [v]) if tropical else chosen + [v]
            return None
        v = (undominated & -undominated).bit_length()
        for u in sorted(g.closed_neighbourhood(v)):
            chosen.append(u)
            res = dfs(
                covered | closed[u - 1],
                colours | (1 << (g.colour[u - 1] - 1)),
                chosen,
            )
            chosen.pop()
            if res is not None:
                return res
        return None

    return dfs(0, 0, [])


def _solve(g: ColouredGraph, tropical: bool, budget: int) -> SolveResult:
    counter = _Counter(budget)
    ub_set = greedy_dominating(g)
    if tropical:
        ub_set = _complete_colours(g, ub_set)
    ub = len(ub_set)
    max_cover = max(m.bit_count() for m in g.closed_mask)
    lb = -(-g.n // max_cover)
    if tropical:
        lb = max(lb, g.c)
    best = sorted(ub_set)
    for k in range(lb, ub):
        found = _search(g, k, tropical, counter)
        if found is not None:
            best = found
            break
    kind = TROPICAL_DOMINATION if tropical else DOMINATION
    return SolveResult(
        kind=kind,
        value=len(best),
        witness=frozenset(best),
        explored=counter.nodes,
    )


def gamma(g: ColouredGraph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum dominating set; colours ignored."""
    return _solve(g, tropical=False, budget=budget)


def gamma_t(g: ColouredGraph, budget: int = DEFAULT_BUDGET) -> SolveResult:
    """Minimum tropical dominating set."""
    return _solve(g, tropical=True, budget=budget)


def _class_order(g: ColouredGraph) -> list[int]:
    sizes = [(g.colour_mask[k - 1].bit_count(), k) for k in range(1, g.c + 1)]
    return [k for _, k in sorted(sizes)]


def _suffix_cover(g: ColouredGraph, order: list[int]) -> list[int]:
    """suffix_cover[d] = union of closed neighbourhoods over classes order[d:]."""
    suffix = [0] * (len(order) + 1)
    for d in range(len(order) - 1, -1, -1):
        u = suffix[d + 1]
        for v in g.colour_class(order[d]):
            u |= g.closed_mask[v - 1]
        suffix[d] = u
    return suffix


def rainbow_exists(g: ColouredGraph, budget: int = DEFAULT_BUDGET):
    """Decide whether a rainbow dominating set exists.

    Any rainbow set takes exactly one vertex per colour, so singleton colour
    classes are committed up front. The search then alternates unit
    propagation (an undominated vertex with a single viable dominator forces
    that pick) with branching on the most constrained undominated vertex.
    Once domination is reached, the unused colours are completed with their
    lowest-id representatives, which keeps domination intact. Prunes when
    the unused colour classes together cannot cover the undominated
    vertices.

    Returns (exists, witness_or_None, explored).
    """
    counter = _Counter(budget)
    full = g.full_mask
    class_cover = [0] * g.c
    for k in range(1, g.c + 1):
        for i in _iter_bits(g.colour_mask[k - 1]):
            class_cover[k - 1] |= g.closed_mask[i]

    def candidates(v: int, used: int) -> list[int]:
        return [
            u for u in g.closed_neighbourhood(v)
            if not used >> (g.colour[u - 1] - 1) & 1
        ]

    def complete(used: int, chosen: list[int]) -> list[int]:
        out = list(chosen)
        for k in range(1, g.c + 1):
            if not used >> (k - 1) & 1:
                out.append(min(g.colour_class(k)))
        return out

    def commit(u: int, used: int, covered: int) -> tuple[int, int]:
        return used | 1 << (g.colour[u - 1] - 1), covered | g.closed_mask[u - 1]

    def dfs(used: int, covered: int, chosen: list[int]):
        counter.tick()
        while True:
            if covered == full:
                return complete(used, chosen)
            reach = covered
            for k in range(1, g.c + 1):
                if not used >> (k - 1) & 1:
                    reach |= class_cover[k - 1]
            if reach != full:
                return None
            branch_v, branch_cand = None, None
            forced = None
            for i in _iter_bits(full & ~covered):
                cand = candidates(i + 1, used)
                if not cand:
                    return None
                if len(cand) == 1:
                    forced = cand[0]
                    break
                if branch_cand is None or len(cand) < len(branch_cand):
                    branch_v, branch_cand = i + 1, cand
            if forced is None:
                break
            chosen = chosen + [forced]
            used, covered = commit(forced, used, covered)
        for u in branch_cand:
            nu, nc = commit(u, used, covered)
            res = dfs(nu, nc, chosen + [u])
            if res is not None:
                return res
        return None

    used0, covered0, chosen0 = 0, 0, []
    for k in range(1, g.c + 1):
        if g.colour_mask[k - 1].bit_count() == 1:
            u = g.colour_mask[k - 1].bit_length()
            chosen0.append(u)
            used0, covered0 = commit(u, used0, covered0)
    witness = dfs(used0, covered0, chosen0)
    if witness is None:
        return False, None, counter.nodes
    return True, frozenset(witness), counter.nodes


def count_rainbow_ds(g: ColouredGraph, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of rainbow dominating sets (the realization of X_c)."""
    counter = _Counter(budget)
    order = _class_order(g)
    suffix = _suffix_cover(g, order)
    full = g.full_mask

    def dfs(d: int, covered: int) -> int:
        counter.tick()
        if covered | suffix[d] != full:
            return 0
        cls_mask = g.colour_mask[order[d] - 1]
        if d == len(order) - 1:
            undominated = full & ~covered
            if undominated:
                cls_mask &= _dominator_intersection(g, undominated)
            return cls_mask.bit_count()
        return sum(dfs(d + 1, covered | g.closed_mask[i]) for i in _iter_bits(cls_mask))

    return dfs(0, 0)
