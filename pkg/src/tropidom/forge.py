"""Instance generators: random coloured graphs, extremal constructions, and
the two hardness reductions (3-SAT -> coloured path for rainbow domination,
subcubic vertex cover -> coloured path for tropical domination) together with
solution back-translation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import graph as gc
from .errors import (
    BadEpsilonError,
    BadParametersError,
    EmptyGraphError,
    HasIsolatedVertexError,
    MalformedFormulaError,
    NotAPathError,
    NotSubcubicError,
    NotTropicalDominatingError,
    ParseError,
    WrongArtifactError,
)
from .graph import ColouredGraph, build, path_order


@dataclass(frozen=True)
class CnfFormula:
    """3-CNF with literals indexed 1..X in reading order (X = 3 * tau)."""

    num_vars: int
    clauses: tuple[tuple[tuple[int, bool], ...], ...]  # (variable, polarity)

    def __post_init__(self):
        for cl in self.clauses:
            if len(cl) != 3:
                raise MalformedFormulaError("every clause needs exactly 3 literals")
            for var, _ in cl:
                if not 1 <= var <= self.num_vars:
                    raise MalformedFormulaError(f"variable {var} out of range")

    @property
    def tau(self) -> int:
        return len(self.clauses)

    @property
    def X(self) -> int:
        return 3 * self.tau

    def literal(self, i: int) -> tuple[int, bool]:
        """The i-th literal (1-indexed) in reading order."""
        return self.clauses[(i - 1) // 3][(i - 1) % 3]

    def satisfiable(self) -> bool:
        """Truth-table enumeration; intended for desk-scale formulas."""
        for bits in range(1 << self.num_vars):
            assign = [(bits >> (v - 1)) & 1 == 1 for v in range(1, self.num_vars + 1)]
            if all(any(assign[v - 1] == pol for v, pol in cl) for cl in self.clauses):
                return True
        return False


def parse_dimacs_cnf(text: str) -> CnfFormula:
    """DIMACS-CNF with exactly 3 literals per clause."""
    num_vars = None
    num_clauses = None
    clauses = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(line_no, "header must read 'p cnf <vars> <clauses>'")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise ParseError(line_no, "clause before 'p cnf' header")
        nums = [int(x) for x in line.split()]
        if not nums or nums[-1] != 0 or len(nums) != 4:
            raise ParseError(line_no, "clause lines hold 3 nonzero ints then 0")
        lits = []
        for x in nums[:-1]:
            if x == 0:
                raise ParseError(line_no, "zero literal inside clause")
            lits.append((abs(x), x > 0))
        clauses.append(tuple(lits))
    if num_vars is None:
        raise ParseError(1, "missing 'p cnf' header")
    if num_clauses != len(clauses):
        raise ParseError(1, f"header declares {num_clauses} clauses, got {len(clauses)}")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


@dataclass(frozen=True)
class SubcubicGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1 or not self.edges:
            raise EmptyGraphError("need at least one edge")
        deg = [0] * (self.n + 1)
        seen = set()
        for u, v in self.edges:
            if not (1 <= u <= self.n and 1 <= v <= self.n) or u == v:
                raise BadParametersError(f"bad edge ({u},{v})")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise BadParametersError(f"duplicate edge {e}")
            seen.add(e)
            deg[u] += 1
            deg[v] += 1
        if max(deg[1:]) > 3:
            raise NotSubcubicError("maximum degree exceeds 3")
        if min(deg[1:]) == 0:
            raise HasIsolatedVertexError("isolated vertex present")

    def min_vertex_cover(self) -> int:
        """Brute-force optimum by subset enumeration."""
        for size in range(0, self.n + 1):
            for bits in range(1 << self.n):
                if bits.bit_count() != size:
                    continue
                if all((bits >> (u - 1)) & 1 or (bits >> (v - 1)) & 1 for u, v in self.edges):
                    return size
        raise AssertionError("full vertex set always covers")

    def is_vertex_cover(self, s) -> bool:
        s = set(s)
        return all(u in s or v in s for u, v in self.edges)


@dataclass(frozen=True)
class ReductionArtifact:
    path: ColouredGraph
    colour_legend: dict[int, str]
    anchors: dict[str, int] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)


def gen_gnpc(n: int, p: float, c: int, seed) -> ColouredGraph:
    """G(n, p) with iid uniform vertex colours from 1..c.

    If some colour class comes out empty, only the colours are resampled; the
    number of resamples is recorded on the returned graph via gen_gnpc.last_resamples.
    """
    if not (0 < p < 1) or not (1 <= c <= n):
        raise BadParametersError(f"need 0 < p < 1 and 1 <= c <= n, got p={p} c={c} n={n}")
    rng = np.random.default_rng(seed)
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    resamples = 0
    while True:
        colours = (rng.integers(0, c, size=n) + 1).tolist()
        if len(set(colours)) == c:
            break
        resamples += 1
    gen_gnpc.last_resamples = resamples
    return build(n, edges, colours)


gen_gnpc.last_resamples = 0


def extremal_gamma_plus(gamma_target: int, c: int) -> ColouredGraph:
    """Cycle C_{3*gamma} plus c-1 uniquely coloured leaves on one vertex.

    Attains gamma^t = gamma + c - 1 (the tightness witness for the
    tdn <= gamma + c - 1 bound).
    """
    if gamma_target < 1 or c < 1:
        raise BadParametersError("need gamma >= 1 and c >= 1")
    cyc = 3 * gamma_target
    n = cyc + c - 1
    edges = [(i, i + 1) for i in range(1, cyc)] + ([(1, cyc)] if cyc > 2 else [])
    edges += [(1, cyc + j) for j in range(1, c)]  # leaves hang off u = vertex 1
    colours = [1] * cyc + list(range(2, c + 1))
    return build(n, edges, colours)


def extremal_edge_bound(n: int, k: int, c: int) -> ColouredGraph:
    """Clique on n-k+c-1 vertices plus a pendant set B of k-c+1 vertices.

    Has m = C(n-k+c-1, 2) + n - k edges and gamma^t = k, the tightness
    witness for the edge-count bound.
    """
    if k < c or n <= k + c - 2 or c < 1:
        raise BadParametersError(f"need k >= c and n > k+c-2, got n={n} k={k} c={c}")
    if n - k < k - c + 1:
        # otherwise some pendant vertex would get no clique neighbour
        raise BadParametersError(f"need n - k >= k - c + 1, got n={n} k={k} c={c}")
    q = n - k + c - 1  # clique size
    b = k - c + 1  # pendant set size
    edges = [(i, j) for i in range(1, q + 1) for j in range(i + 1, q + 1)]
    # clique vertices 1..c-1 are uniquely coloured; A = clique vertices c..q
    a_vertices = list(range(c, q + 1))
    assert len(a_vertices) == n - k
    for idx, v in enumerate(a_vertices):
        edges.append((v, q + 1 + idx % b))
    colours = list(range(1, c)) + [c] * (q - c + 1) + [c] * b
    return build(n, edges, colours)


def _legend_unique(counter: list[int]) -> str:
    counter[0] += 1
    return f"unique{counter[0]}"


def sat_to_path(f: CnfFormula) -> ReductionArtifact:
    """3-SAT -> vertex-coloured path whose rainbow dominating sets encode
    satisfying assignments.

    Segment P0 = v v' v0 v1 ... v_{4 tau}; then one 5-vertex constraint
    gadget (A, P, M, N, L) per ordered antithetic literal pair, ordered
    lexicographically; final unique-coloured vertex F.
    """
    if f.tau < 1:
        raise MalformedFormulaError("formula needs at least one clause")
    X = f.X
    lits = [f.literal(i) for i in range(1, X + 1)]
    antithetic = {
        i: [j for j in range(1, X + 1) if lits[j - 1] == (lits[i - 1][0], not lits[i - 1][1])]
        for i in range(1, X + 1)
    }

    colours: list[int] = []
    legend: dict[int, str] = {}
    anchors: dict[str, int] = {}
    next_colour = [0]
    BLACK = 1
    legend[BLACK] = "B"
    next_colour[0] = 1

    def fresh(label: str) -> int:
        next_colour[0] += 1
        legend[next_colour[0]] = label
        return next_colour[0]

    clausal = {i: fresh(f"clausal{i}_0") for i in range(1, X + 1)}
    gadget_col = {
        (i, fidx): fresh(f"gadget{i}_{fidx}")
        for i in range(1, X + 1)
        for fidx in range(1, len(antithetic[i]) + 1)
    }
    link_pairs = sorted(
        {(min(i, j), max(i, j)) for i in range(1, X + 1) for j in antithetic[i]}
    )
    link_col = {pair: fresh(f"link{pair[0]}_{pair[1]}") for pair in link_pairs}

    # P0: v, v', v_0..v_{4 tau}
    colours.append(BLACK)
    anchors["v"] = 1
    colours.append(BLACK)
    anchors["v'"] = 2
    pos = 2
    lit = 0
    for idx in range(0, 4 * f.tau + 1):
        pos += 1
        if idx % 4 == 0:
            colours.append(fresh(f"sep{idx}"))
        else:
            lit += 1
            colours.append(clausal[lit])
        anchors[f"v_{idx}"] = pos

    for i in range(1, X + 1):
        for fidx, j in enumerate(antithetic[i], start=1):
            # gadget w_{i, i_f} in path order A, P, M, N, L
            colours.append(fresh(f"A{i}_{j}"))
            anchors[f"w_{i}_{j}"] = len(colours)
            colours.append(gadget_col[(i, fidx)])
            colours.append(BLACK)
            colours.append(gadget_col[(i, fidx - 1)] if fidx > 1 else clausal[i])
            colours.append(link_col[(min(i, j), max(i, j))])

    colours.append(fresh("F"))
    anchors["F"] = len(colours)

    n = len(colours)
    edges = [(p, p + 1) for p in range(1, n)]
    path = build(n, edges, colours)
    return ReductionArtifact(
        path=path, colour_legend=legend, anchors=anchors, meta={"kind": "sat", "X": X}
    )


def vc_to_path(g: SubcubicGraph) -> ReductionArtifact:
    """Subcubic vertex cover -> coloured path with 9n+3 vertices and
    m+n+1 colours, satisfying opt_VC(G) = gamma^t(path) - 1 - 3n.
    """
    n, m = g.n, len(g.edges)
    edge_index = {e: i for i, e in enumerate(sorted((min(u, v), max(u, v)) for u, v in g.edges), start=1)}
    incident = {j: sorted(i for e, i in edge_index.items() if j in e) for j in range(1, n + 1)}

    BLACK = 1
    legend = {BLACK: "B"}
    for e, i in sorted(edge_index.items(), key=lambda kv: kv[1]):
        legend[1 + i] = f"E{i}"
    for j in range(1, n + 1):
        legend[1 + m + j] = f"S{j}"

    def e_col(i):
        return 1 + i

    def s_col(j):
        return 1 + m + j

    colours = [BLACK, BLACK, BLACK]  # V_0
    anchors = {"V_0": 1}
    for j in range(1, n + 1):
        inc = incident[j]
        slots = [e_col(inc[0]) if len(inc) >= 1 else BLACK,
                 e_col(inc[1]) if len(inc) >= 2 else BLACK,
                 e_col(inc[2]) if len(inc) >= 3 else BLACK]
        if len(inc) == 1:
            slots = [e_col(inc[0]), BLACK, BLACK]
        anchors[f"block_{j}"] = len(colours) + 1
        colours += [slots[0], BLACK, slots[1], BLACK, BLACK, slots[2]]
        anchors[f"V_{j}"] = len(colours) + 1
        colours += [BLACK, s_col(j), BLACK]

    path_n = len(colours)
    assert path_n == 9 * n + 3
    edges = [(p, p + 1) for p in range(1, path_n)]
    path = build(path_n, edges, colours)
    return ReductionArtifact(
        path=path,
        colour_legend=legend,
        anchors=anchors,
        meta={"kind": "vc", "n": n, "m": m, "edge_index": edge_index, "incident": incident},
    )


def extract_vc(art: ReductionArtifact, sigma) -> frozenset[int]:
    """Back-translate a tropical dominating set of the reduction path into a
    vertex cover of the source subcubic graph.

    Normalizes sigma block by block, then takes v_j whenever all three edge
    slots of block j survive the normalization.
    """
    if art.meta.get("kind") != "vc":
        raise WrongArtifactError("artifact was not produced by vc_to_path")
    g = art.path
    sigma = set(sigma)
    if not (gc.is_dominating(g, sigma) and gc.is_tropical(g, sigma)):
        raise NotTropicalDominatingError("sigma is not a tropical dominating set")
    n = art.meta["n"]

    # normalization step 1: push first/third picks of every black triplet
    # onto their block-side neighbours (they dominate more of the path there)
    pushed = set(sigma)
    triplets = [1] + [art.anchors[f"V_{j}"] for j in range(1, n + 1)]
    for j, first in enumerate(triplets):
        third = first + 2
        if first in pushed and j > 0:
            pushed.discard(first)
            pushed.add(first - 1)  # last slot of block j
        if third in pushed and j < n:
            pushed.discard(third)
            pushed.add(third + 1)  # first slot of block j+1

    sigma_p: set[int] = set()
    # keep every S_j vertex and the second black of V_0
    sigma_p.add(2)
    for j in range(1, n + 1):
        sigma_p.add(art.anchors[f"V_{j}"] + 1)
    # per 6-block: exactly two picks -> they are the 2nd and 5th (black);
    # more than two -> replace by the three edge slots
    for j in range(1, n + 1):
        base = art.anchors[f"block_{j}"]
        block = set(range(base, base + 6))
        picked = len(pushed & block)
        assert picked >= 2, "a tropical dominating set places >= 2 picks per block"
        if picked == 2:
            sigma_p.add(base + 1)
            sigma_p.add(base + 4)
        else:
            sigma_p.update({base, base + 2, base + 5})

    cover = set()
    for j in range(1, n + 1):
        base = art.anchors[f"block_{j}"]
        if {base, base + 2, base + 5} <= sigma_p:
            cover.add(j)
    return frozenset(cover)


def pad_colours(path: ColouredGraph, epsilon) -> ColouredGraph:
    """Append a tail of N = ceil((n+2)^(1/eps)) vertices with two fresh
    colours so the colour count drops below (n')^eps."""
    order = path_order(path)
    if order is None:
        raise NotAPathError("input is not a simple path")
    if not 0 < epsilon <= 1:
        raise BadEpsilonError(f"need 0 < epsilon <= 1, got {epsilon}")
    n = path.n
    N = int(np.ceil((n + 2) ** (1.0 / float(epsilon))))
    col_a = path.c + 1
    col_b = path.c + 2
    colours = list(path.colour) + [col_b] * N
    colours[n + 1] = col_a  # second tail vertex gets the fresh colour A
    edges = list(path.edges)
    edges.append((order[-1], n + 1))
    edges += [(n + i, n + i + 1) for i in range(1, N)]
    return build(n + N, edges, colours)
