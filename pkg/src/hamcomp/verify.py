"""Independent checks on Hamilton cycles: validity, compression, LCF, tracks,
balance, plus the lifted backtracking search and exact compression."""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field

import numpy as np

from .graphs import (
    AbelianCayley,
    Automorphism,
    BitAutomorphism,
    ExplicitGraph,
    Hypercube,
    ImplicitGraph,
    Johnson,
    MiddleLevels,
    PermAutomorphism,
    Permutahedron,
    PermutahedronPlus,
    TableAutomorphism,
    AffineAutomorphism,
    orbit_index_cycles,
)


class SearchBudgetExceeded(RuntimeError):
    """A backtracking search ran out of nodes or time."""


# ---------------------------------------------------------------------------
# the cycle type


class WordShapeError(ValueError):
    def __init__(self, index, msg):
        super().__init__(msg)
        self.index = index


@dataclass
class HamCycle:
    graph: ImplicitGraph
    words: np.ndarray
    construction: str = ""
    params: dict = field(default_factory=dict)
    automorphism: Automorphism | None = None
    claimed_k: int | None = None

    @classmethod
    def from_words(cls, graph, seq, **meta) -> "HamCycle":
        dtype = np.uint8 if graph.alphabet <= 256 else np.int64
        rows = [tuple(int(x) for x in w) for w in seq]
        for i, w in enumerate(rows):
            if len(w) != graph.word_length:
                raise WordShapeError(i, f"word {i} has length {len(w)}, expected {graph.word_length}")
        arr = np.array(rows, dtype=dtype).reshape(len(rows), graph.word_length)
        return cls(graph, arr, **meta)

    def __len__(self):
        return len(self.words)

    def __getitem__(self, i) -> tuple:
        return tuple(int(x) for x in self.words[i % len(self.words)])

    @property
    def vertices(self) -> list:
        return [tuple(r) for r in self.words.tolist()]

    def rotated(self, r: int) -> "HamCycle":
        return HamCycle(self.graph, np.roll(self.words, -r, axis=0), self.construction,
                        dict(self.params), self.automorphism, self.claimed_k)


@dataclass
class CycleReport:
    ok: bool
    index: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def _valid_rows(g: ImplicitGraph, words: np.ndarray) -> np.ndarray:
    if isinstance(g, (Hypercube, Johnson, MiddleLevels)):
        ok = (words <= 1).all(axis=1)
        w = words.astype(np.int64).sum(axis=1)
        if isinstance(g, Johnson):
            ok &= w == g.k
        elif isinstance(g, MiddleLevels):
            ok &= (w == g.n) | (w == g.n + 1)
        return ok
    if isinstance(g, Permutahedron):
        return (np.sort(words, axis=1) == np.arange(1, g.n + 1)).all(axis=1)
    if isinstance(g, AbelianCayley):
        return (words.astype(np.int64) < np.array(g.group.orders)).all(axis=1)
    return np.array([g.is_vertex(tuple(r)) for r in words.tolist()], dtype=bool)


def validate_cycle(c: HamCycle) -> CycleReport:
    """Check length, validity, distinctness and cyclic adjacency."""
    g, words = c.graph, c.words
    N = g.vertex_count
    if words.ndim != 2 or words.shape[1] != g.word_length:
        return CycleReport(False, None, f"words must have length {g.word_length}")
    if len(words) != N:
        return CycleReport(False, min(len(words), N), f"cycle has {len(words)} vertices, graph has {N}")
    if N < 3:
        return CycleReport(False, 0, "graphs with fewer than 3 vertices have no cycle")
    valid = _valid_rows(g, words)
    if not valid.all():
        i = int(np.argmin(valid))
        return CycleReport(False, i, f"{c[i]} is not a vertex of {g!r}")
    idx = g.index_many(words)
    seen = np.full(N, -1, dtype=np.int64)
    for i, v in enumerate(idx.tolist()):
        if seen[v] >= 0:
            return CycleReport(False, i, f"vertex {c[i]} repeats position {int(seen[v])}")
        seen[v] = i
    adj = g.adjacent_many(words, np.roll(words, -1, axis=0))
    if not adj.all():
        i = int(np.argmin(adj))
        return CycleReport(False, i, f"{c[i]} and {c[i + 1]} are not adjacent (break after index {i})")
    return CycleReport(True)


def _require_valid(c: HamCycle):
    rep = validate_cycle(c)
    if not rep.ok:
        raise ValueError(f"invalid Hamilton cycle: {rep.reason}")


def divisors(n: int) -> list:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


# ---------------------------------------------------------------------------
# compression


def _offsets(c: HamCycle):
    """Sorted cyclic offsets (j - i) mod N from position i to each neighbor."""
    g = c.graph
    N = len(c)
    idx = g.index_many(c.words)
    pos = np.empty(N, dtype=np.int64)
    pos[idx] = np.arange(N)
    nb = g.neighbor_indices(c.words)
    if isinstance(nb, np.ndarray):
        off = (pos[nb] - np.arange(N)[:, None]) % N
        off.sort(axis=1)
        return off
    return [tuple(sorted((int(pos[j]) - i) % N for j in row)) for i, row in enumerate(nb)]


def _rotation_ok_edges(off, s: int) -> bool:
    if isinstance(off, np.ndarray):
        head = min(len(off), 64)
        if not np.array_equal(np.roll(off, -s, axis=0)[:head], off[:head]):
            return False
        return np.array_equal(np.roll(off, -s, axis=0), off)
    N = len(off)
    return all(off[i] == off[(i + s) % N] for i in range(N))


def _rotation_ok_structural(c: HamCycle, s: int) -> bool:
    """Is x_i -> x_{i+s} induced by a coordinate map of the family?"""
    g = c.graph
    A = c.words
    B = np.roll(A, -s, axis=0)
    if isinstance(g, (Hypercube, Johnson, MiddleLevels)):
        pool: dict = {}
        for j in range(A.shape[1]):
            pool.setdefault(A[:, j].tobytes(), []).append(j)
        for j in range(B.shape[1]):
            col = B[:, j]
            key, alt = col.tobytes(), (1 - col).astype(A.dtype).tobytes()
            if pool.get(key):
                pool[key].pop()
            elif pool.get(alt):
                pool[alt].pop()
            else:
                return False
        return True
    if isinstance(g, Permutahedron) and not g.plus:
        n = g.n
        for alpha in (list(range(n)), list(range(n - 1, -1, -1))):
            src = A[0, alpha]
            lut = np.zeros(n + 1, dtype=A.dtype)
            lut[src] = B[0]
            if np.array_equal(lut[A[:, alpha]], B):
                return True
        return False
    raise ValueError(f"no structural rotation test for {g.family}")


STRUCTURAL_FAMILIES = (Hypercube, Johnson, MiddleLevels)
EDGE_WORK_LIMIT = 4_000_000


def _pick_method(c: HamCycle, method: str) -> str:
    if method != "auto":
        return method
    g = c.graph
    structural = isinstance(g, STRUCTURAL_FAMILIES) or (isinstance(g, Permutahedron) and not g.plus)
    if structural and g.edge_work() > EDGE_WORK_LIMIT:
        return "structural"
    return "edges"


def cycle_compression(c: HamCycle, method: str = "auto") -> int:
    """kappa(G, C): N/s for the smallest step s whose rotation is an automorphism.

    ``method='edges'`` checks edge preservation directly (neighbor offsets of
    x_i and x_{i+s} must agree).  ``'structural'`` instead looks for a
    coordinate permutation/complement (or (alpha, pi) for permutations)
    realising the rotation; it agrees with the edge test on families whose
    automorphism group consists of exactly those maps and is used for large
    dense graphs.
    """
    _require_valid(c)
    N = len(c)
    method = _pick_method(c, method)
    if method == "edges":
        off = _offsets(c)
        for s in divisors(N):
            if _rotation_ok_edges(off, s):
                return N // s
    elif method == "structural":
        for s in divisors(N):
            if _rotation_ok_structural(c, s):
                return N // s
    else:
        raise ValueError(f"unknown method {method!r}")
    raise AssertionError("unreachable: the full rotation is always an automorphism")


def check_symmetric(c: HamCycle, f: Automorphism, k: int) -> bool:
    """True iff f(x_i) = x_{i+N/k} for every i."""
    N = len(c)
    if k < 1 or N % k:
        raise ValueError(f"k={k} does not divide N={N}")
    if f.size != c.graph.word_length:
        raise ValueError("automorphism size does not match the graph")
    return bool(np.array_equal(f.apply_many(c.words), np.roll(c.words, -(N // k), axis=0)))


# ---------------------------------------------------------------------------
# LCF


@dataclass
class LcfAnnotation:
    sets: list
    period: int

    @property
    def block(self) -> list:
        return self.sets[: self.period]

    @property
    def cubic(self) -> bool:
        return all(len(s) == 1 for s in self.sets)

    def compact(self) -> str:
        def show(s):
            return str(s[0]) if len(s) == 1 else "{" + ",".join(map(str, s)) + "}"

        return "(" + ",".join(show(s) for s in self.block) + f")^{len(self.sets) // self.period}"


def smallest_period(seq: list) -> int:
    N = len(seq)
    for p in divisors(N):
        if all(seq[i] == seq[(i + p) % N] for i in range(N)):
            return p
    return N


def lcf(c: HamCycle) -> LcfAnnotation:
    """Distance sets to non-cycle neighbors, normalized to (-N/2, N/2]."""
    _require_valid(c)
    N = len(c)
    off = _offsets(c)
    rows = off.tolist() if isinstance(off, np.ndarray) else off
    sets = []
    for row in rows:
        ds = []
        for d in row:
            if d in (1, N - 1):
                continue
            ds.append(d - N if d > N / 2 else d)
        sets.append(tuple(sorted(ds)))
    return LcfAnnotation(sets, smallest_period(sets))


def lcf_equivalent(a: list, b: list) -> bool:
    """Equal up to choice of start vertex and direction of traversal."""
    if len(a) != len(b):
        return False
    n = len(a)
    a = [tuple(x) for x in a]
    rev = [tuple(sorted(-d for d in s)) for s in reversed(a)]
    targets = [tuple(x) for x in b]
    for cand in (a, rev):
        for r in range(n):
            if cand[r:] + cand[:r] == targets:
                return True
    return False


# ---------------------------------------------------------------------------
# tracks and balance


@dataclass
class TrackReport:
    count: int
    classes: list
    shifts: list


def track_count(c: HamCycle) -> TrackReport:
    """Group columns into classes of cyclically shifted copies.

    ``shifts[j] = t`` means column j at row i equals its class
    representative at row i + t.
    """
    words = c.words
    if words.dtype != np.uint8:
        if words.max() >= 256:
            raise ValueError("track counting supports symbols below 256")
        words = words.astype(np.uint8)
    reps: list = []
    classes: list = []
    shifts = [0] * words.shape[1]
    for j in range(words.shape[1]):
        col = words[:, j].tobytes()
        for r, (rep2, members) in enumerate(zip(reps, classes)):
            t = rep2.find(col)
            if t >= 0:
                members.append(j)
                shifts[j] = t
                break
        else:
            reps.append(col + col)
            classes.append([j])
    return TrackReport(len(classes), classes, shifts)


@dataclass
class BalanceStats:
    kind: str
    counts: list
    labels: list

    @property
    def balanced(self) -> bool:
        return len(set(self.counts)) <= 1


def balance_stats(c: HamCycle) -> BalanceStats:
    """Per-position flip counts (bitstrings) or per-transposition usage.

    For Johnson graphs each step swaps a 0 and a 1; the step is counted once,
    at the position that receives the 1.
    """
    g = c.graph
    A = c.words
    B = np.roll(A, -1, axis=0)
    if isinstance(g, Johnson):
        counts = ((A == 0) & (B == 1)).sum(axis=0)
        return BalanceStats("bit", [int(x) for x in counts], list(range(1, g.n + 1)))
    if isinstance(g, (Hypercube, MiddleLevels)):
        counts = (A != B).sum(axis=0)
        return BalanceStats("bit", [int(x) for x in counts], list(range(1, g.word_length + 1)))
    if isinstance(g, Permutahedron):
        diff = A != B
        counts = []
        for i, j in g._swaps:
            counts.append(int((diff[:, i] & diff[:, j] & (diff.sum(axis=1) == 2)).sum()))
        return BalanceStats("transposition", counts, [(i + 1, j + 1) for i, j in g._swaps])
    if isinstance(g, AbelianCayley):
        d = (B.astype(np.int64) - A.astype(np.int64)) % np.array(g.group.orders)
        counts = [int((d == np.array(s)).all(axis=1).sum()) for s in g.connection]
        return BalanceStats("generator", counts, list(g.connection))
    raise ValueError(f"balance statistics are not defined for {g.family}")


# ---------------------------------------------------------------------------
# backtracking engine


class _Budget:
    def __init__(self, nodes: int | None, seconds: float | None):
        self.nodes = nodes
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.used = 0

    def tick(self):
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            raise SearchBudgetExceeded(f"node budget of {self.nodes} exhausted")
        if self.deadline is not None and self.used % 4096 == 0 and time.monotonic() > self.deadline:
            raise SearchBudgetExceeded("time budget exhausted")


def grouped_path_search(nbrs, start, group, n_groups, accept_last, budget: _Budget,
                        heuristic: str = "lex", last_group: int | None = None):
    """DFS for a path from ``start`` that meets every group exactly once.

    ``nbrs[v]`` lists neighbors in preferred order.  ``last_group`` (if set)
    may only be entered as the final step.  Returns the path or None.
    """
    gvis = bytearray(n_groups)
    gvis[group[start]] = 1
    path = [start]
    if n_groups == 1:
        return path if accept_last(start) else None

    def candidates(v):
        depth = len(path)
        out = []
        for w in nbrs[v]:
            gw = group[w]
            if gvis[gw]:
                continue
            if last_group is not None and (gw == last_group) != (depth == n_groups - 1):
                continue
            out.append(w)
        if heuristic == "warnsdorff" and len(out) > 1:
            def free(w):
                return sum(1 for u in nbrs[w] if not gvis[group[u]])
            out.sort(key=free)
        return out

    stack = [iter(candidates(start))]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            v = path.pop()
            gvis[group[v]] = 0
            continue
        budget.tick()
        path.append(w)
        gvis[group[w]] = 1
        if len(path) == n_groups:
            if accept_last(w):
                return path
            path.pop()
            gvis[group[w]] = 0
            continue
        stack.append(iter(candidates(w)))
    return None


def hamilton_path_search(nbrs, start, end=None, budget: _Budget | None = None, cycle: bool = False):
    """Hamilton path from start (to end if given, or closing a cycle).

    Warnsdorff ordering with forced-move and isolation pruning; suited to
    the sparse, highly symmetric graphs searched in this package.
    """
    budget = budget or _Budget(None, None)
    M = len(nbrs)
    if M == 1:
        return [start] if end in (None, start) else None
    nb_sets = [set(x) for x in nbrs]
    visited = bytearray(M)
    free = [len(x) for x in nbrs]
    path = []

    def visit(v):
        visited[v] = 1
        path.append(v)
        for u in nbrs[v]:
            free[u] -= 1

    def unvisit():
        v = path.pop()
        visited[v] = 0
        for u in nbrs[v]:
            free[u] += 1

    def target_ok(v):
        if end is not None:
            return v == end
        if cycle:
            return start in nb_sets[v]
        return True

    def options(v):
        depth = len(path)
        cand = [u for u in nbrs[v] if not visited[u]]
        if end is not None and depth < M - 1:
            cand = [u for u in cand if u != end]
        # vertices that can no longer be entered and left must be next
        forced = [u for u in cand if free[u] == 0 and not (end is not None and u == end)]
        if len(forced) > 1:
            return []
        if forced:
            return forced
        cand.sort(key=lambda u: (free[u], u))
        return cand

    def dead():
        if end is not None and not visited[end] and free[end] == 0 and len(path) < M - 1:
            return True
        # the start must keep an unvisited neighbour to close the cycle
        return cycle and len(path) < M and free[start] == 0

    visit(start)
    stack = [iter(options(start))]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            unvisit()
            continue
        budget.tick()
        visit(w)
        if len(path) == M:
            if target_ok(w):
                return list(path)
            unvisit()
            continue
        if dead():
            unvisit()
            continue
        stack.append(iter(options(w)))
    return None


# ---------------------------------------------------------------------------
# lifted search


def rotation_search(nbrs, start, end=None, cycle: bool = False, budget: _Budget | None = None,
                    seed: int = 0, restart: int | None = None):
    """Hamilton path or cycle by extension and Posa rotations (randomized, seeded).

    Fast on dense-enough graphs with many Hamilton cycles; never proves
    non-existence, so it stops only on success or budget exhaustion.
    """
    budget = budget or _Budget(10**7, None)
    rng = random.Random(seed)
    M = len(nbrs)
    if M == 1:
        return [start]
    nb_sets = [set(x) for x in nbrs]
    restart = restart or 50 * M

    def done(path):
        last = path[-1]
        if end is not None:
            return last == end
        if cycle:
            return start in nb_sets[last]
        return True

    def take(u):
        pos[u] = len(path)
        path.append(u)
        for t in nbrs[u]:
            free[t] -= 1

    while True:
        # free[w]: neighbours of w not yet on the path (rotations keep the vertex set)
        free = [len(x) for x in nbrs]
        path, pos = [], {}
        take(start)
        for _ in range(restart):
            budget.tick()
            v = path[-1]
            if len(path) == M:
                if done(path):
                    return path
            else:
                cand = [u for u in nbrs[v] if u not in pos and (u != end or len(path) == M - 1)]
                if cand:
                    rng.shuffle(cand)
                    take(min(cand, key=free.__getitem__))
                    continue
            pivots = [pos[w] for w in nbrs[v] if w in pos and pos[w] < len(path) - 2]
            if not pivots:
                break
            i = rng.choice(pivots)
            tail = path[i + 1:]
            tail.reverse()
            path[i + 1:] = tail
            for j in range(i + 1, len(path)):
                pos[path[j]] = j


def _graph_tables(g: ImplicitGraph):
    words = g.all_words()
    nb = g.neighbor_indices(words)
    if isinstance(nb, np.ndarray):
        nb = np.sort(nb, axis=1).tolist()
    else:
        nb = [sorted(int(x) for x in row) for row in nb]
    return words, nb


def lifted_cycle_search(g: ImplicitGraph, f: Automorphism, budget: int | None = 10**7,
                        seconds: float | None = None, start=None, heuristic: str = "lex",
                        _tables=None) -> HamCycle | None:
    """Find P visiting each orbit of f once with x_last adjacent to f(x_1).

    Returns the cycle P, f(P), ..., f^{k-1}(P), or None when the search space
    is exhausted.  Raises SearchBudgetExceeded when the budget runs out.
    """
    words, nb = _tables if _tables is not None else _graph_tables(g)
    N = g.vertex_count
    perm = g.index_many(f.apply_many(words))
    cycles = orbit_index_cycles(perm)
    sizes = {len(cy) for cy in cycles}
    if len(sizes) != 1:
        raise ValueError(f"orbits of f have unequal sizes {sorted(sizes)}")
    k = sizes.pop()
    group = np.empty(N, dtype=np.int64)
    for gi, cy in enumerate(cycles):
        group[cy] = gi
    group = group.tolist()
    s = 0 if start is None else g.index(start)
    target = set(nb[int(perm[s])])
    path = grouped_path_search(nb, s, group, len(cycles), target.__contains__,
                               _Budget(budget, seconds), heuristic)
    if path is None:
        return None
    return lift_path(g, f, [tuple(int(x) for x in words[i]) for i in path], k, construction="lifted search")


def lift_path(g: ImplicitGraph, f: Automorphism, path, k: int, construction: str = "", params=None) -> HamCycle:
    """Assemble P, f(P), ..., f^{k-1}(P) as a HamCycle (not validated here)."""
    block = HamCycle.from_words(g, path).words
    parts = [block]
    for _ in range(k - 1):
        block = f.apply_many(block)
        parts.append(block)
    return HamCycle(g, np.concatenate(parts, axis=0), construction, dict(params or {}), f, k)


# ---------------------------------------------------------------------------
# upper bounds


def cube_upper_bound(n: int) -> int:
    """Largest power of two below 2n (n >= 3); C_4 = Q_2 gives 4."""
    if n == 2:
        return 4
    if n < 3:
        raise ValueError("no Hamilton cycle in Q_n for n < 2")
    k = 1
    while 2 * k < 2 * n:
        k *= 2
    return k


def johnson_upper_bound(n: int, k: int) -> int:
    return 2 * n if n == 2 * k else n


def middle_upper_bound(n: int) -> int:
    return 2 * (2 * n + 1)


def perm_upper_bound(n: int) -> int:
    from .landau import landau, landau0, landau2

    if n < 4:
        raise ValueError("the parity bound needs n >= 4")
    if n % 4 in (0, 1):
        return max(2 * landau0(n).value, landau2(n).value or 0)
    return landau(n).value


def upper_bound(g: ImplicitGraph) -> int | None:
    if isinstance(g, Hypercube) and g.n >= 2:
        return cube_upper_bound(g.n)
    if isinstance(g, Johnson) and 0 < g.k < g.n:
        return johnson_upper_bound(g.n, g.k)
    if isinstance(g, MiddleLevels) and g.n >= 1:
        return middle_upper_bound(g.n)
    if isinstance(g, Permutahedron) and not g.plus and g.n >= 4:
        return perm_upper_bound(g.n)
    return None


# ---------------------------------------------------------------------------
# automorphism candidates


def integer_partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for p in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - p, p):
            yield (p,) + rest


def _cycle_perm(lengths) -> list:
    """0-based permutation with consecutive cycles i -> i+1 of given lengths."""
    perm, a = [], 0
    for L in lengths:
        perm.extend(list(range(a + 1, a + L)) + [a])
        a += L
    return perm


def _signed_types(n):
    for k in range(n + 1):
        for pos in integer_partitions(k):
            for neg in integer_partitions(n - k):
                yield pos, neg


GENERIC_AUT_VERTICES = 64
GENERIC_AUT_LIMIT = 20_000


def graph_automorphisms(g: ImplicitGraph, limit: int = GENERIC_AUT_LIMIT):
    """All automorphisms of a small graph by backtracking over vertex images.

    Returns (list, complete); complete is False if ``limit`` was reached.
    """
    words, nb = _graph_tables(g)
    N = len(nb)
    adj = [set(x) for x in nb]
    deg = [len(x) for x in nb]
    order, seen = [], [False] * N
    for root in range(N):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            for u in nb[v]:
                if not seen[u]:
                    seen[u] = True
                    queue.append(u)
    rank = {v: i for i, v in enumerate(order)}
    anchor = [next((u for u in nb[v] if rank[u] < rank[v]), None) for v in order]
    img = [-1] * N
    used = [False] * N
    out = []

    def consistent(v, c):
        for w in order[: rank[v]]:
            if (w in adj[v]) != (img[w] in adj[c]):
                return False
        return True

    def rec(i):
        if len(out) >= limit:
            return
        if i == N:
            out.append(TableAutomorphism(g, tuple(img)))
            return
        v = order[i]
        a = anchor[i]
        pool = nb[img[a]] if a is not None else range(N)
        for c in pool:
            if used[c] or deg[c] != deg[v] or not consistent(v, c):
                continue
            img[v] = c
            used[c] = True
            rec(i + 1)
            used[c] = False
            img[v] = -1

    rec(0)
    return out, len(out) < limit


def automorphism_candidates(g: ImplicitGraph, supplied=None):
    """Conjugacy-class representatives of Aut(g) where known.

    Returns (list, complete) where complete says the list covers Aut(g) up to
    conjugacy.
    """
    if supplied is not None:
        return list(supplied), False
    if isinstance(g, Hypercube):
        out = []
        for pos, neg in _signed_types(g.n):
            lengths = list(pos) + list(neg)
            perm = _cycle_perm(lengths)
            flip = [0] * g.n
            a = sum(pos)
            for L in neg:
                flip[a + L - 1] = 1
                a += L
            out.append(BitAutomorphism(tuple(perm), tuple(flip)))
        return out, True
    if isinstance(g, (Johnson, MiddleLevels)):
        n = g.word_length
        cpl = [False]
        if isinstance(g, MiddleLevels) or (isinstance(g, Johnson) and g.n == 2 * g.k):
            cpl.append(True)
        out = [BitAutomorphism(tuple(_cycle_perm(lam)), (int(c),) * n)
               for lam in integer_partitions(n) for c in cpl]
        return out, True
    if isinstance(g, Permutahedron) and not g.plus:
        n = g.n
        out = []
        for lam in integer_partitions(n):
            pi = tuple(v + 1 for v in _cycle_perm(lam))
            for alpha in ("id", "rev"):
                out.append(PermAutomorphism.from_alpha_pi(alpha, pi))
        return out, True
    if isinstance(g, PermutahedronPlus):
        n = g.n
        if g.vertex_count <= GENERIC_AUT_VERTICES:
            return graph_automorphisms(g)
        dihedral = []
        for r in range(n):
            rot = [(i + r) % n for i in range(n)]
            dihedral.append(tuple(rot))
            dihedral.append(tuple(reversed(rot)))
        out = [PermAutomorphism(pos, vals) for pos in dict.fromkeys(dihedral)
               for vals in itertools.permutations(range(1, n + 1))]
        return out, False
    if isinstance(g, AbelianCayley):
        from .cayley import canonical_components, is_canonical

        grp = g.group
        if is_canonical(grp, g.gens):
            return _canonical_cayley_automorphisms(g, canonical_components(grp, g.gens)), True
        if g.vertex_count <= GENERIC_AUT_VERTICES:
            return graph_automorphisms(g)
        out = [AffineAutomorphism(grp.orders, (sgn,) * len(grp.orders), c)
               for sgn in (1, -1) for c in grp.elements()]
        return out, False
    if g.vertex_count <= GENERIC_AUT_VERTICES or isinstance(g, ExplicitGraph):
        return graph_automorphisms(g)
    raise ValueError(f"no automorphism enumeration for {g.family}; supply a list")


def _canonical_cayley_automorphisms(g: AbelianCayley, gens: list) -> list:
    """All products of dihedral maps, one per cyclic component <s_i>."""
    grp = g.group
    primes = [grp.order_of(s) for s in gens]
    coeff_to_elem = {}
    for coeffs in itertools.product(*(range(p) for p in primes)):
        x = grp.zero
        for a, s in zip(coeffs, gens):
            x = grp.add(x, grp.mul(a, s))
        coeff_to_elem[coeffs] = g.index(x)
    out = []
    choices = [[(e, c) for e in (1, -1) for c in range(p)] for p in primes]
    for combo in itertools.product(*choices):
        table = [0] * g.vertex_count
        for coeffs, i in coeff_to_elem.items():
            img = tuple((e * a + c) % p for (e, c), a, p in zip(combo, coeffs, primes))
            table[i] = coeff_to_elem[img]
        out.append(TableAutomorphism(g, tuple(table)))
    return list({a.table: a for a in out}.values())


@dataclass
class KappaResult:
    kappa: int
    upper: int | None
    exact: bool
    witness: HamCycle | None = None
    automorphism: Automorphism | None = None
    log: list = field(default_factory=list)

    @property
    def interval(self):
        return (self.kappa, self.upper)


def kappa_exact(g: ImplicitGraph, budget: int | None = 10**7, seconds: float | None = None,
                automorphisms=None, use_bounds: bool = True, complete: bool | None = None) -> KappaResult:
    """kappa(G) by lifted search over automorphisms of uniform orbit size.

    Candidates are tried by decreasing order; the first success at the
    highest order wins.  Searches that run out of budget leave their order
    open, so the answer becomes an interval [kappa, upper].
    """
    cands, is_complete = automorphism_candidates(g, automorphisms)
    if complete is not None:
        is_complete = complete
    N = g.vertex_count
    tables = _graph_tables(g)
    words = tables[0]
    bound = upper_bound(g) if use_bounds else None
    log = []
    by_order: dict = {}
    for f in cands:
        k = f.order()
        if k < 2 or N % k:
            continue
        if bound is not None and k > bound:
            log.append((k, "cut by upper bound"))
            continue
        perm = g.index_many(f.apply_many(words))
        sizes = {len(c) for c in orbit_index_cycles(perm)}
        if sizes != {k}:
            continue
        by_order.setdefault(k, []).append(f)
    open_orders = []
    deadline = None if seconds is None else time.monotonic() + seconds
    for k in sorted(by_order, reverse=True):
        for f in by_order[k]:
            left = None if deadline is None else max(0.0, deadline - time.monotonic())
            try:
                cyc = lifted_cycle_search(g, f, budget, left, _tables=tables)
            except SearchBudgetExceeded as exc:
                log.append((k, f"budget: {exc}"))
                open_orders.append(k)
                continue
            if cyc is not None:
                log.append((k, "found"))
                upper = max([k] + open_orders) if is_complete else bound
                exact = is_complete and not open_orders
                return KappaResult(k, upper, exact, cyc, f, log)
            log.append((k, "exhausted"))
    # only the identity is left: plain Hamiltonicity
    left = None if deadline is None else max(0.0, deadline - time.monotonic())
    try:
        path = hamilton_path_search(tables[1], 0, budget=_Budget(budget, left), cycle=True)
    except SearchBudgetExceeded:
        return KappaResult(0, max(open_orders + [1]), False, None, None, log + [(1, "budget")])
    upper = max(open_orders + [1]) if is_complete else bound
    if path is None:
        return KappaResult(0, 0 if is_complete and not open_orders else upper, is_complete and not open_orders,
                           None, None, log + [(1, "no Hamilton cycle")])
    cyc = HamCycle(g, words[path], "hamilton search", {}, None, 1)
    return KappaResult(1, upper, is_complete and not open_orders, cyc, None, log + [(1, "found")])
