"""Graph families as implicit graphs, their automorphisms, and orbit machinery.

Vertices are tuples of small non-negative integers ("words").  Bitstrings put
x_1 at index 0, permutations are written in one-line notation with values
1..n, and abelian group elements are residue tuples.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Iterator, Sequence

import numpy as np

Word = tuple


def _as_word(v) -> Word:
    return tuple(int(x) for x in v)


def lcm_all(values: Iterable[int]) -> int:
    return reduce(math.lcm, values, 1)


def _word_dtype(bound: int):
    return np.uint8 if bound <= 256 else np.int64


# ---------------------------------------------------------------------------
# abelian groups (needed here for the Cayley family)


@dataclass(frozen=True)
class AbelianGroup:
    """Direct sum Z_{n_1} + ... + Z_{n_l}; elements are residue tuples."""

    orders: tuple

    def __post_init__(self):
        orders = tuple(int(n) for n in self.orders)
        if not orders or any(n < 1 for n in orders):
            raise ValueError(f"bad cyclic factor orders {self.orders!r}")
        object.__setattr__(self, "orders", orders)

    @classmethod
    def parse(cls, text: str) -> "AbelianGroup":
        """Parse strings such as ``Z3xZ5`` or ``Z2+Z4``."""
        parts = [p for p in text.replace("+", "x").replace("⊕", "x").split("x") if p.strip()]
        orders = []
        for p in parts:
            p = p.strip().lstrip("Zz")
            if not p.isdigit():
                raise ValueError(f"cannot parse group {text!r}")
            orders.append(int(p))
        return cls(tuple(orders))

    def __str__(self):
        return "x".join(f"Z{n}" for n in self.orders)

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    @property
    def zero(self) -> Word:
        return (0,) * len(self.orders)

    def elem(self, v) -> Word:
        if isinstance(v, int):
            v = (v,)
        v = tuple(int(x) for x in v)
        if len(v) != len(self.orders):
            raise ValueError(f"element {v} has wrong length for {self}")
        return tuple(x % n for x, n in zip(v, self.orders))

    def add(self, a, b) -> Word:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def sub(self, a, b) -> Word:
        return tuple((x - y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a) -> Word:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def mul(self, j: int, a) -> Word:
        return tuple((j * x) % n for x, n in zip(a, self.orders))

    def order_of(self, a) -> int:
        return lcm_all(n // math.gcd(x, n) for x, n in zip(a, self.orders))

    def elements(self) -> Iterator[Word]:
        return itertools.product(*(range(n) for n in self.orders))

    def span(self, gens: Iterable) -> frozenset:
        """The subgroup generated by ``gens`` (breadth-first closure)."""
        gens = [self.elem(s) for s in gens]
        seen = {self.zero}
        frontier = [self.zero]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.add(x, s)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)


# ---------------------------------------------------------------------------
# graph families


class ImplicitGraph:
    """Base class: a vertex codec plus a neighbor oracle."""

    family = "abstract"
    word_length = 0
    vertex_count = 0
    degree: int | None = None
    alphabet = 2

    def params(self) -> dict:
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.params() == other.params()

    def __hash__(self):
        return hash((self.family, repr(sorted(self.params().items()))))

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{type(self).__name__}({args})"

    # codec
    def is_vertex(self, v) -> bool:
        raise NotImplementedError

    def check_vertex(self, v) -> Word:
        w = _as_word(v)
        if not self.is_vertex(w):
            raise ValueError(f"{w} is not a vertex of {self!r}")
        return w

    def index(self, v) -> int:
        raise NotImplementedError

    def vertex(self, i: int) -> Word:
        raise NotImplementedError

    def vertices(self) -> Iterator[Word]:
        for i in range(self.vertex_count):
            yield self.vertex(i)

    def all_words(self) -> np.ndarray:
        """Every vertex as a row, in index order."""
        rows = list(self.vertices())
        return np.array(rows, dtype=_word_dtype(self.alphabet)).reshape(len(rows), self.word_length)

    def index_many(self, words: np.ndarray) -> np.ndarray:
        return np.array([self.index(tuple(int(x) for x in w)) for w in words], dtype=np.int64)

    # adjacency
    def neighbors(self, v) -> list:
        raise NotImplementedError

    def adjacent(self, u, v) -> bool:
        return _as_word(v) in set(self.neighbors(u))

    def adjacent_many(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Row-wise adjacency test for two arrays of (valid) vertices."""
        return np.array([self.adjacent(tuple(x), tuple(y)) for x, y in zip(a.tolist(), b.tolist())], dtype=bool)

    def neighbor_indices(self, words: np.ndarray) -> list:
        """Neighbor index lists for each row of ``words``."""
        return [[self.index(u) for u in self.neighbors(tuple(w))] for w in words.tolist()]

    def edge_work(self) -> int:
        return self.vertex_count * (self.degree or 0)


def _binom_table(n: int, ones: int, zeros: int) -> np.ndarray:
    """C(a, b) for the entries that ranking can reach (b <= ones, a - b <= zeros)."""
    t = np.zeros((n + 1, n + 2), dtype=np.int64)
    for a in range(n + 1):
        for b in range(max(0, a - zeros), min(a, ones) + 1):
            t[a, b] = math.comb(a, b)
    return t


def _count_smaller(words: np.ndarray, w: int, table: np.ndarray) -> np.ndarray:
    """For each row, the number of weight-w bitstrings lexicographically smaller."""
    n = words.shape[1]
    out = np.zeros(words.shape[0], dtype=np.int64)
    ones = np.zeros(words.shape[0], dtype=np.int64)
    for i in range(n):
        col = words[:, i].astype(bool)
        need = w - ones
        ok = col & (need >= 0) & (need <= n - 1 - i)
        out[ok] += table[n - 1 - i, need[ok]]
        ones += col
    return out


class Hypercube(ImplicitGraph):
    family = "hypercube"

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("hypercube needs n >= 1")
        self.n = self.word_length = self.degree = n
        self.vertex_count = 2**n

    def params(self):
        return {"n": self.n}

    def is_vertex(self, v):
        return len(v) == self.n and all(x in (0, 1) for x in v)

    def index(self, v):
        v = self.check_vertex(v)
        return int("".join(map(str, v)), 2)

    def vertex(self, i):
        if not 0 <= i < self.vertex_count:
            raise ValueError(f"index {i} out of range")
        return tuple(int(c) for c in format(i, f"0{self.n}b"))

    def all_words(self):
        i = np.arange(self.vertex_count, dtype=np.int64)
        shifts = np.arange(self.n - 1, -1, -1)
        return ((i[:, None] >> shifts) & 1).astype(np.uint8)

    def index_many(self, words):
        weights = 1 << np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return words.astype(np.int64) @ weights

    def neighbors(self, v):
        v = self.check_vertex(v)
        out = [v[:i] + (1 - v[i],) + v[i + 1 :] for i in range(self.n)]
        return sorted(out)

    def adjacent(self, u, v):
        return sum(a != b for a, b in zip(u, v)) == 1

    def adjacent_many(self, a, b):
        return (a != b).sum(axis=1) == 1

    def neighbor_indices(self, words):
        idx = self.index_many(words)
        bits = 1 << np.arange(self.n - 1, -1, -1, dtype=np.int64)
        return idx[:, None] ^ bits[None, :]


class Johnson(ImplicitGraph):
    family = "johnson"

    def __init__(self, n: int, k: int):
        if n < 1 or not 0 <= k <= n:
            raise ValueError(f"Johnson graph needs n >= 1 and 0 <= k <= n, got ({n}, {k})")
        self.n, self.k = n, k
        self.word_length = n
        self.vertex_count = math.comb(n, k)
        self.degree = k * (n - k)
        self._table = _binom_table(n, k, n - k)

    def params(self):
        return {"n": self.n, "k": self.k}

    def is_vertex(self, v):
        return len(v) == self.n and all(x in (0, 1) for x in v) and sum(v) == self.k

    def index(self, v):
        v = self.check_vertex(v)
        return int(_count_smaller(np.array([v], dtype=np.uint8), self.k, self._table)[0])

    def vertex(self, i):
        if not 0 <= i < self.vertex_count:
            raise ValueError(f"index {i} out of range")
        out, r = [], self.k
        for pos in range(self.n):
            rest = self.n - 1 - pos
            zeros_first = math.comb(rest, r) if r <= rest else 0
            if i < zeros_first:
                out.append(0)
            else:
                i -= zeros_first
                out.append(1)
                r -= 1
        return tuple(out)

    def all_words(self):
        rows = np.zeros((self.vertex_count, self.n), dtype=np.uint8)
        for j, c in enumerate(reversed(list(itertools.combinations(range(self.n), self.k)))):
            rows[j, list(c)] = 1
        return rows

    def index_many(self, words):
        return _count_smaller(words, self.k, self._table)

    def neighbors(self, v):
        v = self.check_vertex(v)
        ones = [i for i in range(self.n) if v[i]]
        zeros = [i for i in range(self.n) if not v[i]]
        out = []
        for i in ones:
            for j in zeros:
                w = list(v)
                w[i], w[j] = 0, 1
                out.append(tuple(w))
        return sorted(out)

    def adjacent(self, u, v):
        return sum(a != b for a, b in zip(u, v)) == 2

    def adjacent_many(self, a, b):
        return (a != b).sum(axis=1) == 2

    def neighbor_indices(self, words):
        N, n, k = len(words), self.n, self.k
        deg = k * (n - k)
        if deg == 0:
            return np.zeros((N, 0), dtype=np.int64)
        ones = np.argsort(-words.astype(np.int8), axis=1, kind="stable")[:, :k]
        zeros = np.argsort(words, axis=1, kind="stable")[:, : n - k]
        out = np.empty((N, deg), dtype=np.int64)
        chunk = max(1, 2_000_000 // (deg * n))
        for a in range(0, N, chunk):
            b = min(N, a + chunk)
            nbw = np.repeat(words[a:b, None, :], deg, axis=1)
            rows = np.arange(b - a)[:, None]
            for t in range(deg):
                i, j = divmod(t, n - k)
                nbw[rows[:, 0], t, ones[a:b, i]] = 0
                nbw[rows[:, 0], t, zeros[a:b, j]] = 1
            out[a:b] = self.index_many(nbw.reshape(-1, n)).reshape(b - a, deg)
        return out


class MiddleLevels(ImplicitGraph):
    """M_{2n+1}: bitstrings of length 2n+1 with weight n or n+1."""

    family = "middle_levels"

    def __init__(self, n: int):
        if n < 0:
            raise ValueError("middle levels graph needs n >= 0")
        self.n = n
        self.word_length = 2 * n + 1
        self.vertex_count = 2 * math.comb(2 * n + 1, n)
        self.degree = n + 1
        self._table = _binom_table(2 * n + 1, n + 1, n + 1)

    def params(self):
        return {"n": self.n}

    def is_vertex(self, v):
        return len(v) == self.word_length and all(x in (0, 1) for x in v) and sum(v) in (self.n, self.n + 1)

    def index_many(self, words):
        return _count_smaller(words, self.n, self._table) + _count_smaller(words, self.n + 1, self._table)

    def index(self, v):
        v = self.check_vertex(v)
        return int(self.index_many(np.array([v], dtype=np.uint8))[0])

    def all_words(self):
        cube = Hypercube(self.word_length).all_words()
        w = cube.sum(axis=1)
        return cube[(w == self.n) | (w == self.n + 1)]

    def vertex(self, i):
        if not 0 <= i < self.vertex_count:
            raise ValueError(f"index {i} out of range")
        return tuple(int(x) for x in self.all_words()[i])

    def neighbors(self, v):
        v = self.check_vertex(v)
        flip_to = 0 if sum(v) == self.n + 1 else 1
        out = [v[:i] + (flip_to,) + v[i + 1 :] for i in range(self.word_length) if v[i] != flip_to]
        return sorted(out)

    def adjacent(self, u, v):
        return sum(a != b for a, b in zip(u, v)) == 1

    def adjacent_many(self, a, b):
        return (a != b).sum(axis=1) == 1


def _perm_rank_many(words: np.ndarray) -> np.ndarray:
    n = words.shape[1]
    w = words.astype(np.int64)
    out = np.zeros(words.shape[0], dtype=np.int64)
    for i in range(n):
        smaller_after = (w[:, i + 1 :] < w[:, i : i + 1]).sum(axis=1)
        out += smaller_after * math.factorial(n - 1 - i)
    return out


class Permutahedron(ImplicitGraph):
    family = "permutahedron"
    plus = False

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("permutahedron needs n >= 1")
        self.n = self.word_length = n
        self.alphabet = n + 1
        self.vertex_count = math.factorial(n)
        self._swaps = [(i, i + 1) for i in range(n - 1)]
        self.degree = len(self._swaps)

    def params(self):
        return {"n": self.n}

    def is_vertex(self, v):
        return len(v) == self.n and sorted(v) == list(range(1, self.n + 1))

    def index(self, v):
        v = self.check_vertex(v)
        return int(_perm_rank_many(np.array([v]))[0])

    def vertex(self, i):
        if not 0 <= i < self.vertex_count:
            raise ValueError(f"index {i} out of range")
        pool = list(range(1, self.n + 1))
        out = []
        for pos in range(self.n):
            f = math.factorial(self.n - 1 - pos)
            q, i = divmod(i, f)
            out.append(pool.pop(q))
        return tuple(out)

    def all_words(self):
        return np.array(list(itertools.permutations(range(1, self.n + 1))), dtype=np.uint8).reshape(-1, self.n)

    def index_many(self, words):
        return _perm_rank_many(words)

    def neighbors(self, v):
        v = self.check_vertex(v)
        out = []
        for i, j in self._swaps:
            w = list(v)
            w[i], w[j] = w[j], w[i]
            out.append(tuple(w))
        return sorted(set(out))

    def transposition_of(self, u, v) -> int | None:
        """Index into ``self._swaps`` of the transposition taking u to v."""
        diff = [i for i in range(self.n) if u[i] != v[i]]
        if len(diff) != 2:
            return None
        pair = tuple(diff)
        if pair not in self._swaps:
            return None
        i, j = pair
        if u[i] != v[j] or u[j] != v[i]:
            return None
        return self._swaps.index(pair)

    def adjacent(self, u, v):
        return self.transposition_of(u, v) is not None

    def adjacent_many(self, a, b):
        diff = a != b
        cnt = diff.sum(axis=1)
        ok = np.zeros(len(a), dtype=bool)
        for i, j in self._swaps:
            hit = (cnt == 2) & diff[:, i] & diff[:, j] & (a[:, i] == b[:, j]) & (a[:, j] == b[:, i])
            ok |= hit
        return ok

    def neighbor_indices(self, words):
        cols = []
        for i, j in self._swaps:
            w = words.copy()
            w[:, [i, j]] = w[:, [j, i]]
            cols.append(_perm_rank_many(w))
        return np.stack(cols, axis=1)


class PermutahedronPlus(Permutahedron):
    """Permutahedron with the extra (first, last) transposition."""

    family = "permutahedron_plus"
    plus = True

    def __init__(self, n: int):
        if n < 3:
            raise ValueError("the plus-permutahedron needs n >= 3")
        super().__init__(n)
        self._swaps = self._swaps + [(0, n - 1)]
        self.degree = len(self._swaps)


class AbelianCayley(ImplicitGraph):
    """Cayley graph of an abelian group; the connection set is S plus inverses."""

    family = "cayley"

    def __init__(self, group: AbelianGroup, gens: Sequence):
        if isinstance(group, str):
            group = AbelianGroup.parse(group)
        elif not isinstance(group, AbelianGroup):
            group = AbelianGroup(tuple(group))
        self.group = group
        gens = [group.elem(s) for s in gens]
        if any(s == group.zero for s in gens):
            raise ValueError("generating set contains the identity")
        self.gens = tuple(dict.fromkeys(gens))
        conn = set(self.gens) | {group.neg(s) for s in self.gens}
        self.connection = tuple(sorted(conn))
        self._conn_set = frozenset(conn)
        self.word_length = len(group.orders)
        self.alphabet = max(group.orders)
        self.vertex_count = group.size
        self.degree = len(self.connection)
        self._radix = np.array([math.prod(group.orders[i + 1 :]) for i in range(self.word_length)], dtype=np.int64)

    def params(self):
        return {"orders": list(self.group.orders), "gens": [list(s) for s in self.gens]}

    def generates(self) -> bool:
        return len(self.group.span(self.gens)) == self.group.size

    def is_vertex(self, v):
        return len(v) == self.word_length and all(0 <= x < n for x, n in zip(v, self.group.orders))

    def index(self, v):
        v = self.check_vertex(v)
        return int(sum(x * r for x, r in zip(v, self._radix.tolist())))

    def vertex(self, i):
        if not 0 <= i < self.vertex_count:
            raise ValueError(f"index {i} out of range")
        out = []
        for r, n in zip(self._radix.tolist(), self.group.orders):
            out.append((i // r) % n)
        return tuple(out)

    def all_words(self):
        return np.array(list(self.group.elements()), dtype=_word_dtype(self.alphabet)).reshape(-1, self.word_length)

    def index_many(self, words):
        return words.astype(np.int64) @ self._radix

    def neighbors(self, v):
        v = self.check_vertex(v)
        out = {self.group.add(v, s) for s in self.connection}
        out.discard(v)
        return sorted(out)

    def adjacent(self, u, v):
        return self.group.sub(v, u) in self._conn_set

    def adjacent_many(self, a, b):
        mods = np.array(self.group.orders, dtype=np.int64)
        d = (b.astype(np.int64) - a.astype(np.int64)) % mods
        ok = np.zeros(len(a), dtype=bool)
        for s in self.connection:
            ok |= (d == np.array(s)).all(axis=1)
        return ok & (a != b).any(axis=1)

    def neighbor_indices(self, words):
        mods = np.array(self.group.orders, dtype=np.int64)
        w = words.astype(np.int64)
        cols = [((w + np.array(s)) % mods) @ self._radix for s in self.connection]
        return np.stack(cols, axis=1)


class ExplicitGraph(ImplicitGraph):
    """A small graph given by an edge list; vertex i is the word (i,)."""

    family = "explicit"

    def __init__(self, n: int, edges: Iterable):
        self.n = n
        self.vertex_count = n
        self.word_length = 1
        self.alphabet = max(n, 1)
        adj = [set() for _ in range(n)]
        self.edges = []
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for {n} vertices")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                self.edges.append((min(u, v), max(u, v)))
        self.adj = [sorted(a) for a in adj]
        degs = {len(a) for a in adj}
        self.degree = degs.pop() if len(degs) == 1 else None

    def params(self):
        return {"n": self.n, "edges": sorted(self.edges)}

    def edge_work(self):
        return 2 * len(self.edges)

    def is_vertex(self, v):
        return len(v) == 1 and 0 <= v[0] < self.n

    def index(self, v):
        return self.check_vertex(v)[0]

    def vertex(self, i):
        if not 0 <= i < self.n:
            raise ValueError(f"index {i} out of range")
        return (i,)

    def index_many(self, words):
        return words[:, 0].astype(np.int64)

    def neighbors(self, v):
        return [(j,) for j in self.adj[self.index(v)]]

    def adjacent(self, u, v):
        return v[0] in self.adj[u[0]]

    def neighbor_indices(self, words):
        return [self.adj[int(w[0])] for w in words]


def read_edge_list(path) -> ExplicitGraph:
    """Read ``n m`` followed by m lines ``u v`` (0-based)."""
    with open(path) as fh:
        tokens = [line.split() for line in fh if line.strip() and not line.lstrip().startswith("#")]
    if not tokens or len(tokens[0]) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = map(int, tokens[0])
    edges = [tuple(map(int, t)) for t in tokens[1:]]
    if len(edges) != m:
        raise ValueError(f"expected {m} edges, found {len(edges)}")
    return ExplicitGraph(n, edges)


def write_edge_list(g: ExplicitGraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(f"{g.n} {len(g.edges)}\n")
        for u, v in g.edges:
            fh.write(f"{u} {v}\n")


def graph_from_params(family: str, params: dict) -> ImplicitGraph:
    if family == "hypercube":
        return Hypercube(int(params["n"]))
    if family == "johnson":
        return Johnson(int(params["n"]), int(params["k"]))
    if family == "middle_levels":
        return MiddleLevels(int(params["n"]))
    if family == "permutahedron":
        return Permutahedron(int(params["n"]))
    if family == "permutahedron_plus":
        return PermutahedronPlus(int(params["n"]))
    if family == "cayley":
        return AbelianCayley(AbelianGroup(tuple(params["orders"])), [tuple(s) for s in params["gens"]])
    if family == "explicit":
        return ExplicitGraph(int(params["n"]), [tuple(e) for e in params["edges"]])
    raise ValueError(f"unknown graph family {family!r}")


# ---------------------------------------------------------------------------
# automorphisms


def _perm_order(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    out = 1
    for i in range(len(p)):
        if not seen[i]:
            j, L = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                L += 1
            out = math.lcm(out, L)
    return out


def _check_perm(p: Sequence[int], n: int, what: str) -> tuple:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(n)):
        raise ValueError(f"{what} is not a permutation of 0..{n - 1}: {p}")
    return p


class Automorphism:
    size = 0

    def apply(self, v) -> Word:
        raise NotImplementedError

    def apply_many(self, words: np.ndarray) -> np.ndarray:
        return np.array([self.apply(tuple(w)) for w in words.tolist()], dtype=words.dtype).reshape(words.shape)

    def order(self) -> int:
        raise NotImplementedError

    def power(self, t: int) -> "Automorphism":
        out = self.identity_like()
        for _ in range(t % self.order()):
            out = out.then(self)
        return out

    def _check_size(self, v):
        v = _as_word(v)
        if len(v) != self.size:
            raise ValueError(f"word of length {len(v)} given to an automorphism of size {self.size}")
        return v


@dataclass(frozen=True)
class BitAutomorphism(Automorphism):
    """x -> (x_{perm[0]}, ..., x_{perm[n-1]}) xor flip.

    Covers hypercube automorphisms and the (pi, alpha) pairs of Johnson and
    middle-levels graphs (flip all-zero or all-one).
    """

    perm: tuple
    flip: tuple

    def __post_init__(self):
        n = len(self.perm)
        object.__setattr__(self, "perm", _check_perm(self.perm, n, "perm"))
        flip = tuple(int(b) for b in self.flip)
        if len(flip) != n or any(b not in (0, 1) for b in flip):
            raise ValueError("flip must be a 0/1 vector matching perm")
        object.__setattr__(self, "flip", flip)

    @property
    def size(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (0,) * n)

    @classmethod
    def shift_left(cls, n, q=None):
        """Cyclic left shift x_1..x_q -> x_2..x_q x_1 on the first q bits."""
        q = n if q is None else q
        perm = tuple(list(range(1, q)) + [0] + list(range(q, n))) if q else tuple(range(n))
        return cls(perm, (0,) * n)

    @classmethod
    def cube_g(cls, n):
        """g(x_1..x_n) = x_2..x_n complement(x_1)."""
        return cls(tuple(list(range(1, n)) + [0]), (0,) * (n - 1) + (1,))

    @classmethod
    def from_pi_alpha(cls, pi: Sequence[int], complement: bool = False, one_based: bool = True):
        pi = [p - 1 for p in pi] if one_based else list(pi)
        return cls(tuple(pi), (int(complement),) * len(pi))

    def identity_like(self):
        return BitAutomorphism.identity(self.size)

    def apply(self, v):
        v = self._check_size(v)
        return tuple(v[p] ^ z for p, z in zip(self.perm, self.flip))

    def apply_many(self, words):
        return words[:, list(self.perm)] ^ np.array(self.flip, dtype=words.dtype)

    def then(self, other: "BitAutomorphism") -> "BitAutomorphism":
        """Apply self first, then other."""
        perm = tuple(self.perm[q] for q in other.perm)
        flip = tuple(self.flip[q] ^ z for q, z in zip(other.perm, other.flip))
        return BitAutomorphism(perm, flip)

    def concat(self, other: "BitAutomorphism") -> "BitAutomorphism":
        """Product automorphism acting on concatenated words."""
        n = self.size
        return BitAutomorphism(self.perm + tuple(n + p for p in other.perm), self.flip + other.flip)

    def order(self):
        seen = [False] * self.size
        out = 1
        for i in range(self.size):
            if seen[i]:
                continue
            j, L, parity = i, 0, 0
            while not seen[j]:
                seen[j] = True
                parity ^= self.flip[j]
                j = self.perm[j]
                L += 1
            out = math.lcm(out, L * (2 if parity else 1))
        return out

    def is_complementing(self):
        return all(self.flip) and self.size > 0

    def to_json(self):
        return {"type": "bits", "perm": list(self.perm), "flip": list(self.flip)}


@dataclass(frozen=True)
class PermAutomorphism(Automorphism):
    """x -> values[x_{positions[i]}] for each position i (one-line words).

    ``positions`` is 0-based, ``values`` maps value v to values[v-1].
    (alpha, pi) with alpha in {id, rev} covers Aut of the permutahedron.
    """

    positions: tuple
    values: tuple

    def __post_init__(self):
        n = len(self.positions)
        object.__setattr__(self, "positions", _check_perm(self.positions, n, "positions"))
        vals = tuple(int(x) for x in self.values)
        if sorted(vals) != list(range(1, n + 1)):
            raise ValueError(f"values must be a permutation of 1..{n}: {vals}")
        object.__setattr__(self, "values", vals)

    @property
    def size(self):
        return len(self.positions)

    @classmethod
    def from_alpha_pi(cls, alpha: str, pi: Sequence[int]):
        n = len(pi)
        if alpha not in ("id", "rev"):
            raise ValueError("alpha must be 'id' or 'rev'")
        pos = tuple(range(n)) if alpha == "id" else tuple(range(n - 1, -1, -1))
        return cls(pos, tuple(pi))

    @classmethod
    def rotation(cls, n):
        """Cyclic left shift of positions."""
        return cls(tuple(list(range(1, n)) + [0]), tuple(range(1, n + 1)))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), tuple(range(1, n + 1)))

    def identity_like(self):
        return PermAutomorphism.identity(self.size)

    def apply(self, v):
        v = self._check_size(v)
        return tuple(self.values[v[p] - 1] for p in self.positions)

    def apply_many(self, words):
        lut = np.array((0,) + self.values, dtype=words.dtype)
        return lut[words[:, list(self.positions)]]

    def then(self, other: "PermAutomorphism") -> "PermAutomorphism":
        positions = tuple(self.positions[q] for q in other.positions)
        values = tuple(other.values[v - 1] for v in self.values)
        return PermAutomorphism(positions, values)

    def order(self):
        n = self.size
        if n <= 2:
            return _order_by_iteration(self, [tuple(p) for p in itertools.permutations(range(1, n + 1))])
        return math.lcm(_perm_order(self.positions), _perm_order([v - 1 for v in self.values]))

    def alpha(self):
        n = self.size
        if self.positions == tuple(range(n)):
            return "id"
        if self.positions == tuple(range(n - 1, -1, -1)):
            return "rev"
        return None

    def to_json(self):
        return {"type": "perm", "positions": list(self.positions), "values": list(self.values)}


@dataclass(frozen=True)
class AffineAutomorphism(Automorphism):
    """x -> sign_i * x_i + shift_i (mod n_i) on residue tuples.

    All signs +1 is a translation; all signs -1 is the reflection x -> c - x,
    which is an automorphism of every abelian Cayley graph.  Mixed signs are
    only automorphisms when the generators align with the coordinates.
    """

    orders: tuple
    signs: tuple
    shift: tuple

    def __post_init__(self):
        for name in ("orders", "signs", "shift"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        if not (len(self.orders) == len(self.signs) == len(self.shift)):
            raise ValueError("orders, signs and shift must have equal length")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "shift", tuple(c % n for c, n in zip(self.shift, self.orders)))

    @property
    def size(self):
        return len(self.orders)

    @classmethod
    def translation(cls, group: AbelianGroup, g):
        return cls(group.orders, (1,) * len(group.orders), group.elem(g))

    @classmethod
    def reflection(cls, group: AbelianGroup, c):
        """x -> c - x."""
        return cls(group.orders, (-1,) * len(group.orders), group.elem(c))

    def identity_like(self):
        return AffineAutomorphism(self.orders, (1,) * self.size, (0,) * self.size)

    def apply(self, v):
        v = self._check_size(v)
        return tuple((s * x + c) % n for x, s, c, n in zip(v, self.signs, self.shift, self.orders))

    def apply_many(self, words):
        w = words.astype(np.int64) * np.array(self.signs) + np.array(self.shift)
        return (w % np.array(self.orders)).astype(words.dtype)

    def then(self, other: "AffineAutomorphism") -> "AffineAutomorphism":
        signs = tuple(a * b for a, b in zip(self.signs, other.signs))
        shift = tuple(b * c + d for b, c, d in zip(other.signs, self.shift, other.shift))
        return AffineAutomorphism(self.orders, signs, shift)

    def order(self):
        out = 1
        for s, c, n in zip(self.signs, self.shift, self.orders):
            if s == 1 or n <= 2:
                out = math.lcm(out, n // math.gcd(c, n))
            else:
                out = math.lcm(out, 2)
        return out

    def to_json(self):
        return {"type": "affine", "orders": list(self.orders), "signs": list(self.signs), "shift": list(self.shift)}


@dataclass(frozen=True)
class TableAutomorphism(Automorphism):
    """An explicit permutation of vertex indices of a given graph."""

    graph: ImplicitGraph = field(compare=False)
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", _check_perm(self.table, self.graph.vertex_count, "table"))

    @property
    def size(self):
        return self.graph.word_length

    def identity_like(self):
        return TableAutomorphism(self.graph, tuple(range(len(self.table))))

    def apply(self, v):
        return self.graph.vertex(self.table[self.graph.index(v)])

    def apply_many(self, words):
        idx = self.graph.index_many(words)
        table = np.array(self.table, dtype=np.int64)
        if isinstance(self.graph, ExplicitGraph):
            return table[idx].reshape(-1, 1).astype(words.dtype)
        allw = self.graph.all_words()
        return allw[table[idx]].astype(words.dtype)

    def then(self, other: "TableAutomorphism") -> "TableAutomorphism":
        return TableAutomorphism(self.graph, tuple(other.table[t] for t in self.table))

    def order(self):
        return _perm_order(self.table)

    def to_json(self):
        return {"type": "table", "table": list(self.table)}


def _order_by_iteration(f: Automorphism, vertices: list) -> int:
    out = 1
    for v in vertices:
        w, t = f.apply(v), 1
        while w != v:
            w, t = f.apply(w), t + 1
        out = math.lcm(out, t)
    return out


def automorphism_from_json(data: dict, graph: ImplicitGraph | None = None) -> Automorphism:
    kind = data.get("type")
    if kind == "bits":
        return BitAutomorphism(tuple(data["perm"]), tuple(data["flip"]))
    if kind == "perm":
        return PermAutomorphism(tuple(data["positions"]), tuple(data["values"]))
    if kind == "affine":
        return AffineAutomorphism(tuple(data["orders"]), tuple(data["signs"]), tuple(data["shift"]))
    if kind == "table":
        if graph is None:
            raise ValueError("table automorphisms need a graph")
        return TableAutomorphism(graph, tuple(data["table"]))
    raise ValueError(f"unknown automorphism type {kind!r}")


def apply(f: Automorphism, v) -> Word:
    return f.apply(v)


def image_indices(f: Automorphism, g: ImplicitGraph) -> np.ndarray:
    """The index permutation induced by f on V(g)."""
    words = g.all_words()
    return g.index_many(f.apply_many(words))


def is_automorphism(f: Automorphism, g: ImplicitGraph) -> bool:
    """Exhaustive check: f permutes V(g) and maps edges to edges."""
    words = g.all_words()
    img = f.apply_many(words)
    for row in img[: min(len(img), 64)].tolist():
        if not g.is_vertex(tuple(row)):
            return False
    perm = g.index_many(img)
    if len(np.unique(perm)) != g.vertex_count:
        return False
    nb = g.neighbor_indices(words)
    for i, row in enumerate(nb):
        pi = perm[i]
        for j in row:
            if not g.adjacent(g.vertex(int(pi)), g.vertex(int(perm[j]))):
                return False
    return True


@dataclass
class OrbitPartition:
    orbits: list

    @property
    def sizes(self) -> list:
        return [len(o) for o in self.orbits]

    @property
    def uniform_size(self) -> int | None:
        sizes = set(self.sizes)
        return sizes.pop() if len(sizes) == 1 else None

    def __len__(self):
        return len(self.orbits)


def orbit_index_cycles(perm: np.ndarray) -> list:
    """Cycle decomposition of an index permutation, each cycle as a list."""
    perm = perm.tolist()
    seen = bytearray(len(perm))
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = 1
            cyc.append(j)
            j = perm[j]
        out.append(cyc)
    return out


def orbits(f: Automorphism, g: ImplicitGraph) -> OrbitPartition:
    """Orbits of f on V(g), each listed as v, f(v), f^2(v), ..."""
    words = g.all_words()
    perm = g.index_many(f.apply_many(words))
    cycles = orbit_index_cycles(perm)
    return OrbitPartition([[tuple(int(x) for x in words[i]) for i in c] for c in cycles])
