"""Symmetric Hamilton cycles in Cayley graphs of abelian groups."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from .graphs import AbelianCayley, AbelianGroup, AffineAutomorphism
from .landau import primes_upto
from .verify import (
    HamCycle,
    KappaResult,
    SearchBudgetExceeded,
    cycle_compression,
    kappa_exact,
    lcf,
    lcf_equivalent,
    lift_path,
    lifted_cycle_search,
)

__all__ = [
    "AbelianGroup",
    "abelian_ham_cycle",
    "canonical_components",
    "comp2_cycle",
    "factor_comp_cycle",
    "is_canonical",
    "minimize_gens",
    "odd_order_classify",
]

CERTIFY_LIMIT = 1000


def _graph(G, S) -> AbelianCayley:
    if isinstance(G, AbelianCayley):
        return G
    if isinstance(G, str):
        G = AbelianGroup.parse(G)
    elif not isinstance(G, AbelianGroup):
        G = AbelianGroup(tuple(G))
    return AbelianCayley(G, S)


def _require_generating(g: AbelianCayley):
    if not g.generates():
        raise ValueError(f"{list(g.gens)} does not generate {g.group}")


def _prime_factors(n: int) -> list:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _square_free(n: int) -> bool:
    return all(n % (p * p) for p in _prime_factors(n))


def _pm_classes(G: AbelianGroup, gens) -> list:
    """One representative per {s, -s} pair, first occurrence wins."""
    out, seen = [], set()
    for s in gens:
        s = G.elem(s)
        if s in seen:
            continue
        seen.update({s, G.neg(s)})
        out.append(s)
    return out


def minimize_gens(G: AbelianGroup, gens) -> list:
    """An inclusion-minimal generating subset (greedy, in the given order)."""
    cur = _pm_classes(G, gens)
    if len(G.span(cur)) != G.size:
        raise ValueError("the given set does not generate the group")
    i = 0
    while i < len(cur):
        trial = cur[:i] + cur[i + 1:]
        if trial and len(G.span(trial)) == G.size:
            cur = trial
        else:
            i += 1
    return cur


def is_canonical(G: AbelianGroup, gens) -> bool:
    """|G| square-free and composite, and S (mod +-) is one element of order p
    for each prime p dividing |G|."""
    n = G.size
    if n < 2 or not _square_free(n):
        return False
    primes = _prime_factors(n)
    if len(primes) < 2:
        return False
    reps = _pm_classes(G, gens)
    orders = sorted(G.order_of(s) for s in reps)
    return orders == sorted(primes)


def canonical_components(G: AbelianGroup, gens) -> list:
    """The generators of a canonical set, one per prime, ordered by prime."""
    if not is_canonical(G, gens):
        raise ValueError("generating set is not canonical")
    return sorted(_pm_classes(G, gens), key=G.order_of)


# ---------------------------------------------------------------------------
# Hamilton cycles in abelian Cayley graphs and their quotients


class _Quotient:
    """G / N with canonical coset representatives (lex-smallest element)."""

    def __init__(self, G: AbelianGroup, N):
        self.G = G
        self.N = sorted(N)
        self._cache: dict = {}

    def canon(self, x):
        hit = self._cache.get(x)
        if hit is None:
            hit = min(self.G.add(x, h) for h in self.N)
            for h in self.N:
                self._cache[self.G.add(x, h)] = hit
        return hit

    @property
    def size(self):
        return self.G.size // len(self.N)

    def order_of(self, x) -> int:
        zero = self.canon(self.G.zero)
        y, k = self.canon(x), 1
        while y != zero:
            y = self.canon(self.G.add(y, x))
            k += 1
        return k


def _boustrophedon(Q: _Quotient, gens) -> list:
    """Hamilton cycle (as coset representatives, starting at 0) of the Cayley
    graph of the quotient, by nested boustrophedon over <s_1> < <s_1,s_2> < ...

    Generators of even order come first so that every intermediate subgroup
    has even order whenever the quotient does.
    """
    G = Q.G
    gens = sorted((G.elem(s) for s in gens), key=lambda s: Q.order_of(s) % 2)
    zero = Q.canon(G.zero)
    cyc = [zero]
    members = {zero}
    for t in gens:
        q = 1
        y = Q.canon(t)
        while y not in members:
            q += 1
            y = Q.canon(G.add(y, t))
        if q == 1:
            continue
        m = len(cyc)

        def cell(i, j):
            return Q.canon(G.add(cyc[i], G.mul(j, t)))

        out = []
        if m % 2 == 0 or m == 1:
            # column 0 downwards, then rows m-1..0 snaking over columns 1..q-1
            out = [cell(i, 0) for i in range(m)]
            for r, i in enumerate(range(m - 1, -1, -1)):
                cols = range(1, q) if r % 2 == 0 else range(q - 1, 0, -1)
                out.extend(cell(i, j) for j in cols)
        elif q % 2 == 1:
            # row 0 across, then columns q-1..0 snaking over rows 1..m-1; uses the wrap edge of the old cycle
            out = [cell(0, j) for j in range(q)]
            for r, j in enumerate(range(q - 1, -1, -1)):
                rows = range(1, m) if r % 2 == 0 else range(m - 1, 0, -1)
                out.extend(cell(i, j) for i in rows)
        else:
            raise RuntimeError("odd subgroup with even index: generator order not respected")
        cyc = out
        members = set(cyc)
    if len(cyc) != Q.size:
        raise ValueError("generators do not generate the quotient")
    return cyc


def _labels(Q: _Quotient, conn, cyc) -> list:
    """For each step of a quotient cycle, the connection elements realizing it."""
    G = Q.G
    out = []
    L = len(cyc)
    for i in range(L):
        a, b = cyc[i], cyc[(i + 1) % L]
        opts = [d for d in conn if Q.canon(G.add(a, d)) == b]
        if not opts:
            raise ValueError(f"quotient cycle step {i} is not an edge")
        out.append(opts)
    return out


def abelian_ham_cycle(G, S) -> HamCycle:
    """A Hamilton cycle of an abelian Cayley graph (nested boustrophedon)."""
    g = _graph(G, S)
    _require_generating(g)
    if g.vertex_count < 3:
        raise ValueError("need at least 3 vertices")
    Q = _Quotient(g.group, [g.group.zero])
    cyc = _boustrophedon(Q, g.gens)
    return HamCycle.from_words(g, cyc, construction="boustrophedon", params=g.params())


# ---------------------------------------------------------------------------
# compression via the factor group lemma


def factor_comp_cycle(G, S, gelem, s, P) -> HamCycle:
    """P, g+P, 2g+P, ... for a path P from 0 to g+s meeting every coset of <g> once."""
    g = _graph(G, S)
    grp = g.group
    gelem, s = grp.elem(gelem), grp.elem(s)
    if s not in g.connection:
        raise ValueError(f"{s} is not a generator (or the inverse of one)")
    P = [grp.elem(x) for x in P]
    H = sorted(grp.span([gelem]))
    k = len(H)
    if len(P) * k != grp.size:
        raise ValueError(f"P has {len(P)} vertices but <g> has {grp.size // k} cosets")
    if P[0] != grp.zero:
        raise ValueError("P must start at 0")
    if P[-1] != grp.add(gelem, s):
        raise ValueError(f"P must end at g+s = {grp.add(gelem, s)}, not {P[-1]}")
    Q = _Quotient(grp, H)
    seen = {}
    for i, x in enumerate(P):
        c = Q.canon(x)
        if c in seen:
            raise ValueError(f"P[{seen[c]}] and P[{i}] lie in the same coset of <g>")
        seen[c] = i
    for i in range(len(P) - 1):
        if not g.adjacent(P[i], P[i + 1]):
            raise ValueError(f"P is not a path: P[{i}] and P[{i + 1}] are not adjacent")
    f = AffineAutomorphism.translation(grp, gelem)
    return lift_path(g, f, P, k, "factor group", {**g.params(), "g": list(gelem)})


def _voltage_lift(g: AbelianCayley, Q: _Quotient, cyc, want) -> HamCycle | None:
    """Choose edge labels on a quotient Hamilton cycle so the voltage v satisfies
    want(v); lift through the factor group lemma."""
    grp = g.group
    labels = _labels(Q, g.connection, cyc)
    # reachable partial sums with back-pointers
    layers = [{grp.zero: None}]
    for opts in labels:
        nxt = {}
        for x in layers[-1]:
            for d in opts:
                y = grp.add(x, d)
                if y not in nxt:
                    nxt[y] = (x, d)
        layers.append(nxt)
    for v in sorted(layers[-1]):
        if not want(v):
            continue
        ds = []
        x = v
        for i in range(len(labels), 0, -1):
            x, d = layers[i][x]
            ds.append(d)
        ds.reverse()
        P = [grp.zero]
        for d in ds[:-1]:
            P.append(grp.add(P[-1], d))
        # the path ends at v - d_last = v + s with s = -d_last
        return factor_comp_cycle(g, g.gens, v, grp.neg(ds[-1]), P)
    return None


def _generators_of(grp: AbelianGroup, N) -> list:
    k = len(N)
    return [h for h in sorted(N) if grp.order_of(h) == k]


def _cycle_with_kernel(g: AbelianCayley, N, budget: int = 10**6) -> HamCycle | None:
    """A Hamilton cycle invariant under translation by a generator of the subgroup N."""
    grp = g.group
    N = frozenset(N)
    Q = _Quotient(grp, N)
    gens_N = set(_generators_of(grp, N))
    if Q.size >= 3:
        cyc = _boustrophedon(Q, g.gens)
        c = _voltage_lift(g, Q, cyc, gens_N.__contains__)
        if c is not None:
            return c
    elif Q.size == 1:
        for v in sorted(gens_N):
            for d in g.connection:
                if grp.add(grp.zero, d) == v:
                    return factor_comp_cycle(g, g.gens, v, grp.neg(d), [grp.zero])
    # fall back to a direct search for a path meeting each coset once
    done = set()
    for v in sorted(gens_N):
        if grp.neg(v) in done:
            continue
        done.add(v)
        try:
            c = lifted_cycle_search(g, AffineAutomorphism.translation(grp, v), budget=budget)
        except SearchBudgetExceeded:
            continue
        if c is not None:
            c.construction = "factor group"
            return c
    return None


def _circulant(g: AbelianCayley) -> HamCycle | None:
    grp = g.group
    for s in g.connection:
        if grp.order_of(s) == grp.size and grp.size >= 3:
            return factor_comp_cycle(g, g.gens, s, grp.neg(s), [grp.zero])
    return None


def comp2_cycle(G, S) -> HamCycle:
    """A Hamilton cycle with compression at least 2 for |G| >= 4 even."""
    g = _graph(G, S)
    _require_generating(g)
    grp = g.group
    n = grp.size
    if n < 4 or n % 2:
        raise ValueError("comp2_cycle needs |G| >= 4 even")
    c = _circulant(g)
    if c is not None:
        c.construction = "circulant"
        return c
    Smin = minimize_gens(grp, g.gens)
    # an even-order generator of order >= 4 gives compression >= ord(s)/2
    evens = sorted((s for s in Smin if grp.order_of(s) % 2 == 0 and grp.order_of(s) >= 4),
                   key=grp.order_of, reverse=True)
    for s in evens:
        N = grp.span([grp.add(s, s)])
        c = _cycle_with_kernel(g, N)
        if c is not None:
            c.construction = "comp2 voltage"
            c.params = {**g.params(), "s": list(s)}
            return c
    two = [s for s in Smin if grp.order_of(s) == 2]
    if two:
        # the reflection x -> s + v - x swaps the two cosets of <S'>
        s = two[0]
        rest = [t for t in Smin if t != s]
        if len(grp.span(rest)) < 2:
            raise ValueError("group too small")
        P = _path_in_subgroup(grp, rest)
        f = AffineAutomorphism.reflection(grp, grp.add(s, P[-1]))
        return lift_path(g, f, P, 2, "comp2 reflection", {**g.params(), "s": list(s)})
    raise RuntimeError(f"no 2-symmetric Hamilton cycle found for {grp} with {list(g.gens)}")


def _path_in_subgroup(grp: AbelianGroup, gens) -> list:
    """Hamilton path from 0 in the Cayley graph of <gens> (a cycle with one edge removed)."""
    H = grp.span(gens)
    # coordinates of the subgroup are elements of G; reuse the quotient machinery
    # on G, keeping only the coset of 0
    sub = _Subgroup(grp, H)
    return _boustrophedon(sub, gens)


class _Subgroup(_Quotient):
    """The subgroup H as its own group (trivial quotient restricted to H)."""

    def __init__(self, G: AbelianGroup, H):
        super().__init__(G, [G.zero])
        self._size = len(H)

    @property
    def size(self):
        return self._size


# ---------------------------------------------------------------------------
# odd order


@dataclass
class OddOrderResult:
    status: str
    bound: int
    certified: bool
    cycle: HamCycle | None = None
    kappa: KappaResult | None = None
    notes: list = field(default_factory=list)


def _prime_order_candidates(g: AbelianCayley) -> list:
    """Subgroups <h> of prime order in the order suggested by the case analysis."""
    grp = g.group
    out = []
    seen = set()

    def add(h):
        key = frozenset(grp.span([h]))
        if key not in seen:
            seen.add(key)
            out.append(h)

    # composite-order generator s of order p*m: h = m*s
    for s in g.connection:
        o = grp.order_of(s)
        for p in _prime_factors(o):
            if o != p:
                add(grp.mul(o // p, s))
    # elements of prime order outside S, then everything else of prime order
    conn = set(g.connection)
    prime_elems = [x for x in grp.elements() if grp.order_of(x) in set(_prime_factors(grp.size))]
    for x in prime_elems:
        if x not in conn:
            add(x)
    for x in prime_elems:
        add(x)
    return out


def odd_order_classify(G, S, budget: int = 10**6) -> OddOrderResult:
    """Either certify compression 1 or find a cycle with compression >= some prime."""
    g = _graph(G, S)
    _require_generating(g)
    grp = g.group
    n = grp.size
    if n % 2 == 0:
        raise ValueError("odd_order_classify needs |G| odd")
    if n < 3:
        raise ValueError("need |G| >= 3")
    c = _circulant(g)
    if c is not None:
        c.construction = "circulant"
        return OddOrderResult("compressible", n, True, c, notes=["a generator has order |G|"])
    if is_canonical(grp, g.gens):
        if n <= CERTIFY_LIMIT:
            kr = kappa_exact(g, budget=None)
            if kr.exact and kr.kappa == 1:
                return OddOrderResult("incompressible_certified", 1, True, kr.witness, kr,
                                      ["exhaustive over the dihedral-product automorphism group"])
            return OddOrderResult("unexpected", kr.kappa, kr.exact, kr.witness, kr,
                                  ["canonical set but the sweep did not give 1"])
        return OddOrderResult("incompressible_conjectured", 1, False, abelian_ham_cycle(grp, g.gens),
                              notes=[f"|G| > {CERTIFY_LIMIT}: not certified by search"])
    for h in _prime_order_candidates(g):
        N = grp.span([h])
        c = _cycle_with_kernel(g, N, budget)
        if c is not None:
            return OddOrderResult("compressible", len(N), True, c, notes=[f"translation subgroup <{h}>"])
    return OddOrderResult("unresolved", 1, False, abelian_ham_cycle(grp, g.gens),
                          notes=["voltage search budget exhausted; a prime lower bound is still expected"])


# ---------------------------------------------------------------------------
# enumeration helpers used by sweeps and figure checks


def symmetric_cycles_under(g: AbelianCayley, v, limit: int | None = None):
    """All Hamilton cycles P, v+P, ... with P starting at 0 meeting each coset of <v> once."""
    grp = g.group
    v = grp.elem(v)
    N = grp.span([v])
    Q = _Quotient(grp, N)
    L = Q.size
    f = AffineAutomorphism.translation(grp, v)
    k = len(N)
    path = [grp.zero]
    used = {Q.canon(grp.zero)}
    found = 0

    def rec():
        nonlocal found
        x = path[-1]
        if len(path) == L:
            if g.adjacent(x, v):
                found += 1
                yield lift_path(g, f, list(path), k, "factor group", g.params())
            return
        for d in g.connection:
            y = grp.add(x, d)
            c = Q.canon(y)
            if c in used:
                continue
            used.add(c)
            path.append(y)
            yield from rec()
            path.pop()
            used.discard(c)
            if limit is not None and found >= limit:
                return

    yield from rec()


def find_lcf_match(g: AbelianCayley, k: int, target_block: list):
    """A k-symmetric translation cycle whose LCF D-sets match (block)^k up to rotation/reversal."""
    grp = g.group
    target = [tuple(sorted(s)) for s in target_block] * k
    for v in sorted(grp.elements()):
        if grp.order_of(v) != k:
            continue
        for c in symmetric_cycles_under(g, v):
            if lcf_equivalent(lcf(c).sets, target):
                return c
    return None


def even_groups(max_order: int) -> list:
    """All abelian groups of even order <= max_order (invariant-factor form)."""
    out = []
    for n in range(2, max_order + 1, 2):
        out.extend(_groups_of_order(n))
    return out


def _groups_of_order(n: int) -> list:
    """Abelian groups of order n as direct sums of cyclic prime-power groups."""
    per_prime = []
    m = n
    for p in primes_upto(n):
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            per_prime.append([tuple(p ** a for a in lam) for lam in _partitions(e)])
    out = []
    for combo in itertools.product(*per_prime):
        orders = tuple(sorted(x for part in combo for x in part))
        out.append(AbelianGroup(orders))
    return out


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def minimal_generating_sets(grp: AbelianGroup, cap: int | None = None):
    """Inclusion-minimal generating sets up to sign, each as a tuple of representatives.

    Every minimal set built in increasing order is a strict subgroup chain,
    so a depth-first search over elements outside the current span finds
    each one exactly once.
    """
    reps = _pm_classes(grp, [x for x in grp.elements() if x != grp.zero])
    count = 0
    chosen = []

    def minimal(combo):
        return all(len(grp.span(combo[:i] + combo[i + 1:])) < grp.size for i in range(len(combo)))

    def rec(start, span):
        nonlocal count
        if len(span) == grp.size:
            combo = tuple(chosen)
            if minimal(combo):
                count += 1
                yield combo
            return
        for i in range(start, len(reps)):
            if reps[i] in span:
                continue
            chosen.append(reps[i])
            yield from rec(i + 1, grp.span(chosen))
            chosen.pop()
            if cap is not None and count >= cap:
                return

    yield from rec(0, frozenset([grp.zero]))


def sample_generating_sets(grp: AbelianGroup, count: int, seed: int = 0) -> list:
    """Seeded random inclusion-minimal generating sets (random elements, then minimize)."""
    import random

    rng = random.Random(seed)
    elems = [x for x in grp.elements() if x != grp.zero]
    out = []
    for _ in range(count):
        picked = []
        while len(grp.span(picked)) < grp.size:
            picked.append(rng.choice(elems))
        rng.shuffle(picked)
        out.append(tuple(minimize_gens(grp, picked)))
    return out


def _max_minimal_size(grp: AbelianGroup) -> int:
    """Upper bound on the size of an inclusion-minimal generating set: the
    number of prime factors of |G| counted with multiplicity."""
    n, total, p = grp.size, 0, 2
    while n > 1:
        while n % p == 0:
            n //= p
            total += 1
        p += 1
    return total
