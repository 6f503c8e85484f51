"""
Todd-Coxeter coset enumeration (HLT strategy with coincidence collapse).

Cosets are numbered from 0; coset 0 is the subgroup itself.  Completed
tables are standardized: cosets are renumbered breadth first from coset 0,
scanning columns in the order ``g0, g0', g1, g1', ...``, and the BFS tree
gives a prefix-closed (Schreier) transversal.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .words import GeneratorSet, Presentation, Word, from_codes, format_word

DEFAULT_LIMIT = 10**6


class LimitExceeded(RuntimeError):
    """The enumeration did not close within the row limit."""


class RelatorViolation(ValueError):
    pass


def default_limit() -> int:
    env = os.environ.get("SOLENOID_LAB_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


@dataclass(frozen=True)
class SubgroupSpec:
    generators: tuple[Word, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))

    @classmethod
    def parse(cls, gens: GeneratorSet, texts: Sequence[str]) -> "SubgroupSpec":
        return cls(tuple(gens.word(t) for t in texts))

    def __str__(self):
        return "< " + ", ".join(format_word(w) for w in self.generators) + " >"


@dataclass(frozen=True, eq=False)
class CosetTable:
    presentation: Presentation
    subgroup: SubgroupSpec
    rows: tuple[tuple[int, ...], ...]
    representatives: tuple[Word, ...]
    # BFS parent (coset, column) of each coset, (-1, -1) for coset 0
    tree: tuple[tuple[int, int], ...] = field(repr=False)

    @property
    def index(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def image(self, coset: int, column: int) -> int:
        return self.rows[coset][column]

    def trace_codes(self, start: int, codes: Sequence[int]) -> int:
        rows = self.rows
        c = start
        for x in codes:
            c = rows[c][x]
        return c


def trace(t: CosetTable, start: int, w: Word) -> int:
    if not 0 <= start < t.index:
        raise IndexError(f"coset {start} out of range 0..{t.index - 1}")
    return t.trace_codes(start, w.codes)


def contains(t: CosetTable, w: Word) -> bool:
    return t.trace_codes(0, w.codes) == 0


def is_normal(t: CosetTable) -> bool:
    """True iff every subgroup generator fixes every coset."""
    gens = [w.codes for w in t.subgroup.generators]
    return all(t.trace_codes(c, w) == c for w in gens for c in range(t.index))


def permutation_rep(t: CosetTable) -> list[tuple[int, ...]]:
    """Right action of each generator on the cosets, as image tuples."""
    return [tuple(row[2 * g] for row in t.rows) for g in range(t.presentation.rank)]


def check_table(t: CosetTable) -> None:
    """Assert the table invariants; raises AssertionError on violation."""
    ncols = 2 * t.presentation.rank
    for c, row in enumerate(t.rows):
        assert len(row) == ncols
        for x, d in enumerate(row):
            assert 0 <= d < t.index, "undefined entry"
            assert t.rows[d][x ^ 1] == c, "inverse column mismatch"
    for r in t.presentation.relators:
        codes = r.codes
        for c in range(t.index):
            assert t.trace_codes(c, codes) == c, f"relator {r} moves coset {c}"
    for w in t.subgroup.generators:
        assert contains(t, w), f"subgroup generator {w} moves coset 0"
    assert not t.representatives[0]
    for c, rep in enumerate(t.representatives):
        assert t.trace_codes(0, rep.codes) == c


def _standardize(p: Presentation, h: SubgroupSpec, table: list[list[int]], live: Sequence[int]) -> CosetTable:
    ncols = 2 * p.rank
    start = live[0]
    number = {start: 0}
    order = [start]
    tree = [(-1, -1)]
    reps_codes: list[tuple[int, ...]] = [()]
    q = deque([start])
    while q:
        c = q.popleft()
        for x in range(ncols):
            d = table[c][x]
            if d not in number:
                number[d] = len(order)
                order.append(d)
                tree.append((number[c], x))
                reps_codes.append(reps_codes[number[c]] + (x,))
                q.append(d)
    rows = tuple(tuple(number[table[c][x]] for x in range(ncols)) for c in order)
    reps = tuple(from_codes(p.gens, codes) for codes in reps_codes)
    return CosetTable(p, h, rows, reps, tuple(tree))


def enumerate_cosets(p: Presentation, h: SubgroupSpec, limit: int | None = None) -> CosetTable:
    """
    Enumerate the cosets of ``h`` in the group presented by ``p``.

    ``limit`` bounds the number of rows ever allocated, dead ones included.
    Raises LimitExceeded instead of returning an incomplete table.
    """
    if limit is None:
        limit = default_limit()
    if limit < 1:
        raise ValueError("limit must be at least 1")
    ncols = 2 * p.rank
    relators = [r.codes for r in p.relators]
    subgens = [w.codes for w in h.generators]

    table: list[list[int]] = [[-1] * ncols]
    parent: list[int] = [0]  # union-find; parent[c] == c for live cosets

    def define(c: int, x: int) -> int:
        if len(table) >= limit:
            raise LimitExceeded(f"coset enumeration exceeded {limit} rows")
        d = len(table)
        table.append([-1] * ncols)
        parent.append(d)
        table[c][x] = d
        table[d][x ^ 1] = c
        return d

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def merge(k: int, l: int, queue: list[int]):
        k, l = find(k), find(l)
        if k == l:
            return
        if k > l:
            k, l = l, k
        parent[l] = k
        queue.append(l)

    def coincidence(a: int, b: int):
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = table[g]
            for x in range(ncols):
                d = row[x]
                if d < 0:
                    continue
                table[d][x ^ 1] = -1
                mu, nu = find(g), find(d)
                if table[mu][x] >= 0:
                    merge(nu, table[mu][x], queue)
                elif table[nu][x ^ 1] >= 0:
                    merge(mu, table[nu][x ^ 1], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x ^ 1] = mu

    def scan_and_fill(alpha: int, word: Sequence[int]):
        n = len(word)
        f, b = alpha, alpha
        i, j = 0, n - 1
        while True:
            while i <= j and table[f][word[i]] >= 0:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] >= 0:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    for w in subgens:
        if parent[0] == 0:
            scan_and_fill(0, w)
    alpha = 0
    while alpha < len(table):
        if parent[alpha] == alpha:
            for r in relators:
                if parent[alpha] != alpha:
                    break
                scan_and_fill(alpha, r)
            if parent[alpha] == alpha:
                for x in range(ncols):
                    if table[alpha][x] < 0:
                        define(alpha, x)
        alpha += 1

    live = [c for c in range(len(table)) if parent[c] == c]
    t = _standardize(p, h, table, live)
    check_table(t)
    return t


def coset_table_from_action(
    p: Presentation,
    perms: Sequence[Sequence[int]],
    base: int = 0,
    subgroup: SubgroupSpec | None = None,
) -> CosetTable:
    """
    Coset table of the stabilizer of ``base`` under a right permutation action.

    ``perms[i][x]`` is the image of point ``x`` under generator ``i``.  Only
    the orbit of ``base`` is kept.  If ``subgroup`` is omitted the Schreier
    generators of the stabilizer are used.  Raises RelatorViolation if some
    relator does not act trivially.
    """
    if len(perms) != p.rank:
        raise ValueError(f"need {p.rank} permutations, got {len(perms)}")
    degree = len(perms[0])
    inv = []
    for perm in perms:
        if sorted(perm) != list(range(degree)):
            raise ValueError("not a permutation")
        q = [0] * degree
        for x, y in enumerate(perm):
            q[y] = x
        inv.append(q)
    cols = []
    for i in range(p.rank):
        cols.append(list(perms[i]))
        cols.append(inv[i])
    table = [[cols[x][c] for x in range(2 * p.rank)] for c in range(degree)]
    orbit = {base}
    q = deque([base])
    while q:
        c = q.popleft()
        for d in table[c]:
            if d not in orbit:
                orbit.add(d)
                q.append(d)
    for r in p.relators:
        codes = r.codes
        for c in orbit:
            d = c
            for x in codes:
                d = table[d][x]
            if d != c:
                raise RelatorViolation(f"relator {r} acts nontrivially on point {c}")
    h = subgroup if subgroup is not None else SubgroupSpec(())
    t = _standardize(p, h, table, [base] + sorted(orbit - {base}))
    if subgroup is None:
        t = CosetTable(p, SubgroupSpec(tuple(schreier_words(t))), t.rows, t.representatives, t.tree)
    check_table(t)
    return t


def schreier_words(t: CosetTable) -> list[Word]:
    """
    Nontrivial Schreier generators ``rep(c) g rep(c.g)^-1``, ordered by
    (coset, generator).
    """
    out = []
    for c, rep in enumerate(t.representatives):
        for g in range(t.presentation.rank):
            d = t.rows[c][2 * g]
            w = rep * t.presentation.gens.generator(g) * t.representatives[d].inverse()
            if w:
                out.append(w)
    return out
