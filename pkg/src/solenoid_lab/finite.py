"""
Explicit finite groups on dense integer labels.

Element 0 is always the identity.  Groups carry a full multiplication
table (numpy, plus a list-of-lists copy for scalar loops) and an inverse
table.  Homomorphism searches are plain backtracking over generator
images in element order, so their output is deterministic.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .cosets import CosetTable, enumerate_cosets, is_normal, SubgroupSpec, default_limit
from .words import GeneratorSet, Presentation, Word, parse_word


class NotNormal(ValueError):
    pass


class OrderBoundExceeded(ValueError):
    pass


class GroupAxiomError(AssertionError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    table: np.ndarray
    name: str = "G"
    gens: GeneratorSet | None = None
    gen_images: tuple[int, ...] = ()
    # representative word of each element over ``gens``, when known
    words: tuple[Word, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        k = t.shape[0]
        if t.shape != (k, k) or k == 0:
            raise GroupAxiomError("multiplication table must be square and nonempty")
        if not (t[0] == np.arange(k)).all() or not (t[:, 0] == np.arange(k)).all():
            raise GroupAxiomError("element 0 is not the identity")
        inv = np.argmin(t, axis=1)  # column holding 0 in each row
        if not (t[np.arange(k), inv] == 0).all():
            raise GroupAxiomError("some element has no inverse")
        object.__setattr__(self, "inverse", tuple(int(x) for x in inv))
        object.__setattr__(self, "rows", t.tolist())

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def product(self, elements: Iterable[int]) -> int:
        out = 0
        rows = self.rows
        for x in elements:
            out = rows[out][x]
        return out

    def commutator(self, a: int, b: int) -> int:
        return self.product((a, b, self.inverse[a], self.inverse[b]))

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != 0:
            x = self.rows[x][a]
            n += 1
        return n

    def evaluate(self, w: Word, images: Sequence[int] | None = None) -> int:
        """Image of a word under generator images (default: the group's own)."""
        images = self.gen_images if images is None else images
        out = 0
        rows, inv = self.rows, self.inverse
        for i, s in w.letters:
            x = images[i]
            out = rows[out][x if s > 0 else inv[x]]
        return out

    def word_of(self, a: int) -> Word | None:
        return None if self.words is None else self.words[a]

    def label(self, a: int) -> str:
        if self.words is not None:
            w = str(self.words[a])
            return w if w else "e"
        return str(a)

    def check_axioms(self, exhaustive_bound: int = 64, samples: int = 20000, seed: int = 0) -> None:
        t = self.table
        k = self.order
        for row in self.rows:
            if len(set(row)) != k:
                raise GroupAxiomError("table row is not a permutation")
        for col in t.T:
            if len(set(col.tolist())) != k:
                raise GroupAxiomError("table column is not a permutation")
        if k <= exhaustive_bound:
            left = t[t, :]  # left[a, b, c] = (ab)c
            right = t[:, t]  # right[a, b, c] = a(bc)
            if not np.array_equal(left, right):
                raise GroupAxiomError("multiplication is not associative")
        else:
            rng = random.Random(seed)
            rows = self.rows
            for _ in range(samples):
                a, b, c = rng.randrange(k), rng.randrange(k), rng.randrange(k)
                if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                    raise GroupAxiomError(f"associativity fails at {(a, b, c)}")
        for a in range(k):
            if self.rows[a][self.inverse[a]] != 0 or self.rows[self.inverse[a]][a] != 0:
                raise GroupAxiomError("inverse table inconsistent")

    def elements(self) -> range:
        return range(self.order)


def from_table(table, name: str = "G") -> FiniteGroup:
    g = FiniteGroup(np.asarray(table), name=name)
    g.check_axioms()
    return g


def from_normal_coset_table(t: CosetTable, name: str | None = None) -> FiniteGroup:
    """
    The quotient group G/H for a normal subgroup H with coset table ``t``.

    Coset c times coset d is the coset reached from c along rep(d).
    """
    if not is_normal(t):
        raise NotNormal("the subgroup of this coset table is not normal")
    k = t.index
    rows = t.rows
    prod = [[0] * k for _ in range(k)]
    # rep(d) = rep(parent) . column, so c.d = (c.parent) . column
    for c in range(k):
        pc = prod[c]
        pc[0] = c
        for d in range(1, k):
            parent, x = t.tree[d]
            pc[d] = rows[pc[parent]][x]
    gen_images = tuple(rows[0][2 * i] for i in range(t.presentation.rank))
    return FiniteGroup(
        np.array(prod, dtype=np.int64),
        name=name or f"G/N[{k}]",
        gens=t.presentation.gens,
        gen_images=gen_images,
        words=t.representatives,
    )


def from_presentation(p: Presentation, name: str = "G", limit: int | None = None) -> FiniteGroup:
    t = enumerate_cosets(p, SubgroupSpec(()), limit)
    return from_normal_coset_table(t, name=name)


def _compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    # apply p then q
    return tuple(q[x] for x in p)


def from_permutations(perms: Sequence[Sequence[int]], name: str = "G", gens: GeneratorSet | None = None) -> FiniteGroup:
    """Permutation group generated by ``perms`` (right action, p then q)."""
    perms = [tuple(p) for p in perms]
    degree = len(perms[0]) if perms else 1
    if gens is None:
        gens = GeneratorSet(tuple(f"g{i}" for i in range(len(perms))))
    identity = tuple(range(degree))
    index = {identity: 0}
    elems = [identity]
    words = [gens.identity]
    q = deque([identity])
    while q:
        x = q.popleft()
        for i, p in enumerate(perms):
            y = _compose(x, p)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                words.append(words[index[x]] * gens.generator(i))
                q.append(y)
    k = len(elems)
    prod = np.array([[index[_compose(a, b)] for b in elems] for a in elems], dtype=np.int64)
    g = FiniteGroup(prod, name=name, gens=gens, gen_images=tuple(index[p] for p in perms), words=tuple(words))
    object.__setattr__(g, "permutations", tuple(elems))
    return g


def parse_cycles(text: str, degree: int | None = None) -> tuple[int, ...]:
    """Parse cycle notation on points 1..n, e.g. ``"(1 2)(3 4 5)"``; ``"()"`` is the identity."""
    cycles = []
    for part in text.replace(")", ")\n").split("\n"):
        part = part.strip()
        if not part:
            continue
        if not (part.startswith("(") and part.endswith(")")):
            raise ValueError(f"bad cycle notation {text!r}")
        pts = [int(x) for x in part[1:-1].replace(",", " ").split()]
        if len(set(pts)) != len(pts) or any(x < 1 for x in pts):
            raise ValueError(f"bad cycle {part!r}")
        cycles.append(pts)
    n = max([max(c) for c in cycles if c] + [degree or 1])
    perm = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            perm[a - 1] = b - 1
    return tuple(perm)


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None) -> FiniteGroup:
    m = h.order
    tg, th = g.table, h.table
    table = (tg[:, None, :, None] * m + th[None, :, None, :]).reshape(g.order * m, g.order * m)
    return FiniteGroup(table, name=name or f"{g.name}x{h.name}")


# ----------------------------------------------------------------------
# subgroups


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        object.__setattr__(self, "member_set", frozenset(self.members))

    @classmethod
    def whole(cls, g: FiniteGroup) -> "Subgroup":
        return cls(g, tuple(range(g.order)))

    @classmethod
    def trivial(cls, g: FiniteGroup) -> "Subgroup":
        return cls(g, (0,))

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return a in self.member_set

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def __le__(self, other: "Subgroup") -> bool:
        return self.member_set <= other.member_set

    def __lt__(self, other: "Subgroup") -> bool:
        return self.member_set < other.member_set

    def __repr__(self):
        return f"Subgroup(order={self.order} in {self.parent.name})"

    def is_closed(self) -> bool:
        g = self.parent
        s = self.member_set
        return 0 in s and all(g.inv(a) in s for a in s) and all(g.mul(a, b) in s for a in s for b in s)

    def is_normal(self) -> bool:
        g = self.parent
        s = self.member_set
        return all(g.product((x, a, g.inv(x))) in s for x in range(g.order) for a in self.members)

    def intersect(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, tuple(self.member_set & other.member_set))

    def is_abelian(self) -> bool:
        g = self.parent
        m = self.members
        return all(g.mul(a, b) == g.mul(b, a) for i, a in enumerate(m) for b in m[i + 1:])


def is_abelian(g: FiniteGroup) -> bool:
    t = g.table
    return bool(np.array_equal(t, t.T))


def subgroup_generated(g: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    seeds = [s for s in set(seeds) if s != 0]
    for s in seeds:
        if not 0 <= s < g.order:
            raise ValueError(f"element {s} not in group of order {g.order}")
    seen = {0}
    q = deque([0])
    rows = g.rows
    while q:
        x = q.popleft()
        for s in seeds:
            y = rows[x][s]
            if y not in seen:
                seen.add(y)
                q.append(y)
    return Subgroup(g, tuple(seen))


def normal_closure(g: FiniteGroup, seeds: Iterable[int]) -> Subgroup:
    conj = {g.product((x, s, g.inv(x))) for s in seeds for x in range(g.order)}
    return subgroup_generated(g, conj)


def is_simple(g: FiniteGroup) -> bool:
    if g.order == 1:
        return False
    return all(normal_closure(g, [a]).order == g.order for a in range(1, g.order))


def all_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, sorted by (order, members)."""
    found = {frozenset(subgroup_generated(g, [a]).members) for a in range(g.order)}
    frontier = set(found)
    cyclic = list(found)
    while frontier:
        new = set()
        for s in frontier:
            for c in cyclic:
                if not c <= s:
                    j = frozenset(subgroup_generated(g, s | c).members)
                    if j not in found:
                        new.add(j)
        found |= new
        frontier = new
    subs = [Subgroup(g, tuple(s)) for s in found]
    subs.sort(key=lambda s: (s.order, s.members))
    return subs


def normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    return [s for s in all_subgroups(g) if s.is_normal()]


@dataclass(frozen=True)
class CosetSpace:
    """Left cosets xH of a subgroup, labelled by their least elements."""

    representatives: tuple[int, ...]
    label: tuple[int, ...]  # element -> coset index
    blocks: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.representatives)

    def coset_of(self, a: int) -> int:
        return self.label[a]


def left_coset_space(g: FiniteGroup, h: Subgroup) -> CosetSpace:
    label = [-1] * g.order
    reps, blocks = [], []
    for x in range(g.order):
        if label[x] >= 0:
            continue
        block = sorted(g.mul(x, a) for a in h.members)
        for y in block:
            label[y] = len(reps)
        reps.append(block[0])
        blocks.append(tuple(block))
    return CosetSpace(tuple(reps), tuple(label), tuple(blocks))


# ----------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True, eq=False)
class GroupHom:
    """
    A homomorphism defined on a subgroup ``source`` of some group.

    ``images`` is indexed by elements of ``source.parent``; entries outside
    the domain are -1.
    """

    source: Subgroup
    target: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        y = self.images[a]
        if y < 0:
            raise KeyError(f"element {a} is outside the domain")
        return y

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.source == other.source and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    @property
    def key(self) -> tuple:
        return (self.source.order, self.source.members, self.images)

    @property
    def is_injective(self) -> bool:
        imgs = [self.images[a] for a in self.source.members]
        return len(set(imgs)) == len(imgs)

    @property
    def is_monomorphism(self) -> bool:
        return self.is_injective

    def image(self) -> Subgroup:
        return Subgroup(self.target, tuple(self.images[a] for a in self.source.members))

    def image_of(self, sub: Subgroup) -> Subgroup:
        return Subgroup(self.target, tuple(self.images[a] for a in sub.members))

    def is_surjective(self) -> bool:
        return self.image().order == self.target.order

    def is_homomorphism(self) -> bool:
        src = self.source.parent
        t = self.target
        m = self.source.members
        im = self.images
        return all(t.mul(im[a], im[b]) == im[src.mul(a, b)] for a in m for b in m)

    def compose(self, after: "GroupHom") -> "GroupHom":
        """``after`` o ``self`` on the part of the domain mapped into after's domain."""
        dom = [a for a in self.source.members if after.images[self.images[a]] >= 0]
        images = [-1] * self.source.parent.order
        for a in dom:
            images[a] = after.images[self.images[a]]
        return GroupHom(Subgroup(self.source.parent, dom), after.target, tuple(images))


def identity_hom(sub: Subgroup) -> GroupHom:
    images = [-1] * sub.parent.order
    for a in sub.members:
        images[a] = a
    return GroupHom(sub, sub.parent, tuple(images))


def inner_automorphism(g: FiniteGroup, x: int) -> GroupHom:
    """``a -> x a x^-1``."""
    xi = g.inv(x)
    return GroupHom(Subgroup.whole(g), g, tuple(g.product((x, a, xi)) for a in range(g.order)))


def _greedy_generators(g: FiniteGroup, members: Sequence[int]) -> list[int]:
    gens: list[int] = []
    span = {0}
    for m in members:
        if m not in span:
            gens.append(m)
            span = subgroup_generated(g, gens).member_set
    return gens


def _iter_subgroup_homs(
    dom: Subgroup, target: FiniteGroup, injective: bool = False
) -> Iterator[tuple[int, ...]]:
    """All homomorphisms from ``dom`` into ``target``, as full image tuples."""
    g = dom.parent
    gens = _greedy_generators(g, dom.members)
    if not gens:
        images = [-1] * g.order
        images[0] = 0
        yield tuple(images)
        return
    # for each prefix of generators: BFS spanning tree + remaining edges
    stages = []
    known: dict[int, tuple[int, int]] = {0: (-1, -1)}
    order = [0]
    for k in range(len(gens)):
        # extend the span of gens[:k+1] from everything known so far
        new_nodes = []
        q = deque(order)
        while q:
            x = q.popleft()
            for j in range(k + 1):
                y = g.mul(x, gens[j])
                if y not in known:
                    known[y] = (x, j)
                    order.append(y)
                    new_nodes.append(y)
                    q.append(y)
        span = list(order)
        edges = [(x, j, g.mul(x, gens[j])) for x in span for j in range(k + 1)]
        stages.append((new_nodes, edges))
    orders = [g.element_order(x) for x in gens]
    tord = [target.element_order(y) for y in range(target.order)]
    cands = []
    for o in orders:
        if injective:
            cands.append([y for y in range(target.order) if tord[y] == o])
        else:
            cands.append([y for y in range(target.order) if o % tord[y] == 0])

    trows = target.rows
    f = [-1] * g.order
    f[0] = 0
    imgs = [0] * len(gens)

    def rec(k: int):
        new_nodes, edges = stages[k]
        for y in cands[k]:
            imgs[k] = y
            for node in new_nodes:
                x, j = known[node]
                f[node] = trows[f[x]][imgs[j]]
            ok = True
            for x, j, z in edges:
                if f[z] != trows[f[x]][imgs[j]]:
                    ok = False
                    break
            if ok:
                if k + 1 == len(gens):
                    if not injective or len({f[a] for a in dom.members}) == dom.order:
                        yield tuple(f)
                else:
                    yield from rec(k + 1)
            for node in new_nodes:
                f[node] = -1

    yield from rec(0)


def homomorphisms_from_subgroup(dom: Subgroup, target: FiniteGroup, injective: bool = False) -> list[GroupHom]:
    out = [GroupHom(dom, target, imgs) for imgs in _iter_subgroup_homs(dom, target, injective)]
    out.sort(key=lambda h: h.images)
    return out


def enumerate_monomorphisms_filtered(
    src: tuple[Subgroup, Subgroup],
    tgt: tuple[FiniteGroup, Subgroup],
    chain: Sequence[Subgroup] | None = None,
) -> list[GroupHom]:
    """
    Injective f: Gamma_i -> Gamma with f(gamma_i) = gamma ∩ f(Gamma_i).

    ``src`` is the pair (Gamma_i, gamma_i) inside the same parent group as
    the target pair (Gamma, gamma).  When ``chain`` is given, f(Gamma_i) is
    additionally required to be one of its members.
    """
    dom, dom_char = src
    target, char = tgt
    if dom.parent is target and dom_char.member_set != (dom.member_set & char.member_set):
        raise ValueError("gamma_i must equal gamma ∩ Gamma_i")
    allowed = None if chain is None else {s.members for s in chain}
    out = []
    for imgs in _iter_subgroup_homs(dom, target, injective=True):
        image = {imgs[a] for a in dom.members}
        if allowed is not None and tuple(sorted(image)) not in allowed:
            continue
        want = image & char.member_set
        got = {imgs[a] for a in dom_char.members}
        if got == want:
            out.append(GroupHom(dom, target, imgs))
    out.sort(key=lambda h: h.images)
    return out


def automorphisms(g: FiniteGroup, bound: int = 64) -> list[GroupHom]:
    if g.order > bound:
        raise OrderBoundExceeded(f"group order {g.order} exceeds bound {bound}")
    whole = Subgroup.whole(g)
    return homomorphisms_from_subgroup(whole, g, injective=True)


def iter_homomorphisms(p: Presentation, q: FiniteGroup, surjective_only: bool = False) -> Iterator[tuple[int, ...]]:
    """
    Generator images (one element of ``q`` per generator of ``p``) killing
    every relator, in lexicographic order.

    Relators are checked as soon as all their generators are assigned.
    """
    n = p.rank
    by_last: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for r in p.relators:
        last = max(r.generators_used())
        by_last[last].append(tuple((i, s) for i, s in r.letters))
    rows, inv = q.rows, q.inverse
    imgs = [0] * n

    def value(rel) -> int:
        out = 0
        for i, s in rel:
            x = imgs[i]
            out = rows[out][x if s > 0 else inv[x]]
        return out

    def rec(k: int):
        if k == n:
            if not surjective_only or subgroup_generated(q, imgs).order == q.order:
                yield tuple(imgs)
            return
        for y in range(q.order):
            imgs[k] = y
            if all(value(rel) == 0 for rel in by_last[k]):
                yield from rec(k + 1)

    if n == 0:
        yield ()
        return
    yield from rec(0)


def enumerate_homomorphisms(p: Presentation, q: FiniteGroup, surjective_only: bool = False) -> list[tuple[int, ...]]:
    return list(iter_homomorphisms(p, q, surjective_only))


def hom_kills_relators(p: Presentation, q: FiniteGroup, images: Sequence[int]) -> bool:
    return all(q.evaluate(r, images) == 0 for r in p.relators)
