"""
Reidemeister-Schreier rewriting, conservative Tietze simplification and
sound abelianness certificates for finitely presented subgroups.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .cosets import CosetTable, LimitExceeded, SubgroupSpec, enumerate_cosets, trace
from .finite import FiniteGroup, hom_kills_relators
from .words import (
    GeneratorSet,
    Presentation,
    Word,
    commutator,
    cyclic_permutations,
    cyclic_reduce,
    _free_reduce as _free,
    invert,
    substitute,
)

DEFAULT_BUDGET = 10**4


@dataclass(frozen=True, eq=False)
class SchreierData:
    table: CosetTable
    # (coset, generator index) of each nontrivial Schreier generator
    pairs: tuple[tuple[int, int], ...]
    words: tuple[Word, ...]
    presentation: Presentation | None = None

    def __len__(self):
        return len(self.words)


def _schreier_word(t: CosetTable, c: int, g: int) -> Word:
    d = t.rows[c][2 * g]
    return t.representatives[c] * t.presentation.gens.generator(g) * t.representatives[d].inverse()


def schreier_generators(t: CosetTable) -> SchreierData:
    pairs, words = [], []
    for c in range(t.index):
        for g in range(t.presentation.rank):
            w = _schreier_word(t, c, g)
            if w:
                pairs.append((c, g))
                words.append(w)
    return SchreierData(t, tuple(pairs), tuple(words))


def _generator_names(t: CosetTable, pairs) -> tuple[str, ...]:
    names = tuple(f"{t.presentation.gens.names[g]}_{c}" for c, g in pairs)
    if len(set(names)) != len(names) or set(names) & set(t.presentation.gens.names):
        names = tuple(f"s{k}" for k in range(len(pairs)))
    return names


def rewrite_subgroup_presentation(t: CosetTable) -> Presentation:
    """
    Presentation of the subgroup on its nontrivial Schreier generators.

    Each ambient relator is rewritten starting from each coset.
    """
    data = schreier_generators(t)
    gens = GeneratorSet(_generator_names(t, data.pairs))
    slot = {pair: k for k, pair in enumerate(data.pairs)}
    rows = t.rows
    relators = []
    for r in t.presentation.relators:
        codes = r.codes
        for c in range(t.index):
            letters = []
            d = c
            for x in codes:
                g = x >> 1
                if x & 1:
                    d = rows[d][x]
                    k = slot.get((d, g))
                    if k is not None:
                        letters.append((k, -1))
                else:
                    k = slot.get((d, g))
                    if k is not None:
                        letters.append((k, 1))
                    d = rows[d][x]
            assert d == c
            relators.append(Word(gens, tuple(letters)))
    return Presentation(gens, tuple(_reduce_all(relators)))


def subgroup_data(t: CosetTable) -> SchreierData:
    data = schreier_generators(t)
    return SchreierData(t, data.pairs, data.words, rewrite_subgroup_presentation(t))


def expand(data: SchreierData, w: Word) -> Word:
    """Map a word in Schreier generators back to an ambient word."""
    return substitute(w, dict(enumerate(data.words))) if w else data.table.presentation.gens.identity


def _reduce_all(words):
    out = []
    for w in words:
        w = cyclic_reduce(Word(w.gens, _free(w.letters)))
        if w:
            out.append(w)
    return out


@dataclass(frozen=True)
class Simplification:
    presentation: Presentation
    # eliminated generator name -> its expression over the original generators
    eliminated: dict = field(default_factory=dict)
    budget_exhausted: bool = False


def simplify(p: Presentation, budget: int = DEFAULT_BUDGET) -> Simplification:
    """
    Tietze simplification to a fixpoint (or until ``budget`` runs out).

    Moves: free and cyclic reduction of relators, deletion of trivial and
    duplicate relators, and elimination of a generator occurring exactly
    once in some relator.  Among eligible relators the shortest (then the
    earliest) is used.
    """
    gens = p.gens
    rels: list[tuple[tuple[int, int], ...]] = [r.letters for r in p.relators]
    alive = list(range(len(gens)))
    # expression of each eliminated generator over the original generators
    subst: dict[int, Word] = {}
    spent = 0
    exhausted = False

    def normalize(rs):
        out, seen = [], set()
        for letters in rs:
            w = cyclic_reduce(Word(gens, _free(letters)))
            if w and w.letters not in seen:
                seen.add(w.letters)
                out.append(w.letters)
        return out

    rels = normalize(rels)
    while True:
        spent += 1 + sum(len(r) for r in rels)
        if spent > budget:
            exhausted = True
            break
        best = None
        for ri, r in enumerate(rels):
            if best is not None and len(r) >= len(rels[best[0]]):
                continue
            counts: dict[int, int] = {}
            for i, _ in r:
                counts[i] = counts.get(i, 0) + 1
            for i, _ in r:
                if counts[i] == 1:
                    best = (ri, i)
                    break
        if best is None:
            break
        ri, x = best
        r = rels[ri]
        pos = next(k for k, (i, _) in enumerate(r) if i == x)
        sign = r[pos][1]
        rest = r[pos + 1:] + r[:pos]  # r ~ x^sign . rest, so x^sign = rest^-1
        rest_w = Word(gens, _free(rest))
        value = invert(rest_w) if sign > 0 else rest_w
        others = [rr for k, rr in enumerate(rels) if k != ri]
        rels = normalize([_subst_letters(rr, x, value.letters) for rr in others])
        for k in list(subst):
            subst[k] = Word(gens, _free(_subst_letters(subst[k].letters, x, value.letters)))
        subst[x] = value
        alive.remove(x)

    new_gens = GeneratorSet(tuple(gens.names[i] for i in alive))
    renum = {old: new for new, old in enumerate(alive)}
    relators = tuple(Word(new_gens, tuple((renum[i], s) for i, s in r)) for r in rels)
    eliminated = {gens.names[k]: str(v) for k, v in subst.items()}
    return Simplification(Presentation(new_gens, relators), eliminated, exhausted)


def simplify_presentation(p: Presentation, budget: int = DEFAULT_BUDGET) -> Presentation:
    return simplify(p, budget).presentation


def _subst_letters(letters, x: int, value: Sequence[tuple[int, int]]):
    inv = tuple((i, -s) for i, s in reversed(value))
    out = []
    for i, s in letters:
        if i == x:
            out.extend(value if s > 0 else inv)
        else:
            out.append((i, s))
    return tuple(out)


class AbelianStatus(enum.Enum):
    CERTIFIED_ABELIAN = "CERTIFIED_ABELIAN"
    CERTIFIED_NONABELIAN_WITNESS = "CERTIFIED_NONABELIAN_WITNESS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class AbelianCertificate:
    status: AbelianStatus
    witness: Word | None = None
    reason: str = ""
    # (quotient group, generator images) used for a nonabelian witness
    quotient: tuple | None = None


def _is_relator_conjugate(p: Presentation, w: Word) -> bool:
    w = cyclic_reduce(w)
    if not w:
        return True
    forms = {c.letters for c in cyclic_permutations(w)} | {c.letters for c in cyclic_permutations(invert(w))}
    return any(r.letters in forms for r in p.relators)


def certify_abelian(
    p: Presentation,
    budget: int = DEFAULT_BUDGET,
    quotients: Sequence[tuple[FiniteGroup, Sequence[int]]] = (),
) -> AbelianCertificate:
    """
    Sound, incomplete abelianness test for a finitely presented group.

    CERTIFIED_ABELIAN: after simplification there is at most one generator,
    or every commutator of two generators is a cyclic conjugate of a
    relator (or its inverse), or the group is finite within ``budget``
    cosets and all generator commutators trace trivially.

    CERTIFIED_NONABELIAN_WITNESS: some supplied quotient (a finite group
    with one image per generator of ``p``, killing every relator) sends two
    generators to non-commuting elements; the witness is their commutator.
    """
    for q, images in quotients:
        if len(images) != p.rank or not hom_kills_relators(p, q, images):
            continue
        for i in range(p.rank):
            for j in range(i + 1, p.rank):
                if q.mul(images[i], images[j]) != q.mul(images[j], images[i]):
                    w = commutator(p.gens.generator(i), p.gens.generator(j))
                    return AbelianCertificate(
                        AbelianStatus.CERTIFIED_NONABELIAN_WITNESS, w, f"images in {q.name} do not commute", (q, tuple(images))
                    )
    s = simplify(p, budget)
    sp = s.presentation
    if sp.rank <= 1:
        return AbelianCertificate(AbelianStatus.CERTIFIED_ABELIAN, reason=f"{sp.rank} generator(s) after simplification")
    pairs = [(i, j) for i in range(sp.rank) for j in range(i + 1, sp.rank)]

    def comm(i, j):
        return commutator(sp.gens.generator(i), sp.gens.generator(j))

    if all(_is_relator_conjugate(sp, comm(i, j)) for i, j in pairs):
        return AbelianCertificate(AbelianStatus.CERTIFIED_ABELIAN, reason="every generator commutator is a relator conjugate")
    try:
        # the budget counts table entries
        t = enumerate_cosets(sp, SubgroupSpec(()), limit=max(budget // (2 * sp.rank), 1))
    except LimitExceeded:
        return AbelianCertificate(AbelianStatus.UNKNOWN, reason="no certificate within budget")
    for i, j in pairs:
        if trace(t, 0, comm(i, j)) != 0:
            # the group is finite, so it is its own witness quotient
            u, v = p.gens.word(sp.gens.names[i]), p.gens.word(sp.gens.names[j])
            return AbelianCertificate(
                AbelianStatus.CERTIFIED_NONABELIAN_WITNESS, commutator(u, v), f"finite group of order {t.index} is nonabelian"
            )
    return AbelianCertificate(AbelianStatus.CERTIFIED_ABELIAN, reason=f"finite group of order {t.index}, commutators trivial")
