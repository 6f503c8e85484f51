"""
Finite models (Gamma, chain, gamma) of a solenoid's structure group data.

``gamma_big`` plays the structure group, ``chain`` its neighbourhood base
Gamma_0 ⊇ Gamma_1 ⊇ ... of open subgroups, and ``gamma_char`` the
characteristic group.  Density of gamma is replaced by its finite
shadow: gamma . Gamma_i = Gamma for every chain member.

Components (left cosets of gamma) are indexed as in
:func:`finite.left_coset_space`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .finite import (
    CosetSpace,
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    enumerate_monomorphisms_filtered,
    is_abelian,
    left_coset_space,
    normal_subgroups,
)


class WellDefinednessViolation(AssertionError):
    pass


@dataclass
class Diagnostics:
    valid: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.valid


@dataclass(eq=False)
class FiniteSolenoidModel:
    gamma_big: FiniteGroup
    chain: tuple[Subgroup, ...]
    gamma_char: Subgroup
    # restrict Mon to maps whose image is a chain member
    chain_images_only: bool = False

    def __post_init__(self):
        self.chain = tuple(self.chain)

    @cached_property
    def local_chars(self) -> tuple[Subgroup, ...]:
        """gamma_i = gamma ∩ Gamma_i for each chain member."""
        return tuple(self.gamma_char.intersect(s) for s in self.chain)

    @cached_property
    def components(self) -> CosetSpace:
        return left_coset_space(self.gamma_big, self.gamma_char)

    @cached_property
    def monomorphisms(self) -> tuple[GroupHom, ...]:
        return tuple(char_monomorphisms(self))

    def describe(self) -> str:
        orders = ", ".join(str(s.order) for s in self.chain)
        return f"{self.gamma_big.name}: chain orders ({orders}), |gamma| = {self.gamma_char.order}"


def validate_model(m: FiniteSolenoidModel) -> Diagnostics:
    g = m.gamma_big
    problems = []
    if not m.chain:
        problems.append("chain is empty")
    for k, s in enumerate(m.chain):
        if s.parent is not g:
            problems.append(f"chain member {k} lives in another group")
        elif not s.is_closed():
            problems.append(f"chain member {k} is not a subgroup")
    if m.chain and m.chain[0].order != g.order:
        problems.append("chain must start with the whole group")
    for k in range(len(m.chain) - 1):
        if not m.chain[k + 1] < m.chain[k]:
            problems.append(f"chain is not strictly descending at {k} -> {k + 1}")
    if m.gamma_char.parent is not g or not m.gamma_char.is_closed():
        problems.append("gamma is not a subgroup of the model group")
    if problems:
        return Diagnostics(False, problems)
    # density: gamma . Gamma_i = Gamma, i.e. gamma meets every left coset of Gamma_i
    for k, s in enumerate(m.chain):
        cosets = left_coset_space(g, s)
        hit = {cosets.label[a] for a in m.gamma_char.members}
        if len(hit) != len(cosets):
            missing = next(c for c in range(len(cosets)) if c not in hit)
            blk = cosets.blocks[missing]
            problems.append(f"density fails for Gamma_{k}: gamma misses the coset {list(blk)}")
    return Diagnostics(not problems, problems)


def path_components(m: FiniteSolenoidModel) -> CosetSpace:
    return m.components


def component_iso_check(m: FiniteSolenoidModel, j: int, i: int) -> bool:
    """Whether x gamma_j -> x gamma_i is a bijection Gamma_j/gamma_j -> Gamma_i/gamma_i."""
    if not (0 <= i < j < len(m.chain)):
        raise IndexError(f"need 0 <= i < j < {len(m.chain)}, got i={i}, j={j}")
    g = m.gamma_big
    big_j, big_i = m.chain[j], m.chain[i]
    small_j, small_i = m.local_chars[j], m.local_chars[i]
    src = left_coset_space(g, small_j)
    dst = left_coset_space(g, small_i)
    src_cosets = {src.label[x] for x in big_j.members}
    dst_cosets = {dst.label[x] for x in big_i.members}
    mapping: dict[int, int] = {}
    for x in big_j.members:
        a, b = src.label[x], dst.label[x]
        if mapping.setdefault(a, b) != b:
            return False
    image = set(mapping.values())
    return len(image) == len(src_cosets) and image == dst_cosets


def char_monomorphisms(m: FiniteSolenoidModel) -> list[GroupHom]:
    """The finite Mon(Gamma, gamma): filtered monomorphisms from every chain member."""
    out = []
    chain = m.chain if m.chain_images_only else None
    for big, small in zip(m.chain, m.local_chars):
        out.extend(enumerate_monomorphisms_filtered((big, small), (m.gamma_big, m.gamma_char), chain=chain))
    return out


def _representative_in(m: FiniteSolenoidModel, phi: GroupHom) -> list[int]:
    """Least element of each component lying in dom(phi)."""
    comps = m.components
    reps = [-1] * len(comps)
    for x in phi.source.members:
        c = comps.label[x]
        if reps[c] < 0:
            reps[c] = x
    if min(reps) < 0:
        raise WellDefinednessViolation("some component misses the domain (density fails)")
    return reps


def induced_component_map(m: FiniteSolenoidModel, phi: GroupHom) -> tuple[int, ...]:
    """
    The permutation of components x gamma -> phi(r) gamma, r ∈ x gamma ∩ dom(phi).

    Checks that every choice of r gives the same component and that the
    result is injective.
    """
    comps = m.components
    out = [-1] * len(comps)
    for x in phi.source.members:
        c = comps.label[x]
        d = comps.label[phi.images[x]]
        if out[c] < 0:
            out[c] = d
        elif out[c] != d:
            raise WellDefinednessViolation(f"component {c} has images {out[c]} and {d}")
    if min(out) < 0:
        raise WellDefinednessViolation("some component misses the domain (density fails)")
    if len(set(out)) != len(out):
        raise WellDefinednessViolation("induced component map is not injective")
    return tuple(out)


def _left_translations(m: FiniteSolenoidModel) -> list[tuple[int, ...]]:
    """Action of each w on components: z gamma -> w z gamma."""
    g, comps = m.gamma_big, m.components
    return [tuple(comps.label[g.mul(w, r)] for r in comps.representatives) for w in range(g.order)]


@dataclass
class CheckResult:
    holds: bool
    # per-case witness, e.g. (x, y) -> (w, index of phi) or z -> index of phi
    witnesses: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.holds


def is_algebraically_bihomogeneous_definitional(m: FiniteSolenoidModel) -> CheckResult:
    """
    For every pair of components X, Y look for w and phi such that
    z -> w phi(z) swaps X and Y.  Witnesses are keyed by component pairs
    (X <= Y) and hold (w, index into ``m.monomorphisms``).
    """
    comps = m.components
    n = len(comps)
    maps = [induced_component_map(m, phi) for phi in m.monomorphisms]
    trans = _left_translations(m)
    # for each phi and pair (X, Y): need w with w.phi(X) = Y and w.phi(Y) = X
    witnesses, failures = {}, []
    for x in range(n):
        for y in range(x, n):
            found = None
            for k, pm in enumerate(maps):
                px, py = pm[x], pm[y]
                for w, tw in enumerate(trans):
                    if tw[px] == y and tw[py] == x:
                        found = (w, k)
                        break
                if found:
                    break
            if found is None:
                failures.append((x, y))
            else:
                witnesses[(x, y)] = found
    return CheckResult(not failures, witnesses, failures)


def inverse_criterion_check(m: FiniteSolenoidModel) -> CheckResult:
    """For each z look for phi in Mon whose component map sends z gamma to z^-1 gamma."""
    g, comps = m.gamma_big, m.components
    maps = [induced_component_map(m, phi) for phi in m.monomorphisms]
    witnesses, failures = {}, []
    for z in range(g.order):
        src, dst = comps.label[z], comps.label[g.inv(z)]
        k = next((k for k, pm in enumerate(maps) if pm[src] == dst), None)
        if k is None:
            failures.append(z)
        else:
            witnesses[z] = k
    return CheckResult(not failures, witnesses, failures)


def v_sets(m: FiniteSolenoidModel) -> dict[tuple[int, int], frozenset[int]]:
    """
    V(phi, g) = {z : z . phi(r(z)) = g} for phi in Mon and g in gamma, where
    r(z) = z on the domain of phi and otherwise the least element of
    z gamma in the domain (any choice lands in the same component).
    """
    g = m.gamma_big
    comps = m.components
    out = {}
    for k, phi in enumerate(m.monomorphisms):
        reps = _representative_in(m, phi)
        values: dict[int, set[int]] = {}
        for z in range(g.order):
            r = z if phi.images[z] >= 0 else reps[comps.label[z]]
            v = g.mul(z, phi.images[r])
            if v in m.gamma_char:
                values.setdefault(v, set()).add(z)
        for v in m.gamma_char.members:
            out[(k, v)] = frozenset(values.get(v, ()))
    return out


def v_sets_cover_check(m: FiniteSolenoidModel) -> bool:
    covered = set()
    for s in v_sets(m).values():
        covered |= s
    return len(covered) == m.gamma_big.order


# ----------------------------------------------------------------------
# catalog


def model_catalog(
    groups: Sequence[FiniteGroup],
    max_chain_steps: int = 2,
    normal_chains: bool = True,
    chain_images_only: bool = False,
) -> list[FiniteSolenoidModel]:
    """
    Every valid model over the given groups: all chains Gamma = Gamma_0 > ... > Gamma_k
    with k <= ``max_chain_steps`` (of normal subgroups unless told otherwise)
    and every gamma with gamma . Gamma_k = Gamma.
    """
    models = []
    for g in groups:
        subs = all_subgroups(g)
        members = normal_subgroups(g) if normal_chains else subs
        whole = next(s for s in subs if s.order == g.order)
        chains: list[tuple[Subgroup, ...]] = [(whole,)]
        frontier = [(whole,)]
        for _ in range(max_chain_steps):
            nxt = []
            for ch in frontier:
                for s in members:
                    if s < ch[-1]:
                        nxt.append(ch + (s,))
            chains.extend(nxt)
            frontier = nxt
        for ch in chains:
            last = ch[-1]
            for gamma in subs:
                # |gamma . H| = |gamma||H| / |gamma ∩ H|
                if gamma.order * last.order == g.order * gamma.intersect(last).order:
                    models.append(FiniteSolenoidModel(g, ch, gamma, chain_images_only))
    return models


def abelian_model(m: FiniteSolenoidModel) -> bool:
    return is_abelian(m.gamma_big)
