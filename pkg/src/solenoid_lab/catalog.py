"""Standard presentations, named finite groups and example towers' base groups."""

from __future__ import annotations

from functools import lru_cache

from .finite import FiniteGroup, from_presentation
from .words import Presentation


def cyclic(n: int) -> Presentation:
    return Presentation.parse("a", [" ".join(["a"] * n)])


def _power(w: str, n: int) -> str:
    return " ".join([w] * n)


# name -> (generators, relators, order)
PRESENTATIONS: dict[str, tuple[str, tuple[str, ...], int]] = {
    "Z2xZ2": ("a b", ("a a", "b b", "a b a' b'"), 4),
    "S3": ("x y", ("x x", "y y y", "x y x y"), 6),
    "Z4xZ2": ("a b", ("a a a a", "b b", "a b a' b'"), 8),
    "Z2xZ2xZ2": ("a b c", ("a a", "b b", "c c", "a b a' b'", "a c a' c'", "b c b' c'"), 8),
    "D4": ("r s", ("r r r r", "s s", "r s r s"), 8),
    "Q8": ("x y", ("x x x x", "x x y' y'", "y' x y x"), 8),
    "Z6xZ2": ("a b", (_power("a", 6), "b b", "a b a' b'"), 12),
    "A4": ("x y", ("x x", "y y y", _power("x y", 3)), 12),
    "D6": ("r s", (_power("r", 6), "s s", "r s r s"), 12),
    "Dic3": ("x y", (_power("x", 6), "x x x y' y'", "y' x y x"), 12),
    "S4": ("x y", ("x x", "y y y", _power("x y", 4)), 24),
    "A5": ("x y", ("x x", "y y y", _power("x y", 5)), 60),
}

for _n in range(1, 13):
    PRESENTATIONS[f"Z{_n}"] = ("a", (_power("a", _n),), _n)


def presentation(name: str) -> Presentation:
    try:
        gens, rels, _ = PRESENTATIONS[name]
    except KeyError:
        raise KeyError(f"unknown group {name!r}; known: {sorted(PRESENTATIONS)}") from None
    return Presentation.parse(gens, rels)


def known_order(name: str) -> int:
    return PRESENTATIONS[name][2]


@lru_cache(maxsize=None)
def group(name: str) -> FiniteGroup:
    return from_presentation(presentation(name), name=name)


def groups_of_order(*orders: int) -> list[FiniteGroup]:
    """Seed groups of the given orders (every isomorphism type for orders 4, 6, 8, 12)."""
    names = [n for n, (_, _, k) in PRESENTATIONS.items() if k in orders]
    names.sort(key=lambda n: (PRESENTATIONS[n][2], n))
    return [group(n) for n in names]


ORACLE_CATALOG = [f"Z{n}" for n in range(1, 13)] + ["S3", "D4", "Q8", "A4"]
DEFAULT_QUOTIENT_CATALOG = ("S3", "S4", "A5")

# base groups of the bundled towers
FREE_CYCLIC = Presentation.parse("a", ())
KLEIN_BOTTLE = Presentation.parse("a b", ("a b a' b",))
GENUS2 = Presentation.parse("a b c d", ("a b a' b' c d c' d'",))
