"""
Free-group words over a named generator alphabet.

A word is stored as a tuple of ``(generator index, sign)`` letters and is
always freely reduced.  The text syntax is whitespace separated tokens, a
token being a generator name optionally followed by a single apostrophe
for the inverse, e.g. ``"a b' c"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

_NAME = re.compile(r"^[A-Za-z0-9_]+$")


class WordError(ValueError):
    pass


class InvalidGenerator(WordError):
    pass


class GeneratorMismatch(WordError):
    pass


class MissingImage(WordError):
    pass


@dataclass(frozen=True)
class GeneratorSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        for name in names:
            if not isinstance(name, str) or not _NAME.match(name):
                raise WordError(f"invalid generator name {name!r}")
        if len(set(names)) != len(names):
            raise WordError(f"duplicate generator names in {names}")

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidGenerator(f"unknown generator {name!r}") from None

    def word(self, text: str) -> "Word":
        return parse_word(self, text)

    def generator(self, i: int) -> "Word":
        return Word(self, ((i, 1),))

    @property
    def identity(self) -> "Word":
        return Word(self, ())


@dataclass(frozen=True)
class Word:
    gens: GeneratorSet
    letters: tuple[tuple[int, int], ...]

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return concat_reduce(self, other)

    def inverse(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else invert(self)
        out = self.gens.identity
        for _ in range(abs(k)):
            out = concat_reduce(out, base)
        return out

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"Word({format_word(self)!r})"

    @property
    def codes(self) -> tuple[int, ...]:
        """Letters as table columns: ``2*i`` for a generator, ``2*i+1`` for its inverse."""
        return tuple(2 * i + (0 if s > 0 else 1) for i, s in self.letters)

    def generators_used(self) -> set[int]:
        return {i for i, _ in self.letters}


def _free_reduce(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    stack: list[tuple[int, int]] = []
    for i, s in letters:
        if stack and stack[-1][0] == i and stack[-1][1] == -s:
            stack.pop()
        else:
            stack.append((i, s))
    return tuple(stack)


def reduce(gens: GeneratorSet, letters: Iterable[tuple[int, int]]) -> Word:
    """Freely reduce a raw letter sequence."""
    checked = []
    n = len(gens)
    for item in letters:
        i, s = item
        if not isinstance(i, int) or not 0 <= i < n:
            raise InvalidGenerator(f"generator index {i!r} out of range for {gens.names}")
        if s not in (1, -1):
            raise WordError(f"sign must be +1 or -1, got {s!r}")
        checked.append((i, s))
    return Word(gens, _free_reduce(checked))


def from_codes(gens: GeneratorSet, codes: Iterable[int]) -> Word:
    return reduce(gens, ((c >> 1, -1 if c & 1 else 1) for c in codes))


def _check_same(u: Word, v: Word):
    if u.gens != v.gens:
        raise GeneratorMismatch(f"words over {u.gens.names} and {v.gens.names}")


def concat_reduce(u: Word, v: Word) -> Word:
    _check_same(u, v)
    # only the junction can cancel
    a, b = list(u.letters), v.letters
    k = 0
    while a and k < len(b) and a[-1][0] == b[k][0] and a[-1][1] == -b[k][1]:
        a.pop()
        k += 1
    return Word(u.gens, tuple(a) + b[k:])


def invert(u: Word) -> Word:
    return Word(u.gens, tuple((i, -s) for i, s in reversed(u.letters)))


def commutator(u: Word, v: Word) -> Word:
    """``u v u^-1 v^-1``, reduced."""
    _check_same(u, v)
    return reduce(u.gens, u.letters + v.letters + invert(u).letters + invert(v).letters)


def substitute(u: Word, images: Mapping) -> Word:
    """
    Apply the homomorphism defined by ``images`` to ``u``.

    ``images`` maps generators (by index or by name) of ``u`` to words over
    a common target generator set.
    """
    by_index: dict[int, Word] = {}
    for key, w in images.items():
        i = u.gens.index(key) if isinstance(key, str) else key
        by_index[i] = w
    target = None
    letters: list[tuple[int, int]] = []
    for i, s in u.letters:
        if i not in by_index:
            raise MissingImage(f"no image for generator {u.gens.names[i]!r}")
        w = by_index[i]
        if target is None:
            target = w.gens
        elif w.gens != target:
            raise GeneratorMismatch("images live over different generator sets")
        letters.extend(w.letters if s > 0 else invert(w).letters)
    if target is None:
        # empty word: pick the target alphabet from any image
        target = next(iter(by_index.values())).gens if by_index else u.gens
    return Word(target, _free_reduce(letters))


def cyclic_reduce(u: Word) -> Word:
    letters = u.letters
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo][0] == letters[hi - 1][0] and letters[lo][1] == -letters[hi - 1][1]:
        lo += 1
        hi -= 1
    return Word(u.gens, letters[lo:hi])


def cyclic_permutations(u: Word) -> list[Word]:
    n = len(u.letters)
    return [Word(u.gens, u.letters[k:] + u.letters[:k]) for k in range(max(n, 1))]


def parse_word(gens: GeneratorSet, text: str) -> Word:
    letters = []
    for token in text.split():
        sign = 1
        if token.endswith("'"):
            token, sign = token[:-1], -1
        if not token or "'" in token:
            raise WordError(f"malformed token in {text!r}")
        letters.append((gens.index(token), sign))
    return reduce(gens, letters)


def format_word(u: Word) -> str:
    return " ".join(u.gens.names[i] + ("" if s > 0 else "'") for i, s in u.letters)


@dataclass(frozen=True)
class Presentation:
    """
    Generators and relators of a finitely presented group.

    Relators are freely and cyclically reduced on construction; relators
    that reduce to the identity are dropped.
    """

    gens: GeneratorSet
    relators: tuple[Word, ...]

    def __post_init__(self):
        rels = []
        for r in self.relators:
            if r.gens != self.gens:
                raise GeneratorMismatch(f"relator {r} is not over {self.gens.names}")
            r = cyclic_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def parse(cls, generators: Sequence[str] | str, relators: Sequence[str] = ()) -> "Presentation":
        if isinstance(generators, str):
            generators = generators.replace(",", " ").split()
        gens = GeneratorSet(tuple(generators))
        return cls(gens, tuple(parse_word(gens, r) for r in relators))

    @property
    def rank(self) -> int:
        return len(self.gens)

    def word(self, text: str) -> Word:
        return parse_word(self.gens, text)

    def __str__(self):
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {', '.join(self.gens.names)} | {rels} >"
