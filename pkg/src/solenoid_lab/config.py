"""
INI configuration for the command line tool.

Sections: [group] (generators, relators), then one of [tower] or [model],
and an optional [analysis].  Word values use the word grammar
(space-separated generator names, trailing ' for inverses) and are
double-quoted; lists are comma-separated, and lists of subgroups are
separated by ``|``.

    [group]
    generators = a, b
    relators = "a b a' b"

    [tower]
    builder = explicit
    subgroups = "a a", "b b" | "a a a a", "b b b b"
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass, field, replace
from typing import Any

from . import catalog as cat
from .cosets import SubgroupSpec
from .finite import FiniteGroup, Subgroup, from_permutations, from_presentation, parse_cycles, subgroup_generated
from .tower import Cyclic, Explicit, HomKernelChain, ModPHomologyKernels, TowerSpec
from .words import GeneratorSet, Presentation, WordError, parse_word


class ConfigError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


KEYS = {
    "group": {"generators", "relators", "name"},
    "tower": {"builder", "depth", "multipliers", "subgroups", "targets", "degree", "prime", "name"},
    "model": {"mode", "group", "chain", "gamma", "orders", "max_chain_steps", "normal_chains", "chain_images_only"},
    "analysis": {"limit", "catalog", "checks", "seed", "samples", "budget", "search_depth"},
}

TOWER_CHECKS = ("regularity", "levels", "fiber", "invariants", "verdict", "witnesses")
MODEL_CHECKS = ("validate", "components", "iso", "definitional", "inverse", "vsets")


@dataclass(frozen=True)
class AnalysisConfig:
    limit: int | None = None
    catalog: tuple[str, ...] = cat.DEFAULT_QUOTIENT_CATALOG
    checks: tuple[str, ...] | None = None  # None: every check for the config kind
    seed: int = 0
    samples: int = 10000
    budget: int = 10**4
    search_depth: int | None = None


@dataclass(frozen=True, eq=False)
class ModelConfig:
    mode: str  # "single" or "sweep"
    group: FiniteGroup | None = None
    chain: tuple[Subgroup, ...] = ()
    gamma: Subgroup | None = None
    orders: tuple[int, ...] = ()
    max_chain_steps: int = 2
    normal_chains: bool = True
    chain_images_only: bool = False


@dataclass(frozen=True, eq=False)
class Config:
    kind: str  # "tower", "model" or "group"
    presentation: Presentation | None
    tower: TowerSpec | None = None
    model: ModelConfig | None = None
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    # section -> key -> raw text, in file order
    echo: dict = field(default_factory=dict)

    def with_overrides(self, depth: int | None = None, limit: int | None = None, seed: int | None = None) -> "Config":
        cfg = self
        if depth is not None:
            if cfg.tower is None:
                raise ConfigError("--depth needs a [tower] section")
            cfg = replace(cfg, tower=replace(cfg.tower, depth=depth))
        a = cfg.analysis
        if limit is not None:
            a = replace(a, limit=limit)
        if seed is not None:
            a = replace(a, seed=seed)
        return replace(cfg, analysis=a)


# ----------------------------------------------------------------------
# low level value parsing


def split_top(value: str, sep: str) -> list[str]:
    """Split at ``sep`` outside double quotes; pieces are stripped, empty ones dropped."""
    out, cur, quoted = [], [], False
    for ch in value:
        if ch == '"':
            quoted = not quoted
        if ch == sep and not quoted:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    if quoted:
        raise ValueError("unterminated quote")
    out.append("".join(cur).strip())
    return [p for p in out if p]


def unquote(s: str) -> str:
    s = s.strip()
    if len(s) >= 2 and s[0] == s[-1] == '"':
        return s[1:-1]
    return s


def _line_of(text: str, section: str, key: str | None = None) -> int | None:
    cur = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        m = re.match(r"\[([^\]]+)\]", line)
        if m:
            cur = m.group(1).strip().lower()
            if key is None and cur == section:
                return n
            continue
        if cur == section and key is not None:
            k = re.split(r"[=:]", line, maxsplit=1)[0].strip().lower()
            if k == key:
                return n
    return None


class _Reader:
    def __init__(self, text: str, cp: configparser.ConfigParser):
        self.text = text
        self.cp = cp

    def err(self, section: str, key: str | None, message: str) -> ConfigError:
        return ConfigError(f"[{section}] {key + ': ' if key else ''}{message}", _line_of(self.text, section, key))

    def get(self, section: str, key: str, default: Any = None) -> str | None:
        if not self.cp.has_option(section, key):
            return default
        return self.cp.get(section, key)

    def int(self, section: str, key: str, default: int | None = None, minimum: int | None = None) -> int | None:
        raw = self.get(section, key)
        if raw is None:
            return default
        try:
            v = int(raw.replace("_", ""))
        except ValueError:
            raise self.err(section, key, f"expected an integer, got {raw!r}") from None
        if minimum is not None and v < minimum:
            raise self.err(section, key, f"must be >= {minimum}")
        return v

    def bool(self, section: str, key: str, default: bool) -> bool:
        if not self.cp.has_option(section, key):
            return default
        try:
            return self.cp.getboolean(section, key)
        except ValueError:
            raise self.err(section, key, "expected true or false") from None

    def list(self, section: str, key: str, sep: str = ",") -> list[str]:
        raw = self.get(section, key, "")
        try:
            return [unquote(p) for p in split_top(raw, sep)]
        except ValueError as e:
            raise self.err(section, key, str(e)) from None

    def groups(self, section: str, key: str) -> list[list[str]]:
        raw = self.get(section, key, "")
        try:
            return [[unquote(w) for w in split_top(block, ",")] for block in split_top(raw, "|")]
        except ValueError as e:
            raise self.err(section, key, str(e)) from None

    def words(self, section: str, key: str, gens: GeneratorSet, texts: list[str]):
        try:
            return [parse_word(gens, t) for t in texts]
        except (WordError, KeyError) as e:
            msg = e.args[0] if e.args else str(e)
            raise self.err(section, key, f"bad word: {msg}") from None


# ----------------------------------------------------------------------


def parse_config(text: str) -> Config:
    cp = configparser.ConfigParser(interpolation=None, strict=True, comment_prefixes=("#", ";"), inline_comment_prefixes=None)
    cp.optionxform = str.lower
    try:
        cp.read_string(text)
    except configparser.MissingSectionHeaderError as e:
        raise ConfigError("expected a [section] header", e.lineno) from None
    except configparser.ParsingError as e:
        lineno = e.errors[0][0] if e.errors else None
        raise ConfigError("syntax error", lineno) from None
    except (configparser.DuplicateOptionError, configparser.DuplicateSectionError) as e:
        raise ConfigError(str(e).split(":")[-1].strip() if e.lineno is None else e.message, e.lineno) from None
    r = _Reader(text, cp)

    for sec in cp.sections():
        if sec not in KEYS:
            raise ConfigError(f"unknown section [{sec}]", _line_of(text, sec.lower()))
        for key in cp.options(sec):
            if key not in KEYS[sec]:
                raise r.err(sec, key, "unknown key")
    if cp.has_section("tower") and cp.has_section("model"):
        raise ConfigError("give either [tower] or [model], not both", _line_of(text, "model"))

    echo = {sec: {k: cp.get(sec, k) for k in cp.options(sec)} for sec in cp.sections()}
    pres = _parse_group(r) if cp.has_section("group") else None
    analysis = _parse_analysis(r) if cp.has_section("analysis") else AnalysisConfig()

    if cp.has_section("tower"):
        if pres is None:
            raise ConfigError("[tower] needs a [group] section", _line_of(text, "tower"))
        spec = _parse_tower(r, pres)
        _check_names(r, analysis, TOWER_CHECKS)
        return Config("tower", pres, tower=spec, analysis=analysis, echo=echo)
    if cp.has_section("model"):
        model = _parse_model(r, pres, analysis)
        _check_names(r, analysis, MODEL_CHECKS)
        return Config("model", pres, model=model, analysis=analysis, echo=echo)
    if pres is None:
        raise ConfigError("config has neither [group], [tower] nor [model]")
    return Config("group", pres, analysis=analysis, echo=echo)


def _check_names(r: _Reader, a: AnalysisConfig, allowed):
    for c in a.checks or ():
        if c not in allowed:
            raise r.err("analysis", "checks", f"unknown check {c!r}; expected some of {', '.join(allowed)}")


def _parse_group(r: _Reader) -> Presentation:
    names = [n for part in r.list("group", "generators") for n in part.split()]
    if not names and r.get("group", "generators") is None:
        raise r.err("group", None, "missing generators")
    for n in names:
        if not re.fullmatch(r"[A-Za-z0-9_]+", n):
            raise r.err("group", "generators", f"bad generator name {n!r}")
    if len(set(names)) != len(names):
        raise r.err("group", "generators", "duplicate generator names")
    gens = GeneratorSet(tuple(names))
    rels = r.words("group", "relators", gens, r.list("group", "relators"))
    return Presentation(gens, tuple(rels))


def _parse_analysis(r: _Reader) -> AnalysisConfig:
    s = "analysis"
    catalog = tuple(r.list(s, "catalog")) or cat.DEFAULT_QUOTIENT_CATALOG
    for name in catalog:
        if name not in cat.PRESENTATIONS:
            raise r.err(s, "catalog", f"unknown group {name!r}")
    checks = tuple(r.list(s, "checks")) if r.get(s, "checks") is not None else None
    return AnalysisConfig(
        limit=r.int(s, "limit", None, minimum=1),
        catalog=catalog,
        checks=checks,
        seed=r.int(s, "seed", 0),
        samples=r.int(s, "samples", 10000, minimum=1),
        budget=r.int(s, "budget", 10**4, minimum=1),
        search_depth=r.int(s, "search_depth", None, minimum=0),
    )


def _parse_tower(r: _Reader, p: Presentation) -> TowerSpec:
    s = "tower"
    kind = (r.get(s, "builder") or "").strip().lower()
    depth = r.int(s, "depth", None, minimum=0)
    name = r.get(s, "name", kind)
    if kind == "cyclic":
        if p.rank != 1:
            raise r.err(s, "builder", "cyclic towers need exactly one generator")
        raw = r.get(s, "multipliers")
        if raw is None:
            raise r.err(s, None, "cyclic builder needs multipliers")
        try:
            mult = tuple(int(x) for x in raw.replace(",", " ").split())
        except ValueError:
            raise r.err(s, "multipliers", f"expected integers, got {raw!r}") from None
        if not mult or any(k < 2 for k in mult):
            raise r.err(s, "multipliers", "multipliers must be >= 2")
        builder = Cyclic(mult)
        depth = len(mult) if depth is None else depth
    elif kind == "explicit":
        blocks = r.groups(s, "subgroups")
        if not blocks:
            raise r.err(s, None, "explicit builder needs subgroups")
        subs = tuple(SubgroupSpec(tuple(r.words(s, "subgroups", p.gens, b))) for b in blocks)
        builder = Explicit(subs)
        depth = len(subs) if depth is None else depth
        if depth > len(subs):
            raise r.err(s, "depth", f"only {len(subs)} subgroups given")
    elif kind in ("hom-kernel", "homkernel", "hom_kernel"):
        degree = r.int(s, "degree", None, minimum=1)
        blocks = r.groups(s, "targets")
        if not blocks:
            raise r.err(s, None, "hom-kernel builder needs targets")
        maps = []
        for b in blocks:
            if len(b) != p.rank:
                raise r.err(s, "targets", f"each target needs {p.rank} permutations, got {len(b)}")
            try:
                n = max([len(parse_cycles(c)) for c in b] + [degree or 1])
                perms = [parse_cycles(c, n) for c in b]
            except ValueError as e:
                raise r.err(s, "targets", str(e)) from None
            if degree is not None and n > degree:
                raise r.err(s, "targets", f"a cycle moves a point beyond degree {degree}")
            q = from_permutations(perms, name="perm")
            # from_permutations lists generator images first-seen, one per input
            maps.append((q, tuple(q.gen_images)))
        builder = HomKernelChain(tuple(maps))
        depth = len(maps) if depth is None else depth
    elif kind in ("mod-p", "modp", "mod_p"):
        prime = r.int(s, "prime", None, minimum=2)
        if prime is None:
            raise r.err(s, None, "mod-p builder needs prime")
        if any(prime % d == 0 for d in range(2, int(prime**0.5) + 1)):
            raise r.err(s, "prime", f"{prime} is not prime")
        if depth is None:
            raise r.err(s, None, "mod-p builder needs depth")
        builder = ModPHomologyKernels(prime)
    else:
        raise r.err(s, "builder", f"expected cyclic, explicit, hom-kernel or mod-p, got {kind!r}")
    return TowerSpec(p, builder, depth, name)


def _subgroup_of(r: _Reader, g: FiniteGroup, gens: GeneratorSet, key: str, texts: list[str]) -> Subgroup:
    ws = r.words("model", key, gens, texts)
    return subgroup_generated(g, [g.evaluate(w) for w in ws])


def _parse_model(r: _Reader, p: Presentation | None, a: AnalysisConfig) -> ModelConfig:
    s = "model"
    mode = (r.get(s, "mode") or "single").strip().lower()
    chain_images_only = r.bool(s, "chain_images_only", False)
    if mode == "sweep":
        try:
            orders = tuple(int(x) for x in r.list(s, "orders")) or (4, 6, 8, 12)
        except ValueError:
            raise r.err(s, "orders", "expected integers") from None
        return ModelConfig(
            "sweep",
            orders=orders,
            max_chain_steps=r.int(s, "max_chain_steps", 2, minimum=0),
            normal_chains=r.bool(s, "normal_chains", True),
            chain_images_only=chain_images_only,
        )
    if mode != "single":
        raise r.err(s, "mode", f"expected single or sweep, got {mode!r}")
    name = r.get(s, "group")
    if name is not None:
        name = unquote(name)
        if name not in cat.PRESENTATIONS:
            raise r.err(s, "group", f"unknown group {name!r}")
        g = cat.group(name)
    elif p is not None:
        g = from_presentation(p, name="G", limit=a.limit)
    else:
        raise r.err(s, None, "a single model needs [group] or model.group")
    gens = g.gens
    chain = [Subgroup.whole(g)]
    for block in r.groups(s, "chain"):
        chain.append(_subgroup_of(r, g, gens, "chain", block))
    if r.get(s, "gamma") is None:
        raise r.err(s, None, "a single model needs gamma")
    gamma = _subgroup_of(r, g, gens, "gamma", r.list(s, "gamma"))
    return ModelConfig("single", g, tuple(chain), gamma, chain_images_only=chain_images_only)
