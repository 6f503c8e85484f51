"""solenoid-lab command line entry point."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, parse_config, split_top, unquote
from .cosets import LimitExceeded, RelatorViolation, SubgroupSpec, enumerate_cosets, is_normal
from .report import emit, run
from .schreier import rewrite_subgroup_presentation, simplify
from .tower import TowerError
from .words import WordError, parse_word

EXIT_OK, EXIT_CONFIG, EXIT_LIMIT, EXIT_INVARIANT = 0, 1, 2, 3

# report entries that are invariants; a false value aborts with EXIT_INVARIANT
INVARIANT_KEYS = (
    "regularity",
    "fiber_action",
    "invariants",
    "witnesses_verified",
    "lemma_equivalence",
    "abelian_models_bihomogeneous",
    "v_sets_cover",
    "component_iso",
)


def _load(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e.strerror}") from None
    return parse_config(text)


def _subgroup(cfg, text: str) -> SubgroupSpec:
    try:
        return SubgroupSpec(tuple(parse_word(cfg.presentation.gens, unquote(w)) for w in split_top(text, ",")))
    except WordError as e:
        raise ConfigError(f"--subgroup: {e}") from None


def _violations(checks: dict) -> list[str]:
    bad = []
    for k in INVARIANT_KEYS:
        v = checks.get(k)
        if v is False:
            bad.append(k)
        elif isinstance(v, dict):
            bad.extend(f"{k}.{kk}" for kk, vv in v.items() if vv is False)
    return bad


def cmd_analyze(args) -> int:
    cfg = _load(args.config).with_overrides(depth=args.depth, limit=args.limit, seed=args.seed)
    rep = run(cfg, timing=args.timing)
    sys.stdout.write(emit(rep, args.format))
    if not rep.complete:
        print(f"solenoid-lab: {rep.checks['status']}", file=sys.stderr)
        return EXIT_LIMIT
    bad = _violations(rep.checks)
    if bad:
        print(f"solenoid-lab: invariant violation: {', '.join(bad)}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_model(args) -> int:
    cfg = _load(args.config)
    if cfg.kind != "model":
        raise ConfigError("the model command needs a [model] section")
    return cmd_analyze(args)


def cmd_cosets(args) -> int:
    cfg = _load(args.config).with_overrides(limit=args.limit)
    if cfg.presentation is None:
        raise ConfigError("needs a [group] section")
    h = _subgroup(cfg, args.subgroup)
    t = enumerate_cosets(cfg.presentation, h, cfg.analysis.limit)
    names = cfg.presentation.gens.names
    cols = [x for n in names for x in (n, n + "'")]
    print(f"index {t.index}; normal: {'yes' if is_normal(t) else 'no'}")
    if args.index_only:
        return EXIT_OK
    width = max(len(str(t.index)), max((len(c) for c in cols), default=1), 3)
    print("coset".rjust(5) + " " + " ".join(c.rjust(width) for c in cols) + "  representative")
    for c, row in enumerate(t.rows):
        rep = str(t.representatives[c]) or "e"
        print(str(c).rjust(5) + " " + " ".join(str(x).rjust(width) for x in row) + "  " + rep)
    return EXIT_OK


def cmd_subgroup_presentation(args) -> int:
    cfg = _load(args.config).with_overrides(limit=args.limit)
    if cfg.presentation is None:
        raise ConfigError("needs a [group] section")
    h = _subgroup(cfg, args.subgroup)
    t = enumerate_cosets(cfg.presentation, h, cfg.analysis.limit)
    sub = rewrite_subgroup_presentation(t)
    print(f"index {t.index}: {sub.rank} Schreier generators, {len(sub.relators)} relators")
    if args.raw:
        print(sub)
        return EXIT_OK
    s = simplify(sub, cfg.analysis.budget)
    p = s.presentation
    note = " (budget exhausted)" if s.budget_exhausted else ""
    print(f"simplified{note}: {p.rank} generators, {len(p.relators)} relators")
    print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="solenoid-lab", description="Solenoid towers and finite solenoid models.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("config", help="INI config file")
        p.add_argument("--limit", type=int, help="coset/quotient size limit (default from SOLENOID_LAB_LIMIT or 10^6)")
        if fmt:
            p.add_argument("--format", choices=("text", "json", "dot"), default="text")
            p.add_argument("--seed", type=int)
            p.add_argument("--timing", action="store_true", help="fill in the timing section")

    p = sub.add_parser("analyze", help="analyze a tower or model config")
    common(p)
    p.add_argument("--depth", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("model", help="check a finite model or run a model sweep")
    common(p)
    p.set_defaults(func=cmd_model, depth=None)

    p = sub.add_parser("cosets", help="print a coset table (cosets numbered from 0)")
    common(p, fmt=False)
    p.add_argument("--subgroup", required=True, help='comma-separated words, e.g. "a a, b"')
    p.add_argument("--index-only", action="store_true", help="print the index without the table")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("subgroup-presentation", help="Reidemeister-Schreier presentation of a subgroup")
    common(p, fmt=False)
    p.add_argument("--subgroup", required=True)
    p.add_argument("--raw", action="store_true", help="skip simplification")
    p.set_defaults(func=cmd_subgroup_presentation)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    try:
        return args.func(args)
    except (ConfigError, RelatorViolation, TowerError) as e:
        print(f"solenoid-lab: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except LimitExceeded as e:
        print(f"solenoid-lab: limit exceeded: {e}", file=sys.stderr)
        return EXIT_LIMIT
    except AssertionError as e:
        print(f"solenoid-lab: invariant violation: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
