# file: src/bcktop_cli/main.py
"""
CLI: PYTHONPATH=src python -m bcktop_cli <command> ...

  verify FILE
  topology FILE --dss NAME [--list-opens|--base|--connected]
  check-map FILE --hom NAME --source-dss A --target-dss B --props compatible,strict,...
  suite [FILE] [--max-length N] [--non-vacuity]
  enumerate FILE --what submodules|homs|dss [--target FILE2]

stdout - только результат (стабильный, для golden-тестов), логи - в stderr.
Exit: 0 - всё выполнено, 1 - какая-то проверка не выполнена, 2 - ошибка.
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections import Counter
from typing import Dict, List, Optional, Sequence

from algebra_core.algebra import is_bounded, is_commutative, is_implicative
from baig_topology.baig import build_baig, is_connected
from baig_topology.dss import Dss, enumerate_dss
from baig_topology.spaces import Subset, sort_subsets
from bcktop_env import setup_logging
from bcktop_errors import BckError, UsageError, format_set
from module_core.homs import enumerate_homs
from module_core.modules import BckModule
from module_core.submodules import enumerate_submodules
from morphisms.reports import VerdictReport, summarize
from morphisms.suite import build_default_corpus, corpus_from_modules, dss_label, run_theorem_suite
from morphisms.topologized import TopologizedHom

from .checks import HOM_PROPS, evaluate_check, evaluate_prop, format_outcome
from .loader import LoadedInstance, load_instance

log = logging.getLogger("bcktop.cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2


def _chain_length(raw: str) -> int:
    try:
        v = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {raw!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"chain length must be at least 1, got {v}")
    return v


def _flag(v: bool) -> str:
    return "true" if v else "false"


def _fmt(t, s: Subset) -> str:
    return format_set([t.label(p) for p in s])


# =====================
# verify
# =====================
def cmd_verify(args: argparse.Namespace) -> int:
    inst = load_instance(args.file)
    alg, mod = inst.algebra, inst.module
    print(
        f"algebra: size={alg.size} bounded={_flag(is_bounded(alg))} "
        f"commutative={_flag(is_commutative(alg))} implicative={_flag(is_implicative(alg))}"
    )
    print(f"module: size={mod.size}")
    for name, sub in sorted(inst.submodules.items()):
        print(f"submodule {name}: {format_set(sub.elements)}")
    for name, dss in sorted(inst.dss.items()):
        print(f"dss {name}: {dss_label(dss)}")
    for name, h in sorted(inst.homs.items()):
        print(f"hom {name}: {h.source.name} -> {h.target.name} ({','.join(str(v) for v in h.hom.table)})")

    failed = 0
    for c in inst.checks:
        r = evaluate_check(inst, c)
        line = f"check {c.name}: {c.claim} expect={_flag(c.expect)} {'ok' if r.holds else 'FAILED'}"
        if not r.holds:
            failed += 1
            line += f" witness={r.witness}"
        print(line)

    print("valid" if not failed else f"valid, {failed} check(s) failed")
    return EXIT_FAILED if failed else EXIT_OK


# =====================
# topology
# =====================
def cmd_topology(args: argparse.Namespace) -> int:
    inst = load_instance(args.file)
    t = build_baig(inst.dss_named(args.dss))
    if args.connected:
        print(f"connected={_flag(is_connected(t))}")
        return EXIT_OK
    family = sort_subsets(t.base) if args.base else t.opens
    for s in family:
        print(_fmt(t, s))
    return EXIT_OK


# =====================
# check-map
# =====================
def _parse_props(raw: str) -> List[str]:
    props = [p.strip().lower() for p in raw.split(",") if p.strip()]
    bad = [p for p in props if p not in HOM_PROPS]
    if bad or not props:
        raise UsageError(f"unknown property {', '.join(bad) or '(empty)'}; available: {', '.join(HOM_PROPS)}")
    return props


def cmd_check_map(args: argparse.Namespace) -> int:
    props = _parse_props(args.props)
    inst = load_instance(args.file)
    h = inst.hom_named(args.hom)
    th = TopologizedHom(
        hom=h.hom,
        source_topology=build_baig(h.source.dss_named(args.source_dss)),
        target_topology=build_baig(h.target.dss_named(args.target_dss)),
    )
    all_true = True
    for p in props:
        outcome = evaluate_prop(th, p)
        all_true = all_true and outcome[0]
        print(format_outcome(p, outcome))
    return EXIT_OK if all_true else EXIT_FAILED


# =====================
# suite
# =====================
def reachable_instances(inst: LoadedInstance) -> List[LoadedInstance]:
    """inst plus every file its homs reference, transitively; one entry per resolved path."""

    def key(i: LoadedInstance):
        return i.path if i.path is not None else i.name

    seen: Dict[object, LoadedInstance] = {key(inst): inst}
    stack = [inst]
    while stack:
        cur = stack.pop()
        for h in cur.homs.values():
            for other in (h.source, h.target):
                if key(other) not in seen:
                    seen[key(other)] = other
                    stack.append(other)
    return sorted(seen.values(), key=lambda i: (i.name, str(i.path)))


def corpus_names(instances: Sequence[LoadedInstance]) -> Dict[int, str]:
    """id(instance) -> имя в корпусе; одинаковые имена файлов из разных папок идут с полным путём."""
    stems = Counter(i.name for i in instances)
    return {id(i): i.name if stems[i.name] == 1 else str(i.path) for i in instances}


def _file_corpus(inst: LoadedInstance, max_length: int):
    instances = reachable_instances(inst)
    names = corpus_names(instances)
    modules: Dict[str, BckModule] = {names[id(i)]: i.module for i in instances}
    chains: Dict[str, Sequence[Dss]] = {
        names[id(i)]: [i.dss[k] for k in sorted(i.dss)] or enumerate_dss(i.module, max_length)
        for i in instances
    }
    homs: Optional[List[tuple]] = None
    declared = [h for i in instances for h in i.homs.values()]
    if declared:
        homs = [(names[id(h.source)], names[id(h.target)], h.hom) for h in declared]
    return corpus_from_modules(modules, chains=chains, homs=homs, max_length=max_length), instances


def _print_reports(reports: List[VerdictReport]) -> None:
    rows = summarize(reports)
    width = max([len("claim")] + [len(r.claim) for r in rows])
    print(f"{'claim':<{width}}  {'instances':>9}  {'held':>6}  {'vacuous':>7}  {'failed':>6}")
    for r in rows:
        print(f"{r.claim:<{width}}  {r.instances:>9}  {r.held:>6}  {r.vacuous:>7}  {r.failed:>6}")
    failed = [r for r in reports if not r.holds]
    print(f"total: {len(reports)} reports, {len(failed)} failed")
    for r in failed:
        print(f"FAIL {r.claim} [{r.instance}]: {r.witness}")


def cmd_suite(args: argparse.Namespace) -> int:
    if args.file:
        inst = load_instance(args.file)
        corpus, instances = _file_corpus(inst, args.max_length)
        reports = run_theorem_suite(corpus, non_vacuity=args.non_vacuity)
        for i in instances:
            reports.extend(evaluate_check(i, c) for c in i.checks)
        reports.sort(key=lambda r: r.sort_key)
    else:
        corpus = build_default_corpus(args.max_length)
        reports = run_theorem_suite(corpus, non_vacuity=True)
    _print_reports(reports)
    return EXIT_OK if all(r.holds for r in reports) else EXIT_FAILED


# =====================
# enumerate
# =====================
def cmd_enumerate(args: argparse.Namespace) -> int:
    inst = load_instance(args.file)
    mod = inst.module
    if args.what == "submodules":
        for s in enumerate_submodules(mod):
            print(format_set(s.elements))
    elif args.what == "dss":
        for d in enumerate_dss(mod, args.max_length):
            print(dss_label(d))
    else:
        target = load_instance(args.target).module if args.target else mod
        if target.algebra != mod.algebra:
            raise UsageError("source and target modules are over different algebras")
        for h in enumerate_homs(mod, target):
            print(" ".join(str(v) for v in h.table))
    return EXIT_OK


# =====================
# entry point
# =====================
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bcktop", description="Finite BCK-modules, Baig topologies, strict homomorphisms")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="Validate an instance file and evaluate its [check] blocks")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("topology", help="Print the Baig topology of a declared dss")
    p.add_argument("file")
    p.add_argument("--dss", required=True, help="dss name from the file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list-opens", action="store_true", help="All open sets (default)")
    mode.add_argument("--base", action="store_true", help="Cosets m + M_n forming the base")
    mode.add_argument("--connected", action="store_true", help="Print connectedness")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("check-map", help="Properties of a declared hom between two Baig spaces")
    p.add_argument("file")
    p.add_argument("--hom", required=True)
    p.add_argument("--source-dss", required=True)
    p.add_argument("--target-dss", required=True)
    p.add_argument("--props", default="compatible,strict", help=f"Comma-separated: {','.join(HOM_PROPS)}")
    p.set_defaults(func=cmd_check_map)

    p = sub.add_parser("suite", help="Run every claim on the file's instances (or the default corpus)")
    p.add_argument("file", nargs="?", default=None)
    p.add_argument("--max-length", type=_chain_length, default=3, help="Longest enumerated chain when a module declares none")
    p.add_argument("--non-vacuity", action="store_true", help="Also require both strict and non-strict compatible homs")
    p.set_defaults(func=cmd_suite)

    p = sub.add_parser("enumerate", help="Canonical listing of submodules, chains or homs")
    p.add_argument("file")
    p.add_argument("--what", choices=("submodules", "homs", "dss"), required=True)
    p.add_argument("--target", default=None, help="Target instance file for --what homs (default: same module)")
    p.add_argument("--max-length", type=_chain_length, default=3)
    p.set_defaults(func=cmd_enumerate)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return int(args.func(args))
    except BckError as e:
        log.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
