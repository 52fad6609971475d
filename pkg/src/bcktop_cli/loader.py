# file: src/bcktop_cli/loader.py
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from algebra_core.algebra import BckAlgebra, algebra_from_table, chain_algebra
from baig_topology.dss import Dss, make_dss
from bcktop_errors import BckError, InstanceValidationError, ParseError, UsageError
from module_core.groups import AbelianGroup, cyclic_group, group_from_table, klein_group
from module_core.homs import ModuleHom, module_hom
from module_core.modules import BckModule, module_from_tables, self_module
from module_core.submodules import Submodule, submodule, whole, zero_submodule

from .checks import validate_check
from .instance_format import AlgebraSection, CheckSection, GroupSection, InstanceFile, parse_instance

log = logging.getLogger("bcktop.loader")

SELF = "self"


@dataclass
class LoadedHom:
    name: str
    source: "LoadedInstance"
    target: "LoadedInstance"
    hom: ModuleHom
    line: int = 0


@dataclass
class LoadedInstance:
    """Instance file resolved into validated core objects."""

    name: str
    path: Optional[Path]
    file: InstanceFile
    algebra: BckAlgebra
    module: BckModule
    submodules: Dict[str, Submodule] = field(default_factory=dict)
    dss: Dict[str, Dss] = field(default_factory=dict)
    homs: Dict[str, LoadedHom] = field(default_factory=dict)

    @property
    def checks(self) -> List[CheckSection]:
        return list(self.file.checks)

    def submodule_named(self, name: str) -> Submodule:
        if name == "M":
            return whole(self.module)
        if name == "0":
            return zero_submodule(self.module)
        if name not in self.submodules:
            raise UsageError(_unknown("submodule", name, ["M", "0"] + sorted(self.submodules)))
        return self.submodules[name]

    def dss_named(self, name: str) -> Dss:
        if name not in self.dss:
            raise UsageError(_unknown("dss", name, sorted(self.dss)))
        return self.dss[name]

    def hom_named(self, name: str) -> LoadedHom:
        if name not in self.homs:
            raise UsageError(_unknown("hom", name, sorted(self.homs)))
        return self.homs[name]


def _unknown(kind: str, name: str, available: List[str]) -> str:
    listed = ", ".join(available) if available else "none declared"
    return f"unknown {kind} {name!r}; available: {listed}"


# -----------------------------
# Sections -> core objects
# -----------------------------

def _algebra(sec: Optional[AlgebraSection]) -> BckAlgebra:
    if sec is None:
        raise InstanceValidationError(1, "missing [algebra] section")
    try:
        if sec.chain is not None:
            if sec.star or sec.size is not None:
                raise InstanceValidationError(sec.line, "[algebra] takes either chain = N or size/star, not both")
            return chain_algebra(sec.chain)
        if not sec.star:
            raise InstanceValidationError(sec.line, "[algebra] has no star table")
        size = sec.size if sec.size is not None else len(sec.star)
        return algebra_from_table(size, sec.star, sec.one)
    except InstanceValidationError:
        raise
    except BckError as e:
        raise InstanceValidationError(sec.line, f"[algebra] {e}") from e


def _group(sec: GroupSection) -> AbelianGroup:
    try:
        if sec.kind == "klein":
            return klein_group()
        if sec.kind == "cyclic":
            return cyclic_group(int(sec.size or 0))
        if not sec.add:
            raise InstanceValidationError(sec.line, "[group] needs an add table, 'cyclic N' or 'klein'")
        size = sec.size if sec.size is not None else len(sec.add)
        return group_from_table(size, sec.add)
    except InstanceValidationError:
        raise
    except BckError as e:
        raise InstanceValidationError(sec.line, f"[group] {e}") from e


def _module(inst: InstanceFile, alg: BckAlgebra) -> BckModule:
    if inst.module is not None and inst.module.self_module:
        if inst.group is not None or inst.action is not None:
            raise InstanceValidationError(inst.module.line, "self = true excludes [group] and [action]")
        try:
            return self_module(alg)
        except BckError as e:
            raise InstanceValidationError(inst.module.line, f"[module] {e}") from e

    if inst.group is None:
        raise InstanceValidationError(1, "missing [group] section (or [module] self = true)")
    group = _group(inst.group)
    if inst.action is None:
        raise InstanceValidationError(inst.group.line, "missing [action] section")
    try:
        return module_from_tables(alg, group, inst.action.rows)
    except BckError as e:
        raise InstanceValidationError(inst.action.line, f"[action] {e}") from e


def _resolve_ref(ref: str, base_dir: Path, me: LoadedInstance, cache: Dict[Path, LoadedInstance]) -> LoadedInstance:
    if ref == SELF:
        return me
    path = (base_dir / ref).resolve()
    if path in cache:
        return cache[path]
    if not path.is_file():
        raise FileNotFoundError(path)
    return _load(path, cache)


# -----------------------------
# Loading
# -----------------------------

def _build(
    inst: InstanceFile,
    name: str,
    path: Optional[Path],
    base_dir: Path,
    cache: Dict[Path, LoadedInstance],
) -> LoadedInstance:
    alg = _algebra(inst.algebra)
    mod = _module(inst, alg)
    out = LoadedInstance(name=name, path=path, file=inst, algebra=alg, module=mod)
    if path is not None:
        # до разрешения ссылок: файлы могут ссылаться друг на друга
        cache[path] = out

    for s in inst.submodules:
        try:
            out.submodules[s.name] = submodule(mod, s.elements)
        except BckError as e:
            raise InstanceValidationError(s.line, f"[submodule {s.name}] {e}") from e

    for d in inst.dss:
        try:
            chain = [out.submodule_named(n) for n in d.chain]
            out.dss[d.name] = make_dss(mod, chain)
        except BckError as e:
            raise InstanceValidationError(d.line, f"[dss {d.name}] {e}") from e

    for h in inst.homs:
        if h.source != SELF and h.target != SELF:
            raise InstanceValidationError(h.line, f"[hom {h.name}] source or target must be self")
        try:
            src = _resolve_ref(h.source, base_dir, out, cache)
            dst = _resolve_ref(h.target, base_dir, out, cache)
        except FileNotFoundError as e:
            raise InstanceValidationError(h.line, f"[hom {h.name}] referenced file not found: {e}") from e
        try:
            out.homs[h.name] = LoadedHom(name=h.name, source=src, target=dst, hom=module_hom(src.module, dst.module, h.map), line=h.line)
        except BckError as e:
            raise InstanceValidationError(h.line, f"[hom {h.name}] {e}") from e

    # имена в check-блоках проверяются сразу
    for c in inst.checks:
        validate_check(out, c)

    log.debug(
        "loaded %s: |X|=%d |M|=%d, %d submodules, %d dss, %d homs, %d checks",
        name, alg.size, mod.size, len(out.submodules), len(out.dss), len(out.homs), len(inst.checks),
    )
    return out


def _decode(raw: bytes) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        # позиция первого плохого байта: строка и колонка в байтах, с 1
        line = raw.count(b"\n", 0, e.start) + 1
        column = e.start - (raw.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(line, column, f"invalid UTF-8 byte 0x{raw[e.start]:02x}") from e


def _load(path: Path, cache: Dict[Path, LoadedInstance]) -> LoadedInstance:
    text = _decode(path.read_bytes())
    return _build(parse_instance(text), path.stem, path, path.parent, cache)


def load_instance(path) -> LoadedInstance:
    p = Path(path).expanduser().resolve()
    if not p.is_file():
        raise UsageError(f"instance file not found: {path}")
    return _load(p, {})


def load_instance_text(text: str, name: str = "inline", base_dir: Optional[Path] = None) -> LoadedInstance:
    return _build(parse_instance(text), name, None, Path(base_dir or Path.cwd()), {})
