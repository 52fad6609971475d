# file: src/bcktop_cli/instance_format.py
"""
Текстовый формат экземпляров (*.bck).

    # комментарий
    [algebra]
    size = 2
    one = 1
    star =
    0 0
    1 0

    [group]
    cyclic 4            # или: klein / size = N + add = строки

    [action]
    0 0 0 0
    0 1 2 3

    [submodule A]
    elements = 0 2

    [dss D]
    chain = M A         # M - весь модуль, 0 - нулевой подмодуль

    [hom f]
    target = m2.bck     # self по умолчанию
    map = 0 1 0 1

    [check c]
    claim = strict
    hom = f
    source_dss = D
    target_dss = D
    expect = true

Tables accept either one row per line or `key = r0 / r1 / ...` inline.
"""
from __future__ import annotations

from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from bcktop_errors import ParseError

SINGLETON_SECTIONS = ("algebra", "group", "action", "module")
NAMED_SECTIONS = ("submodule", "dss", "hom", "check")


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")

    line: int = Field(default=0, description="header line, for error messages")


class AlgebraSection(_Section):
    size: Optional[int] = None
    one: Optional[int] = None
    chain: Optional[int] = None
    star: List[List[int]] = Field(default_factory=list)


class GroupSection(_Section):
    kind: str = "table"  # table | cyclic | klein
    size: Optional[int] = None
    add: List[List[int]] = Field(default_factory=list)


class ActionSection(_Section):
    rows: List[List[int]] = Field(default_factory=list)


class ModuleSection(_Section):
    self_module: bool = False


class SubmoduleSection(_Section):
    name: str
    elements: List[int] = Field(default_factory=list)


class DssSection(_Section):
    name: str
    chain: List[str] = Field(default_factory=list)


class HomSection(_Section):
    name: str
    source: str = "self"
    target: str = "self"
    map: List[int] = Field(default_factory=list)


class CheckSection(_Section):
    name: str
    claim: str = ""
    expect: bool = True
    bindings: Dict[str, str] = Field(default_factory=dict)


class InstanceFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    algebra: Optional[AlgebraSection] = None
    group: Optional[GroupSection] = None
    action: Optional[ActionSection] = None
    module: Optional[ModuleSection] = None
    submodules: List[SubmoduleSection] = Field(default_factory=list)
    dss: List[DssSection] = Field(default_factory=list)
    homs: List[HomSection] = Field(default_factory=list)
    checks: List[CheckSection] = Field(default_factory=list)

    def canonical(self) -> Dict[str, Any]:
        """Content without source positions (what round-trips)."""
        return _strip_lines(self.model_dump())


def _strip_lines(value: Any) -> Any:
    if isinstance(value, dict):
        return {k: _strip_lines(v) for k, v in value.items() if k != "line"}
    if isinstance(value, list):
        return [_strip_lines(v) for v in value]
    return value


# -----------------------------
# Tokenizing
# -----------------------------

Token = Tuple[str, int]  # (text, 1-based column)


def _tokens(text: str, offset: int = 0) -> List[Token]:
    out: List[Token] = []
    i = 0
    while i < len(text):
        if text[i].isspace():
            i += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace():
            j += 1
        out.append((text[i:j], offset + i + 1))
        i = j
    return out


def _int(tok: Token, line: int, bound: Optional[int] = None) -> int:
    text, col = tok
    try:
        v = int(text)
    except ValueError:
        raise ParseError(line, col, f"expected an integer, got {text!r}")
    if v < 0 or (bound is not None and v >= bound):
        hi = f"0..{bound - 1}" if bound is not None else ">= 0"
        raise ParseError(line, col, f"value {v} is out of range {hi}")
    return v


def _bool(tok: Token, line: int) -> bool:
    text, col = tok
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ParseError(line, col, f"expected true/false, got {text!r}")


def _rows(tokens: List[Token], line: int, bound: Optional[int]) -> List[List[int]]:
    """`0 0 / 1 0` -> [[0, 0], [1, 0]]; an empty list of tokens gives no rows."""
    rows: List[List[int]] = [[]]
    for tok in tokens:
        if tok[0] == "/":
            rows.append([])
            continue
        rows[-1].append(_int(tok, line, bound))
    return [r for r in rows if r]


# -----------------------------
# Parser
# -----------------------------

class _Parser:
    def __init__(self) -> None:
        self.inst = InstanceFile()
        self.section: Optional[_Section] = None
        self.kind: str = ""
        self.table_key: Optional[str] = None  # ключ, к которому дописываются строки таблицы
        self.names: Dict[str, set] = {k: set() for k in NAMED_SECTIONS}

    # --- bounds used for range checks while parsing ---
    def _algebra_bound(self) -> Optional[int]:
        a = self.inst.algebra
        if a is None:
            return None
        if a.chain is not None:
            return a.chain
        if a.size is not None:
            return a.size
        return len(a.star[0]) if a.star else None

    def _group_bound(self) -> Optional[int]:
        g = self.inst.group
        if g is None:
            return None
        if g.kind == "klein":
            return 4
        if g.size is not None:
            return g.size
        return len(g.add[0]) if g.add else None

    def header(self, raw: str, line: int) -> None:
        inner = raw.strip()
        if not inner.endswith("]"):
            raise ParseError(line, len(raw.rstrip()) + 1, "section header must end with ']'")
        toks = _tokens(inner[1:-1], offset=raw.index("[") + 1)
        if not toks:
            raise ParseError(line, 1, "empty section header")
        kind, col = toks[0]
        kind = kind.lower()
        self.kind = kind
        self.table_key = None

        if kind in SINGLETON_SECTIONS:
            if len(toks) > 1:
                raise ParseError(line, toks[1][1], f"[{kind}] takes no name")
            if getattr(self.inst, kind) is not None:
                raise ParseError(line, col, f"duplicate [{kind}] section")
            model = {"algebra": AlgebraSection, "group": GroupSection, "action": ActionSection, "module": ModuleSection}[kind]
            self.section = model(line=line)
            setattr(self.inst, kind, self.section)
            if kind == "action":
                self.table_key = "rows"
            return

        if kind in NAMED_SECTIONS:
            if len(toks) != 2:
                raise ParseError(line, col, f"[{kind}] needs exactly one name")
            name, ncol = toks[1]
            if name in self.names[kind]:
                raise ParseError(line, ncol, f"duplicate {kind} name {name!r}")
            if kind == "submodule" and name in ("M", "0"):
                raise ParseError(line, ncol, f"submodule name {name!r} is reserved")
            self.names[kind].add(name)
            model = {"submodule": SubmoduleSection, "dss": DssSection, "hom": HomSection, "check": CheckSection}[kind]
            self.section = model(line=line, name=name)
            getattr(self.inst, {"submodule": "submodules", "dss": "dss", "hom": "homs", "check": "checks"}[kind]).append(self.section)
            return

        raise ParseError(line, col, f"unknown section [{kind}]")

    def pair(self, key: str, key_col: int, value_tokens: List[Token], line: int) -> None:
        s = self.section
        self.table_key = None

        def one_int(bound: Optional[int] = None) -> int:
            if len(value_tokens) != 1:
                raise ParseError(line, key_col, f"{key} expects a single integer")
            return _int(value_tokens[0], line, bound)

        def one_word() -> str:
            if len(value_tokens) != 1:
                raise ParseError(line, key_col, f"{key} expects a single value")
            return value_tokens[0][0]

        if isinstance(s, AlgebraSection):
            if key == "size":
                s.size = one_int()
            elif key == "one":
                s.one = one_int(self._algebra_bound())
            elif key == "chain":
                s.chain = one_int()
            elif key == "star":
                s.star = _rows(value_tokens, line, self._algebra_bound())
                self.table_key = "star"
            else:
                raise ParseError(line, key_col, f"unknown key {key!r} in [algebra]")
        elif isinstance(s, GroupSection):
            if key == "size":
                s.size = one_int()
            elif key == "add":
                s.add = _rows(value_tokens, line, self._group_bound())
                self.table_key = "add"
            else:
                raise ParseError(line, key_col, f"unknown key {key!r} in [group]")
        elif isinstance(s, ActionSection):
            if key != "rows":
                raise ParseError(line, key_col, f"unknown key {key!r} in [action]")
            s.rows = _rows(value_tokens, line, self._group_bound())
            self.table_key = "rows"
        elif isinstance(s, ModuleSection):
            if key != "self":
                raise ParseError(line, key_col, f"unknown key {key!r} in [module]")
            if len(value_tokens) != 1:
                raise ParseError(line, key_col, "self expects true/false")
            s.self_module = _bool(value_tokens[0], line)
        elif isinstance(s, SubmoduleSection):
            if key != "elements":
                raise ParseError(line, key_col, f"unknown key {key!r} in [submodule]")
            s.elements = [_int(t, line, self._group_bound()) for t in value_tokens]
        elif isinstance(s, DssSection):
            if key != "chain":
                raise ParseError(line, key_col, f"unknown key {key!r} in [dss]")
            if not value_tokens:
                raise ParseError(line, key_col, "chain needs at least one submodule name")
            s.chain = [t[0] for t in value_tokens]
        elif isinstance(s, HomSection):
            if key in ("source", "target"):
                setattr(s, key, one_word())
            elif key == "map":
                s.map = [_int(t, line) for t in value_tokens]
            else:
                raise ParseError(line, key_col, f"unknown key {key!r} in [hom]")
        elif isinstance(s, CheckSection):
            if key == "claim":
                s.claim = one_word()
            elif key == "expect":
                if len(value_tokens) != 1:
                    raise ParseError(line, key_col, "expect takes true/false")
                s.expect = _bool(value_tokens[0], line)
            else:
                s.bindings[key] = one_word()
        else:
            raise ParseError(line, key_col, "key = value outside of a section")

    def bare(self, toks: List[Token], line: int) -> None:
        s = self.section
        if isinstance(s, GroupSection) and self.table_key is None and toks[0][0].lower() in ("cyclic", "klein"):
            word = toks[0][0].lower()
            if word == "klein":
                if len(toks) != 1:
                    raise ParseError(line, toks[1][1], "klein takes no argument")
                s.kind, s.size = "klein", None
            else:
                if len(toks) != 2:
                    raise ParseError(line, toks[0][1], "cyclic needs the order, e.g. 'cyclic 4'")
                s.kind, s.size = "cyclic", _int(toks[1], line)
                if s.size < 1:
                    raise ParseError(line, toks[1][1], "cyclic order must be positive")
            return

        if self.table_key is None or s is None:
            raise ParseError(line, toks[0][1], "unexpected row outside of a table")

        if isinstance(s, AlgebraSection):
            s.star.extend(_rows(toks, line, self._algebra_bound()))
        elif isinstance(s, GroupSection):
            s.add.extend(_rows(toks, line, self._group_bound()))
        elif isinstance(s, ActionSection):
            s.rows.extend(_rows(toks, line, self._group_bound()))


def parse_instance(text: str) -> InstanceFile:
    p = _Parser()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        if not content.strip():
            continue
        stripped = content.strip()
        if stripped.startswith("["):
            p.header(content, lineno)
            continue
        if "=" in content:
            key_part, value_part = content.split("=", 1)
            key_toks = _tokens(key_part)
            if len(key_toks) != 1:
                raise ParseError(lineno, key_toks[0][1] if key_toks else 1, "expected 'key = value'")
            key, key_col = key_toks[0]
            p.pair(key.lower(), key_col, _tokens(value_part, offset=len(key_part) + 1), lineno)
            continue
        p.bare(_tokens(content), lineno)
    return p.inst


# -----------------------------
# Serializer
# -----------------------------

def _row(r: List[int]) -> str:
    return " ".join(str(v) for v in r)


def serialize_instance(inst: InstanceFile) -> str:
    out: List[str] = []

    def block(header: str, lines: List[str]) -> None:
        if out:
            out.append("")
        out.append(f"[{header}]")
        out.extend(lines)

    a = inst.algebra
    if a is not None:
        lines = []
        if a.chain is not None:
            lines.append(f"chain = {a.chain}")
        if a.size is not None:
            lines.append(f"size = {a.size}")
        if a.one is not None:
            lines.append(f"one = {a.one}")
        if a.star:
            lines.append("star =")
            lines.extend(_row(r) for r in a.star)
        block("algebra", lines)

    g = inst.group
    if g is not None:
        if g.kind == "klein":
            lines = ["klein"]
        elif g.kind == "cyclic":
            lines = [f"cyclic {g.size}"]
        else:
            lines = ([f"size = {g.size}"] if g.size is not None else []) + ["add ="] + [_row(r) for r in g.add]
        block("group", lines)

    if inst.action is not None:
        block("action", [_row(r) for r in inst.action.rows])

    if inst.module is not None:
        block("module", [f"self = {'true' if inst.module.self_module else 'false'}"])

    for s in inst.submodules:
        block(f"submodule {s.name}", [f"elements = {_row(s.elements)}"])
    for d in inst.dss:
        block(f"dss {d.name}", [f"chain = {' '.join(d.chain)}"])
    for h in inst.homs:
        block(f"hom {h.name}", [f"source = {h.source}", f"target = {h.target}", f"map = {_row(h.map)}"])
    for c in inst.checks:
        lines = [f"claim = {c.claim}"] + [f"{k} = {v}" for k, v in c.bindings.items()]
        lines.append(f"expect = {'true' if c.expect else 'false'}")
        block(f"check {c.name}", lines)

    return "\n".join(out) + "\n"
