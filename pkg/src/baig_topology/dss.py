# file: src/baig_topology/dss.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from bcktop_errors import DssViolation, NotASubmodule, UsageError
from module_core.modules import BckModule
from module_core.submodules import Submodule, enumerate_submodules, submodule


@dataclass(frozen=True)
class Dss:
    """
    Decreasing sequence of submodules M_1 ⊇ M_2 ⊇ ... ⊇ M_k.
    Индексы с 1; для n > k берётся M_k (стабилизированный хвост).
    """

    module: BckModule
    chain: Tuple[Submodule, ...]

    def __len__(self) -> int:
        return len(self.chain)

    def member(self, n: int) -> Submodule:
        if n < 1:
            raise ValueError(f"chain index must be >= 1, got {n}")
        return self.chain[min(n, len(self.chain)) - 1]

    @property
    def last(self) -> Submodule:
        return self.chain[-1]


def make_dss(module: BckModule, chain: Sequence[Union[Submodule, Iterable[int]]]) -> Dss:
    if not chain:
        raise DssViolation(0, "chain is empty")

    entries: List[Submodule] = []
    for i, entry in enumerate(chain, start=1):
        if isinstance(entry, Submodule):
            if entry.parent != module:
                raise NotASubmodule(entry.elements, f"chain entry M_{i} belongs to a different module")
            sub = entry
        else:
            sub = submodule(module, entry)
        if entries and not sub.issubset(entries[-1]):
            raise DssViolation(i, f"not contained in M_{i - 1}")
        entries.append(sub)
    return Dss(module=module, chain=tuple(entries))


def enumerate_dss(module: BckModule, max_length: int = 3, strict: bool = True) -> List[Dss]:
    """
    All chains of length 1..max_length drawn from the submodule lattice.
    strict=True skips equal neighbours: the tail convention already repeats M_k.
    """
    if max_length < 1:
        raise UsageError(f"chain length must be at least 1, got {max_length}")
    subs = enumerate_submodules(module)
    out: List[Dss] = []

    def grow(prefix: List[Submodule]) -> None:
        out.append(Dss(module=module, chain=tuple(prefix)))
        if len(prefix) == max_length:
            return
        for s in subs:
            if not s.issubset(prefix[-1]):
                continue
            if strict and s == prefix[-1]:
                continue
            grow(prefix + [s])

    for s in reversed(subs):
        grow([s])
    return out
