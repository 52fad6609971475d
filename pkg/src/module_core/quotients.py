# file: src/module_core/quotients.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from bcktop_errors import InvariantBroken

from .groups import AbelianGroup
from .homs import ModuleHom
from .modules import BckModule, module_from_tables
from .submodules import Submodule, coset, ensure_submodule_of


@dataclass(frozen=True)
class QuotientModule:
    """
    M/N. cosets[i] - i-й смежный класс, упорядочены по минимальному элементу
    (он же канонический представитель), так что класс нуля всегда индекс 0.
    """

    base: BckModule
    divisor: Submodule
    cosets: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...]
    module: BckModule

    @property
    def representatives(self) -> Tuple[int, ...]:
        return tuple(c[0] for c in self.cosets)


def quotient(mod: BckModule, n: Submodule) -> QuotientModule:
    ensure_submodule_of(n, mod)

    classes: Dict[int, Tuple[int, ...]] = {}
    for m in mod.elements:
        c = tuple(sorted(coset(mod, m, n)))
        classes.setdefault(c[0], c)
    cosets = tuple(classes[r] for r in sorted(classes))
    class_of = [0] * mod.size
    for i, c in enumerate(cosets):
        for m in c:
            class_of[m] = i

    reps = [c[0] for c in cosets]
    k = len(cosets)
    add = tuple(tuple(class_of[mod.plus(reps[i], reps[j])] for j in range(k)) for i in range(k))
    neg = tuple(class_of[mod.neg(reps[i])] for i in range(k))
    action = tuple(tuple(class_of[mod.act(x, reps[i])] for i in range(k)) for x in mod.algebra.elements)

    # независимость от представителя, на всех элементах
    for a in mod.elements:
        for b in mod.elements:
            if class_of[mod.plus(a, b)] != add[class_of[a]][class_of[b]]:
                raise InvariantBroken(f"coset addition not well defined at ({a},{b})")
        for x in mod.algebra.elements:
            if class_of[mod.act(x, a)] != action[x][class_of[a]]:
                raise InvariantBroken(f"coset action not well defined at ({x},{a})")

    qmod = module_from_tables(
        mod.algebra,
        AbelianGroup(size=k, add=add, neg=neg),
        action,
        labels=[mod.label(r) for r in reps],
    )
    return QuotientModule(base=mod, divisor=n, cosets=cosets, class_of=tuple(class_of), module=qmod)


def natural_projection(q: QuotientModule) -> ModuleHom:
    return ModuleHom(source=q.base, target=q.module, table=q.class_of)


def project_submodule(q: QuotientModule, sub: Submodule) -> Submodule:
    """(S + N)/N as a submodule of M/N."""
    ensure_submodule_of(sub, q.base)
    return Submodule(parent=q.module, elements=tuple(sorted({q.class_of[m] for m in sub.elements})))
