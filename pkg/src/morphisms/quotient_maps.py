# file: src/morphisms/quotient_maps.py
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from bcktop_errors import BckError, InvariantBroken, NotCompatible
from module_core.homs import ModuleHom, compose, is_surjective, kernel, module_hom
from module_core.modules import BckModule
from module_core.quotients import QuotientModule, natural_projection, quotient
from module_core.submodules import Submodule, submodule_as_module

from .topologized import TopologizedHom, compatibility_witness


@lru_cache(maxsize=4096)
def _quotient(mod: BckModule, sub: Submodule) -> QuotientModule:
    return quotient(mod, sub)


@dataclass(frozen=True)
class QuotientSquare:
    """
    M  --f-->  M'
    |phi_n     |phi'_n
    M/M_n --f_n--> M'/M'_n
    """

    f: ModuleHom
    phi: ModuleHom
    phi_prime: ModuleHom
    f_n: ModuleHom

    def commutes(self) -> bool:
        return compose(self.phi_prime, self.f).table == compose(self.f_n, self.phi).table


def _require_compatible(th: TopologizedHom) -> None:
    w = compatibility_witness(th)
    if w is not None:
        raise NotCompatible(w.n, w)


def quotient_square(th: TopologizedHom, n: int) -> QuotientSquare:
    _require_compatible(th)
    f = th.hom
    q = _quotient(f.source, th.source_dss.member(n))
    q_prime = _quotient(f.target, th.target_dss.member(n))

    # f_n(m + M_n) = f(m) + M'_n, по каноническим представителям
    table = [q_prime.class_of[f.table[r]] for r in q.representatives]
    for m in f.source.elements:
        if table[q.class_of[m]] != q_prime.class_of[f.table[m]]:
            raise InvariantBroken(f"f_{n} depends on the representative of the class of {m}")
    try:
        f_n = module_hom(q.module, q_prime.module, table)
    except BckError as e:
        raise InvariantBroken(f"f_{n} is not an X-homomorphism: {e}") from e

    square = QuotientSquare(f=f, phi=natural_projection(q), phi_prime=natural_projection(q_prime), f_n=f_n)
    if not square.commutes():
        raise InvariantBroken(f"phi'_{n} f != f_{n} phi_{n}")
    return square


def induced_quotient_map(th: TopologizedHom, n: int) -> ModuleHom:
    return quotient_square(th, n).f_n


def alpha_from_square(th: TopologizedHom, square: QuotientSquare, n: int) -> ModuleHom:
    ker_f = kernel(th.hom)
    ker_fn = kernel(square.f_n)
    index = {c: j for j, c in enumerate(ker_fn.elements)}

    table = []
    for k in ker_f.elements:
        c = square.phi.table[k]
        if c not in index:
            raise InvariantBroken(f"phi_{n}({k}) is not in Ker f_{n}")
        table.append(index[c])
    try:
        return module_hom(submodule_as_module(ker_f), submodule_as_module(ker_fn), table)
    except BckError as e:
        raise InvariantBroken(f"alpha_{n} is not an X-homomorphism: {e}") from e


def alpha_n(th: TopologizedHom, n: int) -> ModuleHom:
    """α_n(k) = φ_n(k) from Ker f into Ker f_n, both as modules of their own."""
    return alpha_from_square(th, quotient_square(th, n), n)


def alpha_epi_witness(th: TopologizedHom) -> Optional[int]:
    """First n where α_n misses part of Ker f_n."""
    for n in range(1, th.horizon + 1):
        if not is_surjective(alpha_n(th, n)):
            return n
    return None


def is_alpha_epi_all_n(th: TopologizedHom) -> bool:
    return alpha_epi_witness(th) is None
