"""Hochschild cohomology dimensions of a gentle algebra from its AG-invariant.

Uses Ladkani's formulas: dim HH^n depends on the multiplicities of (1,0),
(1,1), (0,1), (1,n) and on the divisor sums psi(n) of the (0,d) entries.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ag import AGInvariant


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = 0

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not _is_prime(c):
            raise ValueError(f"field characteristic must be 0 or a prime, got {c}")


def _field(k) -> FieldSpec:
    return k if isinstance(k, FieldSpec) else FieldSpec(int(k))


def psi(a: AGInvariant, n: int) -> int:
    if n < 1:
        raise ValueError("psi is defined for n >= 1")
    return sum(k for (x, d), k in a.counts.items() if x == 0 and d > 0 and n % d == 0)


def hh_dim(a: AGInvariant, nv: int, na: int, n: int, k: FieldSpec | int = 0) -> int:
    char2 = _field(k).characteristic == 2
    if n < 0:
        raise ValueError("degree must be non-negative")
    if n == 0:
        return 1 + a.mult(1, 0)
    if n == 1:
        return 1 + na - nv + a.mult(1, 1) + (a.mult(0, 1) if char2 else 0)
    if char2:
        an, bn = 1, 1
    else:
        an, bn = (1, 0) if n % 2 == 0 else (0, 1)
    return a.mult(1, n) + an * psi(a, n) + bn * psi(a, n - 1)


@dataclass(frozen=True)
class HHResult:
    dims: tuple[int, ...]
    characteristic: int = 0

    def __getitem__(self, n: int) -> int:
        return self.dims[n]

    def __len__(self) -> int:
        return len(self.dims)


def hh_sequence(a: AGInvariant, nv: int, na: int, max_n: int, k: FieldSpec | int = 0) -> HHResult:
    k = _field(k)
    return HHResult(tuple(hh_dim(a, nv, na, n, k) for n in range(max_n + 1)), k.characteristic)
