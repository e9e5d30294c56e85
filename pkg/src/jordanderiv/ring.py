"""Coefficient rings: the integers and the integers modulo m.

Elements are handled internally as plain Python ints in canonical form
(residues in ``[0, m)`` for modular rings). :class:`RingElem` wraps an int
together with its ring for callers that want mixed-ring checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import InputError, InfiniteRing


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    f = 2
    while f * f <= m:
        if m % f == 0:
            return False
        f += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """``Z`` when ``modulus`` is None, otherwise ``Z/modulus``."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            if isinstance(self.modulus, bool) or not isinstance(self.modulus, int):
                raise InputError(f"modulus must be an integer, got {self.modulus!r}")
            if self.modulus < 2:
                raise InputError(f"modulus must be >= 2, got {self.modulus}")

    @classmethod
    def integers(cls) -> "RingSpec":
        return cls(None)

    @classmethod
    def mod(cls, m: int) -> "RingSpec":
        return cls(m)

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    @property
    def is_prime_field(self) -> bool:
        return self.modulus is not None and _is_prime(self.modulus)

    @property
    def size(self) -> int:
        if self.modulus is None:
            raise InfiniteRing("the integers have no finite carrier")
        return self.modulus

    def reduce(self, v: int) -> int:
        return v if self.modulus is None else v % self.modulus

    def reduce_all(self, values) -> tuple:
        m = self.modulus
        if m is None:
            return tuple(values)
        return tuple([v % m for v in values])

    def add(self, a: int, b: int) -> int:
        return self.reduce(a + b)

    def sub(self, a: int, b: int) -> int:
        return self.reduce(a - b)

    def mul(self, a: int, b: int) -> int:
        return self.reduce(a * b)

    def neg(self, a: int) -> int:
        return self.reduce(-a)

    def elements(self) -> Iterator[int]:
        return iter(range(self.size))

    def signed(self, v: int) -> int:
        """Symmetric representative, used only for readable output."""
        if self.modulus is None:
            return v
        v %= self.modulus
        return v - self.modulus if v > self.modulus // 2 else v

    def is_two_torsion_free(self) -> bool:
        # 2a = 0 in Z/m has a nonzero solution a = m/2 exactly when m is even
        return self.modulus is None or self.modulus % 2 == 1

    def elem(self, v: int) -> "RingElem":
        return RingElem(self, self.reduce(int(v)))

    def to_json(self) -> dict:
        if self.modulus is None:
            return {"type": "Z"}
        return {"type": "Zmod", "m": self.modulus}

    def __str__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}"


@dataclass(frozen=True)
class RingElem:
    ring: RingSpec
    value: int

    def __post_init__(self):
        if self.ring.reduce(self.value) != self.value:
            raise InputError(f"{self.value} is not a canonical representative in {self.ring}")

    def _other(self, other: "RingElem") -> int:
        if not isinstance(other, RingElem):
            return NotImplemented
        if other.ring != self.ring:
            raise InputError(f"mixed-ring operands: {self.ring} and {other.ring}")
        return other.value

    def __add__(self, other):
        return RingElem(self.ring, self.ring.add(self.value, self._other(other)))

    def __sub__(self, other):
        return RingElem(self.ring, self.ring.sub(self.value, self._other(other)))

    def __mul__(self, other):
        return RingElem(self.ring, self.ring.mul(self.value, self._other(other)))

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def __int__(self):
        return self.value


def ring_arith(op: str, a: RingElem, b: Optional[RingElem] = None) -> RingElem:
    """Exact ``add``/``sub``/``mul``/``neg`` on canonical ring elements."""
    if op == "neg":
        return -a
    if b is None:
        raise InputError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InputError(f"unknown ring operation {op!r}")


def is_two_torsion_free(r: RingSpec) -> bool:
    return r.is_two_torsion_free()


def ring_from_json(obj, path: str = "ring") -> RingSpec:
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object")
    kind = obj.get("type")
    if kind == "Z":
        return RingSpec.integers()
    if kind == "Zmod":
        m = obj.get("m")
        if isinstance(m, bool) or not isinstance(m, int) or m < 2:
            raise InputError(f"{path}.m: expected an integer >= 2, got {m!r}")
        return RingSpec.mod(m)
    raise InputError(f"{path}.type: expected 'Z' or 'Zmod', got {kind!r}")
