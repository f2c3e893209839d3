"""Shared system parameters (p, q, g) and the hash binding into Z_q."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, Sequence, Union

from .errors import FixtureMissError, FormatError, GenerationError, ParameterError
from .numtheory import RandomSource, is_probable_prime, mod_exp, system_rng

STANDARD = "sha256"
FIXTURE = "fixture"
HASH_TAGS = (STANDARD, FIXTURE)

Item = Union[int, bytes]


def canonical_encode(values: Sequence[Item]) -> bytes:
    """Length-prefixed encoding: 4-byte big-endian length, then payload.

    Integers are big-endian minimal length, with zero as a single 0x00.
    """
    out = bytearray()
    for v in values:
        if isinstance(v, (bytes, bytearray)):
            payload = bytes(v)
        elif isinstance(v, int) and not isinstance(v, bool):
            if v < 0:
                raise ValueError("canonical_encode takes nonnegative integers only")
            payload = v.to_bytes(max(1, (v.bit_length() + 7) // 8), "big")
        else:
            raise TypeError(f"cannot encode {type(v).__name__}")
        out += len(payload).to_bytes(4, "big")
        out += payload
    return bytes(out)


@dataclass(frozen=True)
class HashSpec:
    """Which hash realizes h.

    ``fixture`` mode is a lookup table used only to replay published
    vectors whose hash outputs are stated rather than computable.
    """

    algorithm: str = STANDARD
    table: Mapping[bytes, int] | None = field(default=None, hash=False)

    def __post_init__(self):
        if self.algorithm not in HASH_TAGS:
            raise ValueError(f"unknown hash algorithm {self.algorithm!r}")
        if self.algorithm == FIXTURE:
            if self.table is None:
                raise ValueError("fixture hash requires a table")
            object.__setattr__(self, "table", MappingProxyType(dict(self.table)))
        elif self.table is not None:
            raise ValueError("standard hash takes no table")

    @classmethod
    def fixture(cls, entries: Mapping[tuple, int] | Sequence[tuple[tuple, int]]) -> "HashSpec":
        """Build a fixture table from ``{(item, item, ...): value}``."""
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        return cls(FIXTURE, {canonical_encode(k): int(v) for k, v in pairs})

    @property
    def is_fixture(self) -> bool:
        return self.algorithm == FIXTURE


@dataclass(frozen=True)
class ParamSet:
    p: int
    q: int
    g: int
    hash_spec: HashSpec = field(default_factory=HashSpec)
    # Test-only escape hatch for replaying vectors whose generator is wrong.
    allow_invalid: bool = field(default=False, compare=False)

    def with_hash(self, hash_spec: HashSpec) -> "ParamSet":
        return ParamSet(self.p, self.q, self.g, hash_spec, self.allow_invalid)

    def unchecked(self) -> "ParamSet":
        return ParamSet(self.p, self.q, self.g, self.hash_spec, True)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    reason: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def reasons(self) -> list[str]:
        return [c.reason for c in self.checks if not c.passed]

    def __str__(self) -> str:
        lines = [f"{'pass' if c.passed else 'FAIL'} {c.name}" + ("" if c.passed else f": {c.reason}")
                 for c in self.checks]
        lines.append("VALID" if self.valid else "INVALID")
        return "\n".join(lines)


@lru_cache(maxsize=256)
def _validate(p: int, q: int, g: int) -> ValidationReport:
    p_prime = p >= 2 and is_probable_prime(p)
    q_prime = q >= 2 and is_probable_prime(q)
    divides = q >= 2 and p >= 2 and (p - 1) % q == 0
    g_range = 1 < g < p
    g_order = p >= 2 and g_range and mod_exp(g, q, p) == 1
    return ValidationReport((
        Check("p prime", p_prime, "p not prime"),
        Check("q prime", q_prime, "q not prime"),
        Check("q divides p-1", divides, "q does not divide p-1"),
        Check("g in [2, p-1]", g_range, "g outside [2, p-1]"),
        Check("g has order q", g_order, "g^q ≠ 1 (order is not q)"),
    ))


def validate_params(ps: ParamSet) -> ValidationReport:
    return _validate(ps.p, ps.q, ps.g)


def require_valid(ps: ParamSet) -> None:
    if ps.allow_invalid:
        return
    report = validate_params(ps)
    if not report.valid:
        raise ParameterError("invalid parameters: " + "; ".join(report.reasons))


def _random_prime(bits: int, rng: RandomSource, budget: int) -> int:
    lo, hi = (1 << (bits - 1)) + 1, (1 << bits) - 1
    for _ in range(budget):
        n = rng.randrange(lo, hi) | 1
        if is_probable_prime(n, rng=rng):
            return n
    raise GenerationError(f"no {bits}-bit prime found in {budget} tries")


def generate_params(p_bits: int = 512, q_bits: int = 160, rng: RandomSource | None = None,
                    budget: int = 100_000) -> ParamSet:
    """Random (p, q, g) with 2^(p_bits-1) < p < 2^p_bits and likewise for q.

    ``g`` is ``k^((p-1)/q) mod p`` for random ``k``, redrawn until ``g > 1``.
    """
    if q_bits < 8 or p_bits < q_bits + 8:
        raise ValueError("need q_bits >= 8 and p_bits >= q_bits + 8")
    rng = rng or system_rng()
    q = _random_prime(q_bits, rng, budget)
    # p = k*q + 1 with k even, p strictly inside the p_bits range
    k_lo = -(-(1 << (p_bits - 1)) // q)
    k_hi = ((1 << p_bits) - 2) // q
    for _ in range(budget):
        k = rng.randrange(k_lo, k_hi + 1)
        k += k & 1
        p = k * q + 1
        if p.bit_length() == p_bits and p > (1 << (p_bits - 1)) and is_probable_prime(p, rng=rng):
            break
    else:
        raise GenerationError(f"no {p_bits}-bit p found for q in {budget} tries")
    cofactor = (p - 1) // q
    for _ in range(budget):
        g = mod_exp(rng.randrange(2, p - 1), cofactor, p)
        if g > 1:
            return ParamSet(p, q, g)
    raise GenerationError("no generator found")


def hash_items(ps: ParamSet, items: Sequence[Item]) -> int:
    """h over an arbitrary tuple, landing in [0, q-1]."""
    encoded = canonical_encode(items)
    spec = ps.hash_spec
    if spec.is_fixture:
        try:
            value = spec.table[encoded]
        except KeyError:
            raise FixtureMissError(f"fixture hash has no entry for {list(items)!r}") from None
        return value % ps.q
    return int.from_bytes(hashlib.sha256(encoded).digest(), "big") % ps.q


def hash_to_zq(ps: ParamSet, Z: int, W: int, m: bytes) -> int:
    if not (0 <= Z < ps.p and 0 <= W < ps.p):
        raise FormatError("hash inputs Z, W must be residues mod p")
    return hash_items(ps, (Z, W, bytes(m)))
