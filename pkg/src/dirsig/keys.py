"""Key pairs for protocol participants."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import KeyValidationError
from .numtheory import RandomSource, mod_exp, random_scalar
from .params import ParamSet, require_valid

_LABEL = re.compile(r"[A-Za-z0-9_.-]{1,64}")


def check_label(label: str) -> str:
    if not _LABEL.fullmatch(label):
        raise ValueError(f"owner label must match {_LABEL.pattern}, got {label!r}")
    return label


@dataclass(frozen=True)
class PublicKey:
    owner: str
    y: int


@dataclass(frozen=True)
class KeyPair:
    owner: str
    y: int
    x: int = field(repr=False)

    @property
    def public(self) -> PublicKey:
        return PublicKey(self.owner, self.y)


def keygen(ps: ParamSet, rng: RandomSource, owner: str) -> KeyPair:
    require_valid(ps)
    check_label(owner)
    x = random_scalar(ps.q, rng)
    return KeyPair(owner, mod_exp(ps.g, x, ps.p), x)


def validate_public_key(ps: ParamSet, y: int) -> bool:
    """Subgroup membership: 1 < y < p and y^q = 1 (mod p)."""
    return 1 < y < ps.p and mod_exp(y, ps.q, ps.p) == 1


def require_public_key(ps: ParamSet, y: int, role: str = "public key") -> None:
    if ps.allow_invalid:
        # Replay parameters have a generator outside the order-q subgroup,
        # so honest keys fail the membership test; only the range applies.
        if not 1 < y < ps.p:
            raise KeyValidationError(f"{role} {y} out of range")
        return
    if not validate_public_key(ps, y):
        raise KeyValidationError(f"{role} {y} is not in the order-q subgroup")


def check_keypair(ps: ParamSet, key: KeyPair) -> None:
    if not 1 <= key.x < ps.q and not ps.allow_invalid:
        raise KeyValidationError("secret exponent out of range")
    if mod_exp(ps.g, key.x, ps.p) != key.y:
        raise KeyValidationError(f"key pair for {key.owner} is inconsistent")
