"""Directed signatures: only the designated receiver can verify.

The signer masks its commitment as ``W = g^(K1-K2)`` and binds the
challenge to ``Z = y_receiver^K1``. The receiver recovers ``mu = g^K1``
from public values and needs its secret key to turn it into ``Z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import FormatError
from .keys import KeyPair, check_keypair, require_public_key
from .numtheory import RandomSource, mod_exp, random_scalar
from .params import ParamSet, hash_to_zq, require_valid

if TYPE_CHECKING:
    from .proxy import ProxyDirectedSignature


@dataclass(frozen=True)
class DirectedSignature:
    S: int
    W: int
    r: int
    m: bytes
    signer: int
    receiver: int


@dataclass(frozen=True)
class VerifiedEvidence:
    """Output of a successful receiver verification.

    ``Z`` is derived from the receiver's secret key: treat as sensitive.
    ``key`` is the public element that played the signer role in ``mu``.
    """

    mu: int
    Z: int
    sig: DirectedSignature | ProxyDirectedSignature
    key: int


@dataclass(frozen=True)
class DisclosurePackage:
    S: int
    W: int
    r: int
    m: bytes
    signer: int
    receiver: int
    mu: int
    Z: int


def masked_commitment(ps: ParamSet, secret: int, receiver_pub: int, m: bytes,
                      rng: RandomSource) -> tuple[int, int, int, int]:
    """Shared core of plain and proxy directed signing.

    Returns ``(S, W, r, K1)``; ``K1`` is exposed so tests can check
    ``mu == g^K1``. Callers must discard it.
    """
    k1 = random_scalar(ps.q, rng)
    k2 = random_scalar(ps.q, rng)
    W = mod_exp(ps.g, (k1 - k2) % ps.q, ps.p)
    Z = mod_exp(receiver_pub, k1, ps.p)
    r = hash_to_zq(ps, Z, W, m)
    S = (k2 - secret * r) % ps.q
    return S, W, r, k1


def directed_sign(ps: ParamSet, signer: KeyPair, receiver_pub: int, m: bytes,
                  rng: RandomSource) -> DirectedSignature:
    require_valid(ps)
    check_keypair(ps, signer)
    require_public_key(ps, receiver_pub, "receiver key")
    m = bytes(m)
    S, W, r, _ = masked_commitment(ps, signer.x, receiver_pub, m, rng)
    return DirectedSignature(S, W, r, m, signer.y, receiver_pub)


def check_well_formed(ps: ParamSet, S: int, W: int, r: int) -> None:
    if not 0 <= S < ps.q:
        raise FormatError("S must lie in [0, q-1]")
    if not 0 <= r < ps.q:
        raise FormatError("r must lie in [0, q-1]")
    if not 1 <= W < ps.p:
        raise FormatError("W must lie in [1, p-1]")
    if not ps.allow_invalid and mod_exp(W, ps.q, ps.p) != 1:
        raise FormatError("W is not in the order-q subgroup")


def recover(ps: ParamSet, receiver: KeyPair, key: int, S: int, W: int, r: int,
            m: bytes) -> tuple[int, int, bool]:
    """Compute ``(mu, Z, hash matches)`` for a signature under verification key ``key``."""
    mu = mod_exp(ps.g, S, ps.p) * mod_exp(key, r, ps.p) * W % ps.p
    Z = mod_exp(mu, receiver.x, ps.p)
    return mu, Z, hash_to_zq(ps, Z, W, m) == r


def directed_verify(ps: ParamSet, receiver: KeyPair, signer_pub: int,
                    sig: DirectedSignature) -> VerifiedEvidence | None:
    """Receiver-side check; returns None on rejection."""
    check_well_formed(ps, sig.S, sig.W, sig.r)
    if signer_pub != sig.signer:
        return None
    mu, Z, ok = recover(ps, receiver, signer_pub, sig.S, sig.W, sig.r, sig.m)
    return VerifiedEvidence(mu, Z, sig, signer_pub) if ok else None


def build_disclosure(ev: VerifiedEvidence) -> DisclosurePackage:
    """Everything a third party needs to start a confirmation run.

    Includes ``Z``: without it the third party cannot recheck the hash.
    For proxy signatures ``signer`` holds the proxy verification key.
    """
    s = ev.sig
    return DisclosurePackage(s.S, s.W, s.r, s.m, ev.key, s.receiver, ev.mu, ev.Z)
