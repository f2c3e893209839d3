"""Registration numbers issued as directed signatures.

An authority signs the registration message toward the holder. Only the
holder can check it, and later convinces a relying party through the
confirmation protocol. No new cryptography lives here.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import confirm
from .directed import (DirectedSignature, DisclosurePackage, VerifiedEvidence, build_disclosure,
                       directed_sign, directed_verify)
from .errors import StateError
from .keys import KeyPair
from .numtheory import RandomSource, mod_exp
from .params import ParamSet, hash_to_zq

ISSUED, VERIFIED, PUBLISHED = "issued", "verified", "published"
STATUSES = (ISSUED, VERIFIED, PUBLISHED)


@dataclass
class RegistrationCredential:
    sig: DirectedSignature
    status: str = ISSUED

    def advance(self, new_status: str) -> None:
        if STATUSES.index(new_status) != STATUSES.index(self.status) + 1:
            raise StateError(f"cannot move credential from {self.status} to {new_status}")
        self.status = new_status


def allocate(ps: ParamSet, authority: KeyPair, holder_pub: int, m: bytes,
             rng: RandomSource) -> RegistrationCredential:
    return RegistrationCredential(directed_sign(ps, authority, holder_pub, m, rng))


def holder_verify(ps: ParamSet, holder: KeyPair, cred: RegistrationCredential) -> VerifiedEvidence | None:
    if cred.status != ISSUED:
        raise StateError(f"credential already {cred.status}")
    ev = directed_verify(ps, holder, cred.sig.signer, cred.sig)
    if ev is not None:
        cred.advance(VERIFIED)
    return ev


def publish(cred: RegistrationCredential) -> None:
    cred.advance(PUBLISHED)


@dataclass
class ConfirmationPair:
    """A disclosure package plus the holder key that will act as prover."""

    ps: ParamSet
    package: DisclosurePackage
    prover: KeyPair

    def run(self, verifier_rng: RandomSource, prover_rng: RandomSource) -> confirm.ConfirmTranscript:
        return confirm.run_confirmation(self.ps, self.prover, self.package, verifier_rng, prover_rng)


def prove_to_authority(ps: ParamSet, holder: KeyPair, ev: VerifiedEvidence,
                       cred: RegistrationCredential | None = None) -> ConfirmationPair:
    if cred is not None and cred.status == ISSUED:
        raise StateError("credential has not been verified by its holder")
    if not isinstance(ev, VerifiedEvidence):
        raise StateError("evidence must come from a successful holder_verify")
    sig = ev.sig
    if (sig.receiver != holder.y or mod_exp(ev.mu, holder.x, ps.p) != ev.Z
            or hash_to_zq(ps, ev.Z, sig.W, sig.m) != sig.r):
        raise StateError("evidence does not belong to this holder or failed verification")
    return ConfirmationPair(ps, build_disclosure(ev), holder)
