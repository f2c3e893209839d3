"""Interactive confirmation that ``log_mu Z == log_g y_receiver``.

Five moves between a verifier (third party) and a prover (the receiver):

1. verifier -> prover   w = mu^u * g^v
2. prover -> verifier   beta = w * g^alpha, gamma = beta^x
3. verifier -> prover   u, v            (prover checks w)
4. prover -> verifier   alpha           (verifier checks beta and gamma)

The prover only opens ``alpha`` after the verifier has shown ``w`` was
honestly formed. A stored transcript lets anyone recheck the arithmetic,
but replaying it is not a fresh proof: whoever holds a transcript could
have chosen u, v after the fact.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .directed import DisclosurePackage
from .errors import FormatError, PackageInvalidError, ProtocolAbort, ProtocolOrderError, WrongProverError
from .keys import KeyPair
from .numtheory import RandomSource, mod_exp, random_scalar
from .params import ParamSet, hash_to_zq

__all__ = [
    "ConfirmProverState", "ConfirmTranscript", "ConfirmVerifierState", "DisclosurePackage",
    "precheck", "prover_commit", "prover_open", "replay", "run_confirmation",
    "verifier_finish", "verifier_reveal", "verifier_start",
]

ACCEPT, REJECT, ABORT = "accept", "reject", "abort"


def precheck(ps: ParamSet, pkg: DisclosurePackage) -> None:
    """Public consistency checks anyone can run on a package."""
    for name in ("W", "mu", "Z", "signer", "receiver"):
        if not 1 <= getattr(pkg, name) < ps.p:
            raise PackageInvalidError(f"{name} is not a nonzero residue mod p")
    if not (0 <= pkg.S < ps.q and 0 <= pkg.r < ps.q):
        raise PackageInvalidError("S and r must lie in [0, q-1]")
    if hash_to_zq(ps, pkg.Z, pkg.W, pkg.m) != pkg.r:
        raise PackageInvalidError("r does not match h(Z, W, m)")
    mu = mod_exp(ps.g, pkg.S, ps.p) * mod_exp(pkg.signer, pkg.r, ps.p) * pkg.W % ps.p
    if mu != pkg.mu:
        raise PackageInvalidError("mu does not recompute from S, r, W and the signer key")


@dataclass
class ConfirmVerifierState:
    ps: ParamSet
    u: int = field(repr=False)
    v: int = field(repr=False)
    w: int
    phase: str = "committed"
    beta: int | None = None
    gamma: int | None = None
    verdict: str | None = None


@dataclass
class ConfirmProverState:
    ps: ParamSet
    mu: int
    w: int
    alpha: int = field(repr=False)
    beta: int
    gamma: int
    phase: str = "await_reveal"


def _residue(ps: ParamSet, value: int, name: str) -> int:
    if not 1 <= value < ps.p:
        raise FormatError(f"{name} must lie in [1, p-1]")
    return value


def _expect(phase: str, wanted: str, step: str) -> None:
    if phase != wanted:
        raise ProtocolOrderError(f"{step} not allowed in phase {phase!r}")


def verifier_start(ps: ParamSet, pkg: DisclosurePackage, rng: RandomSource) -> tuple[ConfirmVerifierState, int]:
    precheck(ps, pkg)
    u = random_scalar(ps.q, rng)
    v = random_scalar(ps.q, rng)
    w = mod_exp(pkg.mu, u, ps.p) * mod_exp(ps.g, v, ps.p) % ps.p
    return ConfirmVerifierState(ps, u, v, w), w


def prover_commit(ps: ParamSet, receiver: KeyPair, pkg: DisclosurePackage, w: int,
                  rng: RandomSource) -> tuple[ConfirmProverState, tuple[int, int]]:
    if receiver.y != pkg.receiver:
        raise WrongProverError(f"{receiver.owner} is not the receiver named in the package")
    _residue(ps, w, "w")
    alpha = random_scalar(ps.q, rng)
    beta = w * mod_exp(ps.g, alpha, ps.p) % ps.p
    gamma = mod_exp(beta, receiver.x, ps.p)
    return ConfirmProverState(ps, pkg.mu, w, alpha, beta, gamma), (beta, gamma)


def verifier_reveal(state: ConfirmVerifierState, beta: int, gamma: int) -> tuple[int, int]:
    _expect(state.phase, "committed", "reveal")
    state.beta = _residue(state.ps, beta, "beta")
    state.gamma = _residue(state.ps, gamma, "gamma")
    state.phase = "revealed"
    return state.u, state.v


def prover_open(state: ConfirmProverState, u: int, v: int) -> int:
    """Release alpha, or raise ProtocolAbort if (u, v) do not reproduce w."""
    _expect(state.phase, "await_reveal", "open")
    ps = state.ps
    if u < 0 or v < 0 or mod_exp(state.mu, u, ps.p) * mod_exp(ps.g, v, ps.p) % ps.p != state.w:
        state.phase = "aborted"
        raise ProtocolAbort("verifier's (u, v) do not reproduce w")
    state.phase = "opened"
    return state.alpha


def _final_checks(ps: ParamSet, pkg: DisclosurePackage, u: int, v: int, beta: int, gamma: int,
                  alpha: int) -> bool:
    e = (v + alpha) % ps.q
    beta_ok = beta == mod_exp(pkg.mu, u, ps.p) * mod_exp(ps.g, e, ps.p) % ps.p
    gamma_ok = gamma == mod_exp(pkg.Z, u, ps.p) * mod_exp(pkg.receiver, e, ps.p) % ps.p
    return beta_ok and gamma_ok


def verifier_finish(state: ConfirmVerifierState, pkg: DisclosurePackage, alpha: int) -> bool:
    _expect(state.phase, "revealed", "finish")
    ok = alpha >= 0 and _final_checks(state.ps, pkg, state.u, state.v, state.beta, state.gamma, alpha)
    state.verdict = ACCEPT if ok else REJECT
    state.phase = "done"
    return ok


@dataclass(frozen=True)
class ConfirmTranscript:
    """The moves of one run. Later fields stay None if the run stopped early."""

    w: int
    beta: int | None = None
    gamma: int | None = None
    u: int | None = None
    v: int | None = None
    alpha: int | None = None
    verdict: str | None = None


def run_confirmation(ps: ParamSet, receiver: KeyPair, pkg: DisclosurePackage,
                     verifier_rng: RandomSource, prover_rng: RandomSource) -> ConfirmTranscript:
    """Drive both state machines in-process."""
    vstate, w = verifier_start(ps, pkg, verifier_rng)
    pstate, (beta, gamma) = prover_commit(ps, receiver, pkg, w, prover_rng)
    u, v = verifier_reveal(vstate, beta, gamma)
    try:
        alpha = prover_open(pstate, u, v)
    except ProtocolAbort:
        return ConfirmTranscript(w, beta, gamma, u, v, None, ABORT)
    verifier_finish(vstate, pkg, alpha)
    return ConfirmTranscript(w, beta, gamma, u, v, alpha, vstate.verdict)


def replay(ps: ParamSet, pkg: DisclosurePackage, t: ConfirmTranscript) -> bool:
    """Recheck a complete transcript's arithmetic (not a new proof)."""
    if None in (t.beta, t.gamma, t.u, t.v, t.alpha):
        return False
    w_ok = mod_exp(pkg.mu, t.u, ps.p) * mod_exp(ps.g, t.v, ps.p) % ps.p == t.w
    beta_ok = t.beta == t.w * mod_exp(ps.g, t.alpha, ps.p) % ps.p
    return w_ok and beta_ok and _final_checks(ps, pkg, t.u, t.v, t.beta, t.gamma, t.alpha)
