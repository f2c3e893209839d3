"""Text serialization for every protocol object.

Every file is ASCII with LF line endings. The first line is
``<tag> v1``; the rest are ``key = value`` lines in a fixed order per
tag, except transcripts, which use ``move-N key=value ...`` records.
Integers are decimal without leading zeros; byte strings are lowercase
hex; ``-`` marks an unset optional field in session-state files.

Decoding is strict: fields must appear in order, nothing extra, and any
violation raises ParseError (or a subclass) carrying the line number.
Pass ``params`` to also check ranges that depend on p and q.

Hash inputs are never built from this text: values decode back to the
same integers and bytes, and hashing always goes through
``canonical_encode``, so a reloaded object hashes identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable

from .confirm import ABORT, ACCEPT, REJECT, ConfirmProverState, ConfirmTranscript, ConfirmVerifierState
from .directed import DirectedSignature, DisclosurePackage, VerifiedEvidence
from .errors import InvariantViolation, ParseError, TagMismatchError
from .keys import KeyPair, PublicKey, check_label
from .numtheory import mod_exp
from .params import FIXTURE, HASH_TAGS, HashSpec, ParamSet
from .proxy import DelegationSession, DelegationToken, DelegationTranscript, ProxyDirectedSignature
from .registration import STATUSES, RegistrationCredential
from .schnorr import SchnorrSignature

VERSION = "v1"
MAX_DIGITS = 2048

PARAMS = "dirsig-params"
KEY = "dirsig-key"
FIXTURE_TAG = "dirsig-fixture"
SCHNORR = "dirsig-schnorr"
DIRECTED = "dirsig-directed"
PROXYSIG = "dirsig-proxysig"
EVIDENCE = "dirsig-evidence"
DISCLOSURE = "dirsig-disclosure"
REGCRED = "dirsig-regcred"
TOKEN = "dirsig-token"
CONFIRM = "dirsig-confirm"
DELEG = "dirsig-deleg"
VERIFIER_STATE = "dirsig-confirm-verifier"
PROVER_STATE = "dirsig-confirm-prover"
DELEG_ORIGINAL_STATE = "dirsig-deleg-original"
DELEG_PROXY_STATE = "dirsig-deleg-proxy"

SECRET, PUBLIC = "SECRET", "PUBLIC"

_INT = re.compile(r"0|[1-9][0-9]*")
_HEX = re.compile(r"(?:[0-9a-f]{2})*")


# -- low-level text handling -------------------------------------------------

def _fmt(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, (bytes, bytearray)):
        return bytes(value).hex()
    return str(value)


def _render(tag: str, lines: list[str]) -> bytes:
    return ("\n".join([f"{tag} {VERSION}", *lines]) + "\n").encode("ascii")


def _kv(fields: list[tuple[str, Any]]) -> list[str]:
    out = []
    for key, value in fields:
        text = _fmt(value)
        out.append(f"{key} = {text}" if text else f"{key} =")
    return out


def _parse_int(text: str, line: int, optional: bool = False) -> int | None:
    if optional and text == "-":
        return None
    if len(text) > MAX_DIGITS or not _INT.fullmatch(text):
        raise ParseError(f"expected a decimal integer, got {text[:40]!r}", line)
    return int(text)


def _parse_hex(text: str, line: int) -> bytes:
    if not _HEX.fullmatch(text):
        raise ParseError("expected lowercase hex with an even number of digits", line)
    return bytes.fromhex(text)


class Reader:
    """Sequential, strict reader over the body lines of one file."""

    def __init__(self, data: bytes, expected_tag: str):
        if not isinstance(data, (bytes, bytearray)):
            raise ParseError("input must be bytes")
        try:
            text = bytes(data).decode("ascii")
        except UnicodeDecodeError:
            raise ParseError("input is not ASCII") from None
        if "\r" in text:
            raise ParseError("CR characters are not allowed; use LF line endings")
        if not text.endswith("\n"):
            raise ParseError("file must end with a newline")
        self.lines = text[:-1].split("\n")
        header = self.lines[0].split(" ")
        if len(header) != 2:
            raise ParseError("malformed header", 1)
        if header[0] != expected_tag:
            raise TagMismatchError(f"expected {expected_tag}, found {header[0][:40]!r}", 1)
        if header[1] != VERSION:
            raise ParseError(f"unsupported version {header[1][:20]!r}", 1)
        self.pos = 1
        self.where: dict[str, int] = {}

    @property
    def line(self) -> int:
        return self.pos + 1

    def at_end(self) -> bool:
        return self.pos >= len(self.lines)

    def _next(self, what: str) -> str:
        if self.at_end():
            raise ParseError(f"missing field {what!r} (file truncated)", self.line)
        text = self.lines[self.pos]
        self.pos += 1
        return text

    def peek_key(self) -> str | None:
        if self.at_end():
            return None
        return self.lines[self.pos].split(" ", 1)[0]

    def raw(self, key: str) -> str:
        text = self._next(key)
        if text == f"{key} =":
            value = ""
        elif text.startswith(f"{key} = "):
            value = text[len(key) + 3:]
        else:
            found = text.split(" ", 1)[0][:40]
            raise ParseError(f"expected field {key!r}, found {found!r}", self.pos)
        self.where[key] = self.pos
        return value

    def int(self, key: str, optional: bool = False) -> int | None:
        return _parse_int(self.raw(key), self.pos, optional)

    def hex(self, key: str) -> bytes:
        return _parse_hex(self.raw(key), self.pos)

    def choice(self, key: str, options: tuple[str, ...]) -> str:
        value = self.raw(key)
        if value not in options:
            raise ParseError(f"{key} must be one of {', '.join(options)}", self.pos)
        return value

    def label(self, key: str) -> str:
        value = self.raw(key)
        try:
            return check_label(value)
        except ValueError as exc:
            raise ParseError(str(exc), self.pos) from None

    def record(self, label: str, keys: tuple[str, ...]) -> dict[str, int]:
        text = self._next(label)
        parts = text.split(" ")
        if parts[0] != label or len(parts) != len(keys) + 1:
            raise ParseError(f"expected record {label!r}", self.pos)
        out = {}
        for key, part in zip(keys, parts[1:]):
            if not part.startswith(f"{key}="):
                raise ParseError(f"expected {key}=... in {label}", self.pos)
            out[key] = _parse_int(part[len(key) + 1:], self.pos)
        return out

    def end(self) -> None:
        if not self.at_end():
            raise ParseError("unexpected extra content", self.line)

    def fail(self, key: str, message: str) -> None:
        raise InvariantViolation(f"{key}: {message}", self.where.get(key))


def _need(params: ParamSet | None, tag: str) -> ParamSet:
    if params is None:
        raise ValueError(f"decoding {tag} requires params")
    return params


def _check_residue(rd: Reader, ps: ParamSet | None, *keys_values: tuple[str, int]) -> None:
    if ps is None:
        return
    for key, value in keys_values:
        if not 1 <= value < ps.p:
            rd.fail(key, "must lie in [1, p-1]")


def _check_scalar(rd: Reader, ps: ParamSet | None, *keys_values: tuple[str, int]) -> None:
    if ps is None:
        return
    for key, value in keys_values:
        if not 0 <= value < ps.q:
            rd.fail(key, "must lie in [0, q-1]")


def _check_subgroup(rd: Reader, ps: ParamSet | None, key: str, value: int) -> None:
    if ps is not None and not ps.allow_invalid and mod_exp(value, ps.q, ps.p) != 1:
        rd.fail(key, "not in the order-q subgroup")


def _check_pubkey(rd: Reader, ps: ParamSet | None, key: str, value: int) -> None:
    if ps is None:
        return
    if not 1 < value < ps.p:
        rd.fail(key, "public key must lie in [2, p-1]")
    _check_subgroup(rd, ps, key, value)


# -- per-type codecs ---------------------------------------------------------

def _enc_params(ps: ParamSet) -> list[str]:
    return _kv([("p", ps.p), ("q", ps.q), ("g", ps.g), ("hash", ps.hash_spec.algorithm)])


def _dec_params(rd: Reader, params, fixture: HashSpec | None = None) -> ParamSet:
    p, q, g = rd.int("p"), rd.int("q"), rd.int("g")
    tag = rd.choice("hash", HASH_TAGS)
    rd.end()
    if p < 2:
        rd.fail("p", "must be >= 2")
    if q < 2:
        rd.fail("q", "must be >= 2")
    if tag == FIXTURE:
        if fixture is None:
            rd.fail("hash", "fixture hash requires a fixture table")
        return ParamSet(p, q, g, fixture)
    return ParamSet(p, q, g)


def _enc_public(key: PublicKey | KeyPair) -> list[str]:
    return _kv([("marking", PUBLIC), ("owner", key.owner), ("y", key.y)])


def _enc_secret(key: KeyPair) -> list[str]:
    return _kv([("marking", SECRET), ("owner", key.owner), ("y", key.y), ("x", key.x)])


def _dec_key(rd: Reader, ps: ParamSet | None) -> PublicKey | KeyPair:
    marking = rd.choice("marking", (SECRET, PUBLIC))
    owner = rd.label("owner")
    y = rd.int("y")
    x = rd.int("x") if marking == SECRET else None
    rd.end()
    if ps is not None:
        if ps.allow_invalid:
            _check_residue(rd, ps, ("y", y))
        else:
            _check_pubkey(rd, ps, "y", y)
        if x is not None:
            if not 1 <= x < ps.q and not ps.allow_invalid:
                rd.fail("x", "must lie in [1, q-1]")
            if mod_exp(ps.g, x, ps.p) != y:
                rd.fail("x", "y != g^x mod p")
    return PublicKey(owner, y) if x is None else KeyPair(owner, y, x)


def _enc_fixture(spec: HashSpec) -> list[str]:
    if not spec.is_fixture:
        raise ValueError("only fixture hash specs have a file form")
    return [f"entry = {k.hex()} {v}" for k, v in sorted(spec.table.items())]


def _dec_fixture(rd: Reader, params) -> HashSpec:
    table = {}
    while not rd.at_end():
        parts = rd.raw("entry").split(" ")
        if len(parts) != 2:
            raise ParseError("entry must be '<hex> <value>'", rd.pos)
        key = _parse_hex(parts[0], rd.pos)
        if key in table:
            raise ParseError("duplicate fixture entry", rd.pos)
        table[key] = _parse_int(parts[1], rd.pos)
    return HashSpec(FIXTURE, table)


def _enc_schnorr(sig: SchnorrSignature) -> list[str]:
    return _kv([("r", sig.r), ("s", sig.s), ("m", sig.m)])


def _dec_schnorr(rd: Reader, ps) -> SchnorrSignature:
    r, s, m = rd.int("r"), rd.int("s"), rd.hex("m")
    rd.end()
    _check_scalar(rd, ps, ("r", r), ("s", s))
    return SchnorrSignature(r, s, m)


def _sig_fields(sig) -> list[tuple[str, Any]]:
    return [("S", sig.S), ("W", sig.W), ("r", sig.r), ("m", sig.m)]


def _read_sig_core(rd: Reader) -> tuple[int, int, int, bytes]:
    return rd.int("S"), rd.int("W"), rd.int("r"), rd.hex("m")


def _check_sig_core(rd: Reader, ps, S: int, W: int, r: int) -> None:
    _check_scalar(rd, ps, ("S", S), ("r", r))
    _check_residue(rd, ps, ("W", W))
    _check_subgroup(rd, ps, "W", W)


def _directed_fields(sig: DirectedSignature) -> list[tuple[str, Any]]:
    return _sig_fields(sig) + [("signer", sig.signer), ("receiver", sig.receiver)]


def _read_directed(rd: Reader, ps) -> DirectedSignature:
    S, W, r, m = _read_sig_core(rd)
    signer, receiver = rd.int("signer"), rd.int("receiver")
    _check_sig_core(rd, ps, S, W, r)
    if ps is not None and not ps.allow_invalid:
        _check_pubkey(rd, ps, "signer", signer)
        _check_pubkey(rd, ps, "receiver", receiver)
    _check_residue(rd, ps, ("signer", signer), ("receiver", receiver))
    return DirectedSignature(S, W, r, m, signer, receiver)


def _proxy_fields(sig: ProxyDirectedSignature) -> list[tuple[str, Any]]:
    return _sig_fields(sig) + [("receiver", sig.receiver), ("original", sig.original),
                               ("delegation", sig.r_deleg)]


def _read_proxy(rd: Reader, ps) -> ProxyDirectedSignature:
    S, W, r, m = _read_sig_core(rd)
    receiver, original, r_deleg = rd.int("receiver"), rd.int("original"), rd.int("delegation")
    _check_sig_core(rd, ps, S, W, r)
    if ps is not None and not ps.allow_invalid:
        _check_pubkey(rd, ps, "receiver", receiver)
        _check_pubkey(rd, ps, "original", original)
    _check_residue(rd, ps, ("receiver", receiver), ("original", original), ("delegation", r_deleg))
    return ProxyDirectedSignature(S, W, r, m, original, receiver, r_deleg)


def _enc_directed(sig: DirectedSignature) -> list[str]:
    return _kv(_directed_fields(sig))


def _dec_directed(rd: Reader, ps) -> DirectedSignature:
    sig = _read_directed(rd, ps)
    rd.end()
    return sig


def _enc_proxysig(sig: ProxyDirectedSignature) -> list[str]:
    return _kv(_proxy_fields(sig))


def _dec_proxysig(rd: Reader, ps) -> ProxyDirectedSignature:
    sig = _read_proxy(rd, ps)
    rd.end()
    return sig


def _enc_evidence(ev: VerifiedEvidence) -> list[str]:
    if isinstance(ev.sig, ProxyDirectedSignature):
        fields = [("scheme", "proxy")] + _proxy_fields(ev.sig)
    else:
        fields = [("scheme", "directed")] + _directed_fields(ev.sig)
    return _kv(fields + [("mu", ev.mu), ("Z", ev.Z), ("key", ev.key)])


def _dec_evidence(rd: Reader, ps) -> VerifiedEvidence:
    scheme = rd.choice("scheme", ("directed", "proxy"))
    sig = _read_proxy(rd, ps) if scheme == "proxy" else _read_directed(rd, ps)
    mu, Z, key = rd.int("mu"), rd.int("Z"), rd.int("key")
    rd.end()
    _check_residue(rd, ps, ("mu", mu), ("Z", Z))
    if scheme == "directed" and key != sig.signer:
        rd.fail("key", "must equal signer for directed evidence")
    if scheme == "proxy" and ps is not None and key != sig.verification_key(ps):
        rd.fail("key", "must equal original^delegation * delegation mod p")
    return VerifiedEvidence(mu, Z, sig, key)


def _enc_disclosure(pkg: DisclosurePackage) -> list[str]:
    return _kv(_sig_fields(pkg) + [("signer", pkg.signer), ("receiver", pkg.receiver),
                                   ("mu", pkg.mu), ("Z", pkg.Z)])


def _dec_disclosure(rd: Reader, ps) -> DisclosurePackage:
    S, W, r, m = _read_sig_core(rd)
    signer, receiver, mu, Z = rd.int("signer"), rd.int("receiver"), rd.int("mu"), rd.int("Z")
    rd.end()
    _check_sig_core(rd, ps, S, W, r)
    _check_residue(rd, ps, ("signer", signer), ("receiver", receiver), ("mu", mu), ("Z", Z))
    return DisclosurePackage(S, W, r, m, signer, receiver, mu, Z)


def _enc_regcred(cred: RegistrationCredential) -> list[str]:
    return _kv(_directed_fields(cred.sig) + [("status", cred.status)])


def _dec_regcred(rd: Reader, ps) -> RegistrationCredential:
    sig = _read_directed(rd, ps)
    status = rd.choice("status", STATUSES)
    rd.end()
    return RegistrationCredential(sig, status)


def _enc_token(token: DelegationToken) -> list[str]:
    return _kv([("marking", SECRET), ("r", token.r), ("S", token.S), ("original", token.original)])


def _dec_token(rd: Reader, ps) -> DelegationToken:
    rd.choice("marking", (SECRET,))
    r, S, original = rd.int("r"), rd.int("S"), rd.int("original")
    rd.end()
    _check_residue(rd, ps, ("r", r), ("original", original))
    _check_scalar(rd, ps, ("S", S))
    token = DelegationToken(r, S, original)
    if ps is not None and mod_exp(ps.g, S, ps.p) != token.verification_key(ps):
        rd.fail("S", "g^S != original^r * r mod p")
    return token


_VERDICTS = (ACCEPT, REJECT, ABORT)


def _read_verdict(rd: Reader) -> str | None:
    if rd.at_end():
        return None
    text = rd._next("verdict")
    parts = text.split(" ")
    if len(parts) != 2 or parts[0] != "verdict" or parts[1] not in _VERDICTS:
        raise ParseError("expected 'verdict accept|reject|abort'", rd.pos)
    return parts[1]


def _enc_confirm(t: ConfirmTranscript) -> list[str]:
    lines = [f"move-1 w={t.w}"]
    if t.beta is not None:
        lines.append(f"move-2 beta={t.beta} gamma={t.gamma}")
    if t.u is not None:
        lines.append(f"move-3 u={t.u} v={t.v}")
    if t.alpha is not None:
        lines.append(f"move-4 alpha={t.alpha}")
    if t.verdict is not None:
        lines.append(f"verdict {t.verdict}")
    return lines


_CONFIRM_MOVES = (("move-1", ("w",)), ("move-2", ("beta", "gamma")), ("move-3", ("u", "v")),
                  ("move-4", ("alpha",)))


def _dec_confirm(rd: Reader, ps) -> ConfirmTranscript:
    values: dict[str, int] = {}
    for label, keys in _CONFIRM_MOVES:
        if label != "move-1" and rd.peek_key() != label:
            break
        values.update(rd.record(label, keys))
        for key in keys:
            rd.where[key] = rd.pos
    verdict = _read_verdict(rd)
    rd.end()
    if verdict in (ACCEPT, REJECT) and "alpha" not in values:
        raise InvariantViolation("accept/reject verdict requires move-4", rd.pos)
    if verdict == ABORT and ("u" not in values or "alpha" in values):
        raise InvariantViolation("abort verdict follows move-3 and precedes move-4", rd.pos)
    for key in ("w", "beta", "gamma"):
        if key in values:
            _check_residue(rd, ps, (key, values[key]))
    return ConfirmTranscript(values["w"], values.get("beta"), values.get("gamma"), values.get("u"),
                             values.get("v"), values.get("alpha"), verdict)


def _enc_deleg(t: DelegationTranscript) -> list[str]:
    lines = [f"move-1 rA={t.r_A}"]
    if t.r is not None:
        lines.append(f"move-2 r={t.r}")
    if t.s_A is not None:
        lines.append(f"move-3 sA={t.s_A}")
    if t.verdict is not None:
        lines.append(f"verdict {t.verdict}")
    return lines


def _dec_deleg(rd: Reader, ps) -> DelegationTranscript:
    values: dict[str, int] = {}
    for label, key in (("move-1", "rA"), ("move-2", "r"), ("move-3", "sA")):
        if label != "move-1" and rd.peek_key() != label:
            break
        values.update(rd.record(label, (key,)))
        rd.where[key] = rd.pos
    verdict = _read_verdict(rd)
    rd.end()
    if verdict == ABORT:
        raise InvariantViolation("delegation verdicts are accept or reject", rd.pos)
    if verdict is not None and "sA" not in values:
        raise InvariantViolation("verdict requires move-3", rd.pos)
    _check_residue(rd, ps, *[(k, values[k]) for k in ("rA", "r") if k in values])
    if "sA" in values:
        _check_scalar(rd, ps, ("sA", values["sA"]))
    return DelegationTranscript(values["rA"], values.get("r"), values.get("sA"), verdict)


_VERIFIER_PHASES = ("committed", "revealed", "done")
_PROVER_PHASES = ("await_reveal", "opened", "aborted")
_DELEG_PHASES = ("sent_rA", "sent_sA", "await_rA", "sent_r", "done", "rejected")


def _enc_vstate(st: ConfirmVerifierState) -> list[str]:
    return _kv([("marking", SECRET), ("phase", st.phase), ("u", st.u), ("v", st.v), ("w", st.w),
                ("beta", st.beta), ("gamma", st.gamma), ("verdict", st.verdict)])


def _dec_vstate(rd: Reader, ps) -> ConfirmVerifierState:
    ps = _need(ps, VERIFIER_STATE)
    rd.choice("marking", (SECRET,))
    phase = rd.choice("phase", _VERIFIER_PHASES)
    u, v, w = rd.int("u"), rd.int("v"), rd.int("w")
    beta, gamma = rd.int("beta", optional=True), rd.int("gamma", optional=True)
    verdict = rd.choice("verdict", ("-",) + _VERDICTS)
    rd.end()
    if (beta is None) != (phase == "committed") or (gamma is None) != (beta is None):
        rd.fail("phase", "beta/gamma presence disagrees with phase")
    if (verdict == "-") != (phase != "done"):
        rd.fail("verdict", "verdict presence disagrees with phase")
    st = ConfirmVerifierState(ps, u, v, w, phase, beta, gamma, None if verdict == "-" else verdict)
    return st


def _enc_pstate(st: ConfirmProverState) -> list[str]:
    return _kv([("marking", SECRET), ("phase", st.phase), ("mu", st.mu), ("w", st.w),
                ("alpha", st.alpha), ("beta", st.beta), ("gamma", st.gamma)])


def _dec_pstate(rd: Reader, ps) -> ConfirmProverState:
    ps = _need(ps, PROVER_STATE)
    rd.choice("marking", (SECRET,))
    phase = rd.choice("phase", _PROVER_PHASES)
    mu, w, alpha, beta, gamma = (rd.int(k) for k in ("mu", "w", "alpha", "beta", "gamma"))
    rd.end()
    _check_residue(rd, ps, ("mu", mu), ("w", w), ("beta", beta), ("gamma", gamma))
    return ConfirmProverState(ps, mu, w, alpha, beta, gamma, phase)


def _enc_deleg_state(s: DelegationSession) -> list[str]:
    return _kv([("marking", SECRET), ("role", s.role), ("phase", s.phase), ("original", s.original_pub),
                ("k", s.k), ("alpha", s.alpha), ("rA", s.r_A), ("r", s.r), ("sA", s.s_A)])


def _dec_deleg_state(rd: Reader, ps, role: str) -> DelegationSession:
    rd.choice("marking", (SECRET,))
    rd.choice("role", (role,))
    phase = rd.choice("phase", _DELEG_PHASES)
    original = rd.int("original")
    k, alpha, r_A, r, s_A = (rd.int(key, optional=True) for key in ("k", "alpha", "rA", "r", "sA"))
    rd.end()
    _check_residue(rd, ps, ("original", original))
    return DelegationSession(role, phase, original, None, k, alpha, r_A, r, s_A)


# -- registry ----------------------------------------------------------------

@dataclass(frozen=True)
class Codec:
    tag: str
    encode: Callable[[Any], list[str]]
    decode: Callable[..., Any]


CODECS: dict[str, Codec] = {c.tag: c for c in [
    Codec(PARAMS, _enc_params, _dec_params),
    Codec(KEY, _enc_public, _dec_key),
    Codec(FIXTURE_TAG, _enc_fixture, _dec_fixture),
    Codec(SCHNORR, _enc_schnorr, _dec_schnorr),
    Codec(DIRECTED, _enc_directed, _dec_directed),
    Codec(PROXYSIG, _enc_proxysig, _dec_proxysig),
    Codec(EVIDENCE, _enc_evidence, _dec_evidence),
    Codec(DISCLOSURE, _enc_disclosure, _dec_disclosure),
    Codec(REGCRED, _enc_regcred, _dec_regcred),
    Codec(TOKEN, _enc_token, _dec_token),
    Codec(CONFIRM, _enc_confirm, _dec_confirm),
    Codec(DELEG, _enc_deleg, _dec_deleg),
    Codec(VERIFIER_STATE, _enc_vstate, _dec_vstate),
    Codec(PROVER_STATE, _enc_pstate, _dec_pstate),
    Codec(DELEG_ORIGINAL_STATE, _enc_deleg_state, lambda rd, ps: _dec_deleg_state(rd, ps, "original")),
    Codec(DELEG_PROXY_STATE, _enc_deleg_state, lambda rd, ps: _dec_deleg_state(rd, ps, "proxy")),
]}

_TAG_OF_TYPE = {
    ParamSet: PARAMS, PublicKey: KEY, KeyPair: KEY, HashSpec: FIXTURE_TAG,
    SchnorrSignature: SCHNORR, DirectedSignature: DIRECTED, ProxyDirectedSignature: PROXYSIG,
    VerifiedEvidence: EVIDENCE, DisclosurePackage: DISCLOSURE, RegistrationCredential: REGCRED,
    DelegationToken: TOKEN, ConfirmTranscript: CONFIRM, DelegationTranscript: DELEG,
    ConfirmVerifierState: VERIFIER_STATE, ConfirmProverState: PROVER_STATE,
}


def tag_of(obj: Any) -> str:
    if isinstance(obj, DelegationSession):
        return DELEG_ORIGINAL_STATE if obj.role == "original" else DELEG_PROXY_STATE
    try:
        return _TAG_OF_TYPE[type(obj)]
    except KeyError:
        raise TypeError(f"no wire format for {type(obj).__name__}") from None


def encode(obj: Any) -> bytes:
    """Serialize ``obj``. Key pairs encode as their PUBLIC half."""
    tag = tag_of(obj)
    return _render(tag, CODECS[tag].encode(obj))


def export_secret(key: KeyPair) -> bytes:
    """The only way to write a secret exponent to a file."""
    return _render(KEY, _enc_secret(key))


def decode(data: bytes, expected_tag: str, params: ParamSet | None = None, **kwargs) -> Any:
    if expected_tag not in CODECS:
        raise TagMismatchError(f"unknown format tag {expected_tag!r}")
    rd = Reader(data, expected_tag)
    return CODECS[expected_tag].decode(rd, params, **kwargs)
