"""``dirsig`` command-line driver.

Each invocation performs one protocol step, reading and writing files in
the wire formats. Interactive protocols advance one move per call: the
transcript file is passed back and forth and each party keeps its own
secret session state in ``--state``.

Exit status: 0 success/accept, 1 cryptographic reject, 2 usage or format
error, 3 protocol abort (out-of-order move or caught cheating).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import confirm, wire
from .directed import build_disclosure, directed_sign, directed_verify
from .errors import (DelegationError, DirsigError, PackageInvalidError, ProtocolAbort,
                     ProtocolOrderError)
from .keys import KeyPair, keygen
from .numtheory import ScriptedScalars, seeded_rng, system_rng
from .params import generate_params, validate_params
from .proxy import (DelegationTranscript, delegate_blind, delegate_finish, delegate_init,
                    delegate_respond, new_proxy_session, proxy_directed_sign, proxy_directed_verify)
from .registration import allocate, holder_verify, prove_to_authority, publish
from .schnorr import schnorr_sign, schnorr_verify

OK, REJECT, USAGE, ABORT = 0, 1, 2, 3


class UsageError(DirsigError):
    pass


# -- helpers -----------------------------------------------------------------

def _read(path: str) -> bytes:
    return Path(path).read_bytes()


def _write(path: str, data: bytes) -> None:
    Path(path).write_bytes(data)


def _rng(args):
    base = seeded_rng(args.seed) if args.seed is not None else system_rng()
    if args.scalars:
        return ScriptedScalars(args.scalars, fallback=base)
    return base


def _scalar_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma-separated integers") from None
    if any(v < 0 for v in values):
        raise argparse.ArgumentTypeError("scalars must be nonnegative")
    return values


def _params(args):
    fixture = wire.decode(_read(args.fixture_hash), wire.FIXTURE_TAG) if args.fixture_hash else None
    ps = wire.decode(_read(args.params), wire.PARAMS, fixture=fixture)
    if fixture is not None:
        ps = ps.with_hash(fixture)
    if args.allow_invalid_params:
        ps = ps.unchecked()
    return ps


def _secret_key(args, ps) -> KeyPair:
    key = wire.decode(_read(args.key), wire.KEY, ps)
    if not isinstance(key, KeyPair):
        raise UsageError(f"{args.key} holds no secret key")
    return key


def _public(path: str, ps) -> int:
    key = wire.decode(_read(path), wire.KEY, ps)
    return key.y


def _check_test_flags(args) -> None:
    used = [name for name, on in (("--fixture-hash", args.fixture_hash),
                                  ("--allow-invalid-params", args.allow_invalid_params),
                                  ("--scalars", args.scalars)) if on]
    if used and not args.unsafe_test_mode:
        raise UsageError(f"{', '.join(used)} require --unsafe-test-mode")


# -- commands ----------------------------------------------------------------

def cmd_params_gen(args) -> int:
    ps = generate_params(args.p_bits, args.q_bits, _rng(args))
    _write(args.out, wire.encode(ps))
    return OK


def cmd_params_check(args) -> int:
    fixture = wire.decode(_read(args.fixture_hash), wire.FIXTURE_TAG) if args.fixture_hash else None
    ps = wire.decode(_read(args.file), wire.PARAMS, fixture=fixture)
    report = validate_params(ps)
    print(report)
    return OK if report.valid else REJECT


def cmd_keygen(args) -> int:
    ps = _params(args)
    key = keygen(ps, _rng(args), args.owner)
    _write(args.out_secret, wire.export_secret(key))
    _write(args.out_public, wire.encode(key.public))
    return OK


def cmd_sign(args) -> int:
    ps = _params(args)
    sig = directed_sign(ps, _secret_key(args, ps), _public(args.receiver, ps), _read(args.message), _rng(args))
    _write(args.out, wire.encode(sig))
    return OK


def cmd_verify(args) -> int:
    ps = _params(args)
    sig = wire.decode(_read(args.sig), wire.DIRECTED, ps)
    ev = directed_verify(ps, _secret_key(args, ps), _public(args.signer, ps), sig)
    if ev is None:
        print("reject")
        return REJECT
    if args.out_evidence:
        _write(args.out_evidence, wire.encode(ev))
    print("accept")
    return OK


def cmd_disclose(args) -> int:
    ps = _params(args) if args.params else None
    ev = wire.decode(_read(args.evidence), wire.EVIDENCE, ps)
    _write(args.out, wire.encode(build_disclosure(ev)))
    return OK


def cmd_schnorr_sign(args) -> int:
    ps = _params(args)
    sig = schnorr_sign(ps, _secret_key(args, ps), _read(args.message), _rng(args))
    _write(args.out, wire.encode(sig))
    return OK


def cmd_schnorr_verify(args) -> int:
    ps = _params(args)
    sig = wire.decode(_read(args.sig), wire.SCHNORR, ps)
    ok = schnorr_verify(ps, _public(args.signer, ps), sig)
    print("accept" if ok else "reject")
    return OK if ok else REJECT


def cmd_confirm_verifier(args) -> int:
    ps = _params(args)
    pkg = wire.decode(_read(args.package), wire.DISCLOSURE, ps)
    if args.inp is None:
        state, w = confirm.verifier_start(ps, pkg, _rng(args))
        _write(args.state, wire.encode(state))
        _write(args.out, wire.encode(confirm.ConfirmTranscript(w)))
        return OK
    t = wire.decode(_read(args.inp), wire.CONFIRM, ps)
    state = wire.decode(_read(args.state), wire.VERIFIER_STATE, ps)
    if t.w != state.w:
        raise ProtocolOrderError("transcript w differs from the one this verifier sent")
    if t.verdict == confirm.ABORT:
        raise ProtocolAbort("prover aborted the run")
    if state.phase == "committed" and t.beta is not None and t.u is None:
        u, v = confirm.verifier_reveal(state, t.beta, t.gamma)
        t = confirm.ConfirmTranscript(t.w, t.beta, t.gamma, u, v)
    elif state.phase == "revealed" and t.alpha is not None and t.verdict is None:
        if (t.beta, t.gamma, t.u, t.v) != (state.beta, state.gamma, state.u, state.v):
            raise ProtocolOrderError("transcript history was altered")
        confirm.verifier_finish(state, pkg, t.alpha)
        t = confirm.ConfirmTranscript(t.w, t.beta, t.gamma, t.u, t.v, t.alpha, state.verdict)
    else:
        raise ProtocolOrderError(f"no verifier move applies in phase {state.phase!r} to this transcript")
    _write(args.state, wire.encode(state))
    _write(args.out, wire.encode(t))
    if state.verdict is not None:
        print(state.verdict)
        return OK if state.verdict == confirm.ACCEPT else REJECT
    return OK


def cmd_confirm_prover(args) -> int:
    ps = _params(args)
    pkg = wire.decode(_read(args.package), wire.DISCLOSURE, ps)
    t = wire.decode(_read(args.inp), wire.CONFIRM, ps)
    if t.beta is None and t.verdict is None:
        state, (beta, gamma) = confirm.prover_commit(ps, _secret_key(args, ps), pkg, t.w, _rng(args))
        _write(args.state, wire.encode(state))
        _write(args.out, wire.encode(confirm.ConfirmTranscript(t.w, beta, gamma)))
        return OK
    if t.u is None or t.alpha is not None or t.verdict is not None:
        raise ProtocolOrderError("no prover move applies to this transcript")
    state = wire.decode(_read(args.state), wire.PROVER_STATE, ps)
    if (t.w, t.beta, t.gamma) != (state.w, state.beta, state.gamma):
        raise ProtocolOrderError("transcript history was altered")
    try:
        alpha = confirm.prover_open(state, t.u, t.v)
    except ProtocolAbort:
        _write(args.state, wire.encode(state))
        _write(args.out, wire.encode(confirm.ConfirmTranscript(t.w, t.beta, t.gamma, t.u, t.v,
                                                               None, confirm.ABORT)))
        raise
    _write(args.state, wire.encode(state))
    _write(args.out, wire.encode(confirm.ConfirmTranscript(t.w, t.beta, t.gamma, t.u, t.v, alpha)))
    return OK


def cmd_delegate_init(args) -> int:
    ps = _params(args)
    session, r_A = delegate_init(ps, _secret_key(args, ps), _rng(args))
    _write(args.state, wire.encode(session))
    _write(args.out, wire.encode(DelegationTranscript(r_A)))
    return OK


def cmd_delegate_blind(args) -> int:
    ps = _params(args)
    t = wire.decode(_read(args.inp), wire.DELEG, ps)
    if t.r is not None:
        raise ProtocolOrderError("blind expects a transcript ending at move-1")
    session = new_proxy_session(ps, _public(args.original, ps))
    r = delegate_blind(ps, session, t.r_A, _rng(args))
    _write(args.state, wire.encode(session))
    _write(args.out, wire.encode(DelegationTranscript(t.r_A, r)))
    return OK


def cmd_delegate_respond(args) -> int:
    ps = _params(args)
    t = wire.decode(_read(args.inp), wire.DELEG, ps)
    session = wire.decode(_read(args.state), wire.DELEG_ORIGINAL_STATE, ps)
    key = _secret_key(args, ps)
    if key.y != session.original_pub:
        raise UsageError("key does not match the delegation session")
    session.original = key
    if t.r is None or t.s_A is not None or t.r_A != session.r_A:
        raise ProtocolOrderError("respond expects this session's transcript ending at move-2")
    s_A = delegate_respond(ps, session, t.r)
    _write(args.state, wire.encode(session))
    _write(args.out, wire.encode(DelegationTranscript(t.r_A, t.r, s_A)))
    return OK


def cmd_delegate_finish(args) -> int:
    ps = _params(args)
    t = wire.decode(_read(args.inp), wire.DELEG, ps)
    session = wire.decode(_read(args.state), wire.DELEG_PROXY_STATE, ps)
    if t.s_A is None or t.verdict is not None or (t.r_A, t.r) != (session.r_A, session.r):
        raise ProtocolOrderError("finish expects this session's transcript ending at move-3")
    try:
        token = delegate_finish(ps, session, t.s_A)
    except DelegationError:
        _write(args.state, wire.encode(session))
        _write(args.out, wire.encode(DelegationTranscript(t.r_A, t.r, t.s_A, "reject")))
        print("reject")
        return REJECT
    _write(args.state, wire.encode(session))
    _write(args.out, wire.encode(DelegationTranscript(t.r_A, t.r, t.s_A, "accept")))
    _write(args.out_token, wire.encode(token))
    print("accept")
    return OK


def cmd_proxy_sign(args) -> int:
    ps = _params(args)
    token = wire.decode(_read(args.token), wire.TOKEN, ps)
    sig = proxy_directed_sign(ps, token, _public(args.receiver, ps), _read(args.message), _rng(args))
    _write(args.out, wire.encode(sig))
    return OK


def cmd_proxy_verify(args) -> int:
    ps = _params(args)
    sig = wire.decode(_read(args.sig), wire.PROXYSIG, ps)
    ev = proxy_directed_verify(ps, _secret_key(args, ps), sig)
    if ev is None:
        print("reject")
        return REJECT
    if args.out_evidence:
        _write(args.out_evidence, wire.encode(ev))
    print("accept")
    return OK


def cmd_register_allocate(args) -> int:
    ps = _params(args)
    cred = allocate(ps, _secret_key(args, ps), _public(args.holder, ps), _read(args.message), _rng(args))
    _write(args.out, wire.encode(cred))
    return OK


def cmd_register_verify(args) -> int:
    ps = _params(args)
    cred = wire.decode(_read(args.cred), wire.REGCRED, ps)
    ev = holder_verify(ps, _secret_key(args, ps), cred)
    if ev is None:
        print("reject")
        return REJECT
    _write(args.out_evidence, wire.encode(ev))
    _write(args.out_cred, wire.encode(cred))
    print("accept")
    return OK


def cmd_register_publish(args) -> int:
    cred = wire.decode(_read(args.cred), wire.REGCRED)
    publish(cred)
    _write(args.out, wire.encode(cred))
    return OK


def cmd_register_prove(args) -> int:
    ps = _params(args)
    cred = wire.decode(_read(args.cred), wire.REGCRED, ps)
    ev = wire.decode(_read(args.evidence), wire.EVIDENCE, ps)
    pair = prove_to_authority(ps, _secret_key(args, ps), ev, cred)
    _write(args.out, wire.encode(pair.package))
    return OK


# -- argument grammar --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="deterministic randomness (tests only)")
    common.add_argument("--unsafe-test-mode", action="store_true",
                        help="permit the test-only flags below")
    common.add_argument("--fixture-hash", metavar="F", help="table-backed hash (test only)")
    common.add_argument("--allow-invalid-params", action="store_true",
                        help="skip parameter validation (test only)")
    common.add_argument("--scalars", type=_scalar_list, metavar="LIST",
                        help="comma-separated forced random draws (test only)")

    parser = argparse.ArgumentParser(prog="dirsig", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(subparsers, name, func, **flags):
        p = subparsers.add_parser(name, parents=[common])
        for flag, opts in flags.items():
            p.add_argument(flag, **opts)
        p.set_defaults(func=func)
        return p

    req = {"required": True}
    opt_params = {"required": False}

    params = sub.add_parser("params").add_subparsers(dest="action", required=True)
    add(params, "gen", cmd_params_gen, **{"--p-bits": {"type": int, "default": 512},
                                          "--q-bits": {"type": int, "default": 160}, "--out": req})
    add(params, "check", cmd_params_check, file={})

    add(sub, "keygen", cmd_keygen, **{"--params": req, "--owner": req, "--out-secret": req,
                                      "--out-public": req})
    add(sub, "sign", cmd_sign, **{"--params": req, "--key": req, "--receiver": req,
                                  "--message": req, "--out": req})
    add(sub, "verify", cmd_verify, **{"--params": req, "--key": req, "--signer": req, "--sig": req,
                                      "--out-evidence": opt_params})
    add(sub, "disclose", cmd_disclose, **{"--params": opt_params, "--evidence": req, "--out": req})

    schnorr = sub.add_parser("schnorr").add_subparsers(dest="action", required=True)
    add(schnorr, "sign", cmd_schnorr_sign, **{"--params": req, "--key": req, "--message": req,
                                              "--out": req})
    add(schnorr, "verify", cmd_schnorr_verify, **{"--params": req, "--signer": req, "--sig": req})

    conf = sub.add_parser("confirm").add_subparsers(dest="role", required=True)
    add(conf, "verifier", cmd_confirm_verifier, **{"--params": req, "--package": req,
                                                   "--in": {"dest": "inp"}, "--out": req, "--state": req})
    add(conf, "prover", cmd_confirm_prover, **{"--params": req, "--key": req, "--package": req,
                                               "--in": {"dest": "inp", "required": True},
                                               "--out": req, "--state": req})

    deleg = sub.add_parser("delegate").add_subparsers(dest="step", required=True)
    move_in = {"dest": "inp", "required": True}
    add(deleg, "init", cmd_delegate_init, **{"--params": req, "--key": req, "--out": req, "--state": req})
    add(deleg, "blind", cmd_delegate_blind, **{"--params": req, "--original": req, "--in": move_in,
                                               "--out": req, "--state": req})
    add(deleg, "respond", cmd_delegate_respond, **{"--params": req, "--key": req, "--in": move_in,
                                                   "--out": req, "--state": req})
    add(deleg, "finish", cmd_delegate_finish, **{"--params": req, "--in": move_in, "--out": req,
                                                 "--state": req, "--out-token": req})

    add(sub, "proxy-sign", cmd_proxy_sign, **{"--params": req, "--token": req, "--receiver": req,
                                              "--message": req, "--out": req})
    add(sub, "proxy-verify", cmd_proxy_verify, **{"--params": req, "--key": req, "--sig": req,
                                                  "--out-evidence": opt_params})

    reg = sub.add_parser("register").add_subparsers(dest="step", required=True)
    add(reg, "allocate", cmd_register_allocate, **{"--params": req, "--key": req, "--holder": req,
                                                   "--message": req, "--out": req})
    add(reg, "verify", cmd_register_verify, **{"--params": req, "--key": req, "--cred": req,
                                               "--out-evidence": req, "--out-cred": req})
    add(reg, "publish", cmd_register_publish, **{"--cred": req, "--out": req})
    add(reg, "prove", cmd_register_prove, **{"--params": req, "--key": req, "--cred": req,
                                             "--evidence": req, "--out": req})
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        _check_test_flags(args)
        return args.func(args)
    except (ProtocolOrderError, ProtocolAbort) as exc:
        print(f"abort: {exc}", file=sys.stderr)
        return ABORT
    except PackageInvalidError as exc:
        print(f"reject: {exc}", file=sys.stderr)
        return REJECT
    except (DirsigError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
