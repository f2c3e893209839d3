"""Registration number issuance and proof at p=23, q=11 via the CLI.

Usage: python3 scripts/scenario_registration.py OUTDIR

Three parts:
  check/   g=5 is rejected by ``params check`` (it has order 22, not 11)
  replay/  the g=5 numbers replayed under --allow-invalid-params and a fixture hash
  fixed/   the same flow with g=6 and SHA-256, no parameter or hash overrides
"""

import sys
from pathlib import Path

from dirsig import wire
from dirsig.cli import run
from dirsig.params import HashSpec, ParamSet

MESSAGE = bytes([1])


def flow(out: Path, extra: list[str]) -> None:
    out.mkdir(parents=True, exist_ok=True)
    f = lambda name: str(out / name)
    (out / "message.bin").write_bytes(MESSAGE)

    def step(*argv, scalars=None, expect=0):
        argv = list(argv) + ["--params", f("params.txt"), "--unsafe-test-mode"] + extra
        argv += ["--scalars", scalars] if scalars else []
        code = run(argv)
        if code != expect:
            raise SystemExit(f"step {argv[:2]} exited {code}, expected {expect}")

    step("keygen", "--owner", "Y", "--out-secret", f("Y.sec"), "--out-public", f("Y.pub"), scalars="5")
    step("keygen", "--owner", "C", "--out-secret", f("C.sec"), "--out-public", f("C.pub"), scalars="8")
    step("register", "allocate", "--key", f("Y.sec"), "--holder", f("C.pub"),
         "--message", f("message.bin"), "--out", f("cred.txt"), scalars="7,4")
    step("register", "verify", "--key", f("C.sec"), "--cred", f("cred.txt"),
         "--out-evidence", f("evidence.txt"), "--out-cred", f("cred-verified.txt"))
    step("register", "prove", "--key", f("C.sec"), "--cred", f("cred-verified.txt"),
         "--evidence", f("evidence.txt"), "--out", f("package.txt"))
    conf = ["--package", f("package.txt")]
    step("confirm", "verifier", *conf, "--out", f("confirm1.txt"), "--state", f("Y.conf"),
         scalars="13,15")
    step("confirm", "prover", *conf, "--key", f("C.sec"), "--in", f("confirm1.txt"),
         "--out", f("confirm2.txt"), "--state", f("C.conf"), scalars="8")
    step("confirm", "verifier", *conf, "--in", f("confirm2.txt"), "--out", f("confirm3.txt"),
         "--state", f("Y.conf"))
    step("confirm", "prover", *conf, "--key", f("C.sec"), "--in", f("confirm3.txt"),
         "--out", f("confirm4.txt"), "--state", f("C.conf"))
    step("confirm", "verifier", *conf, "--in", f("confirm4.txt"), "--out", f("confirm.txt"),
         "--state", f("Y.conf"))


def main(out: Path) -> None:
    check = out / "check"
    check.mkdir(parents=True, exist_ok=True)
    (check / "params.txt").write_bytes(wire.encode(ParamSet(23, 11, 5)))
    if run(["params", "check", str(check / "params.txt")]) != 1:
        raise SystemExit("g=5 should be reported INVALID")

    replay = out / "replay"
    replay.mkdir(parents=True, exist_ok=True)
    fixture = HashSpec.fixture({(18, 10, MESSAGE): 2})
    (replay / "fixture.txt").write_bytes(wire.encode(fixture))
    (replay / "params.txt").write_bytes(wire.encode(ParamSet(23, 11, 5, fixture)))
    flow(replay, ["--fixture-hash", str(replay / "fixture.txt"), "--allow-invalid-params"])

    fixed = out / "fixed"
    fixed.mkdir(parents=True, exist_ok=True)
    (fixed / "params.txt").write_bytes(wire.encode(ParamSet(23, 11, 6)))
    flow(fixed, [])


if __name__ == "__main__":
    if len(sys.argv) != 2:
        raise SystemExit(__doc__)
    main(Path(sys.argv[1]))
