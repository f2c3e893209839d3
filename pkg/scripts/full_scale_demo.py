"""Time one directed sign/verify/confirm run at 512-bit p, 160-bit q.

Usage: python3 scripts/full_scale_demo.py [--seed N] [--p-bits N] [--q-bits N]
"""

import argparse
import random
import time

from dirsig import build_disclosure, directed_sign, directed_verify, generate_params, keygen, run_confirmation


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int)
    ap.add_argument("--p-bits", type=int, default=512)
    ap.add_argument("--q-bits", type=int, default=160)
    args = ap.parse_args()
    rng = random.Random(args.seed) if args.seed is not None else random.SystemRandom()

    timings = {}

    def timed(label, fn, *a):
        t = time.perf_counter()
        out = fn(*a)
        timings[label] = time.perf_counter() - t
        return out

    ps = timed("params", generate_params, args.p_bits, args.q_bits, rng)
    a = timed("keygen A", keygen, ps, rng, "A")
    c = timed("keygen C", keygen, ps, rng, "C")
    sig = timed("sign", directed_sign, ps, a, c.y, b"full-scale demo", rng)
    ev = timed("verify", directed_verify, ps, c, a.y, sig)
    if ev is None:
        raise SystemExit("verification failed")
    t = timed("confirm", run_confirmation, ps, c, build_disclosure(ev), rng, rng)

    print(f"p: {ps.p.bit_length()} bits, q: {ps.q.bit_length()} bits")
    for label, secs in timings.items():
        print(f"  {label:<9} {secs * 1000:8.2f} ms")
    print(f"  total     {sum(timings.values()) * 1000:8.2f} ms, verdict {t.verdict}")


if __name__ == "__main__":
    main()
