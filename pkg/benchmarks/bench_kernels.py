"""Compare the compiled kernels against the pure-Python fallback.

Run: python benchmarks/bench_kernels.py
"""

import random
import time

from matlevel._kernels import _pure

try:
    from matlevel._kernels import _speedups
except ImportError:
    _speedups = None


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench(label, pure_fn, c_fn, *args, repeat=3):
    tp, rp = timed(pure_fn, *args, repeat=repeat)
    if c_fn is None:
        print(f"{label:34s} pure {tp * 1e3:9.2f} ms   (no compiled backend)")
        return
    tc, rc = timed(c_fn, *args, repeat=repeat)
    if sorted(rp) != sorted(rc) if isinstance(rp, list) else rp != rc:
        raise AssertionError(f"{label}: backends disagree")
    print(
        f"{label:34s} pure {tp * 1e3:9.2f} ms   c {tc * 1e3:9.2f} ms   "
        f"speedup {tp / tc:6.1f}x"
    )


def main():
    c = _speedups
    bench(
        "scan_families(5, 2)",
        _pure.scan_families,
        c.scan_families if c else None,
        5,
        2,
        repeat=1,
    )
    bench(
        "scan_families(6, 2)",
        _pure.scan_families,
        c.scan_families if c else None,
        6,
        2,
        repeat=1,
    )

    from matlevel.matroid import catalog

    w5 = catalog("wheel(5)")
    bench(
        "exchange_witness(wheel5)",
        _pure.exchange_witness,
        None,  # compiled path falls back above n = 6; compare at n <= 6 below
        list(w5.bases),
        w5.n,
    )
    mk4 = catalog("MK4")
    bench(
        "exchange_witness(MK4)",
        _pure.exchange_witness,
        c.exchange_witness if c else None,
        list(mk4.bases),
        mk4.n,
    )
    bench(
        "canonical_form(MK4)",
        _pure.canonical_form,
        c.canonical_form if c else None,
        list(mk4.bases),
        mk4.n,
    )

    rng = random.Random(7)
    mats = [
        [[(rng.randint(-2, 2), rng.randint(-2, 2)) for _ in range(8)] for _ in range(8)]
        for _ in range(200)
    ]

    def rank_all(impl):
        return [impl.qroot2_rank(m) for m in mats]

    bench(
        "qroot2_rank (200 x 8x8)",
        lambda: rank_all(_pure),
        (lambda: rank_all(c)) if c else None,
    )


if __name__ == "__main__":
    main()
