"""Benchmark the Monte Carlo hot kernel: numba @njit vs pure numpy.

Both backends consume the identical uniform stream, so their failure counts
must match exactly; timings are what differ.  Run directly:

    python3 benchmarks/bench_mc.py [--shots N]

Set QDQ_PURE_NUMPY=1 to see what the package falls back to when numba is
unavailable.
"""

import argparse
import time

from qdq import _kernels, mc
from qdq.analytic import Alphabet, NoiseModel


def time_backend(config: mc.SampleConfig, backend: str, repeats: int = 3) -> tuple[float, int]:
    best = float("inf")
    failures = -1
    for _ in range(repeats):
        start = time.perf_counter()
        est = mc.estimate_pf(config, backend=backend)
        best = min(best, time.perf_counter() - start)
        failures = est.failures
    return best, failures


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--shots", type=int, default=1_000_000)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    cases = [
        ("qd6", NoiseModel(0.1, 0.5, Alphabet.BITFLIP)),
        ("dq6", NoiseModel(0.1, 0.5, Alphabet.BITFLIP)),
        ("dq10", NoiseModel(0.05, 0.5, Alphabet.DEPOLARIZING3)),
    ]

    backends = ["numpy"]
    if _kernels.HAS_NUMBA:
        # Warm the JIT outside the timed region.
        warm = mc.SampleConfig(cases[0][1], cases[0][0], 1000, args.seed)
        mc.estimate_pf(warm, backend="numba")
        backends.append("numba")
    else:
        print("numba unavailable (or disabled via QDQ_PURE_NUMPY); numpy only")

    print(f"{args.shots:,} shots per case, best of 3")
    print(f"{'case':>6} {'backend':>8} {'seconds':>9} {'Mshots/s':>9} {'failures':>9}")
    for code_id, model in cases:
        config = mc.SampleConfig(model, code_id, args.shots, args.seed)
        counts = {}
        for backend in backends:
            seconds, failures = time_backend(config, backend)
            counts[backend] = failures
            rate = args.shots / seconds / 1e6
            print(f"{code_id:>6} {backend:>8} {seconds:9.3f} {rate:9.1f} {failures:9d}")
        if len(counts) == 2:
            assert counts["numpy"] == counts["numba"], "backends disagree!"
    if len(backends) == 2:
        print("backend failure counts identical across all cases")


if __name__ == "__main__":
    main()
