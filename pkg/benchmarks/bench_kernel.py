#!/usr/bin/env python3
"""Benchmark the word-rewriting kernels (compiled vs pure Python).

Workloads mirror the heaviest oracle uses: the conjugation identity sweep,
half-twist centrality, the strand-tripling half-twist identity, and batches
of conjugated-power endomorphism verifications. Run from a checkout with the
package installed:

    python benchmarks/bench_kernel.py
"""

from __future__ import annotations

import random
import time

from chaingroup import braids, kernel
from chaingroup.braids import BraidWord
from chaingroup.oracle import identity_images


def workloads() -> list[tuple[str, int, list[tuple[int, ...]]]]:
    out = []

    letters: list[tuple[int, ...]] = []
    for n in range(3, 9):
        delta = braids.flip_delta(n)
        for i in range(n):
            w = (
                delta
                * braids.generator(n, i)
                * delta.inverse()
                * braids.generator(n, i + 1).inverse()
            )
            letters.append(w.letters)
    out.append(("index-shift sweep n=3..8", 8, letters))

    n = 8
    half2 = braids.garside(n) ** 2
    words = []
    for i in range(1, n):
        t = BraidWord(n, (i,))
        words.append((half2 * t * half2.inverse() * t.inverse()).letters)
    out.append(("half-twist-square centrality n=8", n, words))

    k = 3
    from chaingroup import homs

    h = homs.cabling_b3(k)
    target = h.apply(braids.garside(3)) * braids.garside(3 * k).inverse()
    out.append(("cable half-twist identity k=3", 3 * k, [target.letters]))

    n = 6
    rng = random.Random(99)
    half2 = braids.garside(n) ** 2
    words = []
    for _ in range(10):
        g = BraidWord(
            n, tuple(rng.choice([i for i in range(-(n - 1), n) if i != 0]) for _ in range(10))
        )
        imgs = {
            i: g * BraidWord(n, (i,)) * g.inverse() * half2 for i in range(1, n)
        }
        for i in range(1, n - 1):
            u, v = imgs[i], imgs[i + 1]
            words.append(((u * v * u) * (v * u * v).inverse()).letters)
    out.append(("endomorphism relation batch n=6", n, words))
    return out


def main() -> None:
    backends = kernel.backends()
    print(f"available backends: {', '.join(backends)}")
    loads = workloads()
    print(f"{'workload':40s}" + "".join(f"{name:>12s}" for name in backends) + f"{'speedup':>10s}")
    for label, n, words in loads:
        times = {}
        for name, impl in backends.items():
            reps = 1
            start = time.perf_counter()
            while True:
                for _ in range(reps):
                    for letters in words:
                        impl.apply_letters(n, letters, identity_images(n))
                elapsed = time.perf_counter() - start
                if elapsed > 0.2:
                    break
                reps *= 2
                start = time.perf_counter()
            times[name] = elapsed / (reps * len(words))
        row = f"{label:40s}"
        for name in backends:
            row += f"{times[name] * 1e6:10.1f}us"
        if "c" in times and "python" in times:
            row += f"{times['python'] / times['c']:9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
