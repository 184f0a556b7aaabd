"""Time the numpy kernel lane against the compiled one.

Generates a synthetic corpus with a Zipf-shaped unigram distribution
(which is what makes the coalesce step earn its keep: a few extremely
common ids produce heavy triplet duplication), runs every kernel on both
lanes, checks the outputs are identical to the bit, and prints a timing
table.

    python benchmarks/bench_kernels.py --tokens 500000 --vocab 20000
"""

import argparse
import time

import numpy as np

from qsem._kernels import coalesce, fallback

try:
    from qsem._kernels import _accel
except ImportError:
    _accel = None


def synthetic_corpus(n_tokens, n_vocab, n_docs, seed, exponent=1.1):
    rng = np.random.default_rng(seed)
    ranks = np.arange(1, n_vocab + 1, dtype=np.float64)
    probs = ranks ** -exponent
    probs /= probs.sum()
    tokens = rng.choice(n_vocab, size=n_tokens, p=probs).astype(np.int32)
    cuts = np.sort(rng.choice(np.arange(1, n_tokens), size=n_docs - 1, replace=False))
    offsets = np.concatenate([[0], cuts, [n_tokens]]).astype(np.int64)
    return tokens, offsets


def run(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--tokens", type=int, default=200_000)
    parser.add_argument("--vocab", type=int, default=5_000)
    parser.add_argument("--docs", type=int, default=200)
    parser.add_argument("--window", type=int, default=5)
    parser.add_argument("--radius", type=int, default=5)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    tokens, offsets = synthetic_corpus(args.tokens, args.vocab, args.docs, args.seed)
    target = int(np.bincount(tokens).argmax())
    print(f"corpus: {args.tokens} tokens, {args.vocab} vocab, {args.docs} docs, "
          f"window {args.window}, radius {args.radius}")
    print(f"centered target: id {target} ({np.count_nonzero(tokens == target)} occurrences)")
    if _accel is None:
        print("compiled lane not built; timing the numpy lane only\n")

    cases = [
        ("hal_pairs", (tokens, offsets, args.window)),
        ("centered_pairs", (tokens, offsets, target, args.radius, args.window)),
        ("global_pairs", (tokens, offsets, args.radius, args.window)),
    ]
    header = f"{'kernel':<16}{'python':>10}{'compiled':>10}{'speedup':>9}   triplets"
    print(header)
    print("-" * len(header))
    for name, case_args in cases:
        py_time, py_raw = run(getattr(fallback, name), case_args, args.repeat)
        py_out = coalesce(*py_raw, args.vocab)
        if _accel is not None:
            cy_time, cy_raw = run(getattr(_accel, name), case_args, args.repeat)
            cy_out = coalesce(*cy_raw, args.vocab)
            for a, b in zip(py_out, cy_out):
                if not np.array_equal(a, b):
                    raise SystemExit(f"lane mismatch in {name}: outputs differ")
            print(f"{name:<16}{py_time:>9.3f}s{cy_time:>9.3f}s{py_time / cy_time:>8.1f}x"
                  f"   {len(py_out[0]):,} ({len(py_raw[0]):,} raw)")
        else:
            print(f"{name:<16}{py_time:>9.3f}s{'-':>10}{'-':>9}"
                  f"   {len(py_out[0]):,} ({len(py_raw[0]):,} raw)")
    if _accel is not None:
        print("\nall kernels bit-identical across lanes")


if __name__ == "__main__":
    main()
