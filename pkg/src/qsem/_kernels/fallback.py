"""Vectorized numpy kernels; the lane used when the compiled module is absent.

All three kernels emit raw (row, col, weight) triplets over token indices;
callers coalesce them. Weights are exact int64 throughout, so both kernel
lanes produce bit-identical matrices after coalescing.

The corpus is passed CSR-style: one concatenated int32 token-index array
plus an int64 offsets array with one entry per document boundary. Windows
never cross a document boundary.
"""

import numpy as np

_EMPTY = (
    np.empty(0, dtype=np.int32),
    np.empty(0, dtype=np.int32),
    np.empty(0, dtype=np.int64),
)


def _doc_ids(offsets):
    lengths = np.diff(offsets)
    return np.repeat(np.arange(lengths.size, dtype=np.int64), lengths), lengths


def hal_pairs(tokens, offsets, window):
    """Directional sliding-window pairs: for every position i and every
    predecessor j with i-j <= window in the same document, emit
    (token[i], token[j], window+1-(i-j))."""
    if tokens.size < 2:
        return _EMPTY
    doc_ids, _ = _doc_ids(offsets)
    rows, cols, wts = [], [], []
    for dist in range(1, window + 1):
        if dist >= tokens.size:
            break
        same = doc_ids[dist:] == doc_ids[:-dist]
        if not same.any():
            continue
        rows.append(tokens[dist:][same])
        cols.append(tokens[:-dist][same])
        wts.append(np.full(int(same.sum()), window + 1 - dist, dtype=np.int64))
    if not rows:
        return _EMPTY
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(wts)


def centered_pairs(tokens, offsets, target, radius, window):
    """Pairs of the summed per-occurrence spaces around `target`: for every
    occurrence, a slice of `radius` tokens each side (clipped to the
    document) is swept exactly like hal_pairs."""
    rows, cols, wts = [], [], []
    for d in range(offsets.size - 1):
        toks = tokens[offsets[d] : offsets[d + 1]]
        length = toks.size
        for p in np.nonzero(toks == target)[0]:
            lo = max(0, p - radius)
            hi = min(length - 1, p + radius)
            for dist in range(1, min(window, hi - lo) + 1):
                i = np.arange(lo + dist, hi + 1)
                rows.append(toks[i])
                cols.append(toks[i - dist])
                wts.append(np.full(i.size, window + 1 - dist, dtype=np.int64))
    if not rows:
        return _EMPTY
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(wts)


def global_pairs(tokens, offsets, radius, window):
    """Pairs of the sum of centered_pairs over every vocabulary word, in a
    single pass: a pair at distance d is covered by one centered slice per
    position p with p-radius <= j and i <= p+radius, so its total weight is
    (window+1-d) times that position count, clipped at document edges."""
    if tokens.size < 2:
        return _EMPTY
    doc_ids, lengths = _doc_ids(offsets)
    pos = np.arange(tokens.size, dtype=np.int64) - np.repeat(offsets[:-1], lengths)
    doc_len = np.repeat(lengths, lengths)
    rows, cols, wts = [], [], []
    for dist in range(1, min(window, 2 * radius) + 1):
        if dist >= tokens.size:
            break
        same = doc_ids[dist:] == doc_ids[:-dist]
        if not same.any():
            continue
        pa = pos[dist:][same]
        hi = np.minimum(pa - dist + radius, doc_len[dist:][same] - 1)
        lo = np.maximum(pa - radius, 0)
        rows.append(tokens[dist:][same])
        cols.append(tokens[:-dist][same])
        wts.append((window + 1 - dist) * (hi - lo + 1))
    if not rows:
        return _EMPTY
    return np.concatenate(rows), np.concatenate(cols), np.concatenate(wts)
