"""Deterministic seed derivation.

A single user-supplied seed fans out into independent child streams, one per
labelled task, so parallel or reordered work still produces byte-identical
results.
"""

import hashlib
import random


def derive_seed(seed, *labels):
    """64-bit child seed for (seed, labels), stable across runs and platforms."""
    h = hashlib.sha256()
    h.update(str(int(seed)).encode())
    for lab in labels:
        h.update(b"/")
        h.update(str(lab).encode())
    return int.from_bytes(h.digest()[:8], "big")


def rng_for(seed, *labels):
    """random.Random seeded from derive_seed(seed, *labels)."""
    return random.Random(derive_seed(seed, *labels))
