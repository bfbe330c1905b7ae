"""Integer partitions, Ferrers-Young hooks, t-core tests, and the
self-conjugate counting oracle.

Partitions are plain tuples of nonincreasing positive parts; the empty
tuple is the unique partition of 0.  Self-conjugate partitions are
enumerated through the classical bijection with partitions into distinct
odd parts: a set of distinct odd numbers d_1 > d_2 > ... becomes the
self-conjugate partition whose nested diagonal hooks have those lengths.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence


def _as_partition(parts) -> tuple[int, ...]:
    p = tuple(parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"parts must be positive, got {x}")
        if i and p[i - 1] < x:
            raise ValueError(f"parts must be nonincreasing, got {p}")
    return p


def conjugate(parts) -> tuple[int, ...]:
    """Transpose of the Ferrers-Young diagram: column lengths of parts."""
    p = _as_partition(parts)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x >= j) for j in range(1, p[0] + 1))


def hook_lengths(parts) -> tuple[tuple[int, ...], ...]:
    """Hook number of every cell: 1 + cells to the right + cells below.

    Row i, column j (0-indexed) holds parts[i] - j + conj[j] - i - 1.
    """
    p = _as_partition(parts)
    conj = conjugate(p)
    return tuple(
        tuple(p[i] - j + conj[j] - i - 1 for j in range(p[i]))
        for i in range(len(p))
    )


def _beta_is_t_core(p: Sequence[int], t: int) -> bool:
    # First-column hook check: p is a t-core iff for every first-column
    # hook b >= t the value b - t is again a first-column hook.
    k = len(p)
    if k == 0:
        return True
    beta = [p[i] + k - 1 - i for i in range(k)]
    present = bytearray(beta[0] + 1)
    for b in beta:
        present[b] = 1
    return all(b < t or present[b - t] for b in beta)


def is_t_core(parts, t: int) -> bool:
    """True iff no hook number of the partition is divisible by t."""
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    return _beta_is_t_core(_as_partition(parts), t)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every partition of n, largest part first.  Exponential in n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def distinct_odd_partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into distinct odd parts, decreasing."""
    if n == 0:
        yield ()
        return
    top = n if n % 2 else n - 1
    if max_part is not None and max_part < top:
        top = max_part
    for d in range(top, 0, -2):
        # the largest sum distinct odd parts below d can reach is ((d-1)/2)^2
        if n - d > ((d - 1) // 2) ** 2:
            break
        for rest in distinct_odd_partitions(n - d, d - 2):
            yield (d,) + rest


def from_diagonal_hooks(hooks: Sequence[int]) -> tuple[int, ...]:
    """Self-conjugate partition with the given diagonal hook lengths.

    hooks must be distinct odd positive integers in decreasing order; hook
    i (1-indexed) wraps around the diagonal cell (i, i), so row i has
    length i + (hooks[i] - 1)/2 down to the diagonal, and the rows below
    the last diagonal cell are forced by symmetry.
    """
    k = len(hooks)
    if k == 0:
        return ()
    for i, d in enumerate(hooks):
        if d < 1 or d % 2 == 0:
            raise ValueError(f"diagonal hooks must be odd and positive, got {d}")
        if i and hooks[i - 1] <= d:
            raise ValueError("diagonal hooks must be strictly decreasing")
    parts = [i + 1 + (hooks[i] - 1) // 2 for i in range(k)]
    out = parts[:]
    idx = k - 1
    for j in range(k + 1, parts[0] + 1):
        while idx >= 0 and parts[idx] < j:
            idx -= 1
        out.append(idx + 1)
    return tuple(out)


def self_conjugate_partitions(n: int) -> list[tuple[int, ...]]:
    """All self-conjugate partitions of n, sorted lexicographically."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sorted(from_diagonal_hooks(d) for d in distinct_odd_partitions(n))


def sc_count(n: int, t: int) -> int:
    """Number of self-conjugate t-core partitions of n, by enumeration.

    Walks the distinct-odd-parts tree and keeps the full hook test as the
    final arbiter, but prunes branches that provably cannot complete to a
    t-core.  With diagonal hook set D (d1 largest), the symmetric block
    cell (i, j) has hook (d_i + d_j)/2 and the first-column hooks are
    exactly {(d1 + d)/2 : d in D} plus {(d1 - e)/2 : e odd, e < d1, e not
    in D}.  Hence a t-core forces:

      (i)   no d in D with d ≡ 0 (mod t)          [diagonal hook d]
      (ii)  no pair d + d' ≡ 0 (mod 2t)           [block hook (d+d')/2]
      (iii) d in D and d > 2t  =>  d - 2t in D    [first-column hook chain]

    Violations of (i)/(ii) are rejected at choice time; (iii) is tracked
    as an obligation set so dead branches stop early.  Everything that
    survives is checked honestly via the beta-set test.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    t2 = 2 * t
    count = 0
    chosen: list[int] = []
    used = [0] * t2
    pending: set[int] = set()

    def chain_sum(p: int) -> int:
        # total mass rule (iii) still forces below p: p + (p-2t) + ...
        s = 0
        while p > 0:
            s += p
            p -= t2
        return s

    def walk(rem: int, cap: int) -> None:
        nonlocal count
        if rem == 0:
            if not pending and _beta_is_t_core(from_diagonal_hooks(chosen), t):
                count += 1
            return
        if pending:
            if max(pending) > cap:
                return
            if sum(chain_sum(p) for p in pending) > rem:
                return
        top = rem if rem % 2 else rem - 1
        if cap < top:
            top = cap
        for d in range(top, 0, -2):
            if rem - d > ((d - 1) // 2) ** 2:
                break
            if d % t == 0 or used[-d % t2]:
                continue
            used[d % t2] += 1
            chosen.append(d)
            satisfied = d in pending
            if satisfied:
                pending.discard(d)
            obligation = d - t2
            if obligation > 0:
                pending.add(obligation)
            walk(rem - d, d - 2)
            if obligation > 0:
                pending.discard(obligation)
            if satisfied:
                pending.add(d)
            chosen.pop()
            used[d % t2] -= 1

    walk(n, n)
    return count


def c_count(n: int, t: int) -> int:
    """Number of t-core partitions of n by filtering all partitions.

    Exponential in n (goes through p(n) candidates); only meant for
    small-n cross-checks.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if t < 1:
        raise ValueError(f"t must be a positive integer, got {t}")
    return sum(1 for p in partitions_of(n) if _beta_is_t_core(p, t))
