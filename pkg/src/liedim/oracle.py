"""Brute-force ground truth for Lie power and Lie module dimensions.

Everything here works in explicit tensor coordinates.  A vector is a dict
mapping index tuples (one letter per tensor factor) to nonzero integer
coefficients; a commutator [x, y] of basis tensors is the difference of the
two concatenations.  Spans are built from bracket expansions of explicit word
lists and measured with deterministic sparse Gaussian elimination, exactly
over the rationals or over a prime field.

The point of this module is independence: nothing below knows about the
closed-form counts or recurrences elsewhere in the package, so agreement
between the two is meaningful evidence.  Enumeration sizes are guarded by a
work budget (LIEDIM_BUDGET in the environment overrides the default).
"""

from __future__ import annotations

import os
from itertools import permutations, product
from math import factorial, gcd

from .arith import divisors, is_prime

Word = tuple[int, ...]
TensorIndex = tuple[int, ...]
SparseTensorVector = dict[TensorIndex, int]

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "LIEDIM_BUDGET"

# weight_of() markers
ZERO_WEIGHT = "zero"
INHOMOGENEOUS = "inhomogeneous"


class WorkBudgetExceeded(RuntimeError):
    """Estimated work for a brute-force computation is over the active budget."""


def work_budget(budget: int | None = None) -> int:
    """Resolve the active budget: explicit argument, else environment, else default."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def _charge(work: int, budget: int | None, task: str) -> None:
    limit = work_budget(budget)
    if work > limit:
        raise WorkBudgetExceeded(
            f"{task} needs about {work} units of work, budget is {limit} "
            f"(raise it via the budget argument or {BUDGET_ENV_VAR})"
        )


def lyndon_words(n: int, r: int) -> list[Word]:
    """All Lyndon words of length r over the alphabet 0..n-1, lexicographically.

    Duval's generation scheme: extend the current word periodically to length
    r, drop trailing maximal letters, then increment.  Each word produced on
    the way is Lyndon; we keep the ones of length exactly r.
    """
    if n < 1 or r < 1:
        raise ValueError("lyndon_words() needs n >= 1 and r >= 1")
    out: list[Word] = []
    top = n - 1
    w = [-1]
    while w:
        w[-1] += 1
        if len(w) == r:
            out.append(tuple(w))
        m = len(w)
        while len(w) < r:
            w.append(w[len(w) - m])
        while w and w[-1] == top:
            w.pop()
    return out


def is_lyndon(word: Word) -> bool:
    """True when the word is strictly smaller than every proper rotation of itself."""
    r = len(word)
    if r == 0:
        return False
    doubled = word + word
    return all(word < doubled[i : i + r] for i in range(1, r))


def aperiodic_count_bruteforce(n: int, r: int, budget: int | None = None) -> int:
    """Count the length-r words over n letters that are no power of a shorter word.

    Every one of the n**r words is tested against every proper period, so
    this is a pure counting oracle with no number theory in it.
    """
    if n < 1 or r < 1:
        raise ValueError("aperiodic_count_bruteforce() needs n >= 1 and r >= 1")
    _charge(n**r, budget, "aperiodic word enumeration")
    periods = [d for d in divisors(r) if d < r]
    count = 0
    for word in product(range(n), repeat=r):
        if not any(word == word[:d] * (r // d) for d in periods):
            count += 1
    return count


def _left_normed(symbols: list[tuple]) -> SparseTensorVector:
    # Fold [[..[s1, s2], s3] ..., st] in coordinates; each step is
    # v  ->  v (x) s  -  s (x) v  on concatenated index tuples.
    vec: SparseTensorVector = {tuple(symbols[0]): 1}
    for sym in symbols[1:]:
        nxt: SparseTensorVector = {}
        get = nxt.get
        for idx, coeff in vec.items():
            left = idx + sym
            nxt[left] = get(left, 0) + coeff
            right = sym + idx
            nxt[right] = get(right, 0) - coeff
        vec = {idx: c for idx, c in nxt.items() if c}
    return vec


def left_normed_expand(word) -> SparseTensorVector:
    """Tensor-coordinate expansion of the left-normed bracket of the word's letters.

    [e_{w1}, e_{w2}, ..., e_{wr}] with all brackets gathered to the left.
    The result has at most 2**(r-1) terms; repeated letters can cancel or
    combine, so coefficients other than +-1 do occur.
    """
    letters = tuple(word)
    if not letters:
        raise ValueError("left_normed_expand() needs a nonempty word")
    return _left_normed([(letter,) for letter in letters])


def _bracket(a: SparseTensorVector, b: SparseTensorVector) -> SparseTensorVector:
    out: SparseTensorVector = {}
    get = out.get
    for ia, ca in a.items():
        for ib, cb in b.items():
            c = ca * cb
            key = ia + ib
            out[key] = get(key, 0) + c
            key = ib + ia
            out[key] = get(key, 0) - c
    return {idx: c for idx, c in out.items() if c}


def standard_factorization(word: Word) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as u, v with v the longest proper Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError(f"{word!r} has no Lyndon proper suffix; is it a Lyndon word?")


def expand_standard_bracketing(word) -> SparseTensorVector:
    """Coordinate expansion of the standard bracketing of a Lyndon word.

    Convention (frozen by the golden files): a word of length >= 2 splits as
    u * v with v its longest proper Lyndon suffix, and expands recursively as
    [sigma(u), sigma(v)].  For example 001 splits as 0 * 01 and expands to
    {001: +1, 010: -2, 100: +1}.
    """
    letters = tuple(word)
    if not is_lyndon(letters):
        raise ValueError(f"{letters!r} is not a Lyndon word")
    if len(letters) == 1:
        return {letters: 1}
    u, v = standard_factorization(letters)
    return _bracket(expand_standard_bracketing(u), expand_standard_bracketing(v))


def weight_of(vec: SparseTensorVector, n: int | None = None):
    """Common letter content of the vector's indices, as a tuple of letter counts.

    Returns ZERO_WEIGHT for the zero vector and INHOMOGENEOUS when two indices
    disagree on their letter multiset.  When n is omitted it is inferred as
    max letter + 1.
    """
    if not vec:
        return ZERO_WEIGHT
    indices = iter(vec)
    content = sorted(next(indices))
    for idx in indices:
        if sorted(idx) != content:
            return INHOMOGENEOUS
    if n is None:
        n = content[-1] + 1
    counts = [0] * n
    for letter in content:
        counts[letter] += 1
    return tuple(counts)


def format_expansion(vec: SparseTensorVector) -> str:
    """Render an expansion as sorted 'index:coefficient' lines.

    Letters up to 9 concatenate digit-wise (so indices read like 010); wider
    alphabets fall back to dot-separated letters.
    """
    lines = []
    for idx in sorted(vec):
        if idx and max(idx) > 9:
            key = ".".join(map(str, idx))
        else:
            key = "".join(map(str, idx))
        lines.append(f"{key}:{vec[idx]}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# exact rank computation


def rank_over_field(vectors, field: int | None = None) -> int:
    """Exact rank of the span of the given sparse vectors.

    field None means the rationals; a prime p means F_p.  Deterministic by
    construction: vectors are consumed in the given order and each row is
    reduced against pivots chosen as the first nonzero position in
    lexicographic column order.
    """
    if field is not None and not is_prime(field):
        raise ValueError(f"field must be None (rationals) or a prime, got {field}")
    # drop explicit zero entries up front; the kernels assume stored = nonzero
    vecs = [{idx: c for idx, c in vec.items() if c} for vec in vectors]
    degrees = {len(idx) for vec in vecs for idx in vec}
    if len(degrees) > 1:
        raise ValueError(f"mixed tensor degrees in rank input: {sorted(degrees)}")
    columns = sorted({idx for vec in vecs for idx in vec})
    col_id = {idx: j for j, idx in enumerate(columns)}

    if field is None:
        return _rank_rational([{col_id[i]: c for i, c in vec.items()} for vec in vecs])
    if field == 2:
        masks = []
        for vec in vecs:
            mask = 0
            for idx, c in vec.items():
                if c & 1:
                    mask |= 1 << col_id[idx]
            masks.append(mask)
        return _rank_gf2(masks)
    p = field
    rows = []
    for vec in vecs:
        row = {}
        for idx, c in vec.items():
            c %= p
            if c:
                row[col_id[idx]] = c
        rows.append(row)
    return _rank_prime(rows, p)


def _rank_gf2(rows: list[int]) -> int:
    # Rows are bitmasks; bit i is the i-th column in lexicographic order, so
    # the lowest set bit is the leading entry.
    pivots: dict[int, int] = {}
    rank = 0
    for x in rows:
        while x:
            lead = (x & -x).bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = x
                rank += 1
                break
            x ^= piv
    return rank


def _rank_prime(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: (v * inv) % p for c, v in row.items()}
                rank += 1
                break
            f = row[lead]  # pivot rows are normalized to leading coefficient 1
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                elif c in row:
                    del row[c]
        # an emptied row is dependent; move on
    return rank


def _gcd_normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _rank_rational(rows: list[dict[int, int]]) -> int:
    # Integer rows, cross-multiplied elimination, gcd compression: exact over
    # the rationals without ever materializing a Fraction.
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        steps = 0
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                row = _gcd_normalize(row)
                if row[lead] < 0:
                    row = {c: -v for c, v in row.items()}
                pivots[lead] = row
                rank += 1
                break
            a = piv[lead]
            b = row[lead]
            g = gcd(a, b)
            ma = a // g
            mb = b // g
            new = {c: ma * v for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - mb * v
                if nv:
                    new[c] = nv
                elif c in new:
                    del new[c]
            row = new
            steps += 1
            if row and steps % 8 == 0:
                row = _gcd_normalize(row)  # keep entries from snowballing
    return rank


# ---------------------------------------------------------------------------
# span oracles


def lie_power_rank(n: int, r: int, field: int | None = None, budget: int | None = None) -> int:
    """Rank of the span of the left-normed expansions of all n**r words.

    This measures the dimension of the degree-r Lie power of an n-dimensional
    space directly in coordinates; the answer is field-independent.
    """
    if n < 1 or r < 1:
        raise ValueError("lie_power_rank() needs n >= 1 and r >= 1")
    _charge(n**r * (1 << (r - 1)), budget, "Lie power span expansion")
    vectors = [left_normed_expand(word) for word in product(range(n), repeat=r)]
    return rank_over_field(vectors, field)


def lyndon_bracketing_rank(n: int, r: int, field: int | None = None, budget: int | None = None) -> int:
    """Rank of the span of the standard bracketings of the length-r Lyndon words.

    A strictly smaller spanning set than lie_power_rank uses; its rank must
    come out the same.
    """
    if n < 1 or r < 1:
        raise ValueError("lyndon_bracketing_rank() needs n >= 1 and r >= 1")
    _charge(n**r, budget, "Lyndon word enumeration")
    vectors = [expand_standard_bracketing(word) for word in lyndon_words(n, r)]
    return rank_over_field(vectors, field)


def lie_module_rank(r: int, field: int | None = None, budget: int | None = None) -> int:
    """Rank of the span of the r! multilinear left-normed brackets.

    The brackets [e_{pi(1)}, ..., e_{pi(r)}] over all permutations pi span the
    multilinear component; the rank equals (r-1)! over every field.  The work
    charge is (r!)**2 (vectors times columns), which the default budget admits
    up to r = 6; r = 7 needs a raised budget.
    """
    if r < 1:
        raise ValueError("lie_module_rank() needs r >= 1")
    _charge(factorial(r) ** 2, budget, "multilinear bracket span")
    vectors = [left_normed_expand(perm) for perm in permutations(range(r))]
    return rank_over_field(vectors, field)


def weight_space_rank(q: int, k: int, field: int | None = None, budget: int | None = None) -> int:
    """Rank of the multilinear weight space of the degree-k Lie power of a q-fold tensor power.

    Spanning vectors: for every permutation of the q*k symbols, cut it into k
    consecutive blocks of length q, treat each block as one composite letter,
    and expand the left-normed bracket of the k blocks.  The rank equals
    (q*k)! / k.  Work charge ((q*k)!)**2, so q*k <= 6 fits the default budget.
    """
    if q < 1 or k < 1:
        raise ValueError("weight_space_rank() needs q >= 1 and k >= 1")
    qk = q * k
    _charge(factorial(qk) ** 2, budget, "weight space span")
    vectors = []
    for perm in permutations(range(qk)):
        blocks = [perm[j * q : (j + 1) * q] for j in range(k)]
        vectors.append(_left_normed(blocks))
    return rank_over_field(vectors, field)
