"""Partition combinatorics and Schur-function plumbing.

Everything is exact integer arithmetic on plain tuples.  Partition is a thin
immutable wrapper that normalizes away trailing zeros, so equal partitions
compare and hash equally.  The Q-sets index the Schur constituents of exterior
powers of wedge^2 E (minus variant) and Sym^2 E (plus variant); the plethysm
routine recomputes those constituents from scratch by monomial expansion and
acts as the independent oracle for the recursive membership rule.
"""

from __future__ import annotations

from functools import cache

from .errors import InconsistencyError, ScaleError

Q_VARIANTS = ("minus", "plus")
FORMS = ("alternating", "symmetric")


class Partition:
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        if isinstance(parts, Partition):
            self.parts = parts.parts
            return
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        if any(a < b for a, b in zip(ps, ps[1:])):
            raise ValueError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"negative part in {ps}")
        self.parts = ps

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        # Reads beyond the stored length are zero; handy in coordinate formulas.
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        """Length of the main diagonal of the Young diagram."""
        return sum(1 for i, p in enumerate(self.parts) if p >= i + 1)

    def transpose(self) -> "Partition":
        if not self.parts:
            return self
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other) -> bool:
        other = Partition(other)
        return all(self[i] >= q for i, q in enumerate(other.parts))

    def __add__(self, other) -> "Partition":
        other = Partition(other)
        n = max(len(self), len(other))
        return Partition(tuple(self[i] + other[i] for i in range(n)))

    def remove_first_hook(self) -> "Partition":
        """Delete the first row and first column (the Q-set recursion step)."""
        return Partition(tuple(p - 1 for p in self.parts[1:]))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < Partition(other).parts

    def __hash__(self):
        return hash(self.parts)

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def to_json(self):
        return list(self.parts)


class SkewShape:
    """A pair of nested partitions outer/inner; flagged empty if not nested."""

    __slots__ = ("outer", "inner", "is_empty")

    def __init__(self, outer, inner):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        self.is_empty = not self.outer.contains(self.inner)

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def __repr__(self):
        return f"SkewShape({self.outer}/{self.inner})"


def label_str(label) -> str:
    """Canonical string for a decomposition label (partition, weight, pair...)."""
    if isinstance(label, tuple):
        return "|".join(label_str(x) for x in label)
    return str(label)


class Decomposition:
    """Multiset of labels with integer multiplicities; zeros are never stored.

    Multiplicities are plain Python ints, so they are arbitrary precision.
    Negative values are tolerated so that Euler-characteristic bookkeeping can
    pass through; public operations that promise nonnegative output check via
    is_nonnegative().
    """

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        self.entries = {}
        if entries is None:
            return
        items = entries.items() if hasattr(entries, "items") else entries
        for label, mult in items:
            self.add(label, mult)

    def add(self, label, mult=1):
        if mult == 0:
            return
        new = self.entries.get(label, 0) + mult
        if new == 0:
            self.entries.pop(label, None)
        else:
            self.entries[label] = new

    def __getitem__(self, label) -> int:
        return self.entries.get(label, 0)

    def __add__(self, other):
        out = Decomposition(self.entries)
        for label, mult in other.entries.items():
            out.add(label, mult)
        return out

    def __sub__(self, other):
        out = Decomposition(self.entries)
        for label, mult in other.entries.items():
            out.add(label, -mult)
        return out

    def scale(self, c: int) -> "Decomposition":
        return Decomposition({k: c * v for k, v in self.entries.items()})

    def map_labels(self, fn) -> "Decomposition":
        out = Decomposition()
        for label, mult in self.entries.items():
            out.add(fn(label), mult)
        return out

    def support(self):
        return set(self.entries)

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self.entries.values())

    def total(self, weight_fn=None) -> int:
        if weight_fn is None:
            return sum(self.entries.values())
        return sum(m * weight_fn(k) for k, m in self.entries.items())

    def sorted_items(self):
        return sorted(self.entries.items(), key=lambda kv: label_str(kv[0]))

    def __eq__(self, other):
        return isinstance(other, Decomposition) and self.entries == other.entries

    def __bool__(self):
        return bool(self.entries)

    def __repr__(self):
        inner = ", ".join(f"{label_str(k)}:{v}" for k, v in self.sorted_items())
        return "{" + inner + "}"

    def to_json(self):
        return {label_str(k): v for k, v in self.sorted_items()}


# ---------------------------------------------------------------------------
# basic operations


def transpose(lam) -> Partition:
    return Partition(lam).transpose()


def rank(lam) -> int:
    return Partition(lam).rank


def partitions_of(n: int, max_length=None, max_part=None) -> list[Partition]:
    """All partitions of n, ascending lexicographic, optionally boxed."""
    if max_part is None:
        max_part = n
    out = []

    def rec(remaining, bound, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if max_length is not None and len(prefix) == max_length:
            return
        for p in range(min(bound, remaining), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, max_part, [])
    out.sort(key=lambda p: p.parts)
    return out


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions with at most `rows` parts, each at most `cols`."""
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions_of(n, max_length=rows, max_part=cols))
    return out


def in_q(lam, variant: str) -> bool:
    """Membership in the Q-set family.

    minus: empty, or the row count is one more than the column count and the
    partition left after deleting the first row and column is again a member.
    plus: the transpose is a minus member.
    """
    if variant not in Q_VARIANTS:
        raise ValueError(f"variant must be one of {Q_VARIANTS}")
    lam = Partition(lam)
    if variant == "plus":
        return in_q(lam.transpose(), "minus")
    while lam:
        if len(lam) != lam[0] + 1:
            return False
        lam = lam.remove_first_hook()
    return True


def enumerate_q(variant: str, size: int) -> list[Partition]:
    """All partitions of the given even size in the Q-set, lexicographic."""
    if size % 2 != 0 or size < 0:
        raise ValueError("Q-sets contain only even sizes")
    return [p for p in partitions_of(size) if in_q(p, variant)]


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients by direct tableau enumeration


def lr_coefficient(lam, mu, nu) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    return _lr(lam.parts, mu.parts, nu.parts)


@cache
def _lr(lam: tuple, mu: tuple, nu: tuple) -> int:
    """Count column-strict skew tableaux of shape lam/mu and content nu whose
    reverse reading word is a lattice word."""
    lam_p, mu_p, nu_p = Partition(lam), Partition(mu), Partition(nu)
    if lam_p.size != mu_p.size + nu_p.size:
        return 0
    if not (lam_p.contains(mu_p) and lam_p.contains(nu_p)):
        return 0
    if not nu_p:
        return 1
    nvals = len(nu_p)
    # Cells in reverse reading order: rows top to bottom, right to left inside
    # a row, so the lattice condition can be checked prefix by prefix.
    cells = []
    for r in range(len(lam_p)):
        for c in range(lam_p[r] - 1, mu_p[r] - 1, -1):
            cells.append((r, c))
    counts = [0] * nvals
    fill = {}

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        right = fill.get((r, c + 1))
        above = fill.get((r - 1, c))
        total = 0
        for v in range(1, nvals + 1):
            if counts[v - 1] == nu_p[v - 1]:
                continue
            if v > 1 and counts[v - 1] + 1 > counts[v - 2]:
                continue
            if right is not None and v > right:
                continue
            if above is not None and v <= above:
                continue
            counts[v - 1] += 1
            fill[(r, c)] = v
            total += rec(idx + 1)
            counts[v - 1] -= 1
            del fill[(r, c)]
        return total

    return rec(0)


def skew_schur_expand(shape, inner=None) -> Decomposition:
    """Expansion of the skew Schur functor into straight Schur functors."""
    if inner is not None:
        shape = SkewShape(shape, inner)
    if shape.is_empty:
        return Decomposition()
    out = Decomposition()
    for nu in partitions_of(shape.size, max_length=len(shape.outer)):
        c = lr_coefficient(shape.outer, shape.inner, nu)
        if c:
            out.add(nu, c)
    return out


# ---------------------------------------------------------------------------
# dimensions and semistandard tableaux


def dim_schur(lam, m: int) -> int:
    """Dimension of the Schur functor on an m-dimensional space (hook content)."""
    lam = Partition(lam)
    if len(lam) > m:
        return 0
    num = 1
    den = 1
    for i, p in enumerate(lam.parts):
        for j in range(p):
            num *= m + j - i
            arm = p - j - 1
            leg = sum(1 for ii in range(i + 1, len(lam)) if lam[ii] > j)
            den *= arm + leg + 1
    assert num % den == 0
    return num // den


def count_skew_ssyt(outer, inner, m: int) -> int:
    """Number of semistandard fillings of outer/inner with entries <= m.

    Direct enumeration; used as the independent check against the LR route.
    """
    shape = SkewShape(outer, inner)
    if shape.is_empty:
        return 0
    total = 0
    for _ in _iter_ssyt(shape.outer.parts, shape.inner.parts, m):
        total += 1
    return total


def _iter_ssyt(outer: tuple, inner: tuple, m: int):
    """Yield content vectors of semistandard tableaux of the skew shape."""
    cells = []
    for r in range(len(outer)):
        lo = inner[r] if r < len(inner) else 0
        for c in range(lo, outer[r]):
            cells.append((r, c))
    if not cells:
        yield (0,) * m
        return
    fill = {}
    content = [0] * m

    def rec(idx: int):
        if idx == len(cells):
            yield tuple(content)
            return
        r, c = cells[idx]
        left = fill.get((r, c - 1))
        above = fill.get((r - 1, c))
        lo = left if left is not None else 1
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, m + 1):
            fill[(r, c)] = v
            content[v - 1] += 1
            yield from rec(idx + 1)
            content[v - 1] -= 1
            del fill[(r, c)]

    yield from rec(0)


@cache
def schur_monomials(lam: tuple, m: int) -> dict:
    """Monomial expansion of the Schur polynomial s_lam(x_1..x_m)."""
    lam = Partition(lam)
    out: dict[tuple, int] = {}
    for content in _iter_ssyt(lam.parts, (), m):
        out[content] = out.get(content, 0) + 1
    return out


# ---------------------------------------------------------------------------
# plethysm oracle


def plethysm_wedge_power(k: int, form: str, dim_e: int) -> Decomposition:
    """Schur decomposition of the k-th exterior power of wedge^2 E (alternating)
    or of Sym^2 E (symmetric), by exact monomial expansion in dim_e variables
    followed by repeated subtraction of the lexicographically highest term's
    Schur polynomial.  The loop must end at the zero polynomial exactly.
    """
    if form not in FORMS:
        raise ValueError(f"form must be one of {FORMS}")
    if not (1 <= dim_e <= 8):
        raise ScaleError("plethysm oracle supports 1 <= dimE <= 8")
    if not (0 <= k <= 6):
        raise ScaleError("plethysm oracle supports 0 <= k <= 6")

    basis = []
    for i in range(dim_e):
        start = i + 1 if form == "alternating" else i
        for j in range(start, dim_e):
            mono = [0] * dim_e
            mono[i] += 1
            mono[j] += 1
            basis.append(tuple(mono))

    # 0/1 knapsack over the basis monomials: table[t] = expansion of wedge^t.
    table: list[dict[tuple, int]] = [{(0,) * dim_e: 1}] + [dict() for _ in range(k)]
    for mono in basis:
        for t in range(k, 0, -1):
            src = table[t - 1]
            dst = table[t]
            for expo, coeff in src.items():
                key = tuple(a + b for a, b in zip(expo, mono))
                dst[key] = dst.get(key, 0) + coeff
    poly = {e: c for e, c in table[k].items() if c}

    out = Decomposition()
    while poly:
        top = max(poly)
        coeff = poly[top]
        if any(a < b for a, b in zip(top, top[1:])) or coeff < 0:
            raise InconsistencyError(
                f"subtraction loop hit a non-dominant or negative leading term {top}:{coeff}"
            )
        lam = Partition(top)
        out.add(lam, coeff)
        for expo, c in schur_monomials(lam, dim_e).items():
            newc = poly.get(expo, 0) - coeff * c
            if newc:
                poly[expo] = newc
            else:
                poly.pop(expo, None)
    return out
