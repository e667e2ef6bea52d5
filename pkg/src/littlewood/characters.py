"""Root systems, exact weights, and character arithmetic for types A through G.

Weights are stored internally as integer vectors of pairings with the simple
coroots ("fundamental coordinates").  The epsilon realizations of the
classical types are provided for input and output because that is how the
classical literature writes weights as partitions; spin weights are
half-integral there but always integral in fundamental coordinates.  All
arithmetic is exact: ints, doubled ints, and Fractions only.

Conversion conventions (Bourbaki node numbering):
  A_n: eps has n+1 coordinates, m_i = x_i - x_{i+1}; back-conversion pins
       x_{n+1} = 0.
  B_n: m_i = x_i - x_{i+1} for i < n, m_n = 2 x_n.
  C_n: m_i = x_i - x_{i+1} for i < n, m_n = x_n.
  D_n: m_i = x_i - x_{i+1} for i < n-1, m_{n-1} = x_{n-1} - x_n,
       m_n = x_{n-1} + x_n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cache

from .errors import InconsistencyError, NotCharacterError, ScaleError
from .partitions import Decomposition, Partition

DIM_BOUND_ENV = "LITTLEWOOD_DIM_BOUND"
DEFAULT_DIM_BOUND = 10**6

SCHUR_SIZE_BOUND = 8
SCHUR_DIM_BOUND = 60


def dim_bound() -> int:
    return int(os.environ.get(DIM_BOUND_ENV, DEFAULT_DIM_BOUND))


class HalfInt:
    """Exact half-integer stored as its doubled value."""

    __slots__ = ("twice",)

    def __init__(self, value=0):
        if isinstance(value, HalfInt):
            self.twice = value.twice
        elif isinstance(value, int):
            self.twice = 2 * value
        else:
            raise TypeError(f"cannot make a HalfInt from {value!r}")

    @classmethod
    def from_twice(cls, twice: int) -> "HalfInt":
        h = cls.__new__(cls)
        h.twice = int(twice)
        return h

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        text = text.strip()
        if "/" in text:
            num, den = text.split("/")
            if den.strip() != "2":
                raise ValueError(f"not a half-integer: {text}")
            return cls.from_twice(int(num))
        return cls(int(text))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    @staticmethod
    def _twice_of(other):
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, int):
            return 2 * other
        return NotImplemented

    def __add__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else HalfInt.from_twice(self.twice + t)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else HalfInt.from_twice(self.twice - t)

    def __rsub__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else HalfInt.from_twice(t - self.twice)

    def __neg__(self):
        return HalfInt.from_twice(-self.twice)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else self.twice == t

    def __lt__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else self.twice < t

    def __le__(self, other):
        t = self._twice_of(other)
        return NotImplemented if t is NotImplemented else self.twice <= t

    def __gt__(self, other):
        return not self <= other

    def __ge__(self, other):
        return not self < other

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def __abs__(self):
        return HalfInt.from_twice(abs(self.twice))

    def __str__(self):
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    __repr__ = __str__

    def to_json(self):
        return self.twice // 2 if self.is_integer else str(self)


@dataclass(frozen=True)
class CoordSystem:
    kind: str  # "fundamental" | "epsilon"
    family: str
    rank: int

    def __post_init__(self):
        if self.kind not in ("fundamental", "epsilon"):
            raise ValueError(f"unknown coordinate kind {self.kind}")

    @property
    def dimension(self) -> int:
        if self.kind == "epsilon":
            return self.rank + 1 if self.family == "A" else self.rank
        return self.rank

    def __str__(self):
        return f"{self.kind}:{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "CoordSystem":
        kind, name = text.split(":")
        kind = {"fund": "fundamental", "eps": "epsilon"}.get(kind, kind)
        return cls(kind, name[0], int(name[1:]))


@dataclass(frozen=True)
class Weight:
    system: CoordSystem
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(HalfInt(c) if not isinstance(c, HalfInt) else c for c in self.coords))
        if len(self.coords) != self.system.dimension:
            raise ValueError(
                f"{self.system} weights have {self.system.dimension} coordinates, got {len(self.coords)}"
            )

    @classmethod
    def fundamental(cls, family: str, rank: int, coords) -> "Weight":
        return cls(CoordSystem("fundamental", family, rank), tuple(coords))

    @classmethod
    def epsilon(cls, family: str, rank: int, coords) -> "Weight":
        return cls(CoordSystem("epsilon", family, rank), tuple(coords))

    def fund_coords(self) -> tuple:
        """Integer fundamental coordinates; errors off the weight lattice."""
        if self.system.kind == "fundamental":
            ms = self.coords
        else:
            ms = _eps_to_fund(self.system.family, self.system.rank, self.coords)
        out = []
        for m in ms:
            h = HalfInt(m) if not isinstance(m, HalfInt) else m
            if not h.is_integer:
                raise ValueError(f"{self} is not on the weight lattice")
            out.append(int(h))
        return tuple(out)

    def to_fundamental(self) -> "Weight":
        if self.system.kind == "fundamental":
            return self
        return Weight.fundamental(self.system.family, self.system.rank, self.fund_coords())

    def to_epsilon(self) -> "Weight":
        if self.system.kind == "epsilon":
            return self
        xs = _fund_to_eps(self.system.family, self.system.rank, self.fund_coords())
        return Weight.epsilon(self.system.family, self.system.rank, xs)

    def is_dominant(self) -> bool:
        return all(m >= 0 for m in self.fund_coords())

    def __str__(self):
        kind = "fund" if self.system.kind == "fundamental" else "eps"
        coords = ",".join(str(c) for c in self.coords)
        return f"{kind}:{self.system.family}{self.system.rank}:{coords}"

    def __repr__(self):
        return f"Weight({self})"

    def to_json(self):
        return {"system": str(self.system), "coords": [c.to_json() for c in self.coords]}


def _eps_to_fund(family: str, rank: int, xs) -> tuple:
    xs = tuple(HalfInt(x) if not isinstance(x, HalfInt) else x for x in xs)
    n = rank
    if family == "A":
        if len(xs) != n + 1:
            raise ValueError(f"A{n} epsilon weights have {n + 1} coordinates")
        return tuple(xs[i] - xs[i + 1] for i in range(n))
    if len(xs) != n:
        raise ValueError(f"{family}{n} epsilon weights have {n} coordinates")
    if family == "B":
        return tuple(xs[i] - xs[i + 1] for i in range(n - 1)) + (HalfInt.from_twice(2 * xs[n - 1].twice),)
    if family == "C":
        return tuple(xs[i] - xs[i + 1] for i in range(n - 1)) + (xs[n - 1],)
    if family == "D":
        if n < 2:
            raise ValueError("type D needs rank >= 2")
        head = tuple(xs[i] - xs[i + 1] for i in range(n - 2))
        return head + (xs[n - 2] - xs[n - 1], xs[n - 2] + xs[n - 1])
    raise ValueError(f"epsilon coordinates are not defined for type {family}")


def _fund_to_eps(family: str, rank: int, ms) -> tuple:
    ms = tuple(int(m) for m in ms)
    n = rank
    if family == "A":
        xs = [HalfInt(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            xs[i] = xs[i + 1] + ms[i]
        return tuple(xs)
    if family == "B":
        xs = [HalfInt(0)] * n
        xs[n - 1] = HalfInt.from_twice(ms[n - 1])
        for i in range(n - 2, -1, -1):
            xs[i] = xs[i + 1] + ms[i]
        return tuple(xs)
    if family == "C":
        xs = [HalfInt(0)] * n
        xs[n - 1] = HalfInt(ms[n - 1])
        for i in range(n - 2, -1, -1):
            xs[i] = xs[i + 1] + ms[i]
        return tuple(xs)
    if family == "D":
        xs = [HalfInt(0)] * n
        xs[n - 2] = HalfInt.from_twice(ms[n - 2] + ms[n - 1])
        xs[n - 1] = HalfInt.from_twice(ms[n - 1] - ms[n - 2])
        for i in range(n - 3, -1, -1):
            xs[i] = xs[i + 1] + ms[i]
        return tuple(xs)
    raise ValueError(f"epsilon coordinates are not defined for type {family}")


# ---------------------------------------------------------------------------
# root system construction

_RANK_RANGES = {"A": (1, 8), "B": (1, 8), "C": (1, 8), "D": (2, 8), "E": (6, 8), "F": (4, 4), "G": (2, 2)}

_EXPECTED_POSITIVE = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * n - n,
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def _cartan_and_d(family: str, n: int):
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    d = [1] * n
    if family == "A":
        for i in range(n - 1):
            link(i, i + 1)
    elif family in ("B", "C"):
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 2:
            if family == "B":
                link(n - 2, n - 1, -2, -1)
            else:
                link(n - 2, n - 1, -1, -2)
        d = [2] * (n - 1) + [1] if family == "B" else [1] * (n - 1) + [2]
    elif family == "D":
        for i in range(n - 2):
            link(i, i + 1)
        if n >= 3:
            link(n - 3, n - 1)
    elif family == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (6, 7), (7, 8)]:
            if i <= n and j <= n:
                link(i - 1, j - 1)
    elif family == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
        d = [2, 2, 1, 1]
    elif family == "G":
        link(0, 1, -1, -3)
        d = [1, 3]
    else:
        raise ValueError(f"unknown type {family}")
    return tuple(tuple(row) for row in a), tuple(d)


def _invert(matrix) -> tuple:
    n = len(matrix)
    aug = [[Fraction(matrix[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@dataclass(frozen=True)
class _Root:
    root_coords: tuple  # coefficients on the simple roots
    fund_coords: tuple  # pairings with the simple coroots
    coroot_coords: tuple  # coefficients of the coroot on the simple coroots
    d: int  # half the squared length


class RootSystem:
    """Immutable root-system data for one simple type; cached singleton."""

    def __init__(self, family: str, rank: int):
        lo, hi = _RANK_RANGES.get(family, (0, -1))
        if not lo <= rank <= hi:
            raise ValueError(f"unsupported type {family}{rank}")
        self.family = family
        self.rank = rank
        self.cartan, self.d = _cartan_and_d(family, rank)
        self.cartan_inv = _invert(self.cartan)
        self._roots = self._close_roots()
        count = _EXPECTED_POSITIVE[family](rank)
        if len(self._roots) != count:
            raise InconsistencyError(f"{family}{rank}: got {len(self._roots)} positive roots, expected {count}")
        # rho both ways: half-sum of positive roots must be all ones.
        twice_rho = [0] * rank
        for root in self._roots:
            for i, c in enumerate(root.fund_coords):
                twice_rho[i] += c
        if any(c != 2 for c in twice_rho):
            raise InconsistencyError(f"{family}{rank}: half-sum of positive roots is not the rho vector")

    def _close_roots(self):
        n = self.rank
        a = self.cartan
        seen = {}
        queue = []
        for i in range(n):
            rc = tuple(int(i == j) for j in range(n))
            seen[rc] = self.d[i]
            queue.append(rc)
        while queue:
            rc = queue.pop()
            for i in range(n):
                p = sum(rc[j] * a[j][i] for j in range(n))
                new = list(rc)
                new[i] -= p
                new = tuple(new)
                if new == rc or new in seen:
                    continue
                if all(c >= 0 for c in new):
                    seen[new] = seen[rc]
                    queue.append(new)
        roots = []
        for rc in sorted(seen):
            d_alpha = seen[rc]
            fc = tuple(sum(rc[j] * a[j][i] for j in range(self.rank)) for i in range(self.rank))
            co = []
            for j in range(self.rank):
                num = rc[j] * self.d[j]
                if num % d_alpha != 0:
                    raise InconsistencyError(f"non-integral coroot for {rc} in {self}")
                co.append(num // d_alpha)
            roots.append(_Root(rc, fc, tuple(co), d_alpha))
        return tuple(roots)

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    def __hash__(self):
        return hash((self.family, self.rank))

    def __repr__(self):
        return f"RootSystem({self.family}{self.rank})"

    # -- public data views --------------------------------------------------
    @property
    def type(self) -> str:
        return self.family

    @property
    def num_positive_roots(self) -> int:
        return len(self._roots)

    @property
    def positive_roots(self):
        return [Weight.fundamental(self.family, self.rank, r.fund_coords) for r in self._roots]

    @property
    def rho(self) -> Weight:
        return Weight.fundamental(self.family, self.rank, (1,) * self.rank)

    @property
    def fundamental_weights(self):
        return [
            Weight.fundamental(self.family, self.rank, tuple(int(i == j) for j in range(self.rank)))
            for i in range(self.rank)
        ]

    # -- internal exact linear algebra on fundamental coordinates ----------
    def reflect(self, i: int, fc: tuple) -> tuple:
        c = fc[i]
        if c == 0:
            return fc
        row = self.cartan[i]
        return tuple(fc[j] - c * row[j] for j in range(self.rank))

    def dominant_conjugate(self, fc: tuple) -> tuple:
        v = fc
        while True:
            for i, c in enumerate(v):
                if c < 0:
                    v = self.reflect(i, v)
                    break
            else:
                return v

    def root_coords(self, fc: tuple) -> tuple:
        """Coefficients on the simple roots (Fractions off the root lattice)."""
        inv = self.cartan_inv
        return tuple(sum(fc[j] * inv[j][i] for j in range(self.rank)) for i in range(self.rank))

    def height(self, fc: tuple) -> Fraction:
        return sum(self.root_coords(fc), start=Fraction(0))

    def fund_tuple(self, weight) -> tuple:
        if isinstance(weight, Weight):
            return weight.fund_coords()
        if isinstance(weight, Partition):
            raise TypeError("convert partitions to Weights explicitly")
        return tuple(int(c) for c in weight)

    def weight(self, fc) -> Weight:
        return Weight.fundamental(self.family, self.rank, tuple(fc))


@cache
def build_root_system(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


# ---------------------------------------------------------------------------
# Weyl dimension formula


def dim_irrep(rs: RootSystem, weight) -> int:
    fc = rs.fund_tuple(weight)
    if any(c < 0 for c in fc):
        raise ValueError(f"weight {fc} is not dominant for {rs}")
    return _dim_irrep(rs.family, rs.rank, fc)


@cache
def _dim_irrep(family: str, rank: int, fc: tuple) -> int:
    rs = build_root_system(family, rank)
    v = tuple(c + 1 for c in fc)
    num = 1
    den = 1
    for root in rs._roots:
        num *= sum(e * x for e, x in zip(root.coroot_coords, v))
        den *= sum(root.coroot_coords)
    assert num % den == 0
    return num // den


# ---------------------------------------------------------------------------
# Freudenthal weight multiplicities


@cache
def _dominant_mults(family: str, rank: int, top: tuple) -> dict:
    rs = build_root_system(family, rank)
    root_fcs = [r.fund_coords for r in rs._roots]

    dom = {top}
    queue = [top]
    while queue:
        v = queue.pop()
        for rfc in root_fcs:
            cand = tuple(a - b for a, b in zip(v, rfc))
            if cand not in dom and all(c >= 0 for c in cand):
                dom.add(cand)
                queue.append(cand)

    def depth(mu):
        ks = rs.root_coords(tuple(a - b for a, b in zip(top, mu)))
        assert all(k.denominator == 1 and k >= 0 for k in ks)
        return sum(int(k) for k in ks), tuple(int(k) for k in ks)

    ordered = sorted(((depth(mu), mu) for mu in dom), key=lambda t: t[0][0])
    mults: dict[tuple, int] = {}
    for (dep, ks), mu in ordered:
        if dep == 0:
            mults[mu] = 1
            continue
        num = 0
        for root in rs._roots:
            pairing = sum(e * m for e, m in zip(root.coroot_coords, mu))
            k = 1
            while True:
                w = tuple(a + k * b for a, b in zip(mu, root.fund_coords))
                m = mults.get(rs.dominant_conjugate(w))
                if m is None:
                    break
                if m:
                    num += m * root.d * (pairing + 2 * k)
                k += 1
        denom = sum(k * di * (t + m + 2) for k, di, t, m in zip(ks, rs.d, top, mu))
        val = 2 * num
        assert denom > 0 and val % denom == 0
        mults[mu] = val // denom
    return {mu: m for mu, m in mults.items()}


def weyl_orbit(rs: RootSystem, fc: tuple) -> set:
    orbit = {fc}
    queue = [fc]
    while queue:
        v = queue.pop()
        for i in range(rs.rank):
            w = rs.reflect(i, v)
            if w not in orbit:
                orbit.add(w)
                queue.append(w)
    return orbit


def weight_multiplicities(rs: RootSystem, weight, bound=None) -> "Character":
    fc = rs.fund_tuple(weight)
    if any(c < 0 for c in fc):
        raise ValueError(f"weight {fc} is not dominant for {rs}")
    dim = dim_irrep(rs, fc)
    limit = dim_bound() if bound is None else bound
    if dim > limit:
        raise ScaleError(f"dim {dim} exceeds the configured bound {limit}")
    entries = {}
    mass = 0
    for mu, m in _dominant_mults(rs.family, rs.rank, fc).items():
        if m == 0:
            continue
        for w in weyl_orbit(rs, mu):
            entries[w] = m
            mass += m
    if mass != dim:
        raise InconsistencyError(f"weight diagram mass {mass} != Weyl dimension {dim} for {fc} in {rs}")
    return Character(rs, entries)


@cache
def _irrep_character(family: str, rank: int, fc: tuple, bound: int) -> "Character":
    rs = build_root_system(family, rank)
    return weight_multiplicities(rs, fc, bound=bound)


def char_of_irrep(rs: RootSystem, weight, bound=None) -> "Character":
    fc = rs.fund_tuple(weight)
    return _irrep_character(rs.family, rs.rank, fc, dim_bound() if bound is None else bound)


# ---------------------------------------------------------------------------
# formal characters


class Character:
    """Formal integer combination of weights of one root system."""

    __slots__ = ("rs", "entries")

    def __init__(self, rs: RootSystem, entries=None):
        self.rs = rs
        self.entries = {}
        if entries:
            for fc, m in (entries.items() if hasattr(entries, "items") else entries):
                if m:
                    fc = tuple(fc)
                    new = self.entries.get(fc, 0) + m
                    if new:
                        self.entries[fc] = new
                    else:
                        del self.entries[fc]

    def dimension(self) -> int:
        return sum(self.entries.values())

    def __getitem__(self, fc):
        return self.entries.get(tuple(fc), 0)

    def __add__(self, other):
        self._check(other)
        out = dict(self.entries)
        for fc, m in other.entries.items():
            new = out.get(fc, 0) + m
            if new:
                out[fc] = new
            else:
                del out[fc]
        return Character(self.rs, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c: int) -> "Character":
        if c == 0:
            return Character(self.rs)
        return Character(self.rs, {fc: c * m for fc, m in self.entries.items()})

    def __mul__(self, other):
        """Tensor product: convolution of weight multisets."""
        self._check(other)
        out: dict[tuple, int] = {}
        for fa, ma in self.entries.items():
            for fb, mb in other.entries.items():
                key = tuple(a + b for a, b in zip(fa, fb))
                new = out.get(key, 0) + ma * mb
                if new:
                    out[key] = new
                else:
                    del out[key]
        return Character(self.rs, out)

    def _check(self, other):
        if self.rs != other.rs:
            raise ValueError("characters live on different root systems")

    def __eq__(self, other):
        return isinstance(other, Character) and self.rs == other.rs and self.entries == other.entries

    def __bool__(self):
        return bool(self.entries)

    def reflect(self, i: int) -> "Character":
        out: dict[tuple, int] = {}
        for fc, m in self.entries.items():
            key = self.rs.reflect(i, fc)
            out[key] = out.get(key, 0) + m
        return Character(self.rs, out)

    def is_weyl_invariant(self) -> bool:
        return all(self.reflect(i) == self for i in range(self.rs.rank))

    def letters(self):
        """The weight multiset as a sorted list with repetitions."""
        out = []
        for fc in sorted(self.entries):
            m = self.entries[fc]
            if m < 0:
                raise ValueError("virtual character has no weight multiset")
            out.extend([fc] * m)
        return out

    def exterior_power(self, k: int) -> "Character":
        return self._power(k, strict=True)

    def symmetric_power(self, k: int) -> "Character":
        return self._power(k, strict=False)

    def _power(self, k: int, strict: bool) -> "Character":
        letters = self.letters()
        zero = (0,) * self.rs.rank
        table: list[dict[tuple, int]] = [{zero: 1}] + [dict() for _ in range(k)]
        for letter in letters:
            ts = range(k, 0, -1) if strict else range(1, k + 1)
            for t in ts:
                src = table[t - 1]
                dst = table[t]
                for fc, c in list(src.items()):
                    key = tuple(a + b for a, b in zip(fc, letter))
                    dst[key] = dst.get(key, 0) + c
        return Character(self.rs, table[k])

    def restrict(self, target_rs: RootSystem, coord_map) -> "Character":
        """Push the weight multiset through a map on fundamental coordinates."""
        out: dict[tuple, int] = {}
        for fc, m in self.entries.items():
            key = tuple(coord_map(fc))
            out[key] = out.get(key, 0) + m
        return Character(target_rs, out)

    def sorted_items(self):
        return sorted(self.entries.items())

    def __repr__(self):
        inner = ", ".join(f"{k}:{v}" for k, v in self.sorted_items())
        return f"Character({self.rs.family}{self.rs.rank}; {inner})"

    def to_json(self):
        return {str(self.rs.weight(fc)): m for fc, m in self.sorted_items()}


def character_from_weights(rs: RootSystem, pairs) -> Character:
    entries = {}
    for w, m in pairs:
        fc = rs.fund_tuple(w)
        entries[fc] = entries.get(fc, 0) + m
    return Character(rs, entries)


def trivial_character(rs: RootSystem) -> Character:
    return Character(rs, {(0,) * rs.rank: 1})


def decompose_character(rs: RootSystem, char: Character, bound=None) -> Decomposition:
    """Write a character as a nonnegative sum of irreducible characters.

    Repeatedly subtracts the character of a dominance-maximal dominant weight
    in the remaining support (ties broken lexicographically, so the run is
    deterministic); fails loudly if the input was not a genuine character.
    """
    work = dict(char.entries)
    out = Decomposition()
    while work:
        best = None
        best_key = None
        for fc, c in work.items():
            if c == 0 or any(x < 0 for x in fc):
                continue
            key = (rs.height(fc), fc)
            if best_key is None or key > best_key:
                best, best_key = fc, key
        if best is None:
            raise NotCharacterError(f"leftover non-dominant support {sorted(work)} in {rs}")
        m = work[best]
        if m < 0:
            raise NotCharacterError(f"negative multiplicity {m} at {best} in {rs}")
        out.add(rs.weight(best), m)
        for fc, c in char_of_irrep(rs, best, bound=bound).entries.items():
            new = work.get(fc, 0) - m * c
            if new:
                work[fc] = new
            else:
                work.pop(fc, None)
    return out


def schur_character(rs: RootSystem, base: Character, lam, *, size_bound=SCHUR_SIZE_BOUND, dim_bound_=SCHUR_DIM_BOUND) -> Character:
    """Character of the Schur functor applied to a virtual space with the given
    character: the Schur polynomial evaluated on the weight multiset, computed
    by semistandard-tableau enumeration."""
    lam = Partition(lam)
    if lam.size > size_bound:
        raise ScaleError(f"schur_character supports |lambda| <= {size_bound}")
    if base.dimension() > dim_bound_:
        raise ScaleError(f"schur_character supports base dimension <= {dim_bound_}")
    letters = base.letters()
    n = len(letters)
    out: dict[tuple, int] = {}
    if len(lam) > n:
        return Character(rs)
    zero = (0,) * rs.rank
    if not lam:
        return Character(rs, {zero: 1})

    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    fill = {}

    def rec(idx: int, acc: tuple):
        if idx == len(cells):
            out[acc] = out.get(acc, 0) + 1
            return
        r, c = cells[idx]
        left = fill.get((r, c - 1))
        above = fill.get((r - 1, c))
        lo = left if left is not None else 0
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, n):
            fill[(r, c)] = v
            rec(idx + 1, tuple(a + b for a, b in zip(acc, letters[v])))
            del fill[(r, c)]

    rec(0, zero)
    return Character(rs, out)
