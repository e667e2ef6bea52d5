"""Littlewood complexes, bracket maps, stable-range branching, and the spinor
complexes for the orthogonal types.

Each group case pairs a multiplicity space E with a small representation V;
the bracket map sends a partition with at most dim E rows to the highest
weight of the irreducible it tags inside Sym(E (x) V).  The complexes are the
Schur-isotypic slices of the Koszul resolutions of the associated varieties,
and their Euler characteristics invert Littlewood's branching matrices, which
is exactly what verify_littlewood_identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bott import SpinLabel, delta_weight_B, delta_weight_D
from .characters import (
    Character,
    HalfInt,
    RootSystem,
    Weight,
    build_root_system,
    decompose_character,
    dim_bound,
    dim_irrep,
    schur_character,
)
from .errors import ScaleError, StableRangeError
from .partitions import (
    Decomposition,
    Partition,
    dim_schur,
    in_q,
    lr_coefficient,
    partitions_in_box,
    partitions_of,
    skew_schur_expand,
)

CASE_KINDS = ("SpC", "SOB", "OD", "G2", "F4_6", "F4_3", "E6_5", "E6_3", "E7_6", "E8_7")

_EXCEPTIONAL = {
    # kind: (dim E, dim V, root system, rows accepted by the bracket map)
    "G2": (2, 7, ("G", 2), 2),
    "F4_6": (6, 26, ("F", 4), 3),
    "F4_3": (3, 26, ("F", 4), 3),
    "E6_5": (5, 27, ("E", 6), 5),
    "E6_3": (3, 27, ("E", 6), 3),
    "E7_6": (6, 56, ("E", 7), 6),
    "E8_7": (7, 248, ("E", 8), 7),
}


@dataclass(frozen=True)
class GroupCase:
    kind: str
    n: int | None = None

    def __post_init__(self):
        if self.kind not in CASE_KINDS:
            raise ValueError(f"unknown case kind {self.kind}")
        if self.kind in ("SpC", "SOB", "OD"):
            if self.n is None or self.n < 1 or (self.kind == "OD" and self.n < 2):
                raise ValueError(f"case {self.kind} needs a valid rank")
        elif self.n is not None:
            raise ValueError(f"case {self.kind} takes no rank parameter")

    @property
    def name(self) -> str:
        return f"{self.kind}({self.n})" if self.n is not None else self.kind

    @property
    def dim_e(self) -> int:
        if self.n is not None:
            return self.n
        return _EXCEPTIONAL[self.kind][0]

    @property
    def dim_v(self) -> int:
        if self.kind == "SpC":
            return 2 * self.n
        if self.kind == "SOB":
            return 2 * self.n + 1
        if self.kind == "OD":
            return 2 * self.n
        return _EXCEPTIONAL[self.kind][1]

    @property
    def bracket_rows(self) -> int:
        if self.n is not None:
            return self.n
        return _EXCEPTIONAL[self.kind][3]

    def root_system(self) -> RootSystem:
        if self.kind == "SpC":
            return build_root_system("C", self.n)
        if self.kind == "SOB":
            return build_root_system("B", self.n)
        if self.kind == "OD":
            return build_root_system("D", self.n)
        fam, rk = _EXCEPTIONAL[self.kind][2]
        return build_root_system(fam, rk)

    def __str__(self):
        return self.name


def parse_case(text: str) -> GroupCase:
    text = text.strip()
    if "(" in text:
        kind, rest = text.split("(", 1)
        return GroupCase(kind, int(rest.rstrip(")")))
    return GroupCase(text)


def bracket_weight(case: GroupCase, lam) -> Weight:
    """The case's bracket map: the dominant weight tagging the shape's
    isotypic piece of the coordinate ring.  Row counts are capped at dim E,
    except in the six-copy F4 case, which is spherical only on shapes with at
    most three rows (beyond that the slice carries multiplicities and no
    single weight exists)."""
    lam = Partition(lam)
    if len(lam) > case.bracket_rows:
        raise ValueError(
            f"{case.name}: bracket map accepts at most {case.bracket_rows} rows, got {len(lam)}"
        )
    l1, l2, l3, l4, l5, l6, l7 = (lam[i] for i in range(7))
    if case.kind in ("SpC", "SOB", "OD"):
        fam = {"SpC": "C", "SOB": "B", "OD": "D"}[case.kind]
        coords = tuple(lam[i] for i in range(case.n))
        return Weight.epsilon(fam, case.n, coords)
    if case.kind == "G2":
        return Weight.fundamental("G", 2, (l1 - l2, l2))
    if case.kind in ("F4_3", "F4_6"):
        return Weight.fundamental("F", 4, (0, l3, l2 - l3, l1 - l2))
    if case.kind == "E6_3":
        return Weight.fundamental("E", 6, (l1 - l2, 0, l2 - l3, l3, 0, 0))
    if case.kind == "E6_5":
        return Weight.fundamental("E", 6, (l1 - l2, l4 - l5, l2 - l3, l3 - l4, l4 + l5, 0))
    if case.kind == "E7_6":
        return Weight.fundamental("E", 7, (0, l5 - l6, l5 + l6, l4 - l5, l3 - l4, l2 - l3, l1 - l2))
    if case.kind == "E8_7":
        return Weight.fundamental(
            "E", 8, (0, l6 - l7, l6 + l7, l5 - l6, l4 - l5, l3 - l4, l2 - l3, l1 - l2)
        )
    raise AssertionError(case.kind)


def bracket_dim(case: GroupCase, lam) -> int:
    """Dimension of the image of the bracket map; for the even orthogonal case
    with a full-length shape this is the sum of the two mirror irreducibles."""
    lam = Partition(lam)
    rs = case.root_system()
    w = bracket_weight(case, lam)
    dim = dim_irrep(rs, w)
    if case.kind == "OD" and len(lam) == case.n:
        mirror = list(w.fund_coords())
        mirror[-1], mirror[-2] = mirror[-2], mirror[-1]
        dim += dim_irrep(rs, tuple(mirror))
    return dim


# ---------------------------------------------------------------------------
# Littlewood complexes


@dataclass(frozen=True)
class GradedTerm:
    index: int  # homological degree
    degree: int  # internal degree, the twist A(-degree)
    content: Decomposition

    def to_json(self):
        return {"i": self.index, "degree": self.degree, "content": self.content.to_json()}


def littlewood_complex(family: str, lam) -> list[GradedTerm]:
    """The Schur-isotypic slice of the Koszul complex of the Littlewood
    variety: in homological degree i, the skew Schur functors by the size-2i
    members of the Q-set (minus for the symplectic family, plus for the
    orthogonal ones)."""
    if family not in ("B", "C", "D"):
        raise ValueError("family must be B, C, or D")
    lam = Partition(lam)
    variant = "minus" if family == "C" else "plus"
    terms = []
    for i in range(lam.size // 2 + 1):
        content = Decomposition()
        for mu in partitions_of(2 * i):
            if in_q(mu, variant):
                content += skew_schur_expand(lam, mu)
        terms.append(GradedTerm(i, 2 * i, content))
    return terms


def _even_column_partitions(size: int) -> list[Partition]:
    return [p for p in partitions_of(size) if all(c % 2 == 0 for c in p.transpose())]


def _even_row_partitions(size: int) -> list[Partition]:
    return [p for p in partitions_of(size) if all(c % 2 == 0 for c in p)]


def _parse_target(target):
    if isinstance(target, str):
        kind, m = target.replace("(", ":").rstrip(")").split(":")
        target = (kind.capitalize() if kind.lower() == "sp" else kind.upper(), int(m))
    kind, m = target
    if kind == "Sp":
        if m % 2 != 0 or m < 2:
            raise ValueError("Sp targets have even dimension >= 2")
    elif kind == "O":
        if m < 2:
            raise ValueError("O targets need dimension >= 2")
    else:
        raise ValueError(f"unknown branching target {target}")
    return kind, m


def branch_gl_to_iso(lam, target, oracle: bool = False) -> Decomposition:
    """Restriction of a GL Schur functor to the isometry group of a form.

    The default is the stable-range combinatorial rule: the multiplicity of a
    label mu is the number of ways to peel an even-column (symplectic) or
    even-row (orthogonal) partition beta off lam against mu, counted by
    Littlewood-Richardson coefficients.  With oracle=True the answer is
    recomputed from scratch through characters, which has no stable-range
    restriction.
    """
    kind, m = _parse_target(target)
    lam = Partition(lam)
    if oracle:
        return _branch_by_characters(lam, kind, m)
    n = m // 2
    if len(lam) > n:
        raise StableRangeError(
            f"Littlewood's rule needs at most {n} rows for {kind}({m}); got {len(lam)} "
            "(the wider regime is out of scope)"
        )
    betas = _even_column_partitions if kind == "Sp" else _even_row_partitions
    out = Decomposition()
    for s in range(0, lam.size + 1, 2):
        for beta in betas(s):
            if not lam.contains(beta):
                continue
            for mu in partitions_of(lam.size - s, max_length=len(lam)):
                if not lam.contains(mu):
                    continue
                c = lr_coefficient(lam, mu, beta)
                if c:
                    out.add(mu, c)
    return out


def _vector_character(kind: str, m: int) -> Character:
    n = m // 2
    if kind == "Sp":
        rs = build_root_system("C", n)
    elif m % 2 == 1:
        rs = build_root_system("B", n)
    else:
        rs = build_root_system("D", n)
    pairs = []
    for i in range(n):
        eps = [0] * n
        eps[i] = 1
        pairs.append((Weight.epsilon(rs.family, n, tuple(eps)), 1))
        pairs.append((Weight.epsilon(rs.family, n, tuple(-e for e in eps)), 1))
    if m % 2 == 1:
        pairs.append((Weight.epsilon(rs.family, n, (0,) * n), 1))
    entries = {}
    for w, mult in pairs:
        fc = w.fund_coords()
        entries[fc] = entries.get(fc, 0) + mult
    return Character(rs, entries)


def _branch_by_characters(lam: Partition, kind: str, m: int) -> Decomposition:
    """Brute-force branching: build the Schur functor of the vector character
    and decompose.  Labels are partitions; in the even orthogonal case the two
    mirror full-length irreducibles are fused into one orthogonal label."""
    base = _vector_character(kind, m)
    rs = base.rs
    char = schur_character(rs, base, lam)
    dec = decompose_character(rs, char)
    out = Decomposition()
    fused: dict[tuple, list] = {}
    for w, mult in dec.entries.items():
        eps = w.to_epsilon().coords
        if kind == "O" and m % 2 == 0 and eps[-1].twice != 0:
            key = tuple(abs(x).twice for x in eps)
            fused.setdefault(key, []).append((eps[-1].twice > 0, mult))
            continue
        out.add(Partition(tuple(int(x) for x in eps)), mult)
    for key, halves in fused.items():
        plus = sum(m_ for pos, m_ in halves if pos)
        minus = sum(m_ for pos, m_ in halves if not pos)
        if plus != minus:
            raise AssertionError("mirror multiplicities differ; not an O(V)-stable character")
        out.add(Partition(tuple(t // 2 for t in key)), plus)
    return out


@dataclass(frozen=True)
class Report:
    passed: bool
    case: str
    lhs: object
    rhs: object

    def to_json(self):
        def dump(x):
            return x.to_json() if hasattr(x, "to_json") else x

        return {"pass": self.passed, "case": self.case, "lhs": dump(self.lhs), "rhs": dump(self.rhs)}


def verify_littlewood_identity(family: str, lam, n: int, oracle: bool = False) -> Report:
    """Euler characteristic of the Littlewood complex against the single
    bracket label: exact multiset equality, not a dimension count."""
    lam = Partition(lam)
    if family == "C":
        target = ("Sp", 2 * n)
    elif family == "B":
        target = ("O", 2 * n + 1)
    elif family == "D":
        target = ("O", 2 * n)
    else:
        raise ValueError("family must be B, C, or D")
    if len(lam) > n:
        raise StableRangeError(f"need at most {n} rows in the stable range, got {len(lam)}")
    euler = Decomposition()
    for term in littlewood_complex(family, lam):
        sign = -1 if term.index % 2 else 1
        for nu, c in term.content.entries.items():
            euler += branch_gl_to_iso(nu, target, oracle=oracle).scale(sign * c)
    rhs = Decomposition({lam: 1})
    return Report(passed=euler == rhs, case=f"{family} lambda={lam} n={n}", lhs=euler, rhs=rhs)


# ---------------------------------------------------------------------------
# spinor complexes

SPINOR_FAMILIES = ("B", "Dplus", "Dminus", "Dfull")


def _spin_label(family: str, diag: int) -> SpinLabel:
    if family in ("B", "Dfull"):
        return SpinLabel.DELTA
    even = diag % 2 == 0
    if family == "Dplus":
        return SpinLabel.DELTA_PLUS if even else SpinLabel.DELTA_MINUS
    return SpinLabel.DELTA_MINUS if even else SpinLabel.DELTA_PLUS


def spinor_complex(family: str, n: int) -> list[GradedTerm]:
    """Terms of the minimal free resolution of the Littlewood spinor module:
    one summand for every self-transpose shape in the n-box, sitting in
    homological degree (size + diagonal)/2 and internal degree size, tagged by
    the spin label the parity rule dictates."""
    if family not in SPINOR_FAMILIES:
        raise ValueError(f"family must be one of {SPINOR_FAMILIES}")
    if not 1 <= n <= 8:
        raise ScaleError("spinor complexes supported for 1 <= n <= 8")
    by_cell: dict[tuple, Decomposition] = {}
    for lam in partitions_in_box(n, n):
        if lam.transpose() != lam:
            continue
        i = (lam.size + lam.rank) // 2
        cell = by_cell.setdefault((i, lam.size), Decomposition())
        cell.add((lam, _spin_label(family, lam.rank)), 1)
    return [GradedTerm(i, j, content) for (i, j), content in sorted(by_cell.items())]


def _spin_dims(family: str, n: int):
    """Spin label dimensions and the ambient vector dimension per family."""
    if family == "B":
        rs = build_root_system("B", n)
        delta = dim_irrep(rs, delta_weight_B(n))
        return {SpinLabel.DELTA: delta}, 2 * n + 1, rs
    rs = build_root_system("D", n)
    plus = dim_irrep(rs, delta_weight_D(n, "plus"))
    minus = dim_irrep(rs, delta_weight_D(n, "minus"))
    dims = {
        SpinLabel.DELTA: plus + minus,
        SpinLabel.DELTA_PLUS: plus,
        SpinLabel.DELTA_MINUS: minus,
    }
    return dims, 2 * n, rs


def _spin_shifted_weight(n: int, lam: Partition, mirror: bool) -> Weight:
    """lam + delta in epsilon coordinates; mirrored, the last coordinate is
    negated (the highest weight of the image of the full-length module under
    the outer involution)."""
    xs = [HalfInt.from_twice(2 * lam[i] + 1) for i in range(n)]
    if mirror:
        xs[-1] = -xs[-1]
    return Weight.epsilon("D", n, tuple(xs))


def verify_spinor_identity(family: str, n: int, lam, bound=None) -> Report:
    """Dimension-level Euler check of the spinor complex against the spin-
    shifted irreducible(s): alternating sums of skew Schur dimensions times
    the spin dimension must equal dim V_{lam+delta}."""
    if family not in SPINOR_FAMILIES:
        raise ValueError(f"family must be one of {SPINOR_FAMILIES}")
    lam = Partition(lam)
    if len(lam) > n:
        raise ValueError(f"need at most {n} rows, got {len(lam)}")
    label_dims, dim_v, rs = _spin_dims(family, n)

    lhs = 0
    for mu in partitions_in_box(n, n):
        if mu.transpose() != mu or not lam.contains(mu):
            continue
        i = (mu.size + mu.rank) // 2
        sign = -1 if i % 2 else 1
        skew_dim = sum(
            c * dim_schur(nu, dim_v) for nu, c in skew_schur_expand(lam, mu).entries.items()
        )
        lhs += sign * skew_dim * label_dims[_spin_label(family, mu.rank)]

    if family == "B":
        shifted = Weight.epsilon("B", n, tuple(HalfInt.from_twice(2 * lam[i] + 1) for i in range(n)))
        rhs = dim_irrep(rs, shifted)
    elif family == "Dplus":
        rhs = dim_irrep(rs, _spin_shifted_weight(n, lam, mirror=False))
    elif family == "Dminus":
        rhs = dim_irrep(rs, _spin_shifted_weight(n, lam, mirror=True))
    else:
        rhs = dim_irrep(rs, _spin_shifted_weight(n, lam, mirror=False)) + dim_irrep(
            rs, _spin_shifted_weight(n, lam, mirror=True)
        )
    limit = dim_bound() if bound is None else bound
    if rhs > limit:
        raise ScaleError(f"dimension {rhs} exceeds the configured bound {limit}")
    return Report(passed=lhs == rhs, case=f"{family} n={n} lambda={lam}", lhs=lhs, rhs=rhs)
