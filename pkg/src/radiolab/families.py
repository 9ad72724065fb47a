"""Optimal radio labelings of P_m □ W_n and the families inheriting them.

Vertex (u_i, v_j) of P_m □ X (1 <= i <= m, 0 <= j) sits at index
``(i - 1) * |V(X)| + j``; the hub v_0 of each fiber is j = 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .graph import Graph, GraphError, all_pairs_distances, cartesian_product, complete, friendship, path, star, wheel, DistanceMatrix
from .labeling import Certificate, Labeling, certify_optimal
from .layers import CenterSet, make_center

FAMILIES = ("path-wheel", "path-star", "path-friendship", "path-complete")

# (min m, min n) under which the closed forms are proved
HYPOTHESIS = {
    "path-wheel": (3, 7),
    "path-star": (3, 7),
    "path-friendship": (3, 4),
    "path-complete": (4, 3),
}


class ConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Permutation1N:
    """A bijection of {1..n}; ``perm(j)`` gives the image of j."""
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ConstructionError(f"map on 1..{self.n} is not a bijection: {self.images}")

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def inverse(self) -> Permutation1N:
        inv = [0] * self.n
        for j, img in enumerate(self.images, start=1):
            inv[img - 1] = j
        return Permutation1N(self.n, tuple(inv))

    def compose(self, inner: Permutation1N) -> Permutation1N:
        """``self ∘ inner``: j -> self(inner(j))."""
        return Permutation1N(self.n, tuple(self(inner(j)) for j in range(1, self.n + 1)))


def identity(n: int) -> Permutation1N:
    return Permutation1N(n, tuple(range(1, n + 1)))


def tau(n: int) -> Permutation1N:
    """1 -> n-1, 2 -> n, j -> j-2 otherwise (rotation by two)."""
    if n < 3:
        raise ConstructionError(f"tau needs n >= 3, got {n}")
    return Permutation1N(n, (n - 1, n) + tuple(range(1, n - 1)))


def sigma(n: int) -> Permutation1N:
    """Sort 1..n by residue class mod 4 (classes 1, 2, 3, 0), keeping order within a class."""
    if n < 4:
        raise ConstructionError(f"sigma needs n >= 4, got {n}")
    images = []
    for j in range(1, n + 1):
        cls = (j - 1) % 4 + 1          # residue written as 1..4
        offset = sum(ceil((n - t) / 4) for t in range(cls - 1))
        images.append(offset + ceil(j / 4))
    return Permutation1N(n, tuple(images))


# residue-class visiting order (classes written 1..4) keyed by n mod 4
_CLASS_ORDER = {0: (1, 2, 3, 4), 1: (1, 4, 3, 2), 2: (1, 3, 2, 4), 3: (1, 2, 3, 4)}


def sigma_repaired(n: int) -> Permutation1N:
    """Like ``sigma`` but with the class order chosen by n mod 4.

    With classes visited as 1, 2, 3, 4 the hand-over from one class to the
    next puts two consecutive rim vertices at rim distance 0 or 1 whenever
    n = 1, 2 (mod 4), and the resulting ordering is not a valid certificate.
    Visiting 1, 4, 3, 2 (n = 1 mod 4) or 1, 3, 2, 4 (n = 2 mod 4) keeps every
    hand-over step at rim distance >= 4 or 5. For n = 0, 3 (mod 4) this is
    exactly ``sigma``.
    """
    if n < 4:
        raise ConstructionError(f"sigma needs n >= 4, got {n}")
    seq = [j for c in _CLASS_ORDER[n % 4] for j in range(c, n + 1, 4)]
    images = [0] * n
    for s, j in enumerate(seq, start=1):
        images[j - 1] = s
    return Permutation1N(n, tuple(images))


def alpha(n: int) -> Permutation1N:
    """Rotation by four: j -> n-4+j for j <= 4, j -> j-4 otherwise."""
    if n < 5:
        raise ConstructionError(f"alpha needs n >= 5, got {n}")
    return Permutation1N(n, tuple(range(n - 3, n + 1)) + tuple(range(1, n - 3)))


# -- P_m □ W_n -----------------------------------------------------------------

def product_index(i: int, j: int, n: int) -> int:
    """Index of (u_i, v_j) in P_m □ X where X has n + 1 vertices."""
    return (i - 1) * (n + 1) + j


def _even_slot(m: int, n: int, r: int, s: int) -> int:
    half = m // 2
    if r <= half:
        return 2 * (half - r) * (n + 1) + 2 * s
    if s >= 1:
        return 2 * (m - r) * (n + 1) + 2 * s - 1
    return 2 * (m - r + 1) * (n + 1) - 1


def _odd_slot(m: int, n: int, r: int, s: int) -> int:
    mid = (m + 1) // 2
    if r == 1:
        return 3 * s - 1 if s else 3 * n + 2
    if r == mid:
        return 3 * s
    if r == m:
        return 3 * s - 2 if s else 3 * n + 1
    base = 3 * n + 2
    if r < mid:
        if s:
            return base + 2 * (r - 2) * (n + 1) + 2 * s
        return base + 2 * (r - 1) * (n + 1)
    if s:
        return base + 2 * (r - mid - 1) * (n + 1) + 2 * s - 1
    return base + 2 * (r - mid) * (n + 1) - 1


def _row_permutations(m: int, n: int, literal: bool) -> dict[int, Permutation1N]:
    """The rim permutation applied in each path row i."""
    s = sigma(n) if literal else sigma_repaired(n)
    if m % 2 == 0:
        st = s.compose(tau(n))
        return {i: (st if i <= m // 2 else s) for i in range(1, m + 1)}
    mid = (m + 1) // 2
    t, a = tau(n), alpha(n)
    st = s.compose(t)
    rows = {}
    for i in range(1, m + 1):
        if i == m:
            rows[i] = identity(n)
        elif i == 1:
            rows[i] = t
        elif i == mid:
            rows[i] = a
        elif i < mid:
            rows[i] = st
        else:
            rows[i] = s
    return rows


def pw_ordering(m: int, n: int, literal: bool = False) -> tuple[int, ...]:
    """Vertex ordering of P_m □ W_n attaining the layer bound.

    Vertex (u_i, v_j) is renamed (a_i, b_s) with s = 0 for the hub and
    s = pi_i(j) on the rim, pi_i being the row permutation; it is then
    placed at the position given by the even or odd slot table.

    ``literal=True`` uses ``sigma`` as printed, which only certifies for
    n = 0, 3 (mod 4) once m >= 4; the default uses ``sigma_repaired``.
    """
    if m < 2:
        raise ConstructionError(f"m must be at least 2, got {m}")
    rows = _row_permutations(m, n, literal)
    slot = _even_slot if m % 2 == 0 else _odd_slot
    p = m * (n + 1)
    order = [-1] * p
    for i in range(1, m + 1):
        for j in range(n + 1):
            s = rows[i](j) if j else 0
            t = slot(m, n, i, s)
            if not 0 <= t < p or order[t] != -1:
                raise ConstructionError(f"slot collision or overflow at t={t} for (u_{i}, v_{j})")
            order[t] = product_index(i, j, n)
    return tuple(order)


def pw_center_vertices(m: int, n: int) -> tuple[int, ...]:
    """Hub(s) of the middle path row(s)."""
    if m % 2 == 0:
        return (product_index(m // 2, 0, n), product_index(m // 2 + 1, 0, n))
    return (product_index((m + 1) // 2, 0, n),)


def pw_center(m: int, n: int, g: Graph | None = None, dm: DistanceMatrix | None = None) -> CenterSet:
    if g is None:
        g = cartesian_product(path(m), wheel(n))
    if dm is None:
        dm = all_pairs_distances(g)
    return make_center(g, dm, pw_center_vertices(m, n))


def _half(numerator: int) -> int:
    if numerator % 2:
        raise ArithmeticError(f"closed form numerator {numerator} is odd")
    return numerator // 2


def pw_radio_number(m: int, n: int) -> int:
    if m % 2 == 0:
        return _half(m * m * n + m * m + 2 * m - 2)
    return _half(m * m * n + m * m + 2 * m + n - 1)


def pw_total_level(m: int, n: int) -> int:
    """Closed form for L(P_m □ W_n) about the middle hub(s)."""
    num = m * (m * n + 2 * n + m - 2) if m % 2 == 0 else m * m * n + m * m + 4 * m * n - n - 1
    if num % 4:
        raise ArithmeticError(f"total level numerator {num} not divisible by 4")
    return num // 4


def star_radio_number(m: int, n: int) -> int:
    return pw_radio_number(m, n)


def friendship_radio_number(m: int, n: int) -> int:
    if m % 2 == 0:
        return _half(2 * m * m * n + m * m + 2 * m - 2)
    return _half(2 * m * m * n + m * m + 2 * m + 2 * n - 1)


def complete_radio_number(m: int, n: int) -> int:
    if m % 2 == 0:
        return _half(m * m * n - 2 * m + 2)
    return _half(m * m * n - 2 * m + n + 2)


def complete_total_level(m: int, n: int) -> int:
    """L(P_m □ K_n) about the middle fiber (odd m) or both middle fibers (even m).

    For even m this is m n (m - 2) / 4, the value that reproduces
    ``complete_radio_number`` through the layer bound.
    """
    num = m * n * (m - 2) if m % 2 == 0 else (m * m - 1) * n
    if num % 4:
        raise ArithmeticError(f"total level numerator {num} not divisible by 4")
    return num // 4


def complete_center_vertices(m: int, n: int) -> tuple[int, ...]:
    """All vertices of the middle K_n fiber (odd m) or the two middle fibers (even m).

    Vertex (u_i, v_j) of P_m □ K_n sits at ``(i - 1) * n + (j - 1)``.
    """
    rows = [m // 2, m // 2 + 1] if m % 2 == 0 else [(m + 1) // 2]
    return tuple((i - 1) * n + j for i in rows for j in range(n))


CLOSED_FORMS = {
    "path-wheel": pw_radio_number,
    "path-star": star_radio_number,
    "path-friendship": friendship_radio_number,
    "path-complete": complete_radio_number,
}


# -- assembled constructions -------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    family: str
    m: int
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}; choose from {FAMILIES}")

    @property
    def within_hypothesis(self) -> bool:
        mm, nn = HYPOTHESIS[self.family]
        return self.m >= mm and self.n >= nn

    def check(self) -> None:
        mm, nn = HYPOTHESIS[self.family]
        if self.m < mm:
            raise GraphError(f"m below theorem hypothesis (m >= {mm} required for {self.family})")
        if self.n < nn:
            raise GraphError(f"n below theorem hypothesis (n >= {nn} required for {self.family})")


def family_graph(spec: FamilySpec) -> Graph:
    factor = {
        "path-wheel": wheel,
        "path-star": star,
        "path-friendship": friendship,
        "path-complete": complete,
    }[spec.family]
    return cartesian_product(path(spec.m), factor(spec.n))


@dataclass
class ConstructionResult:
    spec: FamilySpec
    graph: Graph
    distances: DistanceMatrix
    center: CenterSet
    ordering: tuple[int, ...] | None
    labeling: Labeling | None
    closed_form: int
    certificate: Certificate | None
    parent: tuple[str, int] | None = None   # ("W", n) of the wheel the ordering came from

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.certified


def build_family(spec: FamilySpec, strict: bool = True, literal: bool = False) -> ConstructionResult:
    """Graph, center, ordering, labeling and certificate for a family member.

    Star and friendship products reuse the ordering of the wheel product they
    are spanning subgraphs of (W_n and W_{2n} respectively) and are certified
    against their own distances. ``path-complete`` only carries its closed
    form. With ``strict=False`` parameters outside the proved range are
    attempted and simply report whether certification happened to pass.
    """
    if strict:
        spec.check()
    m, n = spec.m, spec.n
    g = family_graph(spec)
    dm = all_pairs_distances(g)
    closed = CLOSED_FORMS[spec.family](m, n)
    if spec.family == "path-complete":
        center = make_center(g, dm, complete_center_vertices(m, n))
        return ConstructionResult(spec, g, dm, center, None, None, closed, None)

    wheel_n = 2 * n if spec.family == "path-friendship" else n
    order = pw_ordering(m, wheel_n, literal)
    center = make_center(g, dm, pw_center_vertices(m, wheel_n))
    cert = certify_optimal(g, dm, center, order)
    parent = None if spec.family == "path-wheel" else ("W", wheel_n)
    result = ConstructionResult(spec, g, dm, center, order, cert.labeling, closed, cert, parent)
    if strict and not cert.certified:
        raise ConstructionError(
            f"{spec.family} ({m}, {n}) failed certification: {cert.conditions.violations[:3]}")
    return result
