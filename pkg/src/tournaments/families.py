"""Constructors for the tournament families on ``{0, ..., 2n}``.

Critical families ``T``, ``U``, ``V`` have order ``2n+1`` for ``n >= 1``.
The (-1)-critical families ``E``, ``F``, ``G``, ``H`` take ``n >= 3`` and
``1 <= k <= n-2``; vertex ``a = 2k+1`` splits the rest into the in-side
``{0..2k}`` (vertices dominating ``a``) and the out-side ``{2k+2..2n}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Tournament, dual, from_dominance
from .errors import BadParams

FAMILY_TAGS = ("L", "T", "U", "V", "E", "F", "Fdual", "G", "Gdual", "H")
MINUS1_ORDER = ("E", "F", "Fdual", "G", "Gdual", "H")


def chain(m: int) -> Tournament:
    """The usual total order ``0 < 1 < ... < m-1``."""
    if m < 1:
        raise BadParams(f"chain length must be >= 1, got {m}")
    return from_dominance(m, lambda i, j: i < j)


def _check_order(n: int):
    if n < 1:
        raise BadParams(f"n must be >= 1, got {n}")


def t_family(n: int) -> Tournament:
    """Circulant tournament: ``i -> j`` iff ``j - i`` is in ``1..n`` mod ``2n+1``."""
    _check_order(n)
    m = 2 * n + 1
    return from_dominance(m, lambda i, j: 1 <= (j - i) % m <= n)


def _u_arc(i: int, j: int) -> bool:
    if i % 2 == 0 and j % 2 == 0:
        return i > j
    return i < j


def _v_arc(i: int, j: int, top: int) -> bool:
    # chain 0 < ... < top-1, and ``top`` dominates exactly the even chain vertices
    if i == top:
        return j % 2 == 0
    if j == top:
        return i % 2 == 1
    return i < j


def u_family(n: int) -> Tournament:
    """The chain of order ``2n+1`` with arcs between even vertices reversed."""
    _check_order(n)
    return from_dominance(2 * n + 1, _u_arc)


def v_family(n: int) -> Tournament:
    _check_order(n)
    return from_dominance(2 * n + 1, lambda i, j: _v_arc(i, j, 2 * n))


def check_params(n: int, k: int):
    if k is None or n < 3 or not 1 <= k <= n - 2:
        raise BadParams(f"need n >= 3 and 1 <= k <= n-2, got n={n}, k={k}")


def _split(n: int, k: int, inside, outside, cross):
    """Assemble a tournament around ``a = 2k+1``.

    ``inside(i, j)`` / ``outside(i, j)`` give arcs within each side (labels
    are global) and ``cross(x, y)`` decides ``x -> y`` for ``x`` on the
    out-side and ``y`` on the in-side; otherwise ``y -> x``.
    """
    check_params(n, k)
    a = 2 * k + 1

    def arc(i, j):
        if i == a:
            return j > a
        if j == a:
            return i < a
        if i < a and j < a:
            return inside(i, j)
        if i > a and j > a:
            return outside(i, j)
        if i > a:
            return cross(i, j)
        return not cross(j, i)

    return from_dominance(2 * n + 1, arc)


def _both_even(x, y):
    return x % 2 == 0 and y % 2 == 0


def _chain_arc(i, j):
    return i < j


def e_family(n: int, k: int) -> Tournament:
    return _split(n, k, _chain_arc, _chain_arc, _both_even)


def f_family(n: int, k: int) -> Tournament:
    return _split(n, k, _u_arc, _chain_arc, _both_even)


def _v_outside(n: int):
    # copy of V_{2n-2k-1}: chain 2k+2 < ... < 2n-1 with special vertex 2n; the
    # chain starts at an even label, so ``2n`` dominates the even labels
    return lambda i, j: _v_arc(i, j, 2 * n)


def g_family(n: int, k: int) -> Tournament:
    return _split(n, k, _u_arc, _v_outside(n), lambda x, y: x == 2 * n and y % 2 == 0)


def h_family(n: int, k: int) -> Tournament:
    return _split(
        n, k,
        lambda i, j: _v_arc(i, j, 2 * k),
        _v_outside(n),
        lambda x, y: x == 2 * n and y == 2 * k,
    )


def dual_isomorphism(family: str, n: int, k: int) -> tuple[int, ...]:
    """Permutation carrying ``dual(X(n, k))`` onto ``X(n, n-k-1)`` for X in E, H."""
    check_params(n, k)
    if family == "E":
        return tuple(2 * n - q for q in range(2 * n + 1))
    if family == "H":
        sigma = [2 * n - q - 1 for q in range(2 * n + 1)]
        sigma[2 * n] = 2 * (n - k - 1)
        sigma[2 * k] = 2 * n
        sigma[2 * k + 1] = 2 * (n - k - 1) + 1
        return tuple(sigma)
    raise BadParams(f"explicit dual isomorphism only for E and H, not {family!r}")


@dataclass(frozen=True)
class FamilySpec:
    """A family tag with its order parameter ``n`` and, for E..H, offset ``k``.

    For ``L`` the parameter ``n`` is the chain length; for every other tag
    the order is ``2n+1``.
    """

    tag: str
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise BadParams(f"unknown family {self.tag!r}; expected one of {FAMILY_TAGS}")
        if self.tag in ("L", "T", "U", "V"):
            if self.k is not None:
                raise BadParams(f"family {self.tag} takes no k")
            if self.n < 1:
                raise BadParams(f"n must be >= 1, got {self.n}")
        else:
            if self.k is None:
                raise BadParams(f"family {self.tag} needs k")
            check_params(self.n, self.k)

    @property
    def order(self) -> int:
        return self.n if self.tag == "L" else 2 * self.n + 1

    @property
    def label(self) -> str:
        if self.tag == "L":
            return f"L_{self.n}"
        base = self.tag.replace("dual", "")
        name = f"{base}_{self.order}" if self.k is None else f"{base}_{self.order}^{2 * self.k + 1}"
        return name + ("*" if self.tag.endswith("dual") else "")

    def build(self) -> Tournament:
        return build(self.tag, self.n, self.k)


_BUILDERS = {"E": e_family, "F": f_family, "G": g_family, "H": h_family}


def build(tag: str, n: int, k: int | None = None) -> Tournament:
    if tag == "L":
        return chain(n)
    if tag in ("T", "U", "V"):
        return {"T": t_family, "U": u_family, "V": v_family}[tag](n)
    if tag in ("Fdual", "Gdual"):
        return dual(_BUILDERS[tag[0]](n, k))
    if tag in _BUILDERS:
        return _BUILDERS[tag](n, k)
    raise BadParams(f"unknown family {tag!r}")


def minus1_specs(n: int) -> list[FamilySpec]:
    """The ``6(n-2)`` specs, ordered by ``k`` then ``E, F, F*, G, G*, H``."""
    check_params(n, 1)
    return [FamilySpec(tag, n, k) for k in range(1, n - 1) for tag in MINUS1_ORDER]


def all_minus1_members(n: int) -> list[Tournament]:
    return [spec.build() for spec in minus1_specs(n)]


def critical_members(n: int) -> list[Tournament]:
    return [t_family(n), u_family(n), v_family(n)]
