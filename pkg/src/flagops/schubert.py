"""The ring R_n and affine Schubert calculus inside it.

R_n = Q[p_1..p_{n-1}, x_0..x_{n-1}] / <e_j(x), j > 0>.  Elements are stored
in normal form: the symmetric part as a k-bounded partition of power-sum
subscripts, the x part reduced to the staircase basis (exponent of x_i at
most n-1-i) by cached per-degree row reduction against the elementary
symmetric ideal.

On top of the ring: the Weyl action, divided differences, affine Schubert
polynomials via Grassmannian lifts, per-degree Schubert bases with exact
expansion, structure constants, cap operators on the nilCoxeter algebra
(computed independently through the coproduct), and the alternating
Chevalley-type classes attached to power sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .afperm import (
    AffinePermutation,
    elements_of_length,
    grassmannian_lift,
    grassmannian_to_partition,
    rho_element,
)
from .errors import InternalInconsistencyError, ModulusMismatchError
from .linalg import invert, rref
from .nilcox import NilCoxElement
from .partitions import as_partition, partitions
from .symfunc import SymFunc, affine_schur_p

__all__ = [
    "RnElement",
    "unit",
    "p_gen",
    "x_gen",
    "weyl_action",
    "divided_difference",
    "affine_schubert",
    "SchubertBasis",
    "schubert_basis",
    "structure_constants",
    "cap_apply",
    "xi_class",
    "symmetric_part",
    "rn_dimension",
]


# ---------------------------------------------------------------------------
# coinvariant normal form


def _monomials(n: int, d: int):
    """Exponent tuples of total degree d in n variables, lex order."""
    if n == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in _monomials(n - 1, d - first):
            out.append((first,) + rest)
    return out


def _is_staircase(expo) -> bool:
    n = len(expo)
    return all(expo[i] <= n - 1 - i for i in range(n))


def _elementary(n: int, j: int) -> dict:
    out = {}
    for combo in itertools.combinations(range(n), j):
        e = [0] * n
        for i in combo:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return out


@lru_cache(maxsize=None)
def _staircase_monomials(n: int, d: int) -> tuple:
    return tuple(m for m in _monomials(n, d) if _is_staircase(m))


@lru_cache(maxsize=None)
def _reduction_table(n: int, d: int) -> dict:
    """Map each degree-d x-monomial to its staircase normal form.

    Row-reduces the degree-d slice of <e_1, ..., e_n> with non-staircase
    monomials ordered first, so the pivots consume exactly the
    non-staircase monomials and the staircase ones survive as free columns.
    """
    mons = _monomials(n, d)
    non_stair = [m for m in mons if not _is_staircase(m)]
    stair = [m for m in mons if _is_staircase(m)]
    cols = non_stair + stair
    col_idx = {m: i for i, m in enumerate(cols)}
    rows = []
    for j in range(1, n + 1):
        if j > d:
            continue
        ej = _elementary(n, j)
        for alpha in _monomials(n, d - j):
            row = [Fraction(0)] * len(cols)
            for beta, c in ej.items():
                mono = tuple(a + b for a, b in zip(alpha, beta))
                row[col_idx[mono]] += c
            rows.append(row)
    red, pivots = rref(rows)
    if pivots != list(range(len(non_stair))):
        raise InternalInconsistencyError(
            f"coinvariant reduction pivots are not the non-staircase monomials (n={n}, d={d})"
        )
    table = {m: {m: Fraction(1)} for m in stair}
    for r, c in enumerate(pivots):
        expansion = {}
        for jcol in range(len(non_stair), len(cols)):
            v = red[r][jcol]
            if v != 0:
                expansion[cols[jcol]] = -v
        table[non_stair[c]] = expansion
    return table


def reduce_x_monomial(n: int, expo) -> dict:
    """Staircase expansion of one x-monomial."""
    expo = tuple(int(e) for e in expo)
    d = sum(expo)
    if d == 0:
        return {expo: Fraction(1)}
    return _reduction_table(n, d)[expo]


# ---------------------------------------------------------------------------
# elements


class RnElement:
    """Normal-form element of R_n; immutable once built."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None, _normalized=False):
        self.n = n
        if not terms:
            self.terms = {}
            return
        if _normalized:
            self.terms = {key: c for key, c in terms.items() if c != 0}
            return
        k = n - 1
        out: dict[tuple, Fraction] = {}
        for (p_part, x_part), c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            p_part = as_partition(p_part)
            if any(p > k for p in p_part):
                raise ValueError(f"power-sum part {p_part} is not {k}-bounded")
            for stair, c2 in reduce_x_monomial(n, x_part).items():
                key = (p_part, stair)
                out[key] = out.get(key, Fraction(0)) + c * c2
        self.terms = {key: c for key, c in out.items() if c != 0}

    def __repr__(self):
        if not self.terms:
            return f"RnElement({self.n}, 0)"
        bits = []
        for (p_part, x_part), c in self.items():
            factors = [f"p{list(p_part)}" if p_part else ""]
            factors += [f"x{i}^{e}" for i, e in enumerate(x_part) if e]
            body = "*".join(f for f in factors if f) or "1"
            bits.append(f"({c})*{body}")
        return " + ".join(bits)

    def items(self):
        return sorted(
            self.terms.items(),
            key=lambda t: (sum(t[0][0]) + sum(t[0][1]), tuple(-p for p in t[0][0]), t[0][1]),
        )

    def __eq__(self, other):
        return (
            isinstance(other, RnElement) and self.n == other.n and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        return sorted({sum(p) + sum(x) for p, x in self.terms})

    def homogeneous(self, d: int) -> "RnElement":
        return RnElement(
            self.n,
            {key: c for key, c in self.terms.items() if sum(key[0]) + sum(key[1]) == d},
            _normalized=True,
        )

    def _check(self, other):
        if self.n != other.n:
            raise ModulusMismatchError(f"modulus mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return RnElement(self.n, out, _normalized=True)

    def __neg__(self):
        return RnElement(self.n, {k: -c for k, c in self.terms.items()}, _normalized=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RnElement":
        c = Fraction(c)
        return RnElement(self.n, {k: c * v for k, v in self.terms.items()}, _normalized=True)

    def __mul__(self, other):
        if not isinstance(other, RnElement):
            return self.scale(other)
        self._check(other)
        out: dict[tuple, Fraction] = {}
        for (p1, x1), c1 in self.terms.items():
            for (p2, x2), c2 in other.terms.items():
                key = (as_partition(p1 + p2), tuple(a + b for a, b in zip(x1, x2)))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return RnElement(self.n, out)  # normalization reduces the x parts

    def __rmul__(self, other):
        return self.scale(other)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"p": list(p), "x": list(x), "coeff": str(c)} for (p, x), c in self.items()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "RnElement":
        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            key = (tuple(t["p"]), tuple(t["x"]))
            terms[key] = terms.get(key, Fraction(0)) + Fraction(t["coeff"])
        return RnElement(n, terms)


def unit(n: int) -> RnElement:
    return RnElement(n, {((), (0,) * n): Fraction(1)}, _normalized=True)


def p_gen(n: int, m: int) -> RnElement:
    if not 1 <= m <= n - 1:
        raise ValueError(f"p_m needs 1 <= m <= n-1, got {m}")
    return RnElement(n, {((m,), (0,) * n): Fraction(1)}, _normalized=True)


def x_gen(n: int, i: int) -> RnElement:
    e = [0] * n
    e[i % n] = 1
    return RnElement(n, {((), tuple(e)): Fraction(1)})


def from_symfunc_p(n: int, f: SymFunc) -> RnElement:
    """Embed a p-basis element of the k-quotient as the symmetric part of R_n."""
    if f.basis != "p":
        raise ValueError("expected a p-basis SymFunc")
    zero_x = (0,) * n
    return RnElement(n, {(lam, zero_x): c for lam, c in f.terms.items()})


def symmetric_part(f: RnElement) -> SymFunc:
    """Projection killing the x variables, landing in the p-quotient."""
    out = {}
    zero_x = (0,) * f.n
    for (p_part, x_part), c in f.terms.items():
        if x_part == zero_x:
            out[p_part] = c
    return SymFunc("p", out, f.n - 1)


# ---------------------------------------------------------------------------
# Weyl action and divided differences


def _term_factors(n, p_part, x_part):
    for m in p_part:
        yield ("p", m)
    for i, e in enumerate(x_part):
        if e:
            yield ("x", i, e)


def _x_power(n, i, e):
    expo = [0] * n
    expo[i] = e
    return RnElement(n, {((), tuple(expo)): Fraction(1)})


def _s_factor(n, i, factor) -> RnElement:
    if factor[0] == "p":
        m = factor[1]
        if i == 0:
            return p_gen(n, m) + _x_power(n, 1 % n, m) - _x_power(n, 0, m)
        return p_gen(n, m)
    _, j, e = factor
    return _x_power(n, (j + 1) % n if j == i else (j - 1) % n if j == (i + 1) % n else j, e)


def _d_factor(n, i, factor) -> RnElement:
    """Divided difference of a single generator power."""
    if factor[0] == "p":
        m = factor[1]
        if i != 0:
            return RnElement(n)
        out = RnElement(n)
        for t in range(m):
            out = out + _x_power(n, 1 % n, m - 1 - t) * _x_power(n, 0, t)
        return out
    _, j, e = factor
    ip1 = (i + 1) % n
    if j == i:
        out = RnElement(n)
        for t in range(e):
            out = out + _x_power(n, ip1, t) * _x_power(n, i, e - 1 - t)
        return out
    if j == ip1:
        out = RnElement(n)
        for t in range(e):
            out = out + _x_power(n, i, t) * _x_power(n, ip1, e - 1 - t)
        return -out
    return RnElement(n)


def weyl_action(i: int, f: RnElement) -> RnElement:
    """The ring automorphism s_i (i mod n)."""
    n = f.n
    i = i % n
    out = RnElement(n)
    for (p_part, x_part), c in f.terms.items():
        term = unit(n).scale(c)
        for factor in _term_factors(n, p_part, x_part):
            term = term * _s_factor(n, i, factor)
        out = out + term
    return out


def divided_difference(i: int, f: RnElement) -> RnElement:
    """The operator (1 - s_i)/(x_i - x_{i+1}) via the twisted Leibniz rule."""
    n = f.n
    i = i % n
    out = RnElement(n)
    for (p_part, x_part), c in f.terms.items():
        factors = list(_term_factors(n, p_part, x_part))
        prefix = unit(n).scale(c)  # s_i of everything to the left
        for b, factor in enumerate(factors):
            d = _d_factor(n, i, factor)
            if not d.is_zero():
                tail = unit(n)
                for g in factors[b + 1 :]:
                    tail = tail * _factor_element(n, g)
                out = out + prefix * d * tail
            prefix = prefix * _s_factor(n, i, factor)
    return out


def _factor_element(n, factor) -> RnElement:
    if factor[0] == "p":
        return p_gen(n, factor[1])
    _, j, e = factor
    return _x_power(n, j, e)


# ---------------------------------------------------------------------------
# affine Schubert polynomials


@lru_cache(maxsize=None)
def affine_schubert(w: AffinePermutation) -> RnElement:
    """The degree-l(w) representative of the Schubert class of w.

    Lift w to a 0-Grassmannian element wv, embed its dual Schur function as
    the symmetric part, and strip the letters of v with divided differences.
    """
    n = w.n
    if w.is_identity():
        return unit(n)
    v = grassmannian_lift(w)
    g = w * v
    lam = grassmannian_to_partition(g)
    f = from_symfunc_p(n, affine_schur_p(n, lam))
    for i in reversed(v.reduced_word()):
        f = divided_difference(i, f)
        if f.is_zero():  # pragma: no cover
            raise InternalInconsistencyError(f"divided-difference strip died for {w!r}")
    if f.degrees() != [w.length]:  # pragma: no cover
        raise InternalInconsistencyError(f"Schubert polynomial of {w!r} has wrong degree")
    return f


@dataclass(frozen=True)
class SchubertBasis:
    """All Schubert polynomials of one degree with exact expansion support."""

    n: int
    degree: int
    elements: tuple  # AffinePermutation, canonical order
    monomials: tuple  # (p_part, x_part) keys spanning degree d
    matrix: tuple  # rows parallel to elements
    pivot_columns: tuple
    pivot_inverse: tuple

    def expand(self, f: RnElement) -> dict:
        """Coefficients of f in this basis; f must be homogeneous of the degree."""
        if f.is_zero():
            return {}
        if f.degrees() != [self.degree]:
            raise ValueError(f"element is not homogeneous of degree {self.degree}")
        col_idx = {m: i for i, m in enumerate(self.monomials)}
        vec = [Fraction(0)] * len(self.monomials)
        for key, c in f.terms.items():
            vec[col_idx[key]] = c
        sub = [vec[c] for c in self.pivot_columns]
        coeffs = [
            sum((sub[i] * self.pivot_inverse[i][j] for i in range(len(sub))), Fraction(0))
            for j in range(len(sub))
        ]
        # confirm the expansion reproduces f on all coordinates
        for jcol in range(len(self.monomials)):
            total = sum(
                (coeffs[i] * self.matrix[i][jcol] for i in range(len(coeffs))), Fraction(0)
            )
            if total != vec[jcol]:
                raise InternalInconsistencyError("element is outside the Schubert span")
        return {
            self.elements[i]: coeffs[i] for i in range(len(coeffs)) if coeffs[i] != 0
        }


def rn_dimension(n: int, d: int) -> int:
    """Graded dimension of R_n at degree d."""
    total = 0
    for a in range(d + 1):
        total += len(partitions(a, n - 1)) * len(_staircase_monomials(n, d - a))
    return total


@lru_cache(maxsize=None)
def schubert_basis(n: int, d: int) -> SchubertBasis:
    """Schubert polynomials of degree d with the expansion machinery.

    Asserts linear independence and that the count matches both the graded
    dimension of R_n and the number of length-d group elements.
    """
    elements = elements_of_length(n, d)
    dim = rn_dimension(n, d)
    if len(elements) != dim:
        raise InternalInconsistencyError(
            f"#{{l(w)={d}}} = {len(elements)} but dim R_{n}[{d}] = {dim}"
        )
    monomials = []
    for a in range(d + 1):
        for lam in partitions(a, n - 1):
            for stair in _staircase_monomials(n, d - a):
                monomials.append((lam, stair))
    col_idx = {m: i for i, m in enumerate(monomials)}
    matrix = []
    for w in elements:
        f = affine_schubert(w)
        row = [Fraction(0)] * len(monomials)
        for key, c in f.terms.items():
            row[col_idx[key]] = c
        matrix.append(row)
    red, pivots = rref(matrix)
    if len(pivots) != len(elements):
        raise InternalInconsistencyError(
            f"Schubert polynomials of degree {d} are linearly dependent (n={n})"
        )
    sub = [[matrix[i][c] for c in pivots] for i in range(len(elements))]
    inv = invert(sub)
    return SchubertBasis(
        n,
        d,
        tuple(elements),
        tuple(monomials),
        tuple(tuple(r) for r in matrix),
        tuple(pivots),
        tuple(tuple(r) for r in inv),
    )


def structure_constants(u: AffinePermutation, v: AffinePermutation) -> dict:
    """Expansion of S_u * S_v in the Schubert basis of degree l(u) + l(v)."""
    if u.n != v.n:
        raise ModulusMismatchError("modulus mismatch")
    d = u.length + v.length
    basis = schubert_basis(u.n, d)
    return basis.expand(affine_schubert(u) * affine_schubert(v))


# ---------------------------------------------------------------------------
# cap operators through the cohomology structure constants


@lru_cache(maxsize=None)
def _cap_row(u: AffinePermutation, w: AffinePermutation) -> tuple:
    """Pairs (v, p^w_{u,v}) over v of length l(w) - l(u).

    p^w_{u,v} is the coefficient of the class of w in the product of the
    classes of u and v, read off from the exact Schubert expansion in R_n.
    """
    d = w.length - u.length
    if d < 0:
        return ()
    out = []
    for v in elements_of_length(w.n, d):
        c = structure_constants(u, v).get(w, Fraction(0))
        if c != 0:
            out.append((v, c))
    return tuple(out)


def cap_apply(u: AffinePermutation, x: NilCoxElement) -> NilCoxElement:
    """Cap operator D_u: A_w -> sum_v p^w_{u,v} A_v."""
    if u.n != x.n:
        raise ModulusMismatchError("modulus mismatch")
    out: dict[AffinePermutation, Fraction] = {}
    for w, c in x.terms.items():
        for v, mult in _cap_row(u, w):
            out[v] = out.get(v, Fraction(0)) + c * mult
    return NilCoxElement(x.n, out)


# ---------------------------------------------------------------------------
# alternating classes for power sums


def xi_class(n: int, m: int):
    """The alternating combination of rho classes attached to p_m.

    Returns (signed list of (sign, rho_{i,m}), R_n representative, symmetric
    projection as a p-basis SymFunc).
    """
    if not 1 <= m < n:
        raise ValueError(f"need 1 <= m < n, got m={m}")
    signed = []
    rep = RnElement(n)
    for i in range(m):
        rho = rho_element(n, i, m)
        sign = (-1) ** i
        signed.append((sign, rho))
        rep = rep + affine_schubert(rho).scale(sign)
    return signed, rep, symmetric_part(rep)
