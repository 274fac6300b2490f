"""The affine nilCoxeter algebra and its commutative subalgebra.

Elements are finitely supported rational combinations of basis elements A_w
indexed by affine permutations, with A_v A_w = A_{vw} when lengths add and 0
otherwise.  The subalgebra spanned by the cyclically-decreasing sums h_i is
commutative; its distinguished basis of noncommutative k-Schur elements is
pinned down by having a single 0-Grassmannian term.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .afperm import (
    AffinePermutation,
    cyclically_decreasing,
    grassmannian_factorize,
    grassmannian_to_partition,
    identity,
    partition_to_grassmannian,
)
from .errors import InternalInconsistencyError, ModulusMismatchError
from .linalg import solve_square
from .partitions import partitions

__all__ = [
    "NilCoxElement",
    "basis_element",
    "unit",
    "zero",
    "multiply",
    "h_element",
    "h_product",
    "coeff_of_identity",
    "noncommutative_k_schur",
    "k_schur_h_coeffs",
    "tensor_decompose",
]


class NilCoxElement:
    """Finitely supported map AffinePermutation -> Fraction; no zero terms."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for w, c in terms.items():
                c = Fraction(c)
                if c != 0:
                    clean[w] = c
        self.terms = clean

    def __repr__(self):
        if not self.terms:
            return f"NilCoxElement({self.n}, 0)"
        bits = [f"{c}*A{list(w.window)}" for w, c in self.items()]
        return " + ".join(bits)

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (t[0].length, t[0].window))

    def __eq__(self, other):
        return (
            isinstance(other, NilCoxElement)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, Fraction(0)) + c
        return NilCoxElement(self.n, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NilCoxElement(self.n, {w: -c for w, c in self.terms.items()})

    def scale(self, c) -> "NilCoxElement":
        c = Fraction(c)
        return NilCoxElement(self.n, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NilCoxElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def coeff(self, w: AffinePermutation) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def degrees(self):
        return sorted({w.length for w in self.terms})

    def _check(self, other):
        if self.n != other.n:
            raise ModulusMismatchError(f"modulus mismatch: {self.n} vs {other.n}")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"word": list(w.reduced_word()), "coeff": str(c)} for w, c in self.items()
            ],
        }

    @staticmethod
    def from_json(data: dict) -> "NilCoxElement":
        from .afperm import from_reduced_word

        n = int(data["n"])
        terms = {}
        for t in data["terms"]:
            w = from_reduced_word(n, t["word"])
            terms[w] = terms.get(w, Fraction(0)) + Fraction(t["coeff"])
        return NilCoxElement(n, terms)


def zero(n: int) -> NilCoxElement:
    return NilCoxElement(n)


def unit(n: int) -> NilCoxElement:
    return NilCoxElement(n, {identity(n): Fraction(1)})


def basis_element(w: AffinePermutation) -> NilCoxElement:
    return NilCoxElement(w.n, {w: Fraction(1)})


def multiply(x: NilCoxElement, y: NilCoxElement) -> NilCoxElement:
    """Bilinear extension of A_v A_w = A_{vw} if lengths add, else 0."""
    x._check(y)
    out: dict[AffinePermutation, Fraction] = {}
    for v, cv in x.terms.items():
        for w, cw in y.terms.items():
            vw = v * w
            if vw.length == v.length + w.length:
                out[vw] = out.get(vw, Fraction(0)) + cv * cw
    return NilCoxElement(x.n, out)


@lru_cache(maxsize=None)
def h_element(n: int, i: int) -> NilCoxElement:
    """h_i = sum of A_{w_J} over i-subsets J of the residues; h_0 = 1."""
    if i >= n:
        raise ValueError(f"h_i needs i < n, got i={i}, n={n}")
    if i < 0:
        return zero(n)
    if i == 0:
        return unit(n)
    residues = list(range(n))
    terms = {}

    def subsets(start, chosen):
        if len(chosen) == i:
            terms[cyclically_decreasing(n, chosen)] = Fraction(1)
            return
        for j in range(start, n):
            subsets(j + 1, chosen + [residues[j]])

    subsets(0, [])
    return NilCoxElement(n, terms)


@lru_cache(maxsize=None)
def h_product(n: int, mu: tuple) -> NilCoxElement:
    """h_mu = h_{mu_1} ... h_{mu_l} (the factors commute)."""
    if not mu:
        return unit(n)
    return h_product(n, mu[:-1]) * h_element(n, mu[-1])


def coeff_of_identity(x: NilCoxElement) -> Fraction:
    return x.coeff(identity(x.n))


@lru_cache(maxsize=None)
def k_schur_h_coeffs(n: int, lam: tuple) -> dict:
    """Coefficients c_mu with s^(k)_lam = sum_mu c_mu h_mu.

    Determined by the linear system forcing the 0-Grassmannian support of the
    sum to be exactly A_{w_lam} with coefficient 1.  The full system is
    solved; solvability is guaranteed by the basis property, and failure
    raises rather than guessing a triangular order.
    """
    k = n - 1
    if any(p > k for p in lam):
        raise ValueError(f"partition {lam} is not {k}-bounded")
    d = sum(lam)
    mus = list(partitions(d, k))
    grs = [partition_to_grassmannian(n, nu) for nu in mus]
    mat = [[h_product(n, mu).coeff(g) for mu in mus] for g in grs]
    rhs = [Fraction(int(nu == lam)) for nu in mus]
    try:
        coeffs = solve_square(mat, rhs)
    except InternalInconsistencyError as exc:  # pragma: no cover
        raise InternalInconsistencyError(
            f"k-Schur elimination singular at n={n}, lam={lam}"
        ) from exc
    return {mu: c for mu, c in zip(mus, coeffs) if c != 0}


def noncommutative_k_schur(n: int, lam) -> NilCoxElement:
    """The element of the h-subalgebra whose sole 0-Grassmannian term is A_{w_lam}."""
    lam = tuple(lam)
    out = zero(n)
    for mu, c in k_schur_h_coeffs(n, lam).items():
        out = out + h_product(n, mu).scale(c)
    grass = {w: c for w, c in out.terms.items() if w.is_zero_grassmannian()}
    if grass != {partition_to_grassmannian(n, lam): Fraction(1)}:  # pragma: no cover
        raise InternalInconsistencyError(f"k-Schur uniqueness failed for {lam}")
    return out


def tensor_decompose(x: NilCoxElement) -> dict:
    """Coefficients of x in the basis s^(k)_{w0} * A_{w1}.

    Peels terms with the longest Grassmannian part first; within one pass the
    subtraction only disturbs terms with strictly shorter Grassmannian part.
    """
    n = x.n
    work = x
    out: dict[tuple[AffinePermutation, AffinePermutation], Fraction] = {}
    while not work.is_zero():
        w = max(work.terms, key=lambda w: (grassmannian_factorize(w)[0].length, w.window))
        c = work.terms[w]
        w0, w1 = grassmannian_factorize(w)
        out[(w0, w1)] = out.get((w0, w1), Fraction(0)) + c
        lam = grassmannian_to_partition(w0)
        basis_vec = noncommutative_k_schur(n, lam) * basis_element(w1)
        work = work - basis_vec.scale(c)
    return {key: c for key, c in out.items() if c != 0}


def tensor_reconstruct(n: int, decomposition: dict) -> NilCoxElement:
    """Inverse of :func:`tensor_decompose`."""
    out = zero(n)
    for (w0, w1), c in decomposition.items():
        lam = grassmannian_to_partition(w0)
        out = out + (noncommutative_k_schur(n, lam) * basis_element(w1)).scale(c)
    return out
