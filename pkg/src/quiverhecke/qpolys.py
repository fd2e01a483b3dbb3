"""Coefficient polynomials Q_ij(u, v) governing the quadratic and braid
relations between crossings of differently colored strands.

Each unordered pair {i, j} of distinct labels carries a two-variable
polynomial Q_ij with Q_ij(u, v) = Q_ji(v, u) and Q_ii = 0.  Terms are
constrained in degree: assigning u degree (alpha_i | alpha_i) and v
degree (alpha_j | alpha_j), every term of Q_ij is homogeneous of degree
-2 (alpha_i | alpha_j), and the two extreme coefficients (of u^{-a_ij}
and of v^{-a_ji}) must be nonzero.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import CartanDatum

__all__ = ["QSpec"]


class QSpec:
    """Immutable table of Q_ij coefficients over a fixed Cartan datum."""

    __slots__ = ("datum", "_table", "_key")

    def __init__(self, datum: CartanDatum, table):
        """`table` maps ordered pairs (i, j) with i < j to a dict
        {(p, q): Fraction} of coefficients of u^p v^q in Q_ij."""
        self.datum = datum
        clean = {}
        n = datum.rank
        for i in range(n):
            for j in range(i + 1, n):
                raw = table.get((i, j), {})
                terms = {
                    (int(p), int(q)): Fraction(c)
                    for (p, q), c in raw.items()
                    if c
                }
                self._validate_pair(i, j, terms)
                clean[(i, j)] = terms
        self._table = clean
        self._key = tuple(
            (i, j, tuple(sorted(terms.items())))
            for (i, j), terms in sorted(clean.items())
        )

    def _validate_pair(self, i, j, terms):
        d = self.datum
        pmax = -d.a(i, j)
        qmax = -d.a(j, i)
        if not terms.get((pmax, 0)):
            raise ValueError(
                f"Q[{d.labels[i]},{d.labels[j]}] needs a nonzero u^{pmax} term"
            )
        if not terms.get((0, qmax)):
            raise ValueError(
                f"Q[{d.labels[i]},{d.labels[j]}] needs a nonzero v^{qmax} term"
            )
        want = -2 * d.form(i, j)
        for (p, q) in terms:
            if p < 0 or q < 0:
                raise ValueError("negative exponent in Q coefficient table")
            if d.form(i, i) * p + d.form(j, j) * q != want:
                raise ValueError(
                    f"inhomogeneous term u^{p} v^{q} in "
                    f"Q[{d.labels[i]},{d.labels[j]}]"
                )

    @classmethod
    def standard(cls, datum: CartanDatum) -> "QSpec":
        """Q_ij(u, v) = u^{-a_ij} + v^{-a_ji} for all i != j."""
        table = {}
        for i in range(datum.rank):
            for j in range(i + 1, datum.rank):
                terms = {}
                terms[(-datum.a(i, j), 0)] = Fraction(1)
                q = (0, -datum.a(j, i))
                terms[q] = terms.get(q, 0) + Fraction(1)
                table[(i, j)] = terms
        return cls(datum, table)

    def terms(self, i: int, j: int):
        """Q_ij(u, v) as a tuple of (p, q, coeff); empty when i == j."""
        if i == j:
            return ()
        if i < j:
            return tuple(
                (p, q, c) for (p, q), c in sorted(self._table[(i, j)].items())
            )
        return tuple(
            (q, p, c) for (p, q), c in sorted(self._table[(j, i)].items())
        )

    def unit_coeff(self, i: int, j: int) -> Fraction:
        """The coefficient of u^{-a_ij} in Q_ij (a unit by construction)."""
        if i == j:
            raise ValueError("Q_ii is zero")
        if i < j:
            return self._table[(i, j)][(-self.datum.a(i, j), 0)]
        return self._table[(j, i)][(0, -self.datum.a(i, j))]

    def __eq__(self, other):
        if not isinstance(other, QSpec):
            return NotImplemented
        return self.datum == other.datum and self._key == other._key

    def __hash__(self):
        return hash((self.datum, self._key))

    def describe(self) -> dict:
        """Label-keyed JSON-friendly dump, used by cache keys and reports."""
        out = {}
        labels = self.datum.labels
        for (i, j), terms in sorted(self._table.items()):
            out[f"{labels[i]},{labels[j]}"] = [
                [p, q, c.numerator, c.denominator]
                for (p, q), c in sorted(terms.items())
            ]
        return out
