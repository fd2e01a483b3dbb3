"""Graded tensor products of truncation modules over a strand algebra.

M tensor_A N is presented degreewise as the plain tensor product of
graded pieces modulo the span of m.g (x) n - m (x) g.n for g running
over the generators of A.  Generators suffice: the relation for a
product factors as rel(ab; m, n) = rel(b; m.a, n) + rel(a; m, b.n), so
the span over generators already contains the relation for every
element of the subalgebra they generate.

Module adapters wrap either a free strand algebra or a cyclotomic
quotient, with the subalgebra acting through an embedding that adds one
untouched strand (at the end or, shifted, at the front).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycAlgebra
from .klr import BasisMonomial, basis_monomials, get_engine, seqs_of
from .laurent import LaurentPoly
from .linalg import SubspaceBasis
from .perms import apply_word

__all__ = [
    "FreeColumnModule",
    "FreeRowModule",
    "CycColumnModule",
    "CycRowModule",
    "algebra_gens",
    "tensor_dim",
    "tensor_dim_poly",
]


def left_seq(m: BasisMonomial):
    return apply_word(m.word, m.seq) if m.word else m.seq


def algebra_gens(datum, beta, qspec=None):
    """Generators of the strand algebra R(beta) as (element, degree)
    pairs: all idempotents and their dot and crossing cuts.  The same
    list presents a cyclotomic quotient, whose actions reduce anyway."""
    n = sum(beta)
    gens = []
    for nu in seqs_of(beta):
        zero = (0,) * n
        gens.append(({BasisMonomial((), zero, nu): Fraction(1)}, 0))
        for p in range(n):
            exps = tuple(1 if t == p else 0 for t in range(n))
            gens.append((
                {BasisMonomial((), exps, nu): Fraction(1)},
                datum.form(nu[p], nu[p]),
            ))
        for l in range(n - 1):
            gens.append((
                {BasisMonomial((l,), zero, nu): Fraction(1)},
                -datum.form(nu[l], nu[l + 1]),
            ))
    return gens


class FreeColumnModule:
    """M = R(beta) e(S) as a right module over an embedded subalgebra;
    emb maps subalgebra elements into the ambient strand count."""

    def __init__(self, datum, beta, cols, emb, qspec=None):
        self.datum = datum
        self.beta = tuple(beta)
        self.cols = set(cols)
        self.emb = emb
        self.engine = get_engine(datum, sum(beta), qspec)
        self._basis = {}

    def min_degree(self):
        from .bimodules import min_tau_degree

        return min_tau_degree(self.datum, self.beta)

    def basis(self, d):
        hit = self._basis.get(d)
        if hit is None:
            hit = [m for m in basis_monomials(self.datum, self.beta, d)
                   if m.seq in self.cols]
            self._basis[d] = hit
        return hit

    def act(self, m, gen_elt):
        return self.engine.multiply({m: Fraction(1)}, self.emb(gen_elt))


class FreeRowModule:
    """N = e(S) R(beta) as a left module over an embedded subalgebra."""

    def __init__(self, datum, beta, rows, emb, qspec=None):
        self.datum = datum
        self.beta = tuple(beta)
        self.rows = set(rows)
        self.emb = emb
        self.engine = get_engine(datum, sum(beta), qspec)
        self._basis = {}

    def min_degree(self):
        from .bimodules import min_tau_degree

        return min_tau_degree(self.datum, self.beta)

    def basis(self, d):
        hit = self._basis.get(d)
        if hit is None:
            hit = [m for m in basis_monomials(self.datum, self.beta, d)
                   if left_seq(m) in self.rows]
            self._basis[d] = hit
        return hit

    def act(self, m, gen_elt):
        return self.engine.multiply(self.emb(gen_elt), {m: Fraction(1)})


class CycColumnModule:
    """M = R^Lambda(beta) e(S) as a right module over an embedded
    cyclotomic subalgebra."""

    def __init__(self, alg: CycAlgebra, cols, emb):
        self.alg = alg
        self.cols = set(cols)
        self.emb = emb
        self._basis = {}

    def min_degree(self):
        return self.alg.dmin if not self.alg.is_zero() else 0

    def basis(self, d):
        hit = self._basis.get(d)
        if hit is None:
            if self.alg.is_zero() or not (self.alg.dmin <= d <= self.alg.dmax):
                hit = []
            else:
                hit = [m for m in self.alg.quotient_basis(d)
                       if m.seq in self.cols]
            self._basis[d] = hit
        return hit

    def act(self, m, gen_elt):
        prod = self.alg.engine.multiply({m: Fraction(1)}, self.emb(gen_elt))
        return self.alg.nf(prod)


class CycRowModule:
    """N = e(S) R^Lambda(beta) as a left module over an embedded
    cyclotomic subalgebra."""

    def __init__(self, alg: CycAlgebra, rows, emb):
        self.alg = alg
        self.rows = set(rows)
        self.emb = emb
        self._basis = {}

    def min_degree(self):
        return self.alg.dmin if not self.alg.is_zero() else 0

    def basis(self, d):
        hit = self._basis.get(d)
        if hit is None:
            if self.alg.is_zero() or not (self.alg.dmin <= d <= self.alg.dmax):
                hit = []
            else:
                hit = [m for m in self.alg.quotient_basis(d)
                       if left_seq(m) in self.rows]
            self._basis[d] = hit
        return hit

    def act(self, m, gen_elt):
        prod = self.alg.engine.multiply(self.emb(gen_elt), {m: Fraction(1)})
        return self.alg.nf(prod)


def _pair_key(key):
    return (key[0], BasisMonomial.sort_key(key[1]), BasisMonomial.sort_key(key[2]))


def tensor_dim(M, N, gens, d, dmax_m=None) -> int:
    """Dimension of (M tensor_A N) in degree d, with A presented by the
    (element, degree) list gens.

    dmax_m caps the M-degree scan for finite M (None scans by N's lower
    bound alone).
    """
    nmin = N.min_degree()
    mmin = M.min_degree()
    top = d - nmin if dmax_m is None else min(d - nmin, dmax_m)
    pairs = []
    for d1 in range(mmin, top + 1):
        mb = M.basis(d1)
        if not mb:
            continue
        nb = N.basis(d - d1)
        for m in mb:
            for nk in nb:
                pairs.append((d1, m, nk))
    if not pairs:
        return 0
    sb = SubspaceBasis(keyfunc=_pair_key)
    rank = 0
    for (gelt, gdeg) in gens:
        # relations can involve m above the pair window when the
        # generator has negative degree; the image still lands inside
        top_g = d - nmin - gdeg
        if dmax_m is not None:
            top_g = min(top_g, dmax_m)
        for d1 in range(mmin, top_g + 1):
            mb = M.basis(d1)
            if not mb:
                continue
            nb = N.basis(d - d1 - gdeg)
            if not nb:
                continue
            for m in mb:
                mg = M.act(m, gelt)
                for nk in nb:
                    gn = N.act(nk, gelt)
                    row = {}
                    for mm, c in mg.items():
                        key = (d1 + gdeg, mm, nk)
                        row[key] = row.get(key, 0) + c
                    for nn, c in gn.items():
                        key = (d1, m, nn)
                        row[key] = row.get(key, 0) - c
                    row = {k: c for k, c in row.items() if c}
                    if row and sb.add(row):
                        rank += 1
    return len(pairs) - rank


def tensor_dim_poly(M, N, gens, window, dmax_m=None) -> LaurentPoly:
    coeffs = {}
    for d in range(window[0], window[1] + 1):
        k = tensor_dim(M, N, gens, d, dmax_m=dmax_m)
        if k:
            coeffs[d] = k
    return LaurentPoly(coeffs)
