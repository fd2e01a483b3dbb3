"""The quiver Hecke algebra R(n) on n strands and its basis arithmetic.

Elements are finite sums of basis monomials tau_w x^a e(nu): a strand
permutation w (stored as its lexicographically minimal reduced word),
a tuple of polynomial exponents, and a color sequence nu of label
indices.  Products are rewritten into this basis by a recursive engine
whose only real work is multiplying a basis monomial by one crossing
on the right; everything else (general products, the antiautomorphism
psi, intertwiners) reduces to that.

The rewriting recursion terminates because every correction term that
the quadratic or braid relation produces involves at least two fewer
crossings than the product it came from.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .cartan import CartanDatum
from .perms import (
    all_perms,
    apply_word,
    canonical_word,
    inversions,
    move_path,
    word_to_perm,
)
from .qpolys import QSpec

__all__ = [
    "BasisMonomial",
    "KLR",
    "KLRElement",
    "basis_monomials",
    "get_engine",
    "seqs_of",
    "weighted_comps",
]


class BasisMonomial(NamedTuple):
    """tau_w x^exps e(seq); `word` is the canonical reduced word of w."""

    word: tuple
    exps: tuple
    seq: tuple

    def sort_key(self):
        return (self.seq, len(self.word), self.word, self.exps)


def seqs_of(beta):
    """All color sequences with multiplicity vector beta, sorted.

    beta is a tuple of multiplicities per label index; sequences are
    tuples of label indices of length sum(beta).
    """
    pool = []
    for i, k in enumerate(beta):
        pool.extend([i] * k)
    if not pool:
        return ((),)
    out = set()

    def rec(prefix, remaining):
        if not remaining:
            out.add(tuple(prefix))
            return
        for i in sorted(set(remaining)):
            rest = list(remaining)
            rest.remove(i)
            rec(prefix + [i], rest)

    rec([], pool)
    return tuple(sorted(out))


def weighted_comps(weights, total):
    """Nonnegative integer tuples e with sum e_k * weights[k] == total."""
    out = []
    k = len(weights)

    def rec(pos, rem, acc):
        if pos == k:
            if rem == 0:
                out.append(tuple(acc))
            return
        w = weights[pos]
        top = rem // w
        for e in range(top + 1):
            acc.append(e)
            rec(pos + 1, rem - e * w, acc)
            acc.pop()

    if total >= 0:
        rec(0, total, [])
    return out


def basis_monomials(datum, beta, d):
    """All basis monomials of R(beta) of degree d, canonically ordered.

    The order is the monomial sort key: right sequence lexicographic,
    then word length, word, exponents.
    """
    n = sum(beta)
    out = []
    for seq in seqs_of(beta):
        weights = [datum.form(i, i) for i in seq]
        for w in all_perms(n):
            tdeg = 0
            for (a, b) in inversions(w):
                tdeg -= datum.form(seq[a], seq[b])
            word = canonical_word(w)
            for exps in weighted_comps(weights, d - tdeg):
                out.append(BasisMonomial(word, exps, seq))
    out.sort(key=BasisMonomial.sort_key)
    return out


def _swap(t, k):
    return t[:k] + (t[k + 1], t[k]) + t[k + 2 :]


def _add(acc, m, c):
    v = acc.get(m)
    v = c if v is None else v + c
    if v:
        acc[m] = v
    else:
        acc.pop(m, None)


class KLR:
    """Engine for R(n) over a fixed Cartan datum and Q coefficient table."""

    def __init__(self, datum: CartanDatum, n: int, qspec: QSpec = None):
        if qspec is None:
            qspec = QSpec.standard(datum)
        if qspec.datum != datum:
            raise ValueError("QSpec built over a different Cartan datum")
        self.datum = datum
        self.n = n
        self.qspec = qspec
        self._zero_exps = (0,) * n
        self._ttmemo = {}

    # ---- generators -------------------------------------------------

    def idempotent(self, seq) -> dict:
        seq = tuple(seq)
        return {BasisMonomial((), self._zero_exps, seq): Fraction(1)}

    def gen_x(self, m: int, seq) -> dict:
        exps = list(self._zero_exps)
        exps[m] = 1
        return {BasisMonomial((), tuple(exps), tuple(seq)): Fraction(1)}

    def gen_tau(self, k: int, seq) -> dict:
        return {BasisMonomial((k,), self._zero_exps, tuple(seq)): Fraction(1)}

    def one(self, seqs) -> dict:
        out = {}
        for seq in seqs:
            out[BasisMonomial((), self._zero_exps, tuple(seq))] = Fraction(1)
        return out

    # ---- core rewriting ---------------------------------------------

    def right_mult_tau(self, E: dict, k: int) -> dict:
        """E * tau_k in basis form."""
        out = {}
        for m, c in E.items():
            sk_seq = _swap(m.seq, k)
            sk_exps = _swap(m.exps, k)
            for m2, c2 in self.tau_tau_e(m.word, k, sk_seq).items():
                bumped = tuple(a + b for a, b in zip(m2.exps, sk_exps))
                _add(out, BasisMonomial(m2.word, bumped, m2.seq), c * c2)
            if m.seq[k] == m.seq[k + 1]:
                # x^a tau_k = tau_k x^{s_k a} + d_k(x^a) on equal colors,
                # with d_k f = (s_k f - f)/(x_k - x_{k+1}).
                p, q = m.exps[k], m.exps[k + 1]
                if p > q:
                    for t in range(p - q):
                        b = list(m.exps)
                        b[k] = q + t
                        b[k + 1] = p - 1 - t
                        _add(out, BasisMonomial(m.word, tuple(b), m.seq), -c)
                elif q > p:
                    for t in range(q - p):
                        b = list(m.exps)
                        b[k] = p + t
                        b[k + 1] = q - 1 - t
                        _add(out, BasisMonomial(m.word, tuple(b), m.seq), c)
        return out

    def tau_tau_e(self, wword: tuple, k: int, mu: tuple) -> dict:
        """tau_w tau_k e(mu) in basis form; wword is canonical for w."""
        key = (wword, k, mu)
        hit = self._ttmemo.get(key)
        if hit is not None:
            return hit
        n = self.n
        w = word_to_perm(n, wword)
        if w[k] < w[k + 1]:
            # Ascent: w s_k is longer; rewrite the reduced word wword+(k,)
            # into canonical form, collecting braid-move corrections.
            u = wword + (k,)
            target = canonical_word(w[:k] + (w[k + 1], w[k]) + w[k + 2 :])
            result = {BasisMonomial(target, self._zero_exps, mu): Fraction(1)}
            if u != target:
                for step in move_path(n, u, target):
                    corr = self._braid_correction(step, mu, tail=())
                    for m2, c2 in corr.items():
                        _add(result, m2, c2)
        else:
            # Descent: tau_w tau_k e(mu) = [tau_w e(s_k mu)] tau_k; rewrite
            # tau_w to end in tau_k, whose square is the Q polynomial.
            v = w[:k] + (w[k + 1], w[k]) + w[k + 2 :]
            cv = canonical_word(v)
            sk_mu = _swap(mu, k)
            result = {}
            for (p, q, t) in self.qspec.terms(mu[k], mu[k + 1]):
                e = [0] * n
                e[k] = p
                e[k + 1] = q
                _add(result, BasisMonomial(cv, tuple(e), mu), t)
            for step in move_path(n, wword, cv + (k,)):
                corr = self._braid_correction(step, sk_mu, tail=(k,))
                for m2, c2 in corr.items():
                    _add(result, m2, c2)
        self._ttmemo[key] = result
        return result

    def _braid_correction(self, step, right_seq, tail) -> dict:
        """Correction from one rewrite step against right idempotent e(right_seq).

        Commutation moves are exact.  A braid move replacing tau_{k+1} tau_k
        tau_{k+1} by tau_k tau_{k+1} tau_k (or back) inside L + block + R
        contributes sign * tau_L * Qbar * e(rho) * tau_R with rho the color
        sequence at the block, Qbar the divided Q difference on strands
        k, k+2.  `tail` is appended to R (used to carry a trailing crossing).
        """
        before, pos, kind = step
        if kind != "braid":
            return {}
        a, b = before[pos], before[pos + 1]
        k = min(a, b)
        sign = 1 if a > b else -1
        L = before[:pos]
        R = before[pos + 3 :] + tail
        rho = apply_word(before[pos + 3 :], right_seq)
        if rho[k] != rho[k + 2]:
            return {}
        poly = []
        for (p, q, t) in self.qspec.terms(rho[k], rho[k + 1]):
            for s in range(p):
                e = [0] * self.n
                e[k] = s
                e[k + 1] = q
                e[k + 2] = p - 1 - s
                poly.append((tuple(e), t if sign > 0 else -t))
        out = self.times_poly(self.eval_word(L, rho), poly)
        for letter in R:
            out = self.right_mult_tau(out, letter)
        return out

    def eval_word(self, word, mu) -> dict:
        """tau_word e(mu) in basis form, for an arbitrary reduced word."""
        E = self.idempotent(apply_word(word, mu))
        for k in word:
            E = self.right_mult_tau(E, k)
        return E

    # ---- derived operations -----------------------------------------

    def times_poly(self, E: dict, poly) -> dict:
        """E * (sum of c * x^exps) for poly a list of (exps, coeff)."""
        out = {}
        for m, c in E.items():
            for exps, t in poly:
                bumped = tuple(a + b for a, b in zip(m.exps, exps))
                _add(out, BasisMonomial(m.word, bumped, m.seq), c * t)
        return out

    def right_mult_x(self, E: dict, m_pos: int, power: int = 1) -> dict:
        out = {}
        for m, c in E.items():
            b = list(m.exps)
            b[m_pos] += power
            _add(out, BasisMonomial(m.word, tuple(b), m.seq), c)
        return out

    def right_mult_e(self, E: dict, seq) -> dict:
        seq = tuple(seq)
        return {m: c for m, c in E.items() if m.seq == seq}

    def right_mult_word(self, E: dict, word) -> dict:
        for k in word:
            E = self.right_mult_tau(E, k)
        return E

    def multiply(self, A: dict, B: dict) -> dict:
        out = {}
        for m2, c2 in B.items():
            left_seq = apply_word(m2.word, m2.seq)
            E = {m1: c1 for m1, c1 in A.items() if m1.seq == left_seq}
            if not E:
                continue
            for k in m2.word:
                E = self.right_mult_tau(E, k)
            for m, c in E.items():
                bumped = tuple(a + b for a, b in zip(m.exps, m2.exps))
                _add(out, BasisMonomial(m.word, bumped, m.seq), c * c2)
        return out

    def psi(self, E: dict) -> dict:
        """The antiautomorphism fixing e(nu), x_m, tau_k."""
        out = {}
        for m, c in E.items():
            cur = {BasisMonomial((), m.exps, m.seq): c}
            for k in reversed(m.word):
                cur = self.right_mult_tau(cur, k)
            for m2, c2 in cur.items():
                _add(out, m2, c2)
        return out

    # ---- degrees ----------------------------------------------------

    def monomial_degree(self, m: BasisMonomial) -> int:
        d = self.datum
        deg = 0
        for pos, a in enumerate(m.exps):
            if a:
                deg += a * d.form(m.seq[pos], m.seq[pos])
        if m.word:
            w = word_to_perm(self.n, m.word)
            for (a, b) in inversions(w):
                deg -= d.form(m.seq[a], m.seq[b])
        return deg

    def element_degree(self, E: dict):
        """Common degree of a homogeneous element; None for 0, error if mixed."""
        degs = {self.monomial_degree(m) for m in E}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element with degrees {sorted(degs)}")
        return degs.pop()

    # ---- distinguished elements -------------------------------------

    def intertwiner_g(self, a: int, seq) -> dict:
        """The intertwiner g_a e(nu) used to compare crossings with
        polynomial data; quadratic in x on equal colors, a bare crossing
        otherwise."""
        seq = tuple(seq)
        n = self.n
        zero = self._zero_exps

        def mono(word, pairs):
            e = [0] * n
            for pos, v in pairs:
                e[pos] += v
            return BasisMonomial(word, tuple(e), seq)

        if seq[a] == seq[a + 1]:
            out = {}
            _add(out, mono((), [(a + 1, 1)]), Fraction(1))
            _add(out, mono((), [(a, 1)]), Fraction(-1))
            _add(out, mono((a,), [(a, 2)]), Fraction(-1))
            _add(out, mono((a,), [(a, 1), (a + 1, 1)]), Fraction(2))
            _add(out, mono((a,), [(a + 1, 2)]), Fraction(-1))
            return out
        return {BasisMonomial((a,), zero, seq): Fraction(1)}

    def intertwiner_g_all(self, a: int, seqs) -> dict:
        out = {}
        for seq in seqs:
            for m, c in self.intertwiner_g(a, seq).items():
                _add(out, m, c)
        return out

    def cyc_poly(self, weight, seqs, k: int = 0) -> dict:
        """sum over nu of x_k^{<h_{nu_k}, Lambda>} e(nu)."""
        out = {}
        for seq in seqs:
            seq = tuple(seq)
            e = [0] * self.n
            e[k] = weight.level(seq[k])
            out[BasisMonomial((), tuple(e), seq)] = Fraction(1)
        return out


_engines = {}


def get_engine(datum: CartanDatum, n: int, qspec: QSpec = None) -> KLR:
    """Shared engines so rewrite memo tables are reused per (datum, n, Q)."""
    if qspec is None:
        qspec = QSpec.standard(datum)
    key = (datum, n, qspec)
    eng = _engines.get(key)
    if eng is None:
        eng = KLR(datum, n, qspec)
        _engines[key] = eng
    return eng


class KLRElement:
    """Convenience wrapper pairing an engine with a coefficient dict."""

    __slots__ = ("engine", "coeffs")

    def __init__(self, engine: KLR, coeffs=None):
        self.engine = engine
        self.coeffs = {}
        if coeffs:
            for m, c in coeffs.items():
                c = Fraction(c)
                if c:
                    self.coeffs[m] = c

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            _add(out, m, c)
        return KLRElement(self.engine, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            _add(out, m, -c)
        return KLRElement(self.engine, out)

    def __neg__(self):
        return KLRElement(self.engine, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return KLRElement(
                self.engine, {m: c * other for m, c in self.coeffs.items()}
            )
        return KLRElement(self.engine, self.engine.multiply(self.coeffs, other.coeffs))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, KLRElement):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def psi(self):
        return KLRElement(self.engine, self.engine.psi(self.coeffs))

    def degree(self):
        return self.engine.element_degree(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, key=BasisMonomial.sort_key):
            parts.append(f"{self.coeffs[m]}*[w={m.word} x={m.exps} e{m.seq}]")
        return " + ".join(parts)
