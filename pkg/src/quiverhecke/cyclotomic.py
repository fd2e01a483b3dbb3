"""Cyclotomic quotients R^Lambda(beta) computed degree by degree.

The quotient is the strand algebra modulo the two-sided ideal generated
by x_1^{<h_{nu_1}, Lambda>} e(nu).  Three devices keep the computation
exact and small:

* The two-sided ideal is spanned, in each degree, by left multiples of
  the finitely many elements X * tau_0 ... tau_{a-1}: the coset
  decomposition of the strand algebra over its last-(n-1)-strands
  subalgebra turns R * X * R into sum_a R * (X * chain_a), so the row
  count is linear in the number of basis monomials.

* Every product row has a single left color sequence and a single right
  color sequence, so each graded piece splits into independent small
  blocks indexed by (left seq, right seq), and the echelon bases of the
  blocks are computed separately.

* A degree window is fixed before anything big is computed: a bound from
  per-strand nilpotency degrees, intersected with a tower bound that is
  certified at runtime by checking that the monic last-strand relation
  really lies in the ideal.  Degrees above the window are spot-checked
  to vanish rather than assumed silently.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import CartanDatum, Weight
from .klr import BasisMonomial, KLR, get_engine, seqs_of, weighted_comps
from .laurent import LaurentPoly
from .linalg import SubspaceBasis
from .perms import act_on_seq, all_perms, apply_word, canonical_word, word_to_perm
from .qpolys import QSpec

__all__ = [
    "CertificationError",
    "min_power_in_ideal",
    "nilpotency_table",
    "alive_seqs",
    "degree_cap",
    "certified_cap",
    "full_ideal_chains",
    "IdealSpace",
    "get_ideal_space",
    "CycAlgebra",
]


class CertificationError(RuntimeError):
    """The monic last-strand relation failed its ideal membership check."""


def min_power_in_ideal(N: int, Np: int, qterms, wu: int, wv: int) -> int:
    """Least s with v^s in the ideal (u^N, v^Np * Q(u, v)) of k[u, v].

    `qterms` lists (p, q, coeff) for Q = sum coeff u^p v^q; wu and wv are
    the (positive, even) degrees of u and v, making Q homogeneous.  The
    search is graded: only multiples of the generator in the single
    weighted degree of v^s can contribute, which keeps each membership
    test tiny, and the resultant of the two generators bounds s.
    """
    if N == 0:
        return 0
    if not qterms:
        raise ValueError("empty Q polynomial in nilpotency recursion")
    maxq = max(q for (_, q, _) in qterms)
    p0, q0, _ = qterms[0]
    wgt_g = wv * Np + wu * p0 + wv * q0
    for s in range(N * (Np + maxq) + 1):
        rem = wv * s - wgt_g
        if rem < 0:
            continue
        sb = SubspaceBasis()
        for a in range(N):
            r2 = rem - wu * a
            if r2 < 0:
                break
            if r2 % wv:
                continue
            b = r2 // wv
            vec = {}
            for (p, q, t) in qterms:
                if a + p < N:
                    key = (a + p, b + Np + q)
                    vec[key] = vec.get(key, 0) + t
            if vec:
                sb.add(vec)
        if sb.rank and sb.contains({(0, s): Fraction(1)}):
            return s
    raise AssertionError("no v power found within the resultant bound")


def nilpotency_table(datum, weight, beta, qspec):
    """Per-position nilpotency degrees: rows[pos][i] bounds the order of
    x_{pos} on any color sequence with label i at that position.

    Position 0 is the defining relation; later positions combine the
    previous position's bounds across every label that can sit there.
    """
    n = sum(beta)
    supp = [i for i, k in enumerate(beta) if k]
    rows = []
    if n == 0:
        return rows
    rows.append({i: weight.level(i) for i in supp})
    for _pos in range(1, n):
        prev = rows[-1]
        cur = {}
        for j in supp:
            best = 0
            for i in supp:
                if i == j:
                    if beta[j] >= 2:
                        cand = prev[j]
                    else:
                        continue
                else:
                    cand = min_power_in_ideal(
                        prev[i],
                        prev[j],
                        qspec.terms(i, j),
                        datum.form(i, i),
                        datum.form(j, j),
                    )
                best = max(best, cand)
            cur[j] = best
        rows.append(cur)
    return rows


def alive_seqs(beta, table):
    """Sequences whose idempotent is not killed outright by a zero bound."""
    out = []
    for seq in seqs_of(beta):
        if all(table[pos][i] > 0 for pos, i in enumerate(seq)):
            out.append(seq)
    return tuple(out)


def _tau_degree(datum, w, seq):
    deg = 0
    n = len(seq)
    for a in range(n):
        for b in range(a + 1, n):
            if w[a] > w[b]:
                deg -= datum.form(seq[a], seq[b])
    return deg


def degree_cap(datum, weight, beta, qspec=None):
    """Degree window (dmin, dmax) from the nilpotency table alone.

    dmin is the least crossing degree over alive sequences; dmax adds the
    largest polynomial part allowed by the per-strand bounds.  An empty
    window (0, -1) signals that every sequence is dead.
    """
    if qspec is None:
        qspec = QSpec.standard(datum)
    n = sum(beta)
    table = nilpotency_table(datum, weight, beta, qspec)
    alive = alive_seqs(beta, table)
    if not alive:
        return (0, -1)
    dmin = 0
    dmax = 0
    perms = all_perms(n)
    for seq in alive:
        taus = [_tau_degree(datum, w, seq) for w in perms]
        poly = sum(
            (table[pos][i] - 1) * datum.form(i, i) for pos, i in enumerate(seq)
        )
        dmin = min(dmin, min(taus))
        dmax = max(dmax, max(taus) + poly)
    return (dmin, dmax)


def full_ideal_chains(n):
    """Generator family (x position, chain word) spanning the two-sided
    ideal R X R as the left-module sum over a of R * X * tau_0...tau_{a-1},
    via the coset decomposition over the last-(n-1)-strands subalgebra."""
    return tuple((0, tuple(range(a))) for a in range(n))


class IdealSpace:
    """Graded pieces of a left-module span inside R(beta), organized as
    echelon bases per (left seq, right seq, degree) block.

    The span is sum over the family `chains` of R * X_p * tau_word, where
    X_p places x_p^{level} against the left idempotent.  The default
    family is the full cyclotomic ideal; restricted families give the
    one-sided denominators of the induction and restriction bimodules.
    """

    def __init__(self, engine: KLR, weight: Weight, beta, chains=None):
        self.engine = engine
        self.weight = weight
        self.beta = tuple(beta)
        self.n = sum(beta)
        self.seqs = seqs_of(beta)
        self.chains = full_ideal_chains(self.n) if chains is None else tuple(chains)
        self._gens = {}
        self._blocks = {}
        self._transporters = {}

    # -- generators X_p * tau_word, cut to right idempotents -----------

    def generator(self, idx: int, mu):
        """x_p^{level} e(w mu) tau_word for the idx-th family member, in
        basis form; this is the right-idempotent-mu piece of that
        generator.  Returns (element, degree)."""
        key = (idx, mu)
        hit = self._gens.get(key)
        if hit is not None:
            return hit
        eng = self.engine
        xpos, word = self.chains[idx]
        left = apply_word(word, mu)
        exps = [0] * self.n
        exps[xpos] = self.weight.level(left[xpos])
        E = {BasisMonomial((), tuple(exps), left): Fraction(1)}
        E = eng.right_mult_word(E, word)
        deg = eng.element_degree(E) if E else None
        self._gens[key] = (E, deg)
        return E, deg

    def transporter(self, src, dst):
        """All w in S_n with w . src == dst."""
        key = (src, dst)
        hit = self._transporters.get(key)
        if hit is None:
            hit = tuple(
                w for w in all_perms(self.n) if act_on_seq(w, src) == dst
            )
            self._transporters[key] = hit
        return hit

    def block_columns(self, lam, mu, d):
        """Degree-d basis monomials of e(lam) R(beta) e(mu), sorted."""
        eng = self.engine
        datum = eng.datum
        weights = [datum.form(i, i) for i in mu]
        cols = []
        for w in self.transporter(mu, lam):
            word = canonical_word(w)
            tdeg = _tau_degree(datum, w, mu)
            for exps in weighted_comps(weights, d - tdeg):
                cols.append(BasisMonomial(word, exps, mu))
        cols.sort(key=BasisMonomial.sort_key)
        return cols

    def block(self, lam, mu, d):
        """(columns, echelon basis of the ideal piece) for one block."""
        key = (lam, mu, d)
        hit = self._blocks.get(key)
        if hit is not None:
            return hit
        eng = self.engine
        cols = self.block_columns(lam, mu, d)
        sb = SubspaceBasis(keyfunc=BasisMonomial.sort_key)
        if cols:
            colset = set(cols)
            for idx in range(len(self.chains)):
                gen, gdeg = self.generator(idx, mu)
                if not gen:
                    continue
                left_of_gen = apply_word(self.chains[idx][1], mu)
                for b in self.block_columns(lam, left_of_gen, d - gdeg):
                    row = eng.multiply({b: Fraction(1)}, gen)
                    if not row:
                        continue
                    assert set(row) <= colset, "ideal row escaped its block"
                    sb.add(row)
        self._blocks[key] = (cols, sb)
        return cols, sb

    def block_dim(self, lam, mu, d) -> int:
        cols, sb = self.block(lam, mu, d)
        return len(cols) - sb.rank

    def reduce(self, E: dict) -> dict:
        """Canonical representative of E modulo the ideal."""
        eng = self.engine
        groups = {}
        for m, c in E.items():
            lam = act_on_seq_from_word(m)
            d = eng.monomial_degree(m)
            groups.setdefault((lam, m.seq, d), {})[m] = c
        out = {}
        for (lam, mu, d), vec in groups.items():
            _, sb = self.block(lam, mu, d)
            for m, c in sb.normal_form(vec).items():
                out[m] = out.get(m, 0) + c
        return {m: c for m, c in out.items() if c}

    def contains(self, E: dict) -> bool:
        return not self.reduce(E)


def act_on_seq_chain(mu, a):
    """w_a . mu for the chain permutation w_a = s_0 s_1 ... s_{a-1}:
    moves the front entry of the result from position a of mu."""
    return (mu[a],) + mu[:a] + mu[a + 1 :]


def act_on_seq_from_word(m: BasisMonomial):
    """Left color sequence of a basis monomial."""
    return act_on_seq(word_to_perm(len(m.seq), m.word), m.seq)


_ideal_spaces = {}


def get_ideal_space(datum, weight, beta, qspec=None) -> IdealSpace:
    if qspec is None:
        qspec = QSpec.standard(datum)
    key = (datum, weight.levels, tuple(beta), qspec)
    sp = _ideal_spaces.get(key)
    if sp is None:
        sp = IdealSpace(get_engine(datum, sum(beta), qspec), weight, beta)
        _ideal_spaces[key] = sp
    return sp


def tower_degree(datum, weight, beta, i) -> int:
    """Monic degree in the last variable of the last-strand relation when
    strand color i is appended to content beta - alpha_i."""
    sub = list(beta)
    sub[i] -= 1
    lam_part = weight.level(i) - sum(k * datum.a(i, j) for j, k in enumerate(sub))
    return lam_part + 2 * sub[i]


def _last_strand_relation(engine, weight, sub_seq, i):
    """a_i(x_last) * prod over other-colored strands of Q * e(sub_seq, i)."""
    n = engine.n
    last = n - 1
    seq = tuple(sub_seq) + (i,)
    poly = {tuple([0] * n): Fraction(1)}
    lvl = weight.level(i)
    if lvl:
        poly = {_bump(e, last, lvl): c for e, c in poly.items()}
    for a, col in enumerate(sub_seq):
        if col == i:
            continue
        nxt = {}
        for e, c in poly.items():
            for (p, q, t) in engine.qspec.terms(col, i):
                e2 = list(e)
                e2[a] += p
                e2[last] += q
                e2 = tuple(e2)
                nxt[e2] = nxt.get(e2, 0) + c * t
        poly = {e: c for e, c in nxt.items() if c}
    return {BasisMonomial((), e, seq): c for e, c in poly.items()}


def _bump(e, pos, amount):
    e2 = list(e)
    e2[pos] += amount
    return tuple(e2)


_cert_memo = {}


def certified_cap(datum, weight, beta, qspec=None):
    """Largest degree the quotient can reach, certified by computation.

    Returns None when the quotient is certified to vanish.  For each
    color i ending a sequence, the monic relation on the last strand is
    checked to lie in the ideal; granting that, last-strand exponents
    stay below the monic degree and the bound recurses down the tower.
    Raises CertificationError if any membership check fails.
    """
    if qspec is None:
        qspec = QSpec.standard(datum)
    beta = tuple(beta)
    key = (datum, weight.levels, beta, qspec)
    if key in _cert_memo:
        return _cert_memo[key]
    n = sum(beta)
    if n == 0:
        _cert_memo[key] = 0
        return 0
    space = get_ideal_space(datum, weight, beta, qspec)
    eng = space.engine
    best = None
    for i, k in enumerate(beta):
        if not k:
            continue
        sub = list(beta)
        sub[i] -= 1
        sub = tuple(sub)
        d_i = tower_degree(datum, weight, beta, i)
        # Certify the monic relation for every sequence in this tower.
        for nu in seqs_of(sub):
            rel = _last_strand_relation(eng, weight, nu, i)
            if not space.contains(rel):
                raise CertificationError(
                    f"last-strand relation not in ideal: beta={beta}, "
                    f"tower={datum.labels[i]}, seq={nu}"
                )
        if d_i <= 0:
            continue
        subcap = certified_cap(datum, weight, sub, qspec)
        if subcap is None:
            continue
        chain_best = None
        for nu in seqs_of(sub):
            sigma = nu + (i,)
            for a in range(n):
                word = tuple(range(a, n - 1))
                exps = [0] * n
                exps[n - 1] = d_i - 1
                deg = eng.monomial_degree(
                    BasisMonomial(word, tuple(exps), sigma)
                )
                if chain_best is None or deg > chain_best:
                    chain_best = deg
        cand = subcap + chain_best
        if best is None or cand > best:
            best = cand
    _cert_memo[key] = best
    return best


class CycAlgebra:
    """The graded algebra R^Lambda(beta) over its degree window."""

    def __init__(self, datum, weight, beta, qspec=None, certify=True,
                 cap_override=None):
        if qspec is None:
            qspec = QSpec.standard(datum)
        self.datum = datum
        self.weight = weight
        self.beta = tuple(beta)
        self.qspec = qspec
        self.n = sum(beta)
        self.space = get_ideal_space(datum, weight, self.beta, qspec)
        self.engine = self.space.engine
        self.table = nilpotency_table(datum, weight, self.beta, qspec)
        self.alive = alive_seqs(self.beta, self.table)
        self.dmin, self.dmax_bound = degree_cap(datum, weight, self.beta, qspec)
        # The quotient vanishes exactly when the unit lies in the ideal,
        # which is a degree zero computation; a vanishing quotient skips
        # window certification and all higher degrees.
        self._zero = not self.alive or all(
            not self.space.reduce(self.engine.idempotent(nu))
            for nu in self.alive
        )
        self.dmax_cert = None
        if self._zero:
            self.dmin, self.dmax = 0, -1
        else:
            if certify:
                self.dmax_cert = certified_cap(datum, weight, self.beta, qspec)
            caps = [self.dmax_bound]
            if certify:
                caps.append(-1 if self.dmax_cert is None else self.dmax_cert)
            if cap_override is not None:
                caps.append(cap_override)
            self.dmax = min(caps)
        self._dims = {}

    # -- dimensions ----------------------------------------------------

    def dim_at(self, d: int) -> int:
        if self._zero:
            return 0
        hit = self._dims.get(d)
        if hit is not None:
            return hit
        total = 0
        for lam in self.alive:
            for mu in self.alive:
                if sorted(lam) != sorted(mu):
                    continue
                total += self.space.block_dim(lam, mu, d)
        self._dims[d] = total
        return total

    def graded_dims(self) -> dict:
        return {
            d: self.dim_at(d)
            for d in range(self.dmin, self.dmax + 1)
            if self.dim_at(d)
        }

    def graded_dim_poly(self) -> LaurentPoly:
        return LaurentPoly(self.graded_dims())

    def truncation(self, mu, nu) -> LaurentPoly:
        """Graded dimension of e(mu) R^Lambda(beta) e(nu)."""
        mu = tuple(mu)
        nu = tuple(nu)
        if self._zero or mu not in self.alive or nu not in self.alive:
            return LaurentPoly.zero()
        out = {}
        for d in range(self.dmin, self.dmax + 1):
            dim = self.space.block_dim(mu, nu, d)
            if dim:
                out[d] = dim
        return LaurentPoly(out)

    def quotient_basis(self, d: int):
        """Monomials spanning degree d of the quotient: non-pivot columns
        of every alive block, in canonical order."""
        if self._zero:
            return []
        out = []
        for lam in self.alive:
            for mu in self.alive:
                if sorted(lam) != sorted(mu):
                    continue
                cols, sb = self.space.block(lam, mu, d)
                pivots = sb.pivot_columns()
                out.extend(m for m in cols if m not in pivots)
        out.sort(key=BasisMonomial.sort_key)
        return out

    def nf(self, E: dict) -> dict:
        """Normal form modulo the ideal; dead-sequence monomials drop."""
        filtered = {}
        aliveset = set(self.alive)
        for m, c in E.items():
            if m.seq not in aliveset:
                if not self.space.contains({m: c}):
                    raise AssertionError(
                        "dead sequence monomial not in ideal; bounds are wrong"
                    )
                continue
            lam = act_on_seq_from_word(m)
            if lam not in aliveset:
                if not self.space.contains({m: c}):
                    raise AssertionError(
                        "dead sequence monomial not in ideal; bounds are wrong"
                    )
                continue
            filtered[m] = c
        return self.space.reduce(filtered)

    def is_zero(self) -> bool:
        return self._zero

    def check_boundary(self):
        """Degrees just outside the window must vanish.  A vanishing
        quotient was already certified by unit membership in degree 0."""
        if self._zero:
            return True
        for d in (self.dmax + 1, self.dmax + 2, self.dmin - 1, self.dmin - 2):
            dim = 0
            for lam in self.alive:
                for mu in self.alive:
                    if sorted(lam) != sorted(mu):
                        continue
                    dim += self.space.block_dim(lam, mu, d)
            if dim:
                raise AssertionError(
                    f"window boundary violated at degree {d}: dim {dim}"
                )
        return True

    def summary(self) -> dict:
        """JSON-ready description of the computed algebra."""
        dims = self.graded_dims()
        truncs = {}
        for mu in self.alive:
            for nu in self.alive:
                t = self.truncation(mu, nu)
                if t:
                    key = "|".join(
                        (
                            ",".join(str(self.datum.labels[i]) for i in mu),
                            ",".join(str(self.datum.labels[i]) for i in nu),
                        )
                    )
                    truncs[key] = t.to_json()
        return {
            "labels": list(map(str, self.datum.labels)),
            "levels": list(self.weight.levels),
            "beta": list(self.beta),
            "window": [self.dmin, self.dmax],
            "window_bound": self.dmax_bound,
            "window_certified": self.dmax_cert,
            "nilpotency": [
                {str(self.datum.labels[i]): v for i, v in row.items()}
                for row in self.table
            ],
            "alive": [
                ",".join(str(self.datum.labels[i]) for i in nu)
                for nu in self.alive
            ],
            "zero": self.is_zero(),
            "graded_dim": {str(d): v for d, v in sorted(dims.items())},
            "total_dim": sum(dims.values()),
            "truncations": truncs,
        }


def _min_block_degree(space: IdealSpace, lam, mu):
    """Least possible degree of a basis monomial in block (lam, mu)."""
    datum = space.engine.datum
    degs = [
        _tau_degree(datum, w, mu) for w in space.transporter(mu, lam)
    ]
    return min(degs) if degs else None


def ideal_rows_two_sided(space: IdealSpace, lam, mu, d):
    """Spanning rows of the block from the bilinear description
    b1 * (x_0^level e(nu)) * b2; quadratically many, kept for cross-checks
    against the one-sided spanning set used everywhere else."""
    eng = space.engine
    out = []
    for nu in space.seqs:
        lvl = space.weight.level(nu[0])
        exps = [0] * space.n
        exps[0] = lvl
        gen = BasisMonomial((), tuple(exps), nu)
        gdeg = eng.monomial_degree(gen)
        lo = _min_block_degree(space, lam, nu)
        hi = _min_block_degree(space, nu, mu)
        if lo is None or hi is None:
            continue
        for d1 in range(lo, d - gdeg - hi + 1):
            lefts = space.block_columns(lam, nu, d1)
            rights = space.block_columns(nu, mu, d - gdeg - d1)
            for b1 in lefts:
                half = eng.multiply({b1: Fraction(1)}, {gen: Fraction(1)})
                for b2 in rights:
                    row = eng.multiply(half, {b2: Fraction(1)})
                    if row:
                        out.append(row)
    return out
