"""Run configuration for the command line.

A config file is a single JSON object naming the Cartan datum, the
coefficient polynomials, the dominant weight, and which root spaces to
work over.  Parsing is strict: unknown keys, malformed entries, and
unknown labels are all rejected with a ConfigError rather than guessed
around.

Schema:

    {
      "cartan":     {"labels": ["1", "2"], "matrix": [[2, -1], [-1, 2]]},
      "q_coeffs":   "standard",                  # or {"1,2": [[1, 0, 1, 1], ...]}
      "lambda":     {"1": 1},                    # levels, absent labels are 0
      "beta":       {"1": 1, "2": 1},            # or "nmax": 3 for all |beta| <= 3
      "degree_cap": 10,                          # optional display cap
      "output":     "tsv"                        # or "json"
    }

Each q_coeffs entry under key "a,b" is a list of terms [p, q, num, den]
meaning (num/den) u^p v^q in Q_ab(u, v), with u attached to label a and
v to label b.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .cartan import CartanDatum, Weight, build_cartan
from .qpolys import QSpec

__all__ = ["ConfigError", "RunConfig", "parse_config", "load_config"]

_TOP_KEYS = {"cartan", "q_coeffs", "lambda", "beta", "nmax", "degree_cap",
             "output"}


class ConfigError(Exception):
    """Raised for any malformed or inconsistent configuration."""


@dataclass
class RunConfig:
    """Validated configuration ready for the command implementations."""

    datum: CartanDatum
    qspec: QSpec
    weight: Weight
    betas: tuple
    degree_cap: int
    output: str

    def require_weight(self) -> Weight:
        if self.weight is None:
            raise ConfigError("this command needs a \"lambda\" entry")
        return self.weight

    def require_betas(self) -> tuple:
        if self.betas is None:
            raise ConfigError(
                "this command needs a \"beta\" or \"nmax\" entry"
            )
        return self.betas


def _expect(cond, message):
    if not cond:
        raise ConfigError(message)


def _parse_cartan(data) -> CartanDatum:
    _expect(isinstance(data, dict), "\"cartan\" must be an object")
    _expect(set(data) == {"labels", "matrix"},
            "\"cartan\" must have exactly the keys \"labels\" and \"matrix\"")
    labels = data["labels"]
    _expect(isinstance(labels, list) and labels,
            "\"cartan.labels\" must be a nonempty list")
    _expect(all(isinstance(s, str) and s for s in labels),
            "\"cartan.labels\" entries must be nonempty strings")
    matrix = data["matrix"]
    _expect(isinstance(matrix, list)
            and all(isinstance(row, list) for row in matrix),
            "\"cartan.matrix\" must be a list of rows")
    for row in matrix:
        for x in row:
            _expect(isinstance(x, int) and not isinstance(x, bool),
                    "\"cartan.matrix\" entries must be integers")
    try:
        return build_cartan(labels, matrix)
    except ValueError as err:
        raise ConfigError(f"bad Cartan data: {err}") from None


def _parse_qspec(data, datum) -> QSpec:
    if data is None or data == "standard":
        return QSpec.standard(datum)
    _expect(isinstance(data, dict),
            "\"q_coeffs\" must be \"standard\" or an object")
    table = {}
    for key, terms in data.items():
        _expect(isinstance(key, str) and key.count(",") == 1,
                f"q_coeffs key {key!r} must look like \"a,b\"")
        la, lb = key.split(",")
        for lab in (la, lb):
            _expect(lab in datum.labels, f"unknown label {lab!r} in q_coeffs")
        i = datum.index_of(la)
        j = datum.index_of(lb)
        _expect(i != j, f"q_coeffs key {key!r} repeats a label")
        pair = (i, j) if i < j else (j, i)
        _expect(pair not in table,
                f"q_coeffs pair {{{la},{lb}}} given more than once")
        _expect(isinstance(terms, list) and terms,
                f"q_coeffs[{key!r}] must be a nonempty list of terms")
        entry = {}
        for term in terms:
            _expect(isinstance(term, list) and len(term) == 4
                    and all(isinstance(x, int) and not isinstance(x, bool)
                            for x in term),
                    f"each term in q_coeffs[{key!r}] must be"
                    " [p, q, num, den] with integer entries")
            p, q, num, den = term
            _expect(den != 0, f"zero denominator in q_coeffs[{key!r}]")
            mono = (p, q) if i < j else (q, p)
            _expect(mono not in entry,
                    f"duplicate exponent pair in q_coeffs[{key!r}]")
            entry[mono] = Fraction(num, den)
        table[pair] = entry
    try:
        return QSpec(datum, table)
    except ValueError as err:
        raise ConfigError(f"bad q_coeffs: {err}") from None


def _parse_weight(data, datum):
    if data is None:
        return None
    _expect(isinstance(data, dict), "\"lambda\" must be an object")
    levels = [0] * datum.rank
    for lab, lvl in data.items():
        _expect(lab in datum.labels, f"unknown label {lab!r} in lambda")
        _expect(isinstance(lvl, int) and not isinstance(lvl, bool)
                and lvl >= 0,
                f"lambda[{lab!r}] must be a nonnegative integer")
        levels[datum.index_of(lab)] = lvl
    return Weight(tuple(levels))


def _parse_betas(beta, nmax, datum):
    _expect(beta is None or nmax is None,
            "give \"beta\" or \"nmax\", not both")
    if beta is not None:
        _expect(isinstance(beta, dict), "\"beta\" must be an object")
        counts = [0] * datum.rank
        for lab, k in beta.items():
            _expect(lab in datum.labels, f"unknown label {lab!r} in beta")
            _expect(isinstance(k, int) and not isinstance(k, bool) and k >= 0,
                    f"beta[{lab!r}] must be a nonnegative integer")
            counts[datum.index_of(lab)] = k
        return (tuple(counts),)
    if nmax is not None:
        _expect(isinstance(nmax, int) and not isinstance(nmax, bool)
                and nmax >= 0,
                "\"nmax\" must be a nonnegative integer")
        betas = []
        for total in range(nmax + 1):
            for cuts in itertools.combinations_with_replacement(
                    range(datum.rank), total):
                counts = [0] * datum.rank
                for i in cuts:
                    counts[i] += 1
                betas.append(tuple(counts))
        return tuple(betas)
    return None


def parse_config(data) -> RunConfig:
    """Validate a decoded JSON object into a RunConfig."""
    _expect(isinstance(data, dict), "config must be a JSON object")
    unknown = set(data) - _TOP_KEYS
    _expect(not unknown,
            "unknown config keys: " + ", ".join(sorted(unknown)))
    _expect("cartan" in data, "config needs a \"cartan\" entry")
    datum = _parse_cartan(data["cartan"])
    qspec = _parse_qspec(data.get("q_coeffs"), datum)
    weight = _parse_weight(data.get("lambda"), datum)
    betas = _parse_betas(data.get("beta"), data.get("nmax"), datum)
    cap = data.get("degree_cap")
    if cap is not None:
        _expect(isinstance(cap, int) and not isinstance(cap, bool),
                "\"degree_cap\" must be an integer")
    output = data.get("output", "tsv")
    _expect(output in ("tsv", "json"),
            "\"output\" must be \"tsv\" or \"json\"")
    return RunConfig(datum=datum, qspec=qspec, weight=weight, betas=betas,
                     degree_cap=cap, output=output)


def load_config(path) -> RunConfig:
    """Read and validate a config file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as err:
        raise ConfigError(f"cannot read config {path}: {err}") from None
    except json.JSONDecodeError as err:
        raise ConfigError(f"config {path} is not valid JSON: {err}") from None
    return parse_config(data)
