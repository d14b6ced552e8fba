"""Code descriptors and the combined analysis report used by the CLI."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .acc import (
    AccCode,
    acc_from_gen_poly,
    acc_from_vector,
    duality_class,
    hull,
    hull_dim_via_rank,
    hull_gram,
    is_acd,
    min_gray_distance,
)
from .algebra.binpoly import BinPoly, format_factored, parse_poly
from .algebra.gf4 import format_vector, parse_vector
from .distance import DEFAULT_MAX_DIM, NotComputed, min_weight_info_sets
from .eaqec import eaqec_from_trace, hull_dim as cyclic_hull_dim
from .tracecode import duality_report, min_distance, trace_code_of


class DescriptorError(ValueError):
    pass


@dataclass(frozen=True)
class Descriptor:
    """A code given by length and exactly one of a generator polynomial of
    the binary image or a generator vector over GF(4)."""

    n: int
    g: BinPoly | None = None
    v: tuple | None = None

    def __post_init__(self):
        if (self.g is None) == (self.v is None):
            raise DescriptorError("give exactly one of g=<poly> or v=<f4 vector>")
        if self.n < 1:
            raise DescriptorError("n must be positive")
        if self.v is not None and len(self.v) != self.n:
            raise DescriptorError(f"vector has length {len(self.v)}, expected n={self.n}")

    def build(self) -> AccCode:
        if self.g is not None:
            return acc_from_gen_poly(self.g, self.n)
        return acc_from_vector(self.v)

    def __str__(self) -> str:
        if self.g is not None:
            return f"n={self.n} g={format_factored(self.g)}"
        return f"n={self.n} v={format_vector(self.v)}"


_FIELD = re.compile(r"(\w+)=(\S+)")


def parse_descriptor(text: str) -> Descriptor:
    fields: dict[str, str] = {}
    pos = 0
    for tok in text.split():
        start = text.index(tok, pos)
        pos = start + len(tok)
        m = _FIELD.fullmatch(tok)
        if not m:
            raise DescriptorError(f"expected key=value at position {start}: {tok!r}")
        key, val = m.groups()
        if key not in ("n", "g", "v"):
            raise DescriptorError(f"unknown key {key!r} at position {start}")
        if key in fields:
            raise DescriptorError(f"duplicate key {key!r} at position {start}")
        fields[key] = val
    if "n" not in fields:
        raise DescriptorError("missing n=<length>")
    try:
        n = int(fields["n"])
    except ValueError:
        raise DescriptorError(f"bad length {fields['n']!r}") from None
    g = v = None
    try:
        if "g" in fields:
            g = parse_poly(fields["g"])
        if "v" in fields:
            v = parse_vector(fields["v"])
    except ValueError as exc:
        raise DescriptorError(str(exc)) from None
    return Descriptor(n, g, v)


def fmt_distance(d) -> str:
    return "?" if isinstance(d, NotComputed) or d is None else str(d)


def analyze(desc: Descriptor, max_dim: int = DEFAULT_MAX_DIM, method: str = "exhaustive") -> dict:
    """All the facts about one code, in a fixed key order.

    ``method`` chooses how distances are found: ``exhaustive`` (bounded by
    ``max_dim``) or ``info-sets``.
    """
    C = desc.build()
    g = C.g
    n = C.n
    out: dict[str, object] = {"n": n, "source": str(desc).split(" ", 1)[1]}
    out["g"] = format_factored(g)
    out["deg_g"] = g.degree
    out["dim"] = C.dim
    dc = duality_class(C)
    out["self_orthogonal"] = dc.self_orthogonal
    out["dual_containing"] = dc.dual_containing
    out["self_dual"] = dc.self_dual
    hull_lcm = hull(C).dim
    hull_rank = hull_dim_via_rank(C)
    if hull_lcm != hull_rank:
        raise AssertionError(f"hull dimension routes disagree: lcm {hull_lcm}, rank {hull_rank}")
    out["hull_dim"] = hull_lcm
    out["gram_rank"] = hull_gram(C).rank()
    out["acd"] = is_acd(C)
    if method == "info-sets":
        d_g = min_weight_info_sets(list(C.image_matrix().rows), 2 * n) if C.dim else None
    else:
        d_g = min_gray_distance(C, max_dim)
    out["acc"] = f"[{n},{C.dim},{fmt_distance(d_g)}]"

    ta = duality_report(C)
    tc = trace_code_of(C)
    out["r"] = format_factored(ta.r)
    out["t"] = format_factored(ta.t)
    out["dual_gen"] = format_factored(ta.dual_gen)
    out["strict"] = ta.inclusion_strict
    out["equality"] = ta.equality_condition
    out["trace_lcd"] = ta.trace_lcd
    out["lcd_hypotheses"] = ta.lcd_criterion_applies
    d_h = min_distance(tc, max_dim, method=method)
    d_h = d_h if isinstance(d_h, int) else None
    out["trace"] = f"[{n},{tc.dim},{fmt_distance(d_h)}]"
    out["trace_hull_dim"] = cyclic_hull_dim(tc)
    e = eaqec_from_trace(tc, d_h)
    out["eaqec"] = e.brackets()
    out["rate"] = f"{float(e.rate):.4f}"
    out["net"] = f"{float(e.net_rate):.4f}"
    out["maximal"] = e.maximal
    return out


def _val(v) -> str:
    return str(v).lower() if isinstance(v, bool) else str(v)


def format_machine(rec: dict) -> str:
    return " ".join(f"{k}={_val(v)}" for k, v in rec.items())


def format_human(rec: dict) -> str:
    width = max(len(k) for k in rec)
    return "\n".join(f"{k:<{width}}  {_val(v)}" for k, v in rec.items())


def format_eaqec_line(rec: dict) -> str:
    return (f"{rec['eaqec']} rate={rec['rate']} net={rec['net']} "
            f"maximal={_val(rec['maximal'])} source={rec['source']}")


__all__ = [
    "Descriptor", "DescriptorError", "parse_descriptor", "analyze",
    "format_machine", "format_human", "format_eaqec_line", "fmt_distance",
]
