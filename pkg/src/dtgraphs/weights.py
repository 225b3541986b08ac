"""DT weight assignments: the edge predicate, distance decompositions, the
three structural conditions, and constructive weight synthesis.

All arithmetic is exact (:class:`fractions.Fraction`).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegenerateWeights, InvalidParameters, LengthMismatch, NotThreshold,
    PreconditionViolated, SynthesisFailed, Unreachable,
)
from .graph import DistanceDecomposition, Graph, bfs_layers, mask, members

__all__ = [
    "DistanceDecomposition", "WeightAssignment", "ConditionFailure",
    "edge_exists", "realize", "decompose_from_c0", "check_theorem_conditions",
    "assign_c0_weights", "choose_epsilon", "assign_layer_weights",
    "synthesize", "verify_dt", "as_rational", "format_rational",
]

DEFAULT_ALPHA = Fraction(2)
DEFAULT_BETA = Fraction(1)


def as_rational(x) -> Fraction:
    """Coerce ints, ``"p/q"`` strings, decimals and floats to a Fraction.

    Floats go through ``str`` so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(str(x))
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _check_params(alpha: Fraction, beta: Fraction) -> None:
    if not (beta > 0 and alpha >= beta):
        raise InvalidParameters(f"need alpha >= beta > 0, got alpha={alpha}, beta={beta}")


@dataclass(frozen=True)
class WeightAssignment:
    alpha: Fraction
    beta: Fraction
    w: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "w", tuple(as_rational(x) for x in self.w))
        _check_params(self.alpha, self.beta)
        for i, x in enumerate(self.w):
            if x <= 0:
                raise InvalidParameters(f"weight of vertex {i} is not positive: {x}")

    def __len__(self) -> int:
        return len(self.w)

    def scaled(self) -> tuple[int, int, list[int]]:
        """Integer ``(alpha, beta, w)`` after clearing all denominators."""
        den = lcm(self.alpha.denominator, self.beta.denominator,
                  *(x.denominator for x in self.w))
        return (self.alpha.numerator * (den // self.alpha.denominator),
                self.beta.numerator * (den // self.beta.denominator),
                [x.numerator * (den // x.denominator) for x in self.w])

    def to_json(self) -> dict:
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "weights": [format_rational(x) for x in self.w],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "WeightAssignment":
        try:
            return cls(Fraction(doc["alpha"]), Fraction(doc["beta"]),
                       tuple(Fraction(x) for x in doc["weights"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, InvalidParameters):
                raise
            raise InvalidParameters(f"malformed weight document: {exc}") from None


def edge_exists(wi, wj, alpha, beta) -> bool:
    wi, wj, alpha, beta = map(as_rational, (wi, wj, alpha, beta))
    _check_params(alpha, beta)
    if wi <= 0 or wj <= 0:
        raise InvalidParameters("weights must be positive")
    return wi + wj >= alpha and abs(wi - wj) <= beta


def realize(alpha, beta, w: Sequence) -> Graph:
    wa = WeightAssignment(alpha, beta, tuple(w))
    a, b, iw = wa.scaled()
    n = len(iw)
    bits = [0] * n
    for i in range(n):
        wi = iw[i]
        for j in range(i + 1, n):
            wj = iw[j]
            if wi + wj >= a and abs(wi - wj) <= b:
                bits[i] |= 1 << j
                bits[j] |= 1 << i
    return Graph(n, bits)


def verify_dt(g: Graph, wa: WeightAssignment) -> tuple[bool, tuple[int, int] | None]:
    """Check the DT edge rule on every pair; returns the first violating pair if any."""
    if len(wa.w) != g.n:
        raise LengthMismatch(f"{len(wa.w)} weights for {g.n} vertices")
    a, b, iw = wa.scaled()
    bits = g.bits
    for i in range(g.n):
        wi = iw[i]
        bi = bits[i]
        for j in range(i + 1, g.n):
            wj = iw[j]
            if (wi + wj >= a and abs(wi - wj) <= b) != bool(bi >> j & 1):
                return False, (i, j)
    return True, None


def decompose_from_c0(g: Graph, c0: Iterable[int]) -> DistanceDecomposition:
    d = bfs_layers(g, c0)
    if d.unreached:
        raise Unreachable(min(d.unreached))
    return d


@dataclass(frozen=True)
class ConditionFailure:
    condition: str  # "i", "ii" or "iii"
    layer: int
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        return f"condition ({self.condition}) fails on layer {self.layer} at {self.vertices}"


def _layer_masks(d: DistanceDecomposition) -> list[int]:
    return [mask(layer) for layer in d.layers] + [0]


def _r0_holds(bits, i: int, j: int) -> bool:
    return not (bits[i] & ~(1 << j) & ~bits[j])


def check_theorem_conditions(g: Graph, d: DistanceDecomposition) -> tuple[bool, ConditionFailure | None]:
    bits = g.bits
    masks = _layer_masks(d)
    c0 = sorted(d.layers[0])
    for x, i in enumerate(c0):
        for j in c0[x + 1:]:
            if not (_r0_holds(bits, i, j) or _r0_holds(bits, j, i)):
                return False, ConditionFailure("i", 0, (i, j))
    for l in range(1, len(d.layers)):
        layer = masks[l]
        for i in members(layer):
            missing = layer & ~bits[i] & ~(1 << i)
            if missing:
                return False, ConditionFailure("ii", l, (i, next(members(missing))))
    for l in range(1, len(d.layers)):
        below, above = masks[l - 1], masks[l + 1]
        vs = sorted(d.layers[l])
        for x, i in enumerate(vs):
            for j in vs[x + 1:]:
                if not (_rl_holds(bits, below, above, i, j) or _rl_holds(bits, below, above, j, i)):
                    return False, ConditionFailure("iii", l, (i, j))
    return True, None


def _rl_holds(bits, below: int, above: int, i: int, j: int) -> bool:
    """i R_l j: N(j)∩C_{l-1} ⊆ N(i)∩C_{l-1} and N(i)∩C_{l+1} ⊆ N(j)∩C_{l+1}."""
    return not (bits[j] & below & ~bits[i]) and not (bits[i] & above & ~bits[j])


def assign_c0_weights(g: Graph, c0: Iterable[int], alpha, beta) -> dict[int, Fraction]:
    """Distinct weights for ``c0`` realising its induced threshold graph with
    threshold exactly ``alpha``, all strictly inside
    ``((alpha - beta)/2, (alpha + beta)/2)``.

    Degree-partition class gives the integer part; inside a class the
    perturbation follows the global degree so that weight order agrees with
    the vicinal preorder on full neighbourhoods.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    _check_params(alpha, beta)
    c0 = sorted(set(c0))
    c0m = mask(c0)
    bits = g.bits
    local = {i: bits[i] & c0m for i in c0}
    for x, i in enumerate(c0):
        for j in c0[x + 1:]:
            if not (_r0_holds(local, i, j) or _r0_holds(local, j, i)):
                raise NotThreshold(f"vertices {i} and {j} are incomparable inside C0")
    ldeg = {i: bin(local[i]).count("1") for i in c0}
    distinct = sorted({d for d in ldeg.values() if d > 0})
    rank = {d: k + 1 for k, d in enumerate(distinct)}
    rank[0] = 0
    top = len(distinct) + 1  # threshold m' + 1 of the integer assignment
    classes: dict[int, list[int]] = {}
    for i in c0:
        classes.setdefault(rank[ldeg[i]], []).append(i)
    scale = beta / (2 * top)
    shift = (alpha - beta / 2) / 2
    out = {}
    for j, verts in classes.items():
        verts.sort(key=lambda v: (bin(bits[v]).count("1"), v))
        for k, v in enumerate(verts, start=1):
            base = j + Fraction(k, 2 * (len(verts) + 1))
            out[v] = scale * base + shift
    return out


def choose_epsilon(c0_weights: Mapping[int, Fraction] | Iterable, alpha, beta, n: int) -> Fraction:
    alpha, beta = as_rational(alpha), as_rational(beta)
    vals = list(c0_weights.values()) if isinstance(c0_weights, Mapping) else list(c0_weights)
    vals = sorted(as_rational(v) for v in vals)
    if not vals:
        raise DegenerateWeights("no C0 weights")
    distinct = sorted(set(vals))
    gaps = [b - a for a, b in zip(distinct, distinct[1:])]
    floor_margin = Fraction(n, n + 1) * (distinct[0] - (alpha - beta) / 2)
    if floor_margin <= 0:
        raise DegenerateWeights("a C0 weight sits at or below (alpha - beta)/2")
    bound = min(gaps) if gaps else floor_margin
    return min(bound, floor_margin) / 2


def assign_layer_weights(g: Graph, d: DistanceDecomposition, c0_weights: Mapping[int, Fraction],
                         epsilon, alpha, beta, n: int) -> dict[int, Fraction]:
    """Extend ``c0_weights`` layer by layer.

    ``w(i) = beta + min w(N(i)∩C_{l-1}) - eps/(n+1)^(l-1) * (1 - (c+1)/(n+1))``
    with ``c = |N(i)∩C_{l+1}|``.  The ``+1`` keeps every non-edge between
    consecutive layers strictly more than ``beta`` apart.
    """
    epsilon, beta = as_rational(epsilon), as_rational(beta)
    w = dict(c0_weights)
    bits = g.bits
    masks = _layer_masks(d)
    for l in range(1, len(d.layers)):
        step = epsilon / (n + 1) ** (l - 1)
        below, above = masks[l - 1], masks[l + 1]
        for i in sorted(d.layers[l]):
            prev = bits[i] & below
            if not prev:
                raise PreconditionViolated(f"vertex {i} in layer {l} has no neighbour in layer {l - 1}")
            lowest = min(w[k] for k in members(prev))
            c = bin(bits[i] & above).count("1")
            w[i] = beta + lowest - step * (1 - Fraction(c + 1, n + 1))
    return w


def synthesize(g: Graph, d: DistanceDecomposition, alpha=DEFAULT_ALPHA, beta=DEFAULT_BETA) -> WeightAssignment:
    alpha, beta = as_rational(alpha), as_rational(beta)
    _check_params(alpha, beta)
    if d.unreached:
        raise PreconditionViolated("decomposition does not cover the graph")
    ok, why = check_theorem_conditions(g, d)
    if not ok:
        raise PreconditionViolated(str(why))
    c0w = assign_c0_weights(g, d.layers[0], alpha, beta)
    eps = choose_epsilon(c0w, alpha, beta, g.n)
    w = assign_layer_weights(g, d, c0w, eps, alpha, beta, g.n)
    wa = WeightAssignment(alpha, beta, tuple(w[i] for i in range(g.n)))
    good, pair = verify_dt(g, wa)
    if not good:
        raise SynthesisFailed(f"synthesized weights disagree with the graph at pair {pair}")
    return wa


def synthesis_epsilon(g: Graph, d: DistanceDecomposition, wa: WeightAssignment) -> Fraction:
    """Recover the epsilon used by :func:`synthesize` (for bound checks)."""
    c0w = {i: wa.w[i] for i in d.layers[0]}
    return choose_epsilon(c0w, wa.alpha, wa.beta, g.n)


def layer_bounds(alpha, beta, epsilon, n: int, l: int) -> tuple[Fraction, Fraction]:
    """Open interval that every layer-``l`` weight of a synthesized assignment lies in."""
    alpha, beta, epsilon = map(as_rational, (alpha, beta, epsilon))
    lo = (alpha + (2 * l - 1) * beta) / 2 + epsilon / (n * Fraction(n + 1) ** (l - 1))
    hi = (alpha + (2 * l + 1) * beta) / 2
    return lo, hi
