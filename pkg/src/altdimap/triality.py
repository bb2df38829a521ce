"""The trial D -> D^w -> D^w2, a cyclic shift of the permutation triple."""

from __future__ import annotations

from .algebra import ParamSeq16
from .core import AlternatingDimap, PermutationTriple, from_triple, inverse
from .reductions import EdgeClass, ReductionKind

# parameter slots of F(D^w) and F(D^w2) in terms of those of F(D)
TRIAL_PARAM_ORDER = ("w", "z", "x", "y", "h", "i", "g", "b", "c", "a", "e", "f", "d", "k", "l", "j")
TRIAL2_PARAM_ORDER = ("w", "y", "z", "x", "f", "d", "e", "i", "g", "h", "c", "a", "b", "l", "j", "k")

_CLASS_CYCLE = {
    EdgeClass.ULTRALOOP: EdgeClass.ULTRALOOP,
    EdgeClass.PROPER_EDGE: EdgeClass.PROPER_EDGE,
    EdgeClass.PROPER_1_LOOP: EdgeClass.PROPER_OMEGA_LOOP,
    EdgeClass.PROPER_OMEGA_LOOP: EdgeClass.PROPER_OMEGA2_LOOP,
    EdgeClass.PROPER_OMEGA2_LOOP: EdgeClass.PROPER_1_LOOP,
    EdgeClass.PROPER_1_SEMILOOP: EdgeClass.PROPER_OMEGA_SEMILOOP,
    EdgeClass.PROPER_OMEGA_SEMILOOP: EdgeClass.PROPER_OMEGA2_SEMILOOP,
    EdgeClass.PROPER_OMEGA2_SEMILOOP: EdgeClass.PROPER_1_SEMILOOP,
}

_POWER = {ReductionKind.ONE: 0, ReductionKind.OMEGA: 1, ReductionKind.OMEGA2: 2}
_KIND = {v: k for k, v in _POWER.items()}


def trial_triple(t: PermutationTriple) -> PermutationTriple:
    # (s, l, r) -> (r^-1, s, l^-1); then is' = cf, af' = is, cf' = af
    return PermutationTriple(inverse(t.sigmaw2), dict(t.sigma1), inverse(t.sigmaw))


def trial(d: AlternatingDimap) -> AlternatingDimap:
    """D^w. Edge names are kept; vertices are renamed v1, v2, ..."""
    return from_triple(trial_triple(d.to_triple()))


def trial2(d: AlternatingDimap) -> AlternatingDimap:
    return trial(trial(d))


def trial_power(d: AlternatingDimap, n: int) -> AlternatingDimap:
    for _ in range(n % 3):
        d = trial(d)
    return d


def trial_class(c: EdgeClass) -> EdgeClass:
    return _CLASS_CYCLE[c]


def compose_kinds(mu: ReductionKind, nu: ReductionKind) -> ReductionKind:
    """Product in the cyclic group {1, w, w2}."""
    return _KIND[(_POWER[mu] + _POWER[nu]) % 3]


def kind_power(kind: ReductionKind) -> int:
    return _POWER[kind]


def trial_params(params: ParamSeq16, times: int = 1) -> ParamSeq16:
    """The sequence P' with F(D^w; P') matching F(D; P) ordering by ordering."""
    order = (None, TRIAL_PARAM_ORDER, TRIAL2_PARAM_ORDER)[times % 3]
    return params.permuted(order) if order else params
