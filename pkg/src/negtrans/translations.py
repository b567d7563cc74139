"""The six negative translations and their image-shape checkers.

Kolmogorov double-negates every subformula (Bottom included, so that the
parameterized variants below always have something to substitute).
Goedel-Gentzen double-negates atoms and rewrites disjunction/existential
into the negative fragment. Kuroda prefixes one double negation and adds
one under every universal quantifier. Krivine negates a dualizing
auxiliary map. The two parameterized translations build on Kolmogorov:
``vee_f`` disjoins a fixed sentence F, ``subst_f`` substitutes F for
Bottom. The parameter F must be closed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .formula import (
    And,
    Atom,
    Bottom,
    Exists,
    Forall,
    Formula,
    Imp,
    Or,
    alpha_eq,
    in_negative_fragment,
    is_closed,
    neg,
    substitute_bottom,
)


class TranslationKind(enum.Enum):
    KOLMOGOROV = "kolmogorov"
    GOEDEL_GENTZEN = "goedel-gentzen"
    KURODA = "kuroda"
    KRIVINE = "krivine"
    VEE_F = "vee-f"
    SUBST_F = "subst-f"


_PARAMETERIZED = (TranslationKind.VEE_F, TranslationKind.SUBST_F)


@dataclass(frozen=True)
class TranslationSpec:
    kind: TranslationKind
    param_f: Optional[Formula] = None

    def __post_init__(self):
        if self.kind in _PARAMETERIZED:
            if self.param_f is None:
                raise ValueError(f"{self.kind.value} requires the parameter sentence F")
            if not is_closed(self.param_f):
                raise ValueError(f"{self.kind.value} parameter F must be closed")
        elif self.param_f is not None:
            raise ValueError(f"{self.kind.value} takes no parameter")


def kolmogorov(a: Formula) -> Formula:
    if isinstance(a, (Bottom, Atom)):
        return neg(neg(a))
    if isinstance(a, (And, Or, Imp)):
        cls = type(a)
        return neg(neg(cls(kolmogorov(a.left), kolmogorov(a.right))))
    if isinstance(a, (Forall, Exists)):
        cls = type(a)
        return neg(neg(cls(a.var, kolmogorov(a.body))))
    raise TypeError(f"not a formula: {a!r}")


def goedel_gentzen(a: Formula) -> Formula:
    if isinstance(a, Bottom):
        return a
    if isinstance(a, Atom):
        return neg(neg(a))
    if isinstance(a, (And, Imp)):
        cls = type(a)
        return cls(goedel_gentzen(a.left), goedel_gentzen(a.right))
    if isinstance(a, Or):
        return neg(And(neg(goedel_gentzen(a.left)), neg(goedel_gentzen(a.right))))
    if isinstance(a, Forall):
        return Forall(a.var, goedel_gentzen(a.body))
    if isinstance(a, Exists):
        return neg(Forall(a.var, neg(goedel_gentzen(a.body))))
    raise TypeError(f"not a formula: {a!r}")


def _kuroda_star(a: Formula) -> Formula:
    if isinstance(a, (Bottom, Atom)):
        return a
    if isinstance(a, (And, Or, Imp)):
        cls = type(a)
        return cls(_kuroda_star(a.left), _kuroda_star(a.right))
    if isinstance(a, Forall):
        return Forall(a.var, neg(neg(_kuroda_star(a.body))))
    if isinstance(a, Exists):
        return Exists(a.var, _kuroda_star(a.body))
    raise TypeError(f"not a formula: {a!r}")


def kuroda(a: Formula) -> Formula:
    return neg(neg(_kuroda_star(a)))


def _krivine_dual(a: Formula) -> Formula:
    # maps A to a formula classically equivalent to ~A
    if isinstance(a, (Bottom, Atom)):
        return neg(a)
    if isinstance(a, And):
        return Or(_krivine_dual(a.left), _krivine_dual(a.right))
    if isinstance(a, Or):
        return And(_krivine_dual(a.left), _krivine_dual(a.right))
    if isinstance(a, Imp):
        return And(neg(_krivine_dual(a.left)), _krivine_dual(a.right))
    if isinstance(a, Forall):
        return Exists(a.var, _krivine_dual(a.body))
    if isinstance(a, Exists):
        return Forall(a.var, _krivine_dual(a.body))
    raise TypeError(f"not a formula: {a!r}")


def krivine(a: Formula) -> Formula:
    return neg(_krivine_dual(a))


def translate(spec: TranslationSpec, a: Formula) -> Formula:
    if spec.kind is TranslationKind.KOLMOGOROV:
        return kolmogorov(a)
    if spec.kind is TranslationKind.GOEDEL_GENTZEN:
        return goedel_gentzen(a)
    if spec.kind is TranslationKind.KURODA:
        return kuroda(a)
    if spec.kind is TranslationKind.KRIVINE:
        return krivine(a)
    if spec.kind is TranslationKind.VEE_F:
        return Or(kolmogorov(a), spec.param_f)
    if spec.kind is TranslationKind.SUBST_F:
        return substitute_bottom(kolmogorov(a), spec.param_f)
    raise ValueError(f"unknown translation kind: {spec.kind!r}")


def invert_subst_bottom(b: Formula, f: Formula) -> Formula:
    """Replace subformula occurrences alpha-equal to f by Bottom.

    Outermost occurrences win: once a match is replaced the walk does not
    descend into it, which makes the inversion deterministic even when f
    itself contains Bottom.
    """
    if alpha_eq(b, f):
        return Bottom()
    if isinstance(b, (Bottom, Atom)):
        return b
    if isinstance(b, (And, Or, Imp)):
        cls = type(b)
        return cls(invert_subst_bottom(b.left, f), invert_subst_bottom(b.right, f))
    if isinstance(b, (Forall, Exists)):
        cls = type(b)
        return cls(b.var, invert_subst_bottom(b.body, f))
    raise TypeError(f"not a formula: {b!r}")


def image_shape_check(spec: TranslationSpec, b: Formula) -> bool:
    """Syntactic membership of b in the translation's image set.

    Goedel-Gentzen images are exactly the strict negative fragment; vee-f
    images have top-level shape C \\/ F with C strict; subst-f images must
    invert (via outermost replacement of F by Bottom) to a strict formula
    that substitutes back to b. The remaining kinds have no negative-
    fragment image syntactically, so only the lenient membership of b is
    reported for them.
    """
    if spec.kind is TranslationKind.GOEDEL_GENTZEN:
        return in_negative_fragment(b, strict=True)
    if spec.kind is TranslationKind.VEE_F:
        if not isinstance(b, Or):
            return False
        return alpha_eq(b.right, spec.param_f) and in_negative_fragment(
            b.left, strict=True
        )
    if spec.kind is TranslationKind.SUBST_F:
        c = invert_subst_bottom(b, spec.param_f)
        return in_negative_fragment(c, strict=True) and alpha_eq(
            substitute_bottom(c, spec.param_f), b
        )
    return in_negative_fragment(b, strict=False)
