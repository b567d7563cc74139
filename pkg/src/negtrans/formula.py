"""First-order formula AST and syntactic operations.

Terms are variables or constants (no function symbols). Negation is not a
constructor: ``~A`` is represented as ``Imp(A, Bottom())``, so replacing
``Bottom`` by another sentence rewrites negations as well. Formula values
are immutable and hashable; alpha-equivalence (not syntactic identity) is
the working notion of formula equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")


def _check_ident(name: str) -> None:
    if not isinstance(name, str) or not _IDENT_RE.fullmatch(name):
        raise ValueError(f"bad identifier: {name!r}")


@dataclass(frozen=True)
class Variable:
    name: str

    def __post_init__(self):
        _check_ident(self.name)

    def __repr__(self):
        return f"Variable({self.name})"


@dataclass(frozen=True)
class Constant:
    name: str

    def __post_init__(self):
        _check_ident(self.name)

    def __repr__(self):
        return f"Constant({self.name})"


Term = Union[Variable, Constant]


class Formula:
    """Base class; subclasses are the seven constructors."""

    __slots__ = ()

    def __invert__(self) -> "Formula":
        return neg(self)


@dataclass(frozen=True)
class Bottom(Formula):
    __slots__ = ()

    def __repr__(self):
        return "Bottom"


@dataclass(frozen=True)
class Atom(Formula):
    pred: str
    args: tuple = ()

    def __post_init__(self):
        _check_ident(self.pred)
        object.__setattr__(self, "args", tuple(self.args))

    def __repr__(self):
        if not self.args:
            return f"Atom({self.pred})"
        return f"Atom({self.pred}({', '.join(t.name for t in self.args)}))"


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        _check_ident(self.var)


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        _check_ident(self.var)


BOT = Bottom()


def neg(a: Formula) -> Imp:
    """~A as sugar: Imp(A, Bottom)."""
    return Imp(a, BOT)


def as_negation(a: Formula) -> Optional[Formula]:
    """Return X if a is Imp(X, Bottom), else None."""
    if isinstance(a, Imp) and isinstance(a.right, Bottom):
        return a.left
    return None


def iff(a: Formula, b: Formula) -> Formula:
    return And(Imp(a, b), Imp(b, a))


def subformulas(a: Formula) -> Iterator[Formula]:
    """Preorder walk including a itself."""
    yield a
    if isinstance(a, (And, Or, Imp)):
        yield from subformulas(a.left)
        yield from subformulas(a.right)
    elif isinstance(a, (Forall, Exists)):
        yield from subformulas(a.body)


def size(a: Formula) -> int:
    """Node count of the AST (term arguments not counted)."""
    return sum(1 for _ in subformulas(a))


def free_vars(a: Formula) -> set:
    """Names with a free occurrence in a."""
    out: set = set()

    def walk(f: Formula, bound: frozenset) -> None:
        if isinstance(f, Atom):
            for t in f.args:
                if isinstance(t, Variable) and t.name not in bound:
                    out.add(t.name)
        elif isinstance(f, (And, Or, Imp)):
            walk(f.left, bound)
            walk(f.right, bound)
        elif isinstance(f, (Forall, Exists)):
            walk(f.body, bound | {f.var})

    walk(a, frozenset())
    return out


def constants(a: Formula) -> set:
    """Constant names occurring in a."""
    out: set = set()
    for f in subformulas(a):
        if isinstance(f, Atom):
            out.update(t.name for t in f.args if isinstance(t, Constant))
    return out


def predicates(a: Formula) -> set:
    """Predicate names (with arity) occurring in a, as (name, arity) pairs."""
    return {(f.pred, len(f.args)) for f in subformulas(a) if isinstance(f, Atom)}


def is_closed(a: Formula) -> bool:
    return not free_vars(a)


def is_propositional(a: Formula) -> bool:
    """True iff a has no quantifiers and only nullary atoms."""
    for f in subformulas(a):
        if isinstance(f, (Forall, Exists)):
            return False
        if isinstance(f, Atom) and f.args:
            return False
    return True


def atom_instances(a: Formula) -> set:
    """Ground atom occurrences as (pred, arg-name-tuple) pairs.

    Only meaningful for formulas whose atoms carry no free variables at the
    call site (propositional formulas in particular).
    """
    out: set = set()
    for f in subformulas(a):
        if isinstance(f, Atom):
            out.add((f.pred, tuple(t.name for t in f.args)))
    return out


# -- substitution -----------------------------------------------------------


def substitute_bottom(a: Formula, f: Formula) -> Formula:
    """Replace every Bottom occurrence in a by f.

    f must be a closed sentence: substitution under binders would otherwise
    depend on capture, which this operation refuses to resolve silently.
    """
    if not is_closed(f):
        raise ValueError(
            f"substitute_bottom requires a closed replacement; free: {sorted(free_vars(f))}"
        )
    if isinstance(f, Bottom):
        return a

    def walk(x: Formula) -> Formula:
        if isinstance(x, Bottom):
            return f
        if isinstance(x, Atom):
            return x
        if isinstance(x, And):
            return And(walk(x.left), walk(x.right))
        if isinstance(x, Or):
            return Or(walk(x.left), walk(x.right))
        if isinstance(x, Imp):
            return Imp(walk(x.left), walk(x.right))
        if isinstance(x, Forall):
            return Forall(x.var, walk(x.body))
        if isinstance(x, Exists):
            return Exists(x.var, walk(x.body))
        raise TypeError(f"not a formula: {x!r}")

    return walk(a)


def _fresh_name(base: str, taken: set) -> str:
    if base not in taken:
        return base
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    return f"{base}{i}"


def substitute_var(a: Formula, var: str, t: Term) -> Formula:
    """Capture-avoiding substitution of term t for free occurrences of var."""

    def walk(x: Formula, sub: dict) -> Formula:
        if isinstance(x, Bottom):
            return x
        if isinstance(x, Atom):
            new_args = tuple(
                sub.get(arg.name, arg) if isinstance(arg, Variable) else arg
                for arg in x.args
            )
            return Atom(x.pred, new_args)
        if isinstance(x, (And, Or, Imp)):
            cls = type(x)
            return cls(walk(x.left, sub), walk(x.right, sub))
        if isinstance(x, (Forall, Exists)):
            cls = type(x)
            sub2 = {k: v for k, v in sub.items() if k != x.var}
            if not sub2:
                return x
            clash = {v.name for v in sub2.values() if isinstance(v, Variable)}
            if x.var in clash:
                fresh = _fresh_name(x.var, clash | free_vars(x.body) | set(sub2))
                body = walk(x.body, {x.var: Variable(fresh)})
                return cls(fresh, walk(body, sub2))
            return cls(x.var, walk(x.body, sub2))
        raise TypeError(f"not a formula: {x!r}")

    return walk(a, {var: t})


# -- alpha-equivalence ------------------------------------------------------


def alpha_key(a: Formula) -> str:
    """Canonical string invariant under renaming of bound variables.

    Two formulas are alpha-equal iff their keys coincide. Free variables and
    constants are kept by name; bound variables become de Bruijn levels.
    """

    parts: list = []

    def walk(f: Formula, env: dict, depth: int) -> None:
        if isinstance(f, Bottom):
            parts.append("#")
        elif isinstance(f, Atom):
            parts.append(f.pred)
            parts.append("(")
            for t in f.args:
                if isinstance(t, Variable):
                    lvl = env.get(t.name)
                    parts.append(f"b{lvl}" if lvl is not None else f"v:{t.name}")
                else:
                    parts.append(f"c:{t.name}")
                parts.append(",")
            parts.append(")")
        elif isinstance(f, And):
            parts.append("&(")
            walk(f.left, env, depth)
            parts.append(";")
            walk(f.right, env, depth)
            parts.append(")")
        elif isinstance(f, Or):
            parts.append("|(")
            walk(f.left, env, depth)
            parts.append(";")
            walk(f.right, env, depth)
            parts.append(")")
        elif isinstance(f, Imp):
            parts.append(">(")
            walk(f.left, env, depth)
            parts.append(";")
            walk(f.right, env, depth)
            parts.append(")")
        elif isinstance(f, Forall):
            parts.append("A(")
            walk(f.body, {**env, f.var: depth}, depth + 1)
            parts.append(")")
        elif isinstance(f, Exists):
            parts.append("E(")
            walk(f.body, {**env, f.var: depth}, depth + 1)
            parts.append(")")
        else:
            raise TypeError(f"not a formula: {f!r}")

    walk(a, {}, 0)
    return "".join(parts)


def alpha_eq(a: Formula, b: Formula) -> bool:
    """True iff a and b are identical up to renaming of bound variables."""
    return a == b or alpha_key(a) == alpha_key(b)


# -- negative fragment ------------------------------------------------------


def _strict_nf(a: Formula) -> bool:
    if isinstance(a, Bottom):
        return True
    if isinstance(a, Atom):
        return False
    if isinstance(a, (Or, Exists)):
        return False
    inner = as_negation(a)
    if inner is not None:
        inner2 = as_negation(inner)
        if isinstance(inner2, Atom):
            return True
    if isinstance(a, (And, Imp)):
        return _strict_nf(a.left) and _strict_nf(a.right)
    if isinstance(a, Forall):
        return _strict_nf(a.body)
    raise TypeError(f"not a formula: {a!r}")


def in_negative_fragment(a: Formula, strict: bool = False) -> bool:
    """Membership in the disjunction- and existential-free fragment.

    Lenient mode only forbids Or and Exists nodes. Strict mode additionally
    requires every atom other than Bottom to sit directly under a double
    negation, which is the shape the Goedel-Gentzen images have.
    """
    if strict:
        return _strict_nf(a)
    return not any(isinstance(f, (Or, Exists)) for f in subformulas(a))
