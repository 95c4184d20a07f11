"""
Core vocabulary for STRIPS planning: objects, atoms, states, worlds,
action schemas, ground actions, domains, problems and plans.

All values are immutable after construction and safe to share.

"""

########################################################################
#                                                                      #
# This script was written by the PlanCheck developers in 2024.         #
#                                                                      #
# Copyright 2024 PlanCheck developers                                  #
#                                                                      #
# Licensed under the Apache License, Version 2.0 (the "License");      #
# you may not use this file except in compliance with the License.     #
# You may obtain a copy of the License at                              #
#                                                                      #
#    http://www.apache.org/licenses/LICENSE-2.0                        #
#                                                                      #
# Unless required by applicable law or agreed to in writing, software  #
# distributed under the License is distributed on an "AS IS" BASIS,    #
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or      #
# implied.                                                             #
# See the License for the specific language governing permissions and  #
# limitations under the License.                                       #
#                                                                      #
########################################################################

from collections import Counter
from dataclasses import dataclass, field
import enum
import logging
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple, Union


__all__ = [
    "TypeName",
    "OBJECT_TYPE",
    "ObjectRef",
    "Polarity",
    "negate",
    "PredicateDecl",
    "GroundAtom",
    "Literal",
    "State",
    "World",
    "Variable",
    "Parameter",
    "SchemaLiteral",
    "ActionSchema",
    "GroundActionDescription",
    "GroundAction",
    "Domain",
    "Problem",
    "Plan",
    "well_formed_domain",
    "well_formed_problem",
]


log = logging.getLogger(__name__)


TypeName = str
"""A declared type; identifiers are compared case-sensitively"""

OBJECT_TYPE = "object"
"""Implicit type of names declared without ``- type``"""


@dataclass(frozen=True)
class ObjectRef(object):
    name: str
    type: TypeName = OBJECT_TYPE

    def __str__(self):
        return self.name


class Polarity(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def negate(self) -> "Polarity":
        if self is Polarity.POSITIVE:
            return Polarity.NEGATIVE
        return Polarity.POSITIVE

    def __str__(self):
        return self.value


def negate(z: Polarity) -> Polarity:
    """Return the opposite polarity"""
    return z.negate()


@dataclass(frozen=True)
class PredicateDecl(object):
    name: str
    param_types: Tuple[TypeName, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.param_types)


@dataclass(frozen=True)
class GroundAtom(object):
    predicate: str
    args: Tuple[ObjectRef, ...] = ()

    def to_dict(self) -> dict:
        return {"pred": self.predicate, "args": [a.name for a in self.args]}

    def __str__(self):
        return "{}({})".format(self.predicate, ",".join(a.name for a in self.args))


@dataclass(frozen=True)
class Literal(object):
    polarity: Polarity
    atom: GroundAtom

    @classmethod
    def pos(cls, atom: GroundAtom) -> "Literal":
        return cls(Polarity.POSITIVE, atom)

    @classmethod
    def neg(cls, atom: GroundAtom) -> "Literal":
        return cls(Polarity.NEGATIVE, atom)

    @property
    def positive(self) -> bool:
        return self.polarity is Polarity.POSITIVE

    def to_dict(self) -> dict:
        out = self.atom.to_dict()
        out["polarity"] = self.polarity.value
        return out

    def __str__(self):
        return "{}{}".format(self.polarity, self.atom)


@dataclass(frozen=True)
class State(object):
    """
    An ordered sequence of literals.

    Used for preconditions, effects and goals. Order matters for effects
    (see :func:`plancheck.semantics.update_world`).
    """

    literals: Tuple[Literal, ...] = ()

    def __iter__(self) -> Iterator[Literal]:
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    def __getitem__(self, item):
        return self.literals[item]

    def is_normalized(self) -> bool:
        """True if no atom occurs twice, whatever the polarities"""
        atoms = [lit.atom for lit in self.literals]
        return len(set(atoms)) == len(atoms)

    def positives(self) -> Tuple[GroundAtom, ...]:
        return tuple(lit.atom for lit in self.literals if lit.positive)

    def negatives(self) -> Tuple[GroundAtom, ...]:
        return tuple(lit.atom for lit in self.literals if not lit.positive)

    def __str__(self):
        return "[{}]".format(", ".join(str(lit) for lit in self.literals))


@dataclass(frozen=True)
class World(object):
    """
    An ordered sequence of ground atoms, read under the closed-world
    assumption: atoms not listed are false.

    Duplicates are allowed; membership and equality via :meth:`set_eq`
    ignore order and multiplicity. ``==`` compares the sequences exactly.
    """

    atoms: Tuple[GroundAtom, ...] = ()

    def __iter__(self) -> Iterator[GroundAtom]:
        return iter(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __contains__(self, atom):
        return atom in self.atoms

    def as_set(self) -> FrozenSet[GroundAtom]:
        return frozenset(self.atoms)

    def set_eq(self, other: "World") -> bool:
        return self.as_set() == other.as_set()

    def duplicates(self) -> List[GroundAtom]:
        return [atom for atom, n in Counter(self.atoms).items() if n > 1]

    def __str__(self):
        return "[{}]".format(", ".join(str(a) for a in self.atoms))


@dataclass(frozen=True)
class Variable(object):
    """A ``?``-prefixed reference to a schema parameter (name without ``?``)"""

    name: str

    def __str__(self):
        return "?" + self.name


SchemaArg = Union[Variable, ObjectRef]


@dataclass(frozen=True)
class Parameter(object):
    name: str
    type: TypeName = OBJECT_TYPE


@dataclass(frozen=True)
class SchemaLiteral(object):
    polarity: Polarity
    predicate: str
    args: Tuple[SchemaArg, ...] = ()

    @property
    def positive(self) -> bool:
        return self.polarity is Polarity.POSITIVE


@dataclass(frozen=True)
class ActionSchema(object):
    name: str
    params: Tuple[Parameter, ...] = ()
    preconditions: Tuple[SchemaLiteral, ...] = ()
    effects: Tuple[SchemaLiteral, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.params)


@dataclass(frozen=True)
class GroundActionDescription(object):
    preconditions: State = State()
    effects: State = State()

    def to_dict(self) -> dict:
        return {
            "preconditions": [lit.to_dict() for lit in self.preconditions],
            "effects": [lit.to_dict() for lit in self.effects],
        }


@dataclass(frozen=True)
class GroundAction(object):
    name: str
    args: Tuple[ObjectRef, ...] = ()

    def to_dict(self) -> dict:
        return {"name": self.name, "args": [a.name for a in self.args]}

    def __str__(self):
        return "{}({})".format(self.name, ",".join(a.name for a in self.args))


@dataclass(frozen=True)
class Domain(object):
    name: str = "domain"
    types: Tuple[TypeName, ...] = ()
    predicates: Tuple[PredicateDecl, ...] = ()
    schemas: Tuple[ActionSchema, ...] = ()
    requirements: Tuple[str, ...] = ()
    _predicates: Dict[str, PredicateDecl] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _schemas: Dict[str, ActionSchema] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        # first declaration wins; duplicates are reported by
        # well_formed_domain
        preds, schemas = dict(), dict()
        for p in self.predicates:
            preds.setdefault(p.name, p)
        for s in self.schemas:
            schemas.setdefault(s.name, s)
        object.__setattr__(self, "_predicates", preds)
        object.__setattr__(self, "_schemas", schemas)

    def predicate(self, name: str) -> Optional[PredicateDecl]:
        return self._predicates.get(name)

    def schema(self, name: str) -> Optional[ActionSchema]:
        return self._schemas.get(name)

    def has_type(self, type_name: TypeName) -> bool:
        return type_name == OBJECT_TYPE or type_name in self.types


@dataclass(frozen=True)
class Problem(object):
    name: str = "problem"
    domain_name: str = "domain"
    objects: Tuple[ObjectRef, ...] = ()
    initial_world: World = World()
    goal: State = State()
    _objects: Dict[str, ObjectRef] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        objs = dict()
        for o in self.objects:
            objs.setdefault(o.name, o)
        object.__setattr__(self, "_objects", objs)

    def object(self, name: str) -> Optional[ObjectRef]:
        return self._objects.get(name)

    def objects_of_type(self, type_name: TypeName) -> Tuple[ObjectRef, ...]:
        return tuple(o for o in self.objects if o.type == type_name)


@dataclass(frozen=True)
class Plan(object):
    actions: Tuple[GroundAction, ...] = ()

    def __iter__(self) -> Iterator[GroundAction]:
        return iter(self.actions)

    def __len__(self):
        return len(self.actions)

    def __getitem__(self, item):
        return self.actions[item]


def _duplicates(names) -> List[str]:
    seen, dups = set(), []
    for name in names:
        if name in seen and name not in dups:
            dups.append(name)
        seen.add(name)
    return dups


def _check_atom_args(
    where: str, decl: PredicateDecl, arg_types: List[TypeName], arg_names
) -> List[str]:
    if len(arg_types) != decl.arity:
        return [
            "{}: arity mismatch for {}: expected {}, got {}".format(
                where, decl.name, decl.arity, len(arg_types)
            )
        ]
    return [
        "{}: argument type mismatch: {} vs {} ({} of {})".format(
            where, got, want, name, decl.name
        )
        for got, want, name in zip(arg_types, decl.param_types, arg_names)
        if got != want
    ]


def well_formed_domain(d: Domain) -> List[str]:
    """
    Check the invariants of a domain.

    :param d: the domain to check
    :return: list of violations, each naming the offending declaration;
        empty if the domain is well formed
    """
    violations = ["duplicate type {}".format(n) for n in _duplicates(d.types)]
    violations += [
        "duplicate predicate {}".format(n)
        for n in _duplicates(p.name for p in d.predicates)
    ]
    violations += [
        "duplicate action {}".format(n)
        for n in _duplicates(s.name for s in d.schemas)
    ]
    for pred in d.predicates:
        violations += [
            "predicate {}: undeclared type {}".format(pred.name, t)
            for t in pred.param_types
            if not d.has_type(t)
        ]
    for schema in d.schemas:
        violations += _schema_violations(d, schema)
    return violations


def _schema_violations(d: Domain, schema: ActionSchema) -> List[str]:
    where = "action {}".format(schema.name)
    out = [
        "{}: duplicate parameter ?{}".format(where, n)
        for n in _duplicates(p.name for p in schema.params)
    ]
    out += [
        "{}: undeclared type {} for ?{}".format(where, p.type, p.name)
        for p in schema.params
        if not d.has_type(p.type)
    ]
    param_types = {p.name: p.type for p in schema.params}
    for section, lits in (("precondition", schema.preconditions),
                          ("effect", schema.effects)):
        for lit in lits:
            decl = d.predicate(lit.predicate)
            if decl is None:
                out.append(
                    "{} {}: unknown predicate {}".format(
                        where, section, lit.predicate
                    )
                )
                continue
            types = []
            for arg in lit.args:
                if isinstance(arg, Variable):
                    if arg.name not in param_types:
                        out.append(
                            "{} {}: unbound variable {}".format(where, section, arg)
                        )
                    types.append(param_types.get(arg.name))
                else:
                    types.append(arg.type)
            if None in types:
                continue
            out += _check_atom_args(
                "{} {}".format(where, section), decl, types, lit.args
            )
    return out


def _atom_violations(d: Domain, p: Problem, where: str, atom: GroundAtom):
    decl = d.predicate(atom.predicate)
    if decl is None:
        return ["{}: unknown predicate {}".format(where, atom.predicate)]
    out = []
    for arg in atom.args:
        declared = p.object(arg.name)
        if declared is None:
            out.append("{}: unknown object {}".format(where, arg.name))
        elif declared != arg:
            out.append(
                "{}: object {} declared as {}, used as {}".format(
                    where, arg.name, declared.type, arg.type
                )
            )
    return out + _check_atom_args(
        where, decl, [a.type for a in atom.args], atom.args
    )


def well_formed_problem(d: Domain, p: Problem) -> List[str]:
    """
    Check a problem against its (well formed) domain.

    :param d: domain the problem is stated in
    :param p: the problem to check
    :return: list of violations; empty if the problem is well formed
    """
    violations = [
        "duplicate object {}".format(n) for n in _duplicates(o.name for o in p.objects)
    ]
    violations += [
        "object {}: undeclared type {}".format(o.name, o.type)
        for o in p.objects
        if not d.has_type(o.type)
    ]
    for atom in p.initial_world:
        violations += _atom_violations(d, p, "init {}".format(atom), atom)
    for lit in p.goal:
        violations += _atom_violations(d, p, "goal {}".format(lit), lit.atom)
    return violations
