"""
Reading and writing the STRIPS subset of PDDL 1.2 and plan files

The subset is the one of ``(:requirements :strips :typing)``: flat types,
typed predicates and actions whose preconditions and effects are
conjunctions of atoms and negated atoms. Negative preconditions are
accepted even though plain STRIPS lacks them.

Plan files hold one ``(action arg1 ... argk)`` per line; ``;`` starts a
comment, so the ``;`` separators some planners print are ignored.

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

import logging
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union

import pyparsing as pp

from .exceptions import ParseError, SourcePos
from .model import (
    OBJECT_TYPE,
    ActionSchema,
    Domain,
    GroundAction,
    GroundAtom,
    Literal,
    ObjectRef,
    Parameter,
    Plan,
    Polarity,
    PredicateDecl,
    Problem,
    SchemaLiteral,
    State,
    Variable,
    World,
    well_formed_domain,
    well_formed_problem,
)


__all__ = [
    "SUPPORTED_REQUIREMENTS",
    "parse_domain",
    "parse_problem",
    "parse_plan",
    "print_domain",
    "print_problem",
    "print_plan",
]


log = logging.getLogger(__name__)


SUPPORTED_REQUIREMENTS = (":strips", ":typing")

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_-]*\Z")

_UNSUPPORTED_SECTIONS = {
    ":constants",
    ":functions",
    ":constraints",
    ":durative-action",
    ":derived",
    ":timeless",
    ":metric",
    ":length",
}

_UNSUPPORTED_HEADS = {
    "or",
    "imply",
    "exists",
    "forall",
    "when",
    "either",
    "=",
    "<",
    ">",
    "<=",
    ">=",
    "increase",
    "decrease",
    "assign",
    "scale-up",
    "scale-down",
    "preference",
}

Text = Union[str, bytes]


class _Token(object):
    __slots__ = ("text", "loc")

    def __init__(self, text: str, loc: int):
        self.text = text
        self.loc = loc

    @property
    def lower(self) -> str:
        return self.text.lower()


class _List(object):
    __slots__ = ("items", "loc")

    def __init__(self, items: list, loc: int):
        self.items = items
        self.loc = loc

    @property
    def head(self) -> Optional[str]:
        """Lower-cased first token, or None if the list is empty or nested"""
        if self.items and isinstance(self.items[0], _Token):
            return self.items[0].lower
        return None


_Node = Union[_Token, _List]


def _build_grammar() -> pp.ParserElement:
    token = pp.Regex(r"[^()\s;]+")
    token.set_parse_action(lambda s, loc, toks: _Token(toks[0], loc))
    expr = pp.Forward()
    group = pp.Literal("(") + pp.ZeroOrMore(expr) + pp.Suppress(")")
    group.set_parse_action(lambda s, loc, toks: _List(list(toks[1:]), loc))
    expr <<= token | group
    document = pp.ZeroOrMore(expr) + pp.StringEnd()
    document.ignore(pp.Regex(r";[^\n]*"))
    document.parse_with_tabs()
    return document


_GRAMMAR = _build_grammar()


def _shift(node: _Node, base: int) -> _Node:
    node.loc += base
    if isinstance(node, _List):
        for item in node.items:
            _shift(item, base)
    return node


def _decode(text: Text, source: Optional[str]) -> str:
    if isinstance(text, str):
        return text
    try:
        return bytes(text).decode("utf-8")
    except UnicodeDecodeError as e:
        line = text.count(b"\n", 0, e.start) + 1
        column = e.start - text.rfind(b"\n", 0, e.start)
        raise ParseError(
            SourcePos(line, column),
            "lex",
            "input is not valid UTF-8 ({})".format(e.reason),
            source,
        )


class _Reader(object):
    """Turns s-expressions into model values, raising positioned errors"""

    def __init__(self, text: Text, source: Optional[str] = None):
        self.source = source
        self.text = _decode(text, source)

    # -- positions and errors ------------------------------------------

    def pos(self, loc: int) -> SourcePos:
        if not self.text:
            return SourcePos(1, 1)
        loc = max(0, min(loc, len(self.text) - 1))
        return SourcePos(pp.lineno(loc, self.text), pp.col(loc, self.text))

    def error(self, at, kind: str, msg: str) -> ParseError:
        loc = at if isinstance(at, int) else at.loc
        return ParseError(self.pos(loc), kind, msg, self.source)

    def read(self, text: Optional[str] = None, base: int = 0) -> List[_Node]:
        text = self.text if text is None else text
        try:
            nodes = list(_GRAMMAR.parse_string(text, parse_all=True))
        except pp.ParseBaseException as e:
            loc = e.loc
            if loc >= len(text):
                msg = "unexpected end of input"
            elif text[loc] == ")":
                msg = "unexpected ')'"
            elif text[loc] == "(":
                msg = "unclosed '('"
            else:
                msg = "unexpected character {!r}".format(text[loc])
            raise self.error(base + loc, "syntax", msg)
        except RecursionError:
            raise self.error(base, "syntax", "expressions nested too deeply")
        return [_shift(node, base) for node in nodes]

    # -- small structural checks ---------------------------------------

    def expect_list(self, node: _Node, what: str) -> _List:
        if not isinstance(node, _List):
            raise self.error(node, "syntax", "expected {}, found {!r}".format(
                what, node.text))
        return node

    def expect_token(self, node: _Node, what: str) -> _Token:
        if not isinstance(node, _Token):
            raise self.error(node, "syntax", "expected {}, found a list".format(what))
        return node

    def ident(self, node: _Node, what: str = "a name") -> str:
        tok = self.expect_token(node, what)
        if not _IDENT.match(tok.text):
            raise self.error(tok, "lex", "invalid identifier {!r}".format(tok.text))
        return tok.text

    def variable(self, node: _Node) -> str:
        tok = self.expect_token(node, "a variable")
        if not tok.text.startswith("?"):
            raise self.error(tok, "syntax", "expected a variable, found {!r}".format(
                tok.text))
        if not _IDENT.match(tok.text[1:]):
            raise self.error(tok, "lex", "invalid variable {!r}".format(tok.text))
        return tok.text[1:]

    def single_define(self, kind: str) -> Tuple[str, List[_Node], _List]:
        nodes = self.read()
        if not nodes:
            raise self.error(0, "syntax", "expected (define ({} ...) ...)".format(kind))
        if len(nodes) > 1:
            raise self.error(nodes[1], "syntax", "unexpected text after definition")
        top = self.expect_list(nodes[0], "(define ...)")
        if top.head != "define" or len(top.items) < 2:
            raise self.error(top, "syntax", "expected (define ({} ...) ...)".format(kind))
        header = self.expect_list(top.items[1], "({} <name>)".format(kind))
        if header.head != kind or len(header.items) != 2:
            raise self.error(header, "syntax", "expected ({} <name>)".format(kind))
        return self.ident(header.items[1]), top.items[2:], top

    def section(self, node: _Node, seen: set) -> Tuple[str, _List]:
        sec = self.expect_list(node, "a section")
        key = sec.head
        if key is None or not key.startswith(":"):
            raise self.error(sec, "syntax", "expected a section keyword")
        if key in _UNSUPPORTED_SECTIONS:
            raise self.error(sec, "unsupported-feature", "{} is not supported".format(
                key))
        if key in seen and key != ":action":
            raise self.error(sec, "syntax", "duplicate section {}".format(key))
        seen.add(key)
        return key, sec

    def requirements(self, sec: _List) -> Tuple[str, ...]:
        reqs = []
        for node in sec.items[1:]:
            tok = self.expect_token(node, "a requirement")
            if tok.lower in SUPPORTED_REQUIREMENTS:
                reqs.append(tok.lower)
            elif tok.text.startswith(":"):
                raise self.error(tok, "unsupported-feature",
                                 "requirement {} is not supported".format(tok.text))
            else:
                raise self.error(tok, "syntax", "expected a requirement keyword")
        return tuple(reqs)

    def typed_list(
        self, items: Sequence[_Node], variables: bool, domain_types
    ) -> List[Tuple[_Token, str, str]]:
        """
        Read ``a b - t1 c - t2 d`` style lists.

        Names with no ``- type`` get :data:`~plancheck.model.OBJECT_TYPE`.

        :return: (token, name, type) for every name in order
        """
        out, pending, i = [], [], 0
        while i < len(items):
            node = items[i]
            if isinstance(node, _Token) and node.text == "-":
                if not pending:
                    raise self.error(node, "syntax", "'-' without names before it")
                if i + 1 >= len(items):
                    raise self.error(node, "syntax", "missing type after '-'")
                type_node = items[i + 1]
                if isinstance(type_node, _List):
                    raise self.error(type_node, "unsupported-feature",
                                     "(either ...) types are not supported")
                type_name = self.ident(type_node, "a type")
                if not domain_types(type_name):
                    raise self.error(type_node, "unknown-name",
                                     "unknown type {}".format(type_name))
                out += [(tok, name, type_name) for tok, name in pending]
                pending = []
                i += 2
                continue
            name = self.variable(node) if variables else self.ident(node)
            pending.append((node, name))
            i += 1
        return out + [(tok, name, OBJECT_TYPE) for tok, name in pending]

    def literals(self, node: _Node) -> List[Tuple[Polarity, _List]]:
        """Flatten a conjunction of (possibly negated) atoms"""
        formula = self.expect_list(node, "a formula")
        if not formula.items:
            return []
        head = formula.head
        if head is None:
            raise self.error(formula, "syntax", "a formula starts with a name")
        if head == "and":
            out = []
            for item in formula.items[1:]:
                out += self.literals(item)
            return out
        if head == "not":
            if len(formula.items) != 2:
                raise self.error(formula, "syntax", "(not ...) takes one atom")
            inner = self.expect_list(formula.items[1], "an atom")
            if inner.head in _UNSUPPORTED_HEADS or inner.head in ("and", "not"):
                raise self.error(inner, "unsupported-feature",
                                 "only atoms can be negated")
            return [(Polarity.NEGATIVE, inner)]
        if head in _UNSUPPORTED_HEADS:
            raise self.error(formula, "unsupported-feature",
                             "({} ...) is not supported".format(head))
        return [(Polarity.POSITIVE, formula)]

    def predicate_of(self, atom: _List, domain: Dict[str, PredicateDecl]):
        if not atom.items:
            raise self.error(atom, "syntax", "empty atom")
        name = self.ident(atom.items[0], "a predicate")
        decl = domain.get(name)
        if decl is None:
            raise self.error(atom.items[0], "unknown-name",
                             "unknown predicate {}".format(name))
        if len(atom.items) - 1 != decl.arity:
            raise self.error(atom, "arity-mismatch",
                             "{} takes {} arguments, {} given".format(
                                 name, decl.arity, len(atom.items) - 1))
        return decl

    def type_check(self, node: _Node, got: str, want: str, owner: str):
        if got != want:
            raise self.error(node, "type-mismatch",
                             "argument type mismatch: {} vs {} in {}".format(
                                 got, want, owner))

    def ground_atom(self, atom: _List, preds, objects: Dict[str, ObjectRef]):
        decl = self.predicate_of(atom, preds)
        args = []
        for node, want in zip(atom.items[1:], decl.param_types):
            name = self.ident(node, "an object")
            obj = objects.get(name)
            if obj is None:
                raise self.error(node, "unknown-name", "unknown object {}".format(name))
            self.type_check(node, obj.type, want, decl.name)
            args.append(obj)
        return GroundAtom(decl.name, tuple(args))


def _check_or_fail(reader: _Reader, at: _Node, violations: List[str]):
    if violations:
        raise reader.error(at, "syntax", violations[0])


def parse_domain(text: Text, source: Optional[str] = None) -> Domain:
    """
    Read a PDDL domain.

    :param text: the domain text (str, or UTF-8 bytes)
    :param source: name used in error messages, e.g. the file name
    :return: a well formed :class:`~plancheck.model.Domain`
    :raises ParseError: with the position of the first problem
    """
    reader = _Reader(text, source)
    name, sections, top = reader.single_define("domain")
    seen = set()
    reqs, types, preds, schemas = (), [], dict(), []
    for node in sections:
        key, sec = reader.section(node, seen)
        if key == ":requirements":
            reqs = reader.requirements(sec)
        elif key == ":types":
            for item in sec.items[1:]:
                if isinstance(item, _Token) and item.text == "-":
                    raise reader.error(item, "unsupported-feature",
                                       "type hierarchies are not supported")
                type_name = reader.ident(item, "a type")
                if type_name in types:
                    raise reader.error(item, "syntax",
                                       "duplicate type {}".format(type_name))
                types.append(type_name)
        elif key == ":predicates":
            for item in sec.items[1:]:
                decl = _read_predicate(reader, item, types)
                if decl.name in preds:
                    raise reader.error(item, "syntax",
                                       "duplicate predicate {}".format(decl.name))
                preds[decl.name] = decl
        elif key == ":action":
            schema = _read_action(reader, sec, types, preds)
            if any(s.name == schema.name for s in schemas):
                raise reader.error(sec, "syntax",
                                   "duplicate action {}".format(schema.name))
            schemas.append(schema)
        else:
            raise reader.error(sec, "syntax", "unknown section {}".format(key))
    domain = Domain(
        name=name,
        types=tuple(types),
        predicates=tuple(preds.values()),
        schemas=tuple(schemas),
        requirements=reqs,
    )
    _check_or_fail(reader, top, well_formed_domain(domain))
    log.debug("Read domain {} with {} actions".format(name, len(schemas)))
    return domain


def _type_lookup(types):
    return lambda t: t == OBJECT_TYPE or t in types


def _read_predicate(reader: _Reader, node: _Node, types) -> PredicateDecl:
    item = reader.expect_list(node, "a predicate declaration")
    if not item.items:
        raise reader.error(item, "syntax", "empty predicate declaration")
    name = reader.ident(item.items[0], "a predicate name")
    params = reader.typed_list(item.items[1:], True, _type_lookup(types))
    return PredicateDecl(name, tuple(t for _, _, t in params))


def _read_action(reader: _Reader, sec: _List, types, preds) -> ActionSchema:
    if len(sec.items) < 2:
        raise reader.error(sec, "syntax", "action needs a name")
    name = reader.ident(sec.items[1], "an action name")
    parts = sec.items[2:]
    if len(parts) % 2:
        raise reader.error(parts[-1], "syntax", "keyword without a value")
    found = dict()
    for key_node, value in zip(parts[::2], parts[1::2]):
        key = reader.expect_token(key_node, "an action keyword").lower
        if key in (":duration", ":condition"):
            raise reader.error(key_node, "unsupported-feature",
                               "{} is not supported".format(key))
        if key not in (":parameters", ":precondition", ":effect"):
            raise reader.error(key_node, "syntax", "unknown keyword {}".format(key))
        if key in found:
            raise reader.error(key_node, "syntax", "duplicate {}".format(key))
        found[key] = value
    params = []
    if ":parameters" in found:
        plist = reader.expect_list(found[":parameters"], "a parameter list")
        for tok, pname, ptype in reader.typed_list(
            plist.items, True, _type_lookup(types)
        ):
            if any(p.name == pname for p in params):
                raise reader.error(tok, "syntax",
                                   "duplicate parameter ?{}".format(pname))
            params.append(Parameter(pname, ptype))
    scope = {p.name: p.type for p in params}
    pre, eff = (), ()
    if ":precondition" in found:
        pre = _schema_literals(reader, found[":precondition"], preds, scope, name)
    if ":effect" in found:
        eff = _schema_literals(reader, found[":effect"], preds, scope, name)
    return ActionSchema(name, tuple(params), pre, eff)


def _schema_literals(reader, node, preds, scope, action) -> Tuple[SchemaLiteral, ...]:
    out = []
    for polarity, atom in reader.literals(node):
        decl = reader.predicate_of(atom, preds)
        args = []
        for arg_node, want in zip(atom.items[1:], decl.param_types):
            tok = reader.expect_token(arg_node, "an argument")
            if tok.text.startswith("?"):
                var = reader.variable(tok)
                if var not in scope:
                    raise reader.error(tok, "unknown-name", "{} is not a parameter "
                                       "of {}".format(tok.text, action))
                reader.type_check(tok, scope[var], want, decl.name)
                args.append(Variable(var))
            else:
                # constants take the declared argument type
                args.append(ObjectRef(reader.ident(tok, "an object"), want))
        out.append(SchemaLiteral(polarity, decl.name, tuple(args)))
    return tuple(out)


def parse_problem(text: Text, d: Domain, source: Optional[str] = None) -> Problem:
    """
    Read a PDDL problem stated in domain ``d``.

    ``:init`` atoms become the initial world in the order written; the goal
    may hold negated atoms.

    :param text: the problem text (str, or UTF-8 bytes)
    :param d: a well formed domain
    :param source: name used in error messages
    :return: a :class:`~plancheck.model.Problem` well formed against ``d``
    :raises ParseError: with the position of the first problem
    """
    reader = _Reader(text, source)
    name, sections, top = reader.single_define("problem")
    seen = set()
    preds = {p.name: p for p in d.predicates}
    domain_name, objects, init, goal = d.name, dict(), [], []
    for node in sections:
        key, sec = reader.section(node, seen)
        if key == ":domain":
            if len(sec.items) != 2:
                raise reader.error(sec, "syntax", "expected (:domain <name>)")
            domain_name = reader.ident(sec.items[1])
            if domain_name != d.name:
                raise reader.error(sec.items[1], "unknown-name",
                                   "problem is for domain {}, not {}".format(
                                       domain_name, d.name))
        elif key == ":requirements":
            reader.requirements(sec)
        elif key == ":objects":
            for tok, oname, otype in reader.typed_list(
                sec.items[1:], False, d.has_type
            ):
                if oname in objects:
                    raise reader.error(tok, "syntax",
                                       "duplicate object {}".format(oname))
                objects[oname] = ObjectRef(oname, otype)
        elif key == ":init":
            for item in sec.items[1:]:
                atom = reader.expect_list(item, "an atom")
                if atom.head == "not" or atom.head in _UNSUPPORTED_HEADS:
                    raise reader.error(atom, "unsupported-feature",
                                       "only atoms are allowed in :init")
                init.append(reader.ground_atom(atom, preds, objects))
        elif key == ":goal":
            if len(sec.items) != 2:
                raise reader.error(sec, "syntax", "expected (:goal <formula>)")
            goal = [
                Literal(polarity, reader.ground_atom(atom, preds, objects))
                for polarity, atom in reader.literals(sec.items[1])
            ]
        else:
            raise reader.error(sec, "syntax", "unknown section {}".format(key))
    problem = Problem(
        name=name,
        domain_name=domain_name,
        objects=tuple(objects.values()),
        initial_world=World(tuple(init)),
        goal=State(tuple(goal)),
    )
    _check_or_fail(reader, top, well_formed_problem(d, problem))
    dups = problem.initial_world.duplicates()
    if dups:
        log.warning("Initial world lists {} more than once".format(
            ", ".join(str(a) for a in dups)))
    log.debug("Read problem {} with {} objects".format(name, len(objects)))
    return problem


def parse_plan(
    text: Text, d: Domain, p: Problem, source: Optional[str] = None
) -> Plan:
    """
    Read a plan, one ground action per line.

    :param text: the plan text (str, or UTF-8 bytes)
    :param d: domain the actions come from
    :param p: problem whose objects the arguments name
    :param source: name used in error messages
    :return: the :class:`~plancheck.model.Plan`, actions in file order
    :raises ParseError: for malformed lines, unknown names, wrong arity or
        wrong argument types
    """
    reader = _Reader(text, source)
    actions, base = [], 0
    for line in reader.text.split("\n"):
        start, base = base, base + len(line) + 1
        code = line.split(";", 1)[0]
        if not code.strip():
            continue
        nodes = reader.read(code, start)
        if len(nodes) != 1:
            raise reader.error(nodes[1], "syntax", "one action per line")
        actions.append(_read_ground_action(reader, nodes[0], d, p))
    log.debug("Read plan with {} actions".format(len(actions)))
    return Plan(tuple(actions))


def _read_ground_action(reader: _Reader, node: _Node, d: Domain, p: Problem):
    item = reader.expect_list(node, "(action args...)")
    if not item.items:
        raise reader.error(item, "syntax", "empty action")
    name = reader.ident(item.items[0], "an action name")
    schema = d.schema(name)
    if schema is None:
        raise reader.error(item.items[0], "unknown-name",
                           "unknown action {}".format(name))
    arg_nodes = item.items[1:]
    if len(arg_nodes) != schema.arity:
        raise reader.error(item, "arity-mismatch", "{} takes {} arguments, {} "
                           "given".format(name, schema.arity, len(arg_nodes)))
    args = []
    for arg_node, param in zip(arg_nodes, schema.params):
        oname = reader.ident(arg_node, "an object")
        obj = p.object(oname)
        if obj is None:
            raise reader.error(arg_node, "unknown-name",
                               "unknown object {}".format(oname))
        reader.type_check(arg_node, obj.type, param.type, name)
        args.append(obj)
    return GroundAction(name, tuple(args))


def _schema_arg(arg) -> str:
    return str(arg) if isinstance(arg, Variable) else arg.name


def _schema_literal(lit: SchemaLiteral) -> str:
    atom = "({})".format(" ".join([lit.predicate] + [_schema_arg(a) for a in lit.args]))
    return atom if lit.positive else "(not {})".format(atom)


def _ground_literal(lit: Literal) -> str:
    atom = _atom(lit.atom)
    return atom if lit.positive else "(not {})".format(atom)


def _atom(atom: GroundAtom) -> str:
    return "({})".format(" ".join([atom.predicate] + [a.name for a in atom.args]))


def _conjunction(parts: List[str]) -> str:
    return "(and {})".format(" ".join(parts)) if parts else "(and)"


def print_domain(d: Domain) -> str:
    """Write a domain as PDDL text that :func:`parse_domain` reads back"""
    lines = ["(define (domain {})".format(d.name)]
    if d.requirements:
        lines.append("  (:requirements {})".format(" ".join(d.requirements)))
    if d.types:
        lines.append("  (:types {})".format(" ".join(d.types)))
    if d.predicates:
        lines.append("  (:predicates")
        for pred in d.predicates:
            params = " ".join(
                "?x{} - {}".format(i, t) for i, t in enumerate(pred.param_types)
            )
            lines.append("    ({})".format(" ".join(filter(None, [pred.name, params]))))
        lines[-1] += ")"
    for schema in d.schemas:
        lines.append("  (:action {}".format(schema.name))
        lines.append("    :parameters ({})".format(
            " ".join("?{} - {}".format(p.name, p.type) for p in schema.params)))
        lines.append("    :precondition {}".format(
            _conjunction([_schema_literal(lit) for lit in schema.preconditions])))
        lines.append("    :effect {})".format(
            _conjunction([_schema_literal(lit) for lit in schema.effects])))
    lines[-1] += ")"
    return "\n".join(lines) + "\n"


def print_problem(p: Problem) -> str:
    """Write a problem as PDDL text that :func:`parse_problem` reads back"""
    lines = [
        "(define (problem {})".format(p.name),
        "  (:domain {})".format(p.domain_name),
        "  (:objects",
    ]
    group, group_type = [], None
    for obj in p.objects + (None,):
        if group and (obj is None or obj.type != group_type):
            lines.append("    {} - {}".format(" ".join(group), group_type))
            group = []
        if obj is not None:
            group.append(obj.name)
            group_type = obj.type
    lines[-1] += ")"
    lines.append("  (:init")
    lines += ["    {}".format(_atom(atom)) for atom in p.initial_world]
    lines[-1] += ")"
    lines.append("  (:goal {}))".format(
        _conjunction([_ground_literal(lit) for lit in p.goal])))
    return "\n".join(lines) + "\n"


def print_plan(pl: Plan) -> str:
    """Write a plan, one action per line; the empty plan gives ''"""
    return "".join(
        "({})\n".format(" ".join([a.name] + [o.name for o in a.args])) for a in pl
    )
