"""Hand-written parser for ``.scn`` scenario files.

The grammar is line oriented (see docs/format.md)::

    line    := ws* (header | pair)? ws* comment? EOL
    header  := '[' name ']' | '[[' name ']]'
    pair    := key ws* '=' ws* value
    value   := scalar (ws* ',' ws* scalar)*
    scalar  := number | string | 'inf'
    number  := [+-]? digit+ ('.' digit+)?
    string  := '"' (any char except '"', or '\\"')* '"'

Each line is parsed independently, so one bad line yields one diagnostic and
parsing carries on with the next line.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from . import diagnostics as dg
from .diagnostics import Diagnostic, DiagnosticError, Position

# section name -> repeatable ([[name]])
SECTIONS = {
    "scenario": False,
    "demographics": False,
    "tariff": False,
    "source": True,
    "fuel": True,
    "appliance": True,
}
REPEATABLE_KEYS = frozenset({"block"})

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_NUMBER = re.compile(r"[+-]?[0-9]+(\.[0-9]+)?")
_NUMBERISH = re.compile(r"[A-Za-z0-9_.+\-]+")
_WS = " \t"


@dataclass(frozen=True)
class Number:
    text: str
    position: Position = field(compare=False)

    @property
    def value(self) -> float:
        return math.inf if self.text == "inf" else float(self.text)

    @property
    def is_integer(self) -> bool:
        return self.text != "inf" and "." not in self.text


@dataclass(frozen=True)
class String:
    value: str
    position: Position = field(compare=False)


Scalar = Number | String


@dataclass(frozen=True)
class ListValue:
    items: tuple[Scalar, ...]
    position: Position = field(compare=False)


Value = Number | String | ListValue


@dataclass(frozen=True)
class Pair:
    key: str
    value: Value
    position: Position = field(compare=False)


@dataclass(frozen=True)
class Section:
    name: str
    repeated: bool
    pairs: tuple[Pair, ...]
    position: Position = field(compare=False)

    def get(self, key: str) -> Pair | None:
        for p in self.pairs:
            if p.key == key:
                return p
        return None

    def get_all(self, key: str) -> list[Pair]:
        return [p for p in self.pairs if p.key == key]


@dataclass(frozen=True)
class ScenarioDocument:
    sections: tuple[Section, ...]

    def section(self, name: str) -> Section | None:
        for s in self.sections:
            if s.name == name:
                return s
        return None

    def sections_named(self, name: str) -> list[Section]:
        return [s for s in self.sections if s.name == name]


class _LineError(Exception):
    def __init__(self, code: str, message: str, column: int) -> None:
        super().__init__(message)
        self.code = code
        self.message = message
        self.column = column


class _Line:
    """Cursor over a single line; columns are 1-based."""

    def __init__(self, text: str, lineno: int) -> None:
        self.text = text
        self.lineno = lineno
        self.i = 0

    def pos(self, i: int | None = None) -> Position:
        return Position(self.lineno, (self.i if i is None else i) + 1)

    def skip_ws(self) -> None:
        while self.i < len(self.text) and self.text[self.i] in _WS:
            self.i += 1

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def at_end(self) -> bool:
        """True at end of line or at a trailing comment."""
        self.skip_ws()
        return self.i >= len(self.text) or self.text[self.i] == "#"

    def fail(self, code: str, message: str, i: int | None = None):
        raise _LineError(code, message, (self.i if i is None else i) + 1)

    def ident(self, what: str) -> str:
        m = _IDENT.match(self.text, self.i)
        if not m:
            self.fail(dg.SYNTAX, f"expected {what}")
        self.i = m.end()
        return m.group()

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of line"
            self.fail(dg.SYNTAX, f"expected {ch!r}, found {found}")
        self.i += 1

    def scalar(self) -> Scalar:
        start = self.i
        ch = self.peek()
        if ch == '"':
            return self.string()
        if ch and (ch.isdigit() or ch in "+-."):
            m = _NUMBERISH.match(self.text, start)
            token = m.group()
            if not _NUMBER.fullmatch(token):
                self.fail(dg.MALFORMED_NUMBER, f"malformed number {token!r}", start)
            self.i = m.end()
            return Number(token, self.pos(start))
        m = _IDENT.match(self.text, start)
        if m and m.group() == "inf":
            self.i = m.end()
            return Number("inf", self.pos(start))
        if not ch:
            self.fail(dg.SYNTAX, "expected a value")
        self.fail(dg.SYNTAX, "expected a value (number, quoted string or inf)")

    def string(self) -> String:
        start = self.i
        self.i += 1
        chars = []
        while self.i < len(self.text):
            ch = self.text[self.i]
            if ch == "\\" and self.text[self.i + 1:self.i + 2] in ('"', "\\"):
                chars.append(self.text[self.i + 1])
                self.i += 2
                continue
            if ch == '"':
                self.i += 1
                return String("".join(chars), self.pos(start))
            chars.append(ch)
            self.i += 1
        self.fail(dg.UNTERMINATED_STRING, "unterminated string", start)

    def value(self) -> Value:
        start = self.i
        items = [self.scalar()]
        while True:
            self.skip_ws()
            if self.peek() != ",":
                break
            self.i += 1
            self.skip_ws()
            items.append(self.scalar())
        if len(items) == 1:
            return items[0]
        return ListValue(tuple(items), self.pos(start))


class _SectionBuilder:
    def __init__(self, name: str, repeated: bool, position: Position, known: bool) -> None:
        self.name = name
        self.repeated = repeated
        self.position = position
        self.known = known
        self.pairs: list[Pair] = []
        self.keys: dict[str, Position] = {}

    def build(self) -> Section:
        return Section(self.name, self.repeated, tuple(self.pairs), self.position)


def parse(text: str) -> ScenarioDocument:
    """Parse scenario text into a document tree.

    Raises DiagnosticError carrying every syntax error found.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    diagnostics: list[Diagnostic] = []
    sections: list[_SectionBuilder] = []
    singles: dict[str, Position] = {}
    current: _SectionBuilder | None = None

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = _Line(raw.rstrip("\r"), lineno)
        if line.at_end():
            continue
        is_header = line.peek() == "["
        try:
            if is_header:
                current = _header(line, sections, singles, diagnostics)
            else:
                _pair(line, current, diagnostics)
        except _LineError as e:
            diagnostics.append(dg.error(e.code, e.message, Position(lineno, e.column)))
            if is_header:
                # swallow the broken section's pairs instead of misattributing them
                current = _SectionBuilder("", False, Position(lineno, 1), known=False)

    if any(d.is_error for d in diagnostics):
        raise DiagnosticError(diagnostics)
    return ScenarioDocument(tuple(s.build() for s in sections if s.known))


def _header(line: _Line, sections, singles, diagnostics) -> _SectionBuilder:
    start = line.i
    line.i += 1
    repeated = line.peek() == "["
    if repeated:
        line.i += 1
    line.skip_ws()
    name_pos = line.pos()
    name = line.ident("section name")
    line.skip_ws()
    line.expect("]")
    if repeated:
        line.expect("]")
    if not line.at_end():
        line.fail(dg.SYNTAX, "unexpected text after section header")

    if name not in SECTIONS:
        diagnostics.append(dg.error(
            dg.UNKNOWN_SECTION, f"unknown section {name!r}", name_pos,
            hint="known sections: " + ", ".join(sorted(SECTIONS)),
        ))
        return _SectionBuilder(name, repeated, line.pos(start), known=False)
    if SECTIONS[name] != repeated:
        form = f"[[{name}]]" if SECTIONS[name] else f"[{name}]"
        diagnostics.append(dg.error(
            dg.SECTION_KIND, f"section {name!r} must be written {form}", name_pos,
        ))
        return _SectionBuilder(name, repeated, line.pos(start), known=False)
    if not repeated:
        if name in singles:
            diagnostics.append(dg.error(
                dg.DUPLICATE_SECTION, f"section [{name}] appears more than once", name_pos,
                hint=f"first defined at line {singles[name].line}",
            ))
            return _SectionBuilder(name, repeated, line.pos(start), known=False)
        singles[name] = line.pos(start)
    section = _SectionBuilder(name, repeated, line.pos(start), known=True)
    sections.append(section)
    return section


def _pair(line: _Line, current: _SectionBuilder | None, diagnostics) -> None:
    key_pos = line.pos()
    key = line.ident("key or section header")
    line.skip_ws()
    line.expect("=")
    line.skip_ws()
    value = line.value()
    if not line.at_end():
        line.fail(dg.SYNTAX, f"unexpected {line.peek()!r} after value")

    if current is None:
        diagnostics.append(dg.error(dg.SYNTAX, f"key {key!r} appears before any section", key_pos))
        return
    if key in current.keys and key not in REPEATABLE_KEYS:
        diagnostics.append(dg.error(
            dg.DUPLICATE_KEY, f"duplicate key {key!r} in section {current.name!r}", key_pos,
            hint=f"first defined at line {current.keys[key].line}",
        ))
        return
    current.keys.setdefault(key, key_pos)
    current.pairs.append(Pair(key, value, key_pos))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _format_value(value: Value) -> str:
    if isinstance(value, ListValue):
        return ", ".join(_format_value(v) for v in value.items)
    if isinstance(value, String):
        return _quote(value.value)
    return value.text


def dump(doc: ScenarioDocument) -> str:
    """Canonical text for a document; ``parse(dump(doc)) == doc``."""
    chunks = []
    for s in doc.sections:
        header = f"[[{s.name}]]" if s.repeated else f"[{s.name}]"
        lines = [header] + [f"{p.key} = {_format_value(p.value)}" for p in s.pairs]
        chunks.append("\n".join(lines) + "\n")
    return "\n".join(chunks)
