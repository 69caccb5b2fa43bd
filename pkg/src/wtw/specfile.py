"""Minimal strict parser for the sectioned key-value spec documents.

Grammar (a small TOML-compatible subset, UTF-8):

    # comment
    [section]
    key = value
    "quoted,key" = value

    value := integer | "string" | [ value, ... ] | { key = value, ... }

Sections map to dictionaries; duplicate sections or keys are errors.  This
is deliberately tiny: the frame documents only need scalars, flat arrays,
nested arrays (matrices) and one level of inline tables.
"""

from __future__ import annotations

import re


class SpecSyntaxError(ValueError):
    """Malformed spec document."""


_SECTION_RE = re.compile(r"\[\s*([A-Za-z_][A-Za-z0-9_]*)\s*\]\s*\Z")


def parse(text: str) -> dict[str, dict]:
    doc: dict[str, dict] = {}
    current: dict | None = None
    for lineno, line in _logical_lines(text):
        if line.startswith("[") and _bracket_depth(line) == 0 and "=" not in line:
            match = _SECTION_RE.match(line)
            if not match:
                raise SpecSyntaxError(f"line {lineno}: malformed section header {line!r}")
            name = match.group(1)
            if name in doc:
                raise SpecSyntaxError(f"line {lineno}: duplicate section [{name}]")
            current = {}
            doc[name] = current
            continue
        if current is None:
            raise SpecSyntaxError(f"line {lineno}: key outside any section")
        key, value = _parse_keyvalue(line, lineno)
        if key in current:
            raise SpecSyntaxError(f"line {lineno}: duplicate key {key!r}")
        current[key] = value
    return doc


def _bracket_depth(line: str) -> int:
    depth = 0
    in_string = False
    for ch in line:
        if ch == '"':
            in_string = not in_string
        elif not in_string:
            if ch in "[{":
                depth += 1
            elif ch in "]}":
                depth -= 1
    return depth


def _logical_lines(text: str):
    """Physical lines joined while brackets stay open (multi-line arrays)."""
    buffer = ""
    start = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line and not buffer:
            continue
        if buffer:
            buffer = f"{buffer} {line}".strip()
        else:
            buffer = line
            start = lineno
        if _bracket_depth(buffer) > 0:
            continue
        if buffer:
            yield start, buffer
        buffer = ""
    if buffer:
        raise SpecSyntaxError(f"line {start}: unterminated bracket")


def _strip_comment(line: str) -> str:
    out = []
    in_string = False
    for ch in line:
        if ch == '"':
            in_string = not in_string
        if ch == "#" and not in_string:
            break
        out.append(ch)
    return "".join(out)


def _parse_keyvalue(line: str, lineno: int) -> tuple[str, object]:
    scanner = _Scanner(line, lineno)
    key = scanner.key()
    scanner.expect("=")
    value = scanner.value()
    scanner.end()
    return key, value


class _Scanner:
    def __init__(self, text: str, lineno: int):
        self.text = text
        self.pos = 0
        self.lineno = lineno

    def _err(self, message: str) -> SpecSyntaxError:
        return SpecSyntaxError(f"line {self.lineno}: {message} in {self.text!r}")

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self._err(f"expected {ch!r}")
        self.pos += 1

    def end(self) -> None:
        self._skip_ws()
        if self.pos != len(self.text):
            raise self._err("trailing input")

    def key(self) -> str:
        self._skip_ws()
        if self.peek() == '"':
            return self._string()
        match = re.match(r"[A-Za-z0-9_.\-]+", self.text[self.pos:])
        if not match:
            raise self._err("expected a key")
        self.pos += match.end()
        return match.group(0)

    def _string(self) -> str:
        self.expect('"')
        end = self.text.find('"', self.pos)
        if end < 0:
            raise self._err("unterminated string")
        value = self.text[self.pos:end]
        self.pos = end + 1
        return value

    def value(self):
        ch = self.peek()
        if ch == '"':
            return self._string()
        if ch == "[":
            return self._array()
        if ch == "{":
            return self._table()
        match = re.match(r"[+-]?\d+", self.text[self.pos:])
        if match:
            self.pos += match.end()
            return int(match.group(0))
        raise self._err("expected a value")

    def _array(self) -> list:
        self.expect("[")
        items = []
        if self.peek() == "]":
            self.pos += 1
            return items
        while True:
            items.append(self.value())
            ch = self.peek()
            if ch == ",":
                self.pos += 1
                if self.peek() == "]":
                    self.pos += 1
                    return items
                continue
            if ch == "]":
                self.pos += 1
                return items
            raise self._err("expected ',' or ']' in array")

    def _table(self) -> dict:
        self.expect("{")
        table: dict = {}
        if self.peek() == "}":
            self.pos += 1
            return table
        while True:
            key = self.key()
            self.expect("=")
            if key in table:
                raise self._err(f"duplicate key {key!r} in inline table")
            table[key] = self.value()
            ch = self.peek()
            if ch == ",":
                self.pos += 1
                continue
            if ch == "}":
                self.pos += 1
                return table
            raise self._err("expected ',' or '}' in inline table")
