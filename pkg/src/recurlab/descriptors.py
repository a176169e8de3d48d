"""Tokenizer for the `name:key=value,...` descriptor language.

Families and colorings share this grammar:

    descriptor := NAME [":" item ("," item)*]
    item       := KEY "=" VALUE | VALUE

Values are kept as text; callers convert them.  Errors carry the character
position of the offending token.
"""

import re

from .errors import DescriptorError

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_\-]*")
_KEY = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_VALUE = re.compile(r"[+\-]?[0-9A-Za-z_./]+")


class Parsed:
    def __init__(self, text, name, items):
        self.text = text
        self.name = name
        self.items = items  # list of (key or None, value, position)

    def positional(self):
        return [(v, pos) for k, v, pos in self.items if k is None]

    def keyed(self):
        out = {}
        for k, v, pos in self.items:
            if k is not None:
                if k in out:
                    raise DescriptorError(f"duplicate key {k!r}", self.text, pos)
                out[k] = (v, pos)
        return out

    def ints(self, required, optional=None):
        """Return {key: int} for the given keys, rejecting unknown or missing ones."""
        optional = optional or {}
        kv = self.keyed()
        if self.positional():
            _, pos = self.positional()[0]
            raise DescriptorError("expected key=value", self.text, pos)
        out = {}
        for k, (v, pos) in kv.items():
            if k not in required and k not in optional:
                raise DescriptorError(f"unknown key {k!r}", self.text, pos - len(k) - 1)
            out[k] = to_int(v, self.text, pos)
        for k in required:
            if k not in out:
                raise DescriptorError(f"missing key {k!r}", self.text, len(self.text))
        for k, default in optional.items():
            out.setdefault(k, default)
        return out

    def int_list(self):
        if self.keyed():
            k, (_, pos) = next(iter(self.keyed().items()))
            raise DescriptorError("expected a bare integer list", self.text, pos)
        return [to_int(v, self.text, pos) for v, pos in self.positional()]


def to_int(value, text, pos):
    try:
        return int(value)
    except ValueError:
        raise DescriptorError(f"expected an integer, got {value!r}", text, pos) from None


def tokenize(text):
    if not isinstance(text, str):
        raise DescriptorError("descriptor must be text", repr(text), 0)
    s = text.strip()
    m = _NAME.match(s)
    if not m:
        raise DescriptorError("expected a descriptor name", s, 0)
    name, i = m.group(0), m.end()
    items = []
    if i == len(s):
        return Parsed(s, name, items)
    if s[i] != ":":
        raise DescriptorError("expected ':'", s, i)
    i += 1
    # a `coeffs=1,2,3` style key swallows the following bare values
    while True:
        start = i
        key = None
        km = _KEY.match(s, i)
        if km and km.end() < len(s) and s[km.end()] == "=":
            key = km.group(0)
            i = km.end() + 1
        vm = _VALUE.match(s, i)
        if not vm:
            raise DescriptorError("expected a value", s, i)
        items.append((key, vm.group(0), start if key is None else i))
        i = vm.end()
        if i == len(s):
            break
        if s[i] != ",":
            raise DescriptorError("expected ',' or end of descriptor", s, i)
        i += 1
        if i == len(s):
            raise DescriptorError("trailing ','", s, i)
    return Parsed(s, name, items)
