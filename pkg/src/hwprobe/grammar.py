"""Parser for the polynomial input grammar.

Grammar (whitespace-insensitive)::

    expr   := ["-"] term { ("+" | "-") term }
    term   := factor { "*" factor }
    factor := atom [ "^" INT ]
    atom   := INT | NAME | "(" expr ")"

NAME must be one of the ring's variables; INT is a nonnegative decimal
integer.  Multiplication is explicit.  Errors carry line and column.
"""

import re

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<op>[-+*^()]))")


class ParseError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            where = len(text) - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", text, where)
        if m.group("int") is not None:
            out.append(("int", int(m.group("int")), m.start("int")))
        elif m.group("name") is not None:
            out.append(("name", m.group("name"), m.start("name")))
        else:
            out.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_polynomial(ring, text):
    """Parse a polynomial string into a coefficient dict over the ring."""
    tokens = _tokenize(text)
    var_index = {name: i for i, name in enumerate(ring.names)}
    k = 0

    def peek():
        return tokens[k]

    def advance():
        nonlocal k
        tok = tokens[k]
        k += 1
        return tok

    def expect_op(op):
        tok = advance()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", text, tok[2])

    def parse_expr():
        kind, val, _ = peek()
        negate = False
        if kind == "op" and val == "-":
            advance()
            negate = True
        f = parse_term()
        if negate:
            f = ring.neg(f)
        while True:
            kind, val, _ = peek()
            if kind == "op" and val in "+-":
                advance()
                g = parse_term()
                f = ring.add(f, g) if val == "+" else ring.sub(f, g)
            else:
                return f

    def parse_term():
        f = parse_factor()
        while True:
            kind, val, _ = peek()
            if kind == "op" and val == "*":
                advance()
                f = ring.mul(f, parse_factor())
            else:
                return f

    def parse_factor():
        f = parse_atom()
        kind, val, _ = peek()
        if kind == "op" and val == "^":
            advance()
            tok = advance()
            if tok[0] != "int":
                raise ParseError("expected an integer exponent", text, tok[2])
            f = ring.pow(f, tok[1])
        return f

    def parse_atom():
        tok = advance()
        kind, val, pos = tok
        if kind == "int":
            return ring.const(val)
        if kind == "name":
            idx = var_index.get(val)
            if idx is None:
                raise ParseError(f"unknown variable {val!r}", text, pos)
            return ring.var(idx)
        if kind == "op" and val == "(":
            f = parse_expr()
            expect_op(")")
            return f
        raise ParseError(f"unexpected token {val!r}" if val is not None
                         else "unexpected end of input", text, pos)

    f = parse_expr()
    tok = peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected token {tok[1]!r}", text, tok[2])
    return f
