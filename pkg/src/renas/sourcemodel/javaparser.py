"""A small, tolerant Java parser.

Extracts exactly what the relationship extractor needs: type/member/variable
declarations with positions, extends/implements lists, declared types,
assignment statements, and method invocations with their argument names.
It is not a compiler front end; expressions are scanned, not fully parsed,
and anything unrecognized is skipped.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import JavaParseError

JAVA_KEYWORDS = frozenset("""
abstract assert boolean break byte case catch char class const continue
default do double else enum extends final finally float for goto if
implements import instanceof int interface long native new package private
protected public return short static strictfp super switch synchronized
this throw throws transient try void volatile while record sealed permits
yield var
""".split())

PRIMITIVES = frozenset(
    {"boolean", "byte", "char", "short", "int", "long", "float", "double"}
)

MODIFIERS = frozenset(
    {"public", "protected", "private", "static", "final", "abstract",
     "native", "synchronized", "transient", "volatile", "strictfp",
     "default", "sealed"}
)

ASSIGN_OPS = frozenset(
    {"=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="}
)

_PUNCT_BY_LENGTH = (
    (">>>=",),
    (">>>", "<<=", ">>=", "..."),
    ("==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
     "%=", "&=", "|=", "^=", "<<", ">>", "->", "::"),
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident | number | string | char | punct
    value: str
    line: int
    col: int


def tokenize(text: str, path: str = "<source>") -> list[Token]:
    tokens: list[Token] = []
    i, line, col = 0, 1, 1
    n = len(text)

    def bump(ch: str) -> None:
        nonlocal line, col
        if ch == "\n":
            line += 1
            col = 1
        else:
            col += 1

    while i < n:
        ch = text[i]
        if ch in " \t\r\n\f":
            bump(ch)
            i += 1
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "/":
            while i < n and text[i] != "\n":
                bump(text[i])
                i += 1
            continue
        if ch == "/" and i + 1 < n and text[i + 1] == "*":
            end = text.find("*/", i + 2)
            if end < 0:
                raise JavaParseError(f"{path}:{line}: unterminated comment")
            for j in range(i, end + 2):
                bump(text[j])
            i = end + 2
            continue
        if text.startswith('"""', i):
            end = text.find('"""', i + 3)
            if end < 0:
                raise JavaParseError(f"{path}:{line}: unterminated text block")
            tokens.append(Token("string", "", line, col))
            for j in range(i, end + 3):
                bump(text[j])
            i = end + 3
            continue
        if ch in "\"'":
            quote = ch
            start_line, start_col = line, col
            bump(ch)
            j = i + 1
            while j < n and text[j] != quote:
                if text[j] == "\n":
                    raise JavaParseError(
                        f"{path}:{start_line}: unterminated literal"
                    )
                if text[j] == "\\" and j + 1 < n:
                    bump(text[j])
                    j += 1
                bump(text[j])
                j += 1
            if j >= n:
                raise JavaParseError(f"{path}:{start_line}: unterminated literal")
            bump(quote)
            tokens.append(
                Token("string" if quote == '"' else "char", "", start_line, start_col)
            )
            i = j + 1
            continue
        if ch.isdigit():
            start_line, start_col = line, col
            j = i
            while j < n and (text[j].isalnum() or text[j] in "._"):
                bump(text[j])
                j += 1
            tokens.append(Token("number", text[i:j], start_line, start_col))
            i = j
            continue
        if ch.isalpha() or ch in "_$":
            start_line, start_col = line, col
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_$"):
                bump(text[j])
                j += 1
            tokens.append(Token("ident", text[i:j], start_line, start_col))
            i = j
            continue
        matched = None
        for group in _PUNCT_BY_LENGTH:
            for op in group:
                if text.startswith(op, i):
                    matched = op
                    break
            if matched:
                break
        if matched is None:
            matched = ch
        tokens.append(Token("punct", matched, line, col))
        for ch2 in matched:
            bump(ch2)
        i += len(matched)
    return tokens


@dataclass
class ParamDecl:
    name: str
    type_name: str | None
    line: int
    col: int


@dataclass
class LocalDecl:
    name: str
    type_name: str | None
    line: int
    col: int


@dataclass
class AssignFact:
    lhs: str
    refs: list[tuple[str, str]]  # ("name" | "call", identifier)
    line: int


@dataclass
class CallFact:
    name: str
    receiver: str | None  # simple name, "this", or None/"?" when unknown
    args: list[str | None]  # positional simple-name/call-name refs
    line: int


@dataclass
class MethodDecl:
    name: str
    return_type: str | None
    params: list[ParamDecl]
    line: int
    col: int
    end_line: int
    locals: list[LocalDecl] = field(default_factory=list)
    assigns: list[AssignFact] = field(default_factory=list)
    calls: list[CallFact] = field(default_factory=list)

    @property
    def signature(self) -> str:
        return f"{self.name}({','.join(p.type_name or '?' for p in self.params)})"


@dataclass
class FieldDecl:
    name: str
    type_name: str | None
    line: int
    col: int
    init_refs: list[tuple[str, str]] = field(default_factory=list)
    init_calls: list[CallFact] = field(default_factory=list)


@dataclass
class TypeDecl:
    name: str
    kind: str  # "class" | "interface"
    supertypes: list[str]
    line: int
    col: int
    end_line: int
    fields: list[FieldDecl] = field(default_factory=list)
    methods: list[MethodDecl] = field(default_factory=list)
    nested: list["TypeDecl"] = field(default_factory=list)


@dataclass
class FileParse:
    path: str
    types: list[TypeDecl]


class _Parser:
    def __init__(self, tokens: list[Token], path: str) -> None:
        self.tokens = tokens
        self.path = path
        self.pos = 0

    # -- token helpers ----------------------------------------------------

    def peek(self, offset: int = 0) -> Token | None:
        idx = self.pos + offset
        return self.tokens[idx] if idx < len(self.tokens) else None

    def value(self, offset: int = 0) -> str | None:
        tok = self.peek(offset)
        return tok.value if tok else None

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise JavaParseError(f"{self.path}: unexpected end of file")
        self.pos += 1
        return tok

    def expect(self, value: str) -> Token:
        tok = self.peek()
        if tok is None or tok.value != value:
            where = f"{tok.line}:{tok.col}" if tok else "eof"
            got = tok.value if tok else "end of file"
            raise JavaParseError(f"{self.path}:{where}: expected {value!r}, got {got!r}")
        return self.advance()

    def at_ident(self, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind == "ident" and tok.value not in JAVA_KEYWORDS

    def skip_annotations_and_modifiers(self) -> None:
        while True:
            tok = self.peek()
            if tok is None:
                return
            if tok.value == "@":
                self.advance()
                if self.value() == "interface":  # annotation type declaration
                    self.pos -= 1
                    return
                while self.at_ident():
                    self.advance()
                    if self.value() == ".":
                        self.advance()
                    else:
                        break
                if self.value() == "(":
                    self.skip_balanced("(", ")")
                continue
            if tok.kind == "ident" and tok.value in MODIFIERS:
                self.advance()
                continue
            if tok.value == "non" and self.value(1) == "-":  # non-sealed
                self.advance()
                self.advance()
                if self.value() == "sealed":
                    self.advance()
                continue
            return

    def skip_balanced(self, opener: str, closer: str) -> int:
        """Skip from the opener token past its matching closer; returns the
        index of the closer."""
        self.expect(opener)
        depth = 1
        while depth:
            tok = self.peek()
            if tok is None:
                raise JavaParseError(f"{self.path}: unbalanced {opener!r}")
            if tok.value == opener:
                depth += 1
            elif tok.value == closer:
                depth -= 1
            self.advance()
        return self.pos - 1

    def skip_generics(self) -> bool:
        """Skip a <...> section; returns False (restoring pos) if it does not
        look like a type-argument list."""
        if self.value() != "<":
            return False
        start = self.pos
        depth = 0
        while True:
            tok = self.peek()
            if tok is None or tok.value in (";", "{", "}"):
                self.pos = start
                return False
            if tok.value == "<":
                depth += 1
            elif tok.value == ">":
                depth -= 1
            elif tok.value == ">>":
                depth -= 2
            elif tok.value == ">>>":
                depth -= 3
            elif tok.kind not in ("ident", "number") and tok.value not in (
                ",", ".", "?", "[", "]", "&", "@",
            ):
                self.pos = start
                return False
            self.advance()
            if depth <= 0:
                return True

    def parse_type_ref(self) -> tuple[str | None, bool]:
        """Parse a type reference; returns (terminal simple name or None for
        primitive/void/var, ok). Leaves pos unchanged when not a type."""
        start = self.pos
        while self.value() == "@":  # type annotations
            self.advance()
            while self.at_ident():
                self.advance()
                if self.value() == ".":
                    self.advance()
                else:
                    break
            if self.value() == "(":
                self.skip_balanced("(", ")")
        tok = self.peek()
        if tok is None:
            self.pos = start
            return None, False
        if tok.value in PRIMITIVES or tok.value in ("void", "var"):
            self.advance()
            while self.value() == "[" and self.value(1) == "]":
                self.advance()
                self.advance()
            # keep the keyword for signatures; "var" has no declared type
            return (None if tok.value == "var" else tok.value), True
        if not self.at_ident():
            self.pos = start
            return None, False
        name = self.advance().value
        while self.value() == "." and self.at_ident(1):
            self.advance()
            name = self.advance().value
        if self.value() == "<" and not self.skip_generics():
            self.pos = start
            return None, False
        while self.value() == "[" and self.value(1) == "]":
            self.advance()
            self.advance()
        return name, True

    # -- compilation unit --------------------------------------------------

    def parse_file(self) -> FileParse:
        types: list[TypeDecl] = []
        while self.peek() is not None:
            self.skip_annotations_and_modifiers()
            tok = self.peek()
            if tok is None:
                break
            if tok.value in ("package", "import"):
                while self.peek() is not None and self.value() != ";":
                    self.advance()
                if self.peek() is not None:
                    self.advance()
                continue
            if tok.value == ";":
                self.advance()
                continue
            if tok.value in ("class", "interface", "enum", "record"):
                types.append(self.parse_type_decl())
                continue
            if tok.value == "@" or (tok.value == "interface"):
                types.append(self.parse_type_decl())
                continue
            raise JavaParseError(
                f"{self.path}:{tok.line}:{tok.col}: unexpected token {tok.value!r} "
                "at top level"
            )
        return FileParse(self.path, types)

    def parse_type_decl(self) -> TypeDecl:
        keyword = self.advance().value
        kind = "interface" if keyword == "interface" else "class"
        name_tok = self.peek()
        if not self.at_ident():
            where = f"{name_tok.line}:{name_tok.col}" if name_tok else "eof"
            raise JavaParseError(f"{self.path}:{where}: expected type name")
        name_tok = self.advance()
        decl = TypeDecl(
            name=name_tok.value,
            kind=kind,
            supertypes=[],
            line=name_tok.line,
            col=name_tok.col,
            end_line=name_tok.line,
        )
        if self.value() == "<":
            self.skip_generics()
        if keyword == "record" and self.value() == "(":
            self._parse_record_components(decl)
        while self.value() in ("extends", "implements", "permits"):
            clause = self.advance().value
            while True:
                type_name, ok = self.parse_type_ref()
                if not ok:
                    raise JavaParseError(
                        f"{self.path}:{name_tok.line}: malformed {clause} clause"
                    )
                if type_name and clause != "permits":
                    decl.supertypes.append(type_name)
                if self.value() == ",":
                    self.advance()
                    continue
                break
        self.expect("{")
        if keyword == "enum":
            self._parse_enum_constants(decl)
        while True:
            tok = self.peek()
            if tok is None:
                raise JavaParseError(f"{self.path}: unterminated body of {decl.name}")
            if tok.value == "}":
                decl.end_line = tok.line
                self.advance()
                return decl
            self.parse_member(decl)

    def _parse_record_components(self, decl: TypeDecl) -> None:
        self.expect("(")
        while self.value() != ")":
            self.skip_annotations_and_modifiers()
            type_name, ok = self.parse_type_ref()
            if not ok or not self.at_ident():
                raise JavaParseError(
                    f"{self.path}:{decl.line}: malformed record header"
                )
            tok = self.advance()
            decl.fields.append(FieldDecl(tok.value, type_name, tok.line, tok.col))
            if self.value() == ",":
                self.advance()
        self.expect(")")

    def _parse_enum_constants(self, decl: TypeDecl) -> None:
        while True:
            self.skip_annotations_and_modifiers()
            tok = self.peek()
            if tok is None:
                raise JavaParseError(f"{self.path}: unterminated enum {decl.name}")
            if tok.value == ";":
                self.advance()
                return
            if tok.value == "}":
                return
            if not self.at_ident():
                raise JavaParseError(
                    f"{self.path}:{tok.line}: expected enum constant"
                )
            self.advance()
            decl.fields.append(FieldDecl(tok.value, decl.name, tok.line, tok.col))
            if self.value() == "(":
                self.skip_balanced("(", ")")
            if self.value() == "{":
                self.skip_balanced("{", "}")
            if self.value() == ",":
                self.advance()
                continue

    # -- members -----------------------------------------------------------

    def parse_member(self, decl: TypeDecl) -> None:
        self.skip_annotations_and_modifiers()
        tok = self.peek()
        if tok is None:
            raise JavaParseError(f"{self.path}: unterminated body of {decl.name}")
        if tok.value == ";":
            self.advance()
            return
        if tok.value == "{":  # instance/static initializer
            self.skip_balanced("{", "}")
            return
        if tok.value in ("class", "interface", "enum", "record"):
            decl.nested.append(self.parse_type_decl())
            return
        if tok.value == "<":
            if not self.skip_generics():
                raise JavaParseError(
                    f"{self.path}:{tok.line}: malformed type parameters"
                )
            self.skip_annotations_and_modifiers()
        if self.at_ident() and self.value() == decl.name and self.value(1) == "(":
            self._skip_constructor()
            return
        type_name, ok = self.parse_type_ref()
        if not ok:
            bad = self.peek()
            where = f"{bad.line}:{bad.col}" if bad else "eof"
            raise JavaParseError(
                f"{self.path}:{where}: expected member declaration in {decl.name}"
            )
        if not self.at_ident():
            bad = self.peek()
            where = f"{bad.line}:{bad.col}" if bad else "eof"
            raise JavaParseError(f"{self.path}:{where}: expected member name")
        name_tok = self.advance()
        if self.value() == "(":
            decl.methods.append(self._parse_method(name_tok, type_name))
        else:
            self._parse_fields(decl, name_tok, type_name)

    def _skip_constructor(self) -> None:
        # Constructors duplicate the class name and contribute no entity;
        # skip the whole declaration including the body.
        self.advance()
        self.skip_balanced("(", ")")
        while self.value() == "throws" or self.value() == ",":
            self.advance()
            self.parse_type_ref()
        if self.value() == "{":
            self.skip_balanced("{", "}")
        elif self.value() == ";":
            self.advance()

    def _parse_method(self, name_tok: Token, return_type: str | None) -> MethodDecl:
        params: list[ParamDecl] = []
        self.expect("(")
        while self.value() != ")":
            self.skip_annotations_and_modifiers()
            ptype, ok = self.parse_type_ref()
            if not ok:
                bad = self.peek()
                where = f"{bad.line}:{bad.col}" if bad else "eof"
                raise JavaParseError(
                    f"{self.path}:{where}: malformed parameter in {name_tok.value}"
                )
            if self.value() == "...":
                self.advance()
            if not self.at_ident():
                bad = self.peek()
                where = f"{bad.line}:{bad.col}" if bad else "eof"
                raise JavaParseError(
                    f"{self.path}:{where}: expected parameter name in {name_tok.value}"
                )
            ptok = self.advance()
            while self.value() == "[" and self.value(1) == "]":
                self.advance()
                self.advance()
            params.append(ParamDecl(ptok.value, ptype, ptok.line, ptok.col))
            if self.value() == ",":
                self.advance()
        self.expect(")")
        while self.value() == "throws" or self.value() == ",":
            self.advance()
            self.parse_type_ref()
        method = MethodDecl(
            name=name_tok.value,
            return_type=return_type,
            params=params,
            line=name_tok.line,
            col=name_tok.col,
            end_line=name_tok.line,
        )
        if self.value() == ";":
            self.advance()
            return method
        if self.value() == "default":  # annotation-member default value
            while self.peek() is not None and self.value() != ";":
                self.advance()
            self.advance()
            return method
        body_start = self.pos
        body_end = self.skip_balanced("{", "}")
        method.end_line = self.tokens[body_end].line
        _BodyScanner(self, body_start + 1, body_end, method).scan()
        return method

    def _parse_fields(
        self, decl: TypeDecl, name_tok: Token, type_name: str | None
    ) -> None:
        current = name_tok
        while True:
            while self.value() == "[" and self.value(1) == "]":
                self.advance()
                self.advance()
            fdecl = FieldDecl(current.value, type_name, current.line, current.col)
            decl.fields.append(fdecl)
            if self.value() == "=":
                self.advance()
                start = self.pos
                end = self._scan_expression_end((",", ";"))
                fdecl.init_refs = _extract_refs(self.tokens, start, end)
                fdecl.init_calls = _collect_calls(self.tokens, start, end)
                self.pos = end
            if self.value() == ",":
                self.advance()
                if not self.at_ident():
                    bad = self.peek()
                    where = f"{bad.line}:{bad.col}" if bad else "eof"
                    raise JavaParseError(f"{self.path}:{where}: expected field name")
                current = self.advance()
                continue
            self.expect(";")
            return

    def _scan_expression_end(self, stoppers: tuple[str, ...]) -> int:
        depth = 0
        pos = self.pos
        while pos < len(self.tokens):
            value = self.tokens[pos].value
            if value in ("(", "[", "{"):
                depth += 1
            elif value in (")", "]", "}"):
                if depth == 0:
                    return pos
                depth -= 1
            elif depth == 0 and value in stoppers:
                return pos
            pos += 1
        raise JavaParseError(f"{self.path}: unterminated expression")


def _is_plain_ident(tok: Token | None) -> bool:
    return tok is not None and tok.kind == "ident" and tok.value not in JAVA_KEYWORDS


def _extract_refs(tokens: list[Token], start: int, end: int) -> list[tuple[str, str]]:
    """Top-level simple-name and invocation-name operands of an expression.

    Names inside call argument lists are left to the invocation facts; dotted
    chains other than ``this.x`` are skipped as non-simple."""
    refs: list[tuple[str, str]] = []
    depth = 0
    i = start
    while i < end:
        tok = tokens[i]
        if tok.value in ("(", "[", "{"):
            depth += 1
        elif tok.value in (")", "]", "}"):
            depth -= 1
        elif depth == 0 and _is_plain_ident(tok):
            prev = tokens[i - 1] if i > start else None
            nxt = tokens[i + 1] if i + 1 < end else None
            qualified = prev is not None and prev.value == "."
            this_qualified = (
                qualified and i - 2 >= start and tokens[i - 2].value == "this"
            )
            if prev is not None and prev.value in ("new", "@"):
                i += 1
                continue
            if qualified and not this_qualified:
                i += 1
                continue
            if nxt is not None and nxt.value == "(":
                refs.append(("call", tok.value))
            elif nxt is not None and nxt.value == ".":
                pass  # head of a dotted chain
            else:
                refs.append(("name", tok.value))
        i += 1
    return refs


def _split_call_args(tokens: list[Token], start: int, end: int) -> list[str | None]:
    """Positional refs of a call's argument slices (simple or call names)."""
    args: list[str | None] = []
    depth = 0
    piece: list[Token] = []
    for i in range(start, end):
        tok = tokens[i]
        if tok.value in ("(", "[", "{"):
            depth += 1
        elif tok.value in (")", "]", "}"):
            depth -= 1
        if depth == 0 and tok.value == ",":
            args.append(_arg_ref(piece))
            piece = []
        else:
            piece.append(tok)
    if piece:
        args.append(_arg_ref(piece))
    return args


def _arg_ref(piece: list[Token]) -> str | None:
    if not piece:
        return None
    if len(piece) == 1 and _is_plain_ident(piece[0]):
        return piece[0].value
    if len(piece) == 2 and piece[0].value == "this" and piece[1].value == ".":
        return None
    if (
        len(piece) == 3
        and piece[0].value == "this"
        and piece[1].value == "."
        and _is_plain_ident(piece[2])
    ):
        return piece[2].value
    if (
        _is_plain_ident(piece[0])
        and len(piece) >= 3
        and piece[1].value == "("
        and piece[-1].value == ")"
    ):
        return piece[0].value
    return None


def _collect_calls(tokens: list[Token], start: int, end: int) -> list[CallFact]:
    calls: list[CallFact] = []
    for i in range(start, end):
        tok = tokens[i]
        if not _is_plain_ident(tok):
            continue
        nxt = tokens[i + 1] if i + 1 < end else None
        if nxt is None or nxt.value != "(":
            continue
        prev = tokens[i - 1] if i - 1 >= 0 else None
        if prev is not None and (
            _is_plain_ident(prev)
            or prev.value in PRIMITIVES
            or prev.value in ("void", "new", "@", ">", "]")
        ):
            continue
        receiver: str | None = None
        if prev is not None and prev.value == ".":
            before = tokens[i - 2] if i - 2 >= 0 else None
            if before is not None and before.value == "this":
                receiver = "this"
            elif _is_plain_ident(before):
                receiver = before.value
            else:
                receiver = "?"
        close = _matching_paren(tokens, i + 1, end)
        if close is None:
            continue
        calls.append(
            CallFact(
                name=tok.value,
                receiver=receiver,
                args=_split_call_args(tokens, i + 2, close),
                line=tok.line,
            )
        )
    return calls


def _matching_paren(tokens: list[Token], open_idx: int, end: int) -> int | None:
    depth = 0
    for i in range(open_idx, end):
        value = tokens[i].value
        if value == "(":
            depth += 1
        elif value == ")":
            depth -= 1
            if depth == 0:
                return i
    return None


class _BodyScanner:
    """Scans a method body token range for locals, assignments and calls."""

    def __init__(self, parser: _Parser, start: int, end: int, sink: MethodDecl):
        self.parser = parser
        self.tokens = parser.tokens
        self.start = start
        self.end = end
        self.sink = sink

    def scan(self) -> None:
        self.sink.calls.extend(_collect_calls(self.tokens, self.start, self.end))
        i = self.start
        while i < self.end:
            prev = self.tokens[i - 1] if i > self.start else None
            at_statement_start = (
                prev is None
                or prev.value in (";", "{", "}", "(")
                or prev.value == "else"
            )
            if at_statement_start:
                advanced = self._try_local_decl(i) or self._try_assignment(i)
                if advanced is not None:
                    i = advanced
                    continue
            i += 1
        self.sink.locals.sort(key=lambda d: (d.line, d.col))
        self.sink.assigns.sort(key=lambda a: a.line)
        self.sink.calls.sort(key=lambda c: c.line)

    def _try_local_decl(self, i: int) -> int | None:
        parser = self.parser
        saved = parser.pos
        parser.pos = i
        try:
            while parser.value() == "final" or parser.value() == "@":
                if parser.value() == "final":
                    parser.advance()
                else:
                    parser.skip_annotations_and_modifiers()
            type_name, ok = parser.parse_type_ref()
            if not ok or parser.pos >= self.end or not parser.at_ident():
                return None
            name_tok = parser.peek()
            follower = parser.value(1)
            if follower not in ("=", ";", ",", ":", ")"):
                return None
            parser.advance()
            while True:
                while parser.value() == "[" and parser.value(1) == "]":
                    parser.advance()
                    parser.advance()
                self.sink.locals.append(
                    LocalDecl(name_tok.value, type_name, name_tok.line, name_tok.col)
                )
                if parser.value() in ("=", ":"):
                    parser.advance()
                    expr_start = parser.pos
                    expr_end = self._expression_end(expr_start)
                    refs = _extract_refs(self.tokens, expr_start, expr_end)
                    if refs:
                        self.sink.assigns.append(
                            AssignFact(name_tok.value, refs, name_tok.line)
                        )
                    parser.pos = expr_end
                if parser.value() == "," and parser.at_ident(1):
                    parser.advance()
                    name_tok = parser.advance()
                    continue
                break
            return max(parser.pos, i + 1)
        finally:
            parser.pos = saved

    def _try_assignment(self, i: int) -> int | None:
        tokens = self.tokens
        j = i
        if j < self.end and tokens[j].value == "this" and tokens[j + 1].value == ".":
            j += 2
        if j >= self.end or not _is_plain_ident(tokens[j]):
            return None
        lhs = tokens[j].value
        line = tokens[j].line
        j += 1
        while j < self.end:
            value = tokens[j].value
            if value == "." and j + 1 < self.end and _is_plain_ident(tokens[j + 1]):
                lhs = tokens[j + 1].value
                j += 2
            elif value == "[":
                close = self._matching(j, "[", "]")
                if close is None:
                    return None
                j = close + 1
            else:
                break
        if j >= self.end or tokens[j].value not in ASSIGN_OPS:
            return None
        expr_start = j + 1
        expr_end = self._expression_end(expr_start)
        refs = _extract_refs(tokens, expr_start, expr_end)
        if refs:
            self.sink.assigns.append(AssignFact(lhs, refs, line))
        return expr_end

    def _expression_end(self, start: int) -> int:
        depth = 0
        for i in range(start, self.end):
            value = self.tokens[i].value
            if value in ("(", "[", "{"):
                depth += 1
            elif value in (")", "]", "}"):
                if depth == 0:
                    return i
                depth -= 1
            elif depth == 0 and value in (";", ",", ":"):
                return i
        return self.end

    def _matching(self, open_idx: int, opener: str, closer: str) -> int | None:
        depth = 0
        for i in range(open_idx, self.end):
            value = self.tokens[i].value
            if value == opener:
                depth += 1
            elif value == closer:
                depth -= 1
                if depth == 0:
                    return i
        return None


def parse_java(text: str, path: str = "<source>") -> FileParse:
    """Parse one Java source file into declaration facts."""
    return _Parser(tokenize(text, path), path).parse_file()
