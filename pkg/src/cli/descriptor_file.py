"""Sectioned text descriptors for spaces, their classes and named vectors.

    # comment
    [field]
    p = 5
    [chain]
    qinterval01
    [space]
    e1: (b@1/2, g^0)
    e2: (b@1, g^-1)
    [class]
    complete = true
    default = 0
    b@1/2 = infinite
    [vectors]
    u = e1 + 5*e2

[chain] must come before the sections that mention chain elements. Without a
[class] section the multiplicities are the census of [space].
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from src.algebra.chains import Chain, parse_chain
from src.algebra.field import FieldConfig, InvalidFieldConfig
from src.algebra.gmodule import GModule, XElement
from src.classify.space_class import INFINITE, Multiplicity, SpaceClass, space_class_from_space
from src.config import settings
from src.errors import DescriptorError, PreconditionError
from src.space.vectors import SpaceDescriptor, Vector, format_vector, parse_vector

logger = logging.getLogger(__name__)

SECTIONS = ("field", "chain", "space", "class", "vectors")
_SECTION_RE = re.compile(r"^\[\s*([a-z]+)\s*\]$")
_KEY_VALUE_RE = re.compile(r"^([^=]+?)\s*=\s*(.+)$")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


@dataclass
class ClassSection:
    complete: bool = True
    default: Multiplicity = 0
    entries: Dict[Any, Multiplicity] = field(default_factory=dict)


@dataclass
class DescriptorFile:
    p: int
    chain: Chain
    space: Dict[str, XElement] = field(default_factory=dict)
    space_class: Optional[ClassSection] = None
    vectors: Dict[str, Vector] = field(default_factory=dict)

    @property
    def module(self) -> GModule:
        return GModule(self.chain)


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _parse_multiplicity(text: str) -> Multiplicity:
    body = text.strip().lower()
    if body == "infinite":
        return INFINITE
    if body.isdigit():
        return int(body)
    raise DescriptorError(f"multiplicity must be a natural number or 'infinite', got {text!r}")


def _format_multiplicity(m: Multiplicity) -> str:
    return "infinite" if m is INFINITE else str(m)


class _Parser:
    def __init__(self) -> None:
        self.p: Optional[int] = None
        self.chain: Optional[Chain] = None
        self.space: Dict[str, XElement] = {}
        self.space_class: Optional[ClassSection] = None
        self.vectors: Dict[str, Vector] = {}
        self.seen: List[str] = []

    def need_chain(self, section: str) -> Chain:
        if self.chain is None:
            raise DescriptorError(f"[{section}] needs the [chain] section before it")
        return self.chain

    def handle(self, section: str, line: str) -> None:
        getattr(self, f"_{section}")(line)

    def _field(self, line: str) -> None:
        match = _KEY_VALUE_RE.match(line)
        if not match or match.group(1).strip() != "p":
            raise DescriptorError(f"expected 'p = <prime>' in [field], got {line!r}")
        try:
            self.p = FieldConfig(int(match.group(2))).p
        except ValueError as exc:
            raise DescriptorError(f"p must be an integer, got {match.group(2)!r}") from exc
        except InvalidFieldConfig as exc:
            raise DescriptorError(str(exc)) from exc

    def _chain(self, line: str) -> None:
        if self.chain is not None:
            raise DescriptorError("[chain] holds exactly one descriptor line")
        self.chain = parse_chain(line)

    def _space(self, line: str) -> None:
        module = GModule(self.need_chain("space"))
        index, sep, value = line.partition(":")
        index = index.strip()
        if not sep or not _NAME_RE.match(index):
            raise DescriptorError(f"expected '<index>: (b@<element>, g^<m>)', got {line!r}")
        if index in self.space:
            raise DescriptorError(f"index {index} is declared twice")
        self.space[index] = module.parse_x(value)

    def _class(self, line: str) -> None:
        chain = self.need_chain("class")
        match = _KEY_VALUE_RE.match(line)
        if not match:
            raise DescriptorError(f"expected '<key> = <value>' in [class], got {line!r}")
        key, value = match.group(1).strip(), match.group(2).strip()
        section = self.space_class or ClassSection()
        self.space_class = section
        if key == "complete":
            if value.lower() not in ("true", "false"):
                raise DescriptorError(f"complete must be true or false, got {value!r}")
            section.complete = value.lower() == "true"
        elif key == "default":
            section.default = _parse_multiplicity(value)
        elif key.startswith("b@"):
            section.entries[chain.parse_element(key[2:])] = _parse_multiplicity(value)
        else:
            raise DescriptorError(f"unknown [class] key {key!r}")

    def _vectors(self, line: str) -> None:
        match = _KEY_VALUE_RE.match(line)
        if not match or not _NAME_RE.match(match.group(1).strip()):
            raise DescriptorError(f"expected '<name> = <vector literal>', got {line!r}")
        name = match.group(1).strip()
        v = parse_vector(match.group(2))
        unknown = sorted(i for i in v.support if i not in self.space)
        if unknown:
            raise DescriptorError(f"vector {name} uses undeclared indices {unknown}")
        self.vectors[name] = v


def parse_descriptor(text: str) -> DescriptorFile:
    """Parse descriptor text; every DescriptorError carries its 1-based line."""
    parser = _Parser()
    section: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line:
            continue
        try:
            header = _SECTION_RE.match(line)
            if header:
                section = header.group(1)
                if section not in SECTIONS:
                    raise DescriptorError(f"unknown section [{section}]")
                if section in parser.seen:
                    raise DescriptorError(f"section [{section}] appears twice")
                parser.seen.append(section)
                continue
            if section is None:
                raise DescriptorError("content before the first section header")
            parser.handle(section, line)
        except DescriptorError as exc:
            if exc.line is not None:
                raise
            raise exc.at_line(lineno) from exc
    if parser.chain is None:
        raise DescriptorError("missing [chain] section")
    return DescriptorFile(
        p=parser.p if parser.p is not None else settings.ULTRANORM_DEFAULT_PRIME,
        chain=parser.chain,
        space=parser.space,
        space_class=parser.space_class,
        vectors=parser.vectors,
    )


def serialize_descriptor(df: DescriptorFile) -> str:
    module = df.module
    chain = df.chain
    lines = ["[field]", f"p = {df.p}", "", "[chain]", chain.descriptor, "", "[space]"]
    lines += [f"{i}: {module.format_x(x)}" for i, x in df.space.items()]
    if df.space_class is not None:
        sc = df.space_class
        lines += ["", "[class]", f"complete = {'true' if sc.complete else 'false'}"]
        lines.append(f"default = {_format_multiplicity(sc.default)}")
        lines += [f"b@{chain.format_element(b)} = {_format_multiplicity(m)}" for b, m in sc.entries.items()]
    if df.vectors:
        lines += ["", "[vectors]"]
        lines += [f"{name} = {format_vector(v)}" for name, v in df.vectors.items()]
    return "\n".join(lines) + "\n"


def load_descriptor(path: Union[str, Path]) -> DescriptorFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DescriptorError(f"cannot read descriptor {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise DescriptorError(f"descriptor {path} is not valid UTF-8 (byte {exc.start})") from exc
    df = parse_descriptor(text)
    logger.info("loaded %s: chain %s, %d base vectors", path, df.chain.descriptor, len(df.space))
    return df


def build_space(df: DescriptorFile) -> SpaceDescriptor:
    return SpaceDescriptor(
        index_set=tuple(df.space),
        nu=dict(df.space),
        field_cfg=FieldConfig(df.p),
        module=df.module,
    )


def build_space_class(df: DescriptorFile, sp: Optional[SpaceDescriptor] = None) -> SpaceClass:
    if df.space_class is None:
        return space_class_from_space(sp or build_space(df))
    section = df.space_class
    return SpaceClass(
        chain=df.chain,
        multiplicity=dict(section.entries),
        default=section.default,
        completeness_assumed=section.complete,
    )


def build(df: DescriptorFile) -> Tuple[SpaceDescriptor, SpaceClass]:
    sp = build_space(df)
    return sp, build_space_class(df, sp)


def resolve_vector(df: DescriptorFile, sp: SpaceDescriptor, token: str) -> Vector:
    """A named vector of [vectors], or a vector literal over the space's indices."""
    if token in df.vectors:
        return df.vectors[token]
    if _NAME_RE.match(token) and token not in sp.index_set:
        raise PreconditionError(f"no vector named {token!r} in [vectors]")
    return parse_vector(token, sp)
