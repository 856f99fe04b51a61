"""Line-oriented text format for surgery diagrams.

::

    # comments run to end of line
    diagram n=2
    component 1 tb=-2 rot=1 sign=+1
    component 2 tb=-1 rot=0 sign=-1
    link 1 2 -1
    marked tb=-2 rot=1
    marked_link 1 -2
    marked_link 2 -1

Components are listed in order 1..n.  ``link i j v`` requires ``i < j``;
unlisted pairs are unlinked.  The optional ``marked`` line introduces the
knot L0, followed by its non-zero linking numbers.
"""

from __future__ import annotations

import re

from .diagram import ContactSurgeryDiagram, LegendrianComponent, MarkedDiagram
from .errors import DiagramParseError

_INT = r"[+-]?\d+"
_HEADER = re.compile(rf"^diagram n=({_INT})$")
_COMPONENT = re.compile(rf"^component ({_INT}) tb=({_INT}) rot=({_INT}) sign=([+-]1)$")
_LINK = re.compile(rf"^link ({_INT}) ({_INT}) ({_INT})$")
_MARKED = re.compile(rf"^marked tb=({_INT}) rot=({_INT})$")
_MARKED_LINK = re.compile(rf"^marked_link ({_INT}) ({_INT})$")


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, " ".join(line.split())


def parse_diagram(text: str) -> ContactSurgeryDiagram | MarkedDiagram:
    """Parse diagram text; returns a MarkedDiagram iff a ``marked`` line is present."""
    lines = list(_lines(text))
    if not lines:
        raise DiagramParseError(0, "", "empty diagram file")

    lineno, line = lines[0]
    m = _HEADER.match(line)
    if not m:
        raise DiagramParseError(lineno, line.split(" ")[0], "expected 'diagram n=<int>'")
    n = int(m.group(1))
    if n < 0:
        raise DiagramParseError(lineno, m.group(1), "component count must be non-negative")

    components: list[LegendrianComponent] = []
    links: dict[tuple[int, int], int] = {}
    marked: tuple[int, int] | None = None
    lk0 = [0] * n
    seen_marked_links: set[int] = set()

    def index(lineno: int, tok: str) -> int:
        i = int(tok)
        if not 1 <= i <= n:
            raise DiagramParseError(lineno, tok, f"component index out of range 1..{n}")
        return i - 1

    for lineno, line in lines[1:]:
        keyword = line.split(" ", 1)[0]
        if keyword == "component":
            m = _COMPONENT.match(line)
            if not m:
                raise DiagramParseError(lineno, line, "malformed component line")
            if marked is not None or links:
                raise DiagramParseError(lineno, keyword, "component lines must precede links and the marked knot")
            if int(m.group(1)) != len(components) + 1:
                raise DiagramParseError(lineno, m.group(1), f"expected component {len(components) + 1}")
            if len(components) == n:
                raise DiagramParseError(lineno, m.group(1), f"more than n={n} components")
            components.append(LegendrianComponent(int(m.group(2)), int(m.group(3)), int(m.group(4))))
        elif keyword == "link":
            m = _LINK.match(line)
            if not m:
                raise DiagramParseError(lineno, line, "malformed link line")
            if marked is not None:
                raise DiagramParseError(lineno, keyword, "link lines must precede the marked knot")
            i, j = index(lineno, m.group(1)), index(lineno, m.group(2))
            if i >= j:
                raise DiagramParseError(lineno, m.group(2), "link requires i < j")
            if (i, j) in links:
                raise DiagramParseError(lineno, m.group(0), "duplicate link")
            links[(i, j)] = int(m.group(3))
        elif keyword == "marked":
            m = _MARKED.match(line)
            if not m:
                raise DiagramParseError(lineno, line, "malformed marked line")
            if marked is not None:
                raise DiagramParseError(lineno, keyword, "only one marked knot is allowed")
            marked = (int(m.group(1)), int(m.group(2)))
        elif keyword == "marked_link":
            m = _MARKED_LINK.match(line)
            if not m:
                raise DiagramParseError(lineno, line, "malformed marked_link line")
            if marked is None:
                raise DiagramParseError(lineno, keyword, "marked_link before marked")
            i = index(lineno, m.group(1))
            if i in seen_marked_links:
                raise DiagramParseError(lineno, m.group(1), "duplicate marked_link")
            seen_marked_links.add(i)
            lk0[i] = int(m.group(2))
        else:
            raise DiagramParseError(lineno, keyword, "unknown keyword")

    if len(components) != n:
        last = lines[-1][0]
        raise DiagramParseError(last, str(len(components)), f"expected {n} components")

    d = ContactSurgeryDiagram(tuple(components), links)
    if marked is None:
        return d
    return MarkedDiagram(d, marked[0], marked[1], tuple(lk0))


def format_diagram(obj: ContactSurgeryDiagram | MarkedDiagram) -> str:
    """Inverse of :func:`parse_diagram`; links are written sparsely."""
    d = obj.diagram if isinstance(obj, MarkedDiagram) else obj
    out = [f"diagram n={d.n}"]
    for i, c in enumerate(d.components, start=1):
        out.append(f"component {i} tb={c.tb} rot={c.rot} sign={c.sign:+d}")
    for (i, j), v in sorted(d.links.items()):
        out.append(f"link {i + 1} {j + 1} {v}")
    if isinstance(obj, MarkedDiagram):
        out.append(f"marked tb={obj.tb0} rot={obj.rot0}")
        for i, v in enumerate(obj.lk0, start=1):
            if v:
                out.append(f"marked_link {i} {v}")
    return "\n".join(out) + "\n"


def load_diagram(path) -> ContactSurgeryDiagram | MarkedDiagram:
    with open(path, encoding="utf-8") as fh:
        return parse_diagram(fh.read())
