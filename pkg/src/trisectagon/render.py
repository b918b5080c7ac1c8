"""Deterministic SVG rendering of constructions.

The drawing mirrors the construction picture: two concentric circles
carrying the two equilateral vertex triangles, three colored
parallelograms realizing the complex additions V_j = R1*eps_j +
R2*zeta_k, and an optional overlay of the full polygon with the three
constructed vertices highlighted.  Output is plain SVG 1.1 text with all
coordinates rounded to six decimals, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import TriangleConstruction
from .errors import InvalidArgumentError
from .numeric import PrecisionContext, context_of, cube_roots_of_unity, roots_of_unity
from .periods import GeneralConstruction
from .verification import fit_to_polygon

VERTEX_COLORS = ("red", "green", "blue")

CIRCLE_STYLE = 'fill="none" stroke="#b0b0b0" stroke-width="1.5"'
TRIANGLE_STYLES = (
    'fill="none" stroke="#707070" stroke-width="1"',
    'fill="none" stroke="#707070" stroke-width="1" stroke-dasharray="6 4"',
)
PARALLELOGRAM_STYLE = 'fill="none" stroke="{color}" stroke-width="2"'
MARK_STYLE = 'fill="#9a9a9a"'
HIGHLIGHT_STYLE = 'fill="{color}"'
MARK_SIZE = 4.0
HIGHLIGHT_SIZE = 7.0


@dataclass(frozen=True)
class RenderOptions:
    """Rendering knobs; the vertex color assignment is fixed."""

    canvas: int = 1000
    margin: float = 0.08
    show_circles: bool = True
    show_triangles: bool = True
    show_parallelograms: bool = True
    show_polygon: bool = True
    colors: tuple[str, str, str] = VERTEX_COLORS

    def __post_init__(self):
        if self.canvas < 100:
            raise InvalidArgumentError(f"canvas must be at least 100 px, got {self.canvas}")
        if not 0 <= self.margin < 0.5:
            raise InvalidArgumentError(f"margin fraction must be in [0, 0.5), got {self.margin}")


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


class _Canvas:
    """World-to-screen transform (y axis flipped) plus element buffer."""

    def __init__(self, size: int, margin: float, world_radius: float):
        self.size = size
        usable = size * (1 - 2 * margin) / 2
        self.k = usable / world_radius if world_radius > 0 else 1.0
        self.elements: list[str] = []

    def point(self, z) -> tuple[float, float]:
        return (
            self.size / 2 + self.k * float(z.real),
            self.size / 2 - self.k * float(z.imag),
        )

    def circle(self, center, radius, style: str, cls: str):
        cx, cy = self.point(center)
        self.elements.append(
            f'<circle class="{cls}" cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(self.k * float(radius))}" {style}/>'
        )

    def path(self, points, style: str, cls: str, close: bool = True):
        coords = [self.point(z) for z in points]
        d = "M " + " L ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords)
        if close:
            d += " Z"
        self.elements.append(f'<path class="{cls}" d="{d}" {style}/>')

    def diamond(self, z, size: float, style: str, cls: str):
        x, y = self.point(z)
        d = (
            f"M {_fmt(x)},{_fmt(y - size)} L {_fmt(x + size)},{_fmt(y)} "
            f"L {_fmt(x)},{_fmt(y + size)} L {_fmt(x - size)},{_fmt(y)} Z"
        )
        self.elements.append(f'<path class="{cls}" d="{d}" {style}/>')

    def label(self, z, text: str, color: str):
        x, y = self.point(z)
        self.elements.append(
            f'<text class="vertex-label" x="{_fmt(x + 10)}" y="{_fmt(y - 10)}" '
            f'font-family="sans-serif" font-size="18" fill="{color}">{text}</text>'
        )

    def tobytes(self, title: str) -> bytes:
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{self.size}" height="{self.size}" '
            f'viewBox="0 0 {self.size} {self.size}">\n'
            f"  <title>{title}</title>\n"
        )
        body = "".join(f"  {element}\n" for element in self.elements)
        return (head + body + "</svg>\n").encode("utf-8")


def _scene(construction, ctx: PrecisionContext):
    """Anchor, triangle corner sets, overlay data shared by both kinds."""
    eps = cube_roots_of_unity(ctx).eps
    if isinstance(construction, TriangleConstruction):
        anchor = ctx.complex(0)
        first = [construction.R1 * eps[j] for j in range(3)]
        second = [construction.R2 * z for z in construction.zetas.zetas]
        second_by_vertex = [second[construction.pairing[j]] for j in range(3)]
        fit = fit_to_polygon(construction.vertices, construction.p, ctx)
        rot = ctx.mp.mpc(ctx.mp.cos(fit.rotation), ctx.mp.sin(fit.rotation))
        omega = roots_of_unity(construction.p, ctx)
        overlay = [fit.center + fit.scale * rot * w for w in omega]
        assigned = {e % construction.p: j for j, e in enumerate(fit.exponents)}
        title = f"{construction.p}-gon construction, type {construction.kind.value}"
    else:
        anchor = construction.center
        u = construction.R1 * ctx.mp.mpc(
            ctx.mp.cos(construction.theta / 3), ctx.mp.sin(construction.theta / 3)
        )
        v = construction.vertices[0] - anchor - u
        first = [anchor + eps[j] * u for j in range(3)]
        second = [anchor + eps[j] ** 2 * v for j in range(3)]
        second_by_vertex = second
        overlay = list(roots_of_unity(construction.p, ctx))
        assigned = {
            a: min(range(3), key=lambda j: abs(overlay[a] - construction.vertices[j]))
            for a in construction.coset
        }
        title = f"{construction.p}-gon coset {{{', '.join(str(a) for a in construction.coset)}}}"
    return anchor, first, second, second_by_vertex, overlay, assigned, title


def render_svg(construction, options: RenderOptions | None = None,
               ctx: PrecisionContext | None = None) -> bytes:
    """Render a construction to SVG bytes (pure function of its inputs)."""
    options = options or RenderOptions()
    if ctx is None:
        ctx = context_of(construction.R1)
    vertices = construction.vertices
    if any(not ctx.mp.isfinite(z) for z in vertices):
        raise InvalidArgumentError("construction has non-finite vertices")
    anchor, first, second, second_by_vertex, overlay, assigned, title = _scene(
        construction, ctx
    )
    extent = [abs(z) for z in vertices]
    extent += [abs(z) for z in first] + [abs(z) for z in second]
    extent.append(abs(anchor) + abs(construction.R1))
    extent.append(abs(anchor) + abs(construction.R2))
    if options.show_polygon:
        extent += [abs(z) for z in overlay]
    world_radius = float(max(extent)) * 1.02
    canvas = _Canvas(options.canvas, options.margin, world_radius)

    if options.show_circles:
        for radius in (construction.R1, construction.R2):
            canvas.circle(anchor, abs(radius), CIRCLE_STYLE, "radius-circle")
    if options.show_triangles:
        canvas.path(first, TRIANGLE_STYLES[0], "triangle")
        canvas.path(second, TRIANGLE_STYLES[1], "triangle")
    if options.show_parallelograms:
        for j in range(3):
            canvas.path(
                [anchor, first[j], vertices[j], second_by_vertex[j]],
                PARALLELOGRAM_STYLE.format(color=options.colors[j]),
                "parallelogram",
            )
    if options.show_polygon:
        for k, z in enumerate(overlay):
            if k in assigned:
                color = options.colors[assigned[k]]
                canvas.diamond(
                    z, HIGHLIGHT_SIZE, HIGHLIGHT_STYLE.format(color=color),
                    "vertex-mark vertex-mark-highlight",
                )
            else:
                canvas.diamond(z, MARK_SIZE, MARK_STYLE, "vertex-mark")
    for j, z in enumerate(vertices):
        canvas.label(z, f"V{j}", options.colors[j])
    return canvas.tobytes(title)
