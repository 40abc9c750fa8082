# paley_zn/graph_exporter.py
import json
import logging
import math
import os

from PIL import Image as PILImage
from reportlab.graphics.shapes import Circle, Drawing, Line, String
from reportlab.lib import colors
from reportlab.lib.enums import TA_LEFT
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm, mm
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from paley_zn.graph import degree_profile, is_connected
from paley_zn.settings import EXACT_FORMATS, EXPORT_FORMATS

logger = logging.getLogger(__name__)


def edge_list(g):
    """One 'u v' line per edge, u < v, lexicographic order, LF terminated."""
    return "".join(f"{u} {v}\n" for u, v in g.edges())


def dot(g):
    """Undirected DOT graph, one statement per edge in edge-list order."""
    lines = ["graph G {"]
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g):
    """Compact JSON {"n": n, "edges": [[u, v], ...]} with sorted edges."""
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]}, separators=(",", ":"))


_RENDERERS = {
    "edge-list": edge_list,
    "dot": dot,
    "json": to_json,
}


def render_graph(g, fmt):
    """
    Serialize g in one of the bit-exact text formats.

    Returns:
        bytes: ASCII encoded output
    """
    if fmt not in _RENDERERS:
        raise ValueError(f"unknown text format {fmt!r}; expected one of {', '.join(EXACT_FORMATS)}")
    return _RENDERERS[fmt](g).encode("ascii")


def adjacency_image(g, size=512):
    """
    Adjacency matrix of g as a greyscale Pillow image: black pixel at (v, u)
    for every edge, scaled up by whole cells to at least `size` pixels.
    """
    n = g.n
    image = PILImage.new("L", (n, n), 255)
    pixels = image.load()
    for u, row in enumerate(g.adj):
        for v in range(n):
            if row >> v & 1:
                pixels[v, u] = 0
    cell = max(1, size // n)
    if cell > 1:
        image = image.resize((n * cell, n * cell), PILImage.NEAREST)
    return image


class GraphPDFExporter:
    """Circular drawing of a graph with a short property table."""

    def __init__(self):
        self._setup_styles()

    def _setup_styles(self):
        """Set up paragraph styles for the PDF."""
        self.styles = getSampleStyleSheet()

        self.title_style = ParagraphStyle(
            name='TitleStyle',
            parent=self.styles['Heading1'],
            fontSize=14,
            alignment=TA_LEFT,
            spaceAfter=10
        )

        self.table_cell_style = ParagraphStyle(
            name='TableCellStyle',
            parent=self.styles['Normal'],
            fontSize=9,
            alignment=TA_LEFT
        )

    def _summary_table(self, g):
        low, high = degree_profile(g)
        rows = [
            ["Vertices", g.n],
            ["Edges", g.edge_count],
            ["Degree", low if low == high else f"{low}..{high}"],
            ["Connected", "yes" if is_connected(g) else "no"],
        ]
        # Values wrap inside their cells
        rows = [[label, Paragraph(str(value), self.table_cell_style)] for label, value in rows]
        table = Table(rows, colWidths=[4 * cm, 4 * cm])
        table.setStyle(TableStyle([
            ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
            ('BACKGROUND', (0, 0), (0, -1), colors.lightgrey),
            ('FONTNAME', (0, 0), (0, -1), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 9),
        ]))
        return table

    def _drawing(self, g, width):
        """Vertices evenly spaced on a circle, vertex 0 at the top."""
        drawing = Drawing(width, width)
        centre = width / 2
        radius = width / 2 - 10 * mm
        points = []
        for v in range(g.n):
            angle = math.pi / 2 - 2 * math.pi * v / g.n
            points.append((centre + radius * math.cos(angle), centre + radius * math.sin(angle)))

        stroke = 0.2 if g.edge_count > 2000 else 0.5
        for u, v in g.edges():
            (x1, y1), (x2, y2) = points[u], points[v]
            drawing.add(Line(x1, y1, x2, y2, strokeColor=colors.darkblue, strokeWidth=stroke))

        dot_radius = max(0.8, min(3.0, 300.0 / g.n))
        for v, (x, y) in enumerate(points):
            drawing.add(Circle(x, y, dot_radius, fillColor=colors.black, strokeColor=None))
            # labels only while they stay legible
            if g.n <= 60:
                lx = centre + (radius + 5 * mm) * (x - centre) / radius
                ly = centre + (radius + 5 * mm) * (y - centre) / radius
                drawing.add(String(lx, ly, str(v), fontSize=7, textAnchor='middle'))
        return drawing

    def export_graph(self, g, output_path, title=None):
        """
        Export a drawing of g to a PDF file.

        Args:
            g: Graph to draw
            output_path: Path where to save the PDF file
            title: Heading text, 'G_n' by default
        """
        doc = SimpleDocTemplate(
            output_path,
            pagesize=A4,
            rightMargin=1.5 * cm,
            leftMargin=1.5 * cm,
            topMargin=1.5 * cm,
            bottomMargin=1.5 * cm
        )

        elements = []
        elements.append(Paragraph(f"<b>{title or f'G_{g.n}'}</b>", self.title_style))
        elements.append(self._summary_table(g))
        elements.append(Spacer(1, 5 * mm))
        elements.append(self._drawing(g, doc.width))

        doc.build(elements)
        return output_path


class GraphExporter:
    """Writes a graph to disk in any supported format."""

    def export(self, g, fmt, output_path):
        """
        Write g to output_path.

        Returns:
            int: Number of bytes written

        Raises:
            OSError: If the file cannot be written
        """
        if fmt not in EXPORT_FORMATS:
            raise ValueError(f"unknown format {fmt!r}; expected one of {', '.join(EXPORT_FORMATS)}")

        if fmt == "png":
            adjacency_image(g).save(output_path, format="PNG")
        elif fmt == "pdf":
            GraphPDFExporter().export_graph(g, output_path)
        else:
            with open(output_path, 'wb') as f:
                f.write(render_graph(g, fmt))

        written = os.path.getsize(output_path)
        logger.info("exported G_%d as %s to %s (%d bytes)", g.n, fmt, output_path, written)
        return written
