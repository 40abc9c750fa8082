# paley_zn/report_exporter.py
import logging

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_LEFT
from reportlab.lib.pagesizes import A4, landscape
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import cm, mm
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle
from xml.sax.saxutils import escape

from paley_zn.verification import plain_value

logger = logging.getLogger(__name__)


class ReportPDFExporter:
    """Class to handle PDF export of verification reports."""

    def __init__(self):
        """Initialize the PDF exporter."""
        self._setup_styles()

        self.status_colors = {
            True: colors.darkgreen,
            False: colors.darkred,
        }

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

        self.table_header_style = ParagraphStyle(
            name='TableHeaderStyle',
            parent=self.styles['Normal'],
            fontSize=9,
            alignment=TA_CENTER,
            fontName='Helvetica-Bold'
        )

        self.table_cell_style = ParagraphStyle(
            name='TableCellStyle',
            parent=self.styles['Normal'],
            fontSize=7,
            alignment=TA_LEFT
        )

    def _cell(self, value):
        return Paragraph(escape(str(plain_value(value))), self.table_cell_style)

    def export_report(self, report, output_path, title="Verification report"):
        """
        Export a VerificationReport to a PDF file.

        Args:
            report: VerificationReport to render
            output_path: Path where to save the PDF file
            title: Heading of the first page
        """
        doc = SimpleDocTemplate(
            output_path,
            pagesize=landscape(A4),
            rightMargin=1 * cm,
            leftMargin=1 * cm,
            topMargin=1 * cm,
            bottomMargin=1 * cm
        )

        elements = []
        elements.append(Paragraph(f"<b>{escape(title)}</b>", self.title_style))
        summary = report.summary()
        elements.append(Paragraph(f"{summary['pass']} passed, {summary['fail']} failed",
                                  self.styles['Normal']))
        elements.append(Spacer(1, 5 * mm))

        headers = ["Status", "Check", "Parameters", "Expected", "Actual"]
        col_widths = [1.8 * cm, 6 * cm, 4 * cm, 7.5 * cm, 7.5 * cm]
        table_data = [[Paragraph(h, self.table_header_style) for h in headers]]

        checks = report.sorted_checks()
        for check in checks:
            table_data.append([
                "PASS" if check.passed else "FAIL",
                self._cell(check.name),
                self._cell(check.params_text()),
                self._cell(check.expected),
                self._cell(check.actual),
            ])

        table = Table(table_data, colWidths=col_widths, repeatRows=1)
        table_style = TableStyle([
            ('GRID', (0, 0), (-1, -1), 0.5, colors.grey),
            ('BACKGROUND', (0, 0), (-1, 0), colors.lightgrey),
            ('VALIGN', (0, 0), (-1, -1), 'MIDDLE'),
            ('ALIGN', (0, 1), (0, -1), 'CENTER'),
            ('FONTNAME', (0, 1), (0, -1), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 1), (0, -1), 8),
        ])

        # Colour the status column
        for i, check in enumerate(checks, start=1):
            table_style.add('BACKGROUND', (0, i), (0, i), self.status_colors[check.passed])
            table_style.add('TEXTCOLOR', (0, i), (0, i), colors.white)

        table.setStyle(table_style)
        elements.append(table)

        doc.build(elements)
        logger.info("wrote verification report with %d checks to %s", len(checks), output_path)
        return output_path
