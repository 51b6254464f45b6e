from datetime import datetime, timezone
import logging
import os
from xml.sax.saxutils import escape

from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
from reportlab.lib.units import cm
from reportlab.platypus import SimpleDocTemplate, Paragraph, Spacer, Table, TableStyle

from ..exceptions import ReportWriteError

logger = logging.getLogger(__name__)


class VerificationReportGenerator:
    TITLE = "EIGENVALUE MULTIPLICITY VERIFICATION"

    # PDF Layout constants
    PAGE_WIDTH, PAGE_HEIGHT = A4
    MARGIN = 2 * cm
    CONTENT_WIDTH = PAGE_WIDTH - 2 * MARGIN

    # Findings listed in full before the table is cut off
    MAX_FINDINGS = 200

    def __init__(self):
        self.styles = getSampleStyleSheet()
        self._setup_styles()

    def _setup_styles(self):
        """Setup custom styles for the PDF"""
        self.styles.add(ParagraphStyle(
            name='ReportTitle',
            parent=self.styles['Heading1'],
            fontSize=16,
            spaceAfter=30,
            alignment=1  # Center alignment
        ))
        self.styles.add(ParagraphStyle(
            name='ReportSubTitle',
            parent=self.styles['Heading2'],
            fontSize=12,
            spaceAfter=14,
        ))
        self.styles.add(ParagraphStyle(
            name='ReportNormal',
            parent=self.styles['Normal'],
            fontSize=9,
            spaceAfter=6
        ))

    def _table(self, rows, widths):
        table = Table(rows, colWidths=widths, repeatRows=1)
        table.setStyle(TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), colors.lightgrey),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, -1), 8),
            ('GRID', (0, 0), (-1, -1), 0.25, colors.grey),
            ('VALIGN', (0, 0), (-1, -1), 'TOP'),
        ]))
        return table

    def _cell(self, text):
        return Paragraph(escape(str(text)), self.styles['ReportNormal'])

    def generate_report(self, report, filepath):
        """
        Render a SuiteReport to a PDF.

        Args:
            report (SuiteReport): finished suite run
            filepath (str | Path): destination file

        Returns:
            str: Path to the generated PDF file
        """
        filepath = os.fspath(filepath)
        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)

        doc = SimpleDocTemplate(
            filepath,
            pagesize=A4,
            rightMargin=self.MARGIN,
            leftMargin=self.MARGIN,
            topMargin=self.MARGIN,
            bottomMargin=self.MARGIN
        )

        story = []
        story.append(Paragraph(self.TITLE, self.styles['ReportTitle']))
        generated = datetime.now(timezone.utc).strftime('%Y-%m-%d %H:%M UTC')
        story.append(Paragraph(f"Toolkit version {report.version}, generated {generated}", self.styles['ReportNormal']))
        story.append(Paragraph(f"Wall clock: {report.elapsed_seconds} s", self.styles['ReportNormal']))
        verdict = 'PASSED' if report.violation_count == 0 else f"FAILED ({report.violation_count} violations)"
        story.append(Paragraph(f"Verdict: {verdict}", self.styles['ReportNormal']))
        story.append(Spacer(1, 16))

        story.append(Paragraph("Enumeration bounds", self.styles['ReportSubTitle']))
        bounds = [['Bound', 'Value']] + [[name, str(value)] for name, value in report.config.bounds().items()]
        story.append(self._table(bounds, [self.CONTENT_WIDTH * 0.6, self.CONTENT_WIDTH * 0.4]))
        story.append(Spacer(1, 16))

        story.append(Paragraph("Checks", self.styles['ReportSubTitle']))
        header = ['Check', 'Graphs', 'Eigenvalues', 'Passed', 'Failed', 'Skipped', 'Violations']
        rows = [header]
        for check, counters in report.counters.items():
            rows.append([check, counters.graphs, counters.eigenvalues, counters.passed,
                         counters.failed, counters.skipped, counters.violations])
        widths = [self.CONTENT_WIDTH * 0.25] + [self.CONTENT_WIDTH * 0.125] * 6
        story.append(self._table(rows, widths))
        story.append(Spacer(1, 16))

        story.append(Paragraph("Findings", self.styles['ReportSubTitle']))
        if not report.findings:
            story.append(Paragraph("No violations or notes.", self.styles['ReportNormal']))
        else:
            rows = [['Check', 'Graph', 'Eigenvalue', 'Expected', 'Observed', 'Severity']]
            for finding in report.findings[:self.MAX_FINDINGS]:
                eigenvalue = '' if finding.eigenvalue is None else finding.eigenvalue
                rows.append([self._cell(finding.check), self._cell(finding.graph6), self._cell(eigenvalue),
                             self._cell(finding.expected), self._cell(finding.observed), finding.severity])
            widths = [self.CONTENT_WIDTH * w for w in (0.14, 0.14, 0.22, 0.2, 0.18, 0.12)]
            story.append(self._table(rows, widths))
            hidden = len(report.findings) - self.MAX_FINDINGS
            if hidden > 0:
                story.append(Paragraph(f"{hidden} more findings are in the JSON report.", self.styles['ReportNormal']))

        try:
            doc.build(story)
        except OSError as error:
            logger.error("Could not write PDF report to %s: %s", filepath, error)
            raise ReportWriteError(f"Could not write PDF report to {filepath}: {error}") from error
        logger.info("PDF report written to %s", filepath)
        return filepath
