# paley_zn/app.py
import argparse
import logging
import sys

from paley_zn import __version__
from paley_zn.characters import jacobi_sum, quadratic_char, quartic_char
from paley_zn.cliques import clique_formula, count_k4_brute, count_triangles_brute
from paley_zn.errors import NotAdmissible, PaleyError
from paley_zn.graph import (
    build_graph,
    decomposition_report,
    degree_profile,
    is_complete,
    is_connected,
    is_cycle,
    self_complementary_edge_test,
)
from paley_zn.graph_exporter import GraphExporter, render_graph
from paley_zn.log import configure_logging
from paley_zn.report_exporter import ReportPDFExporter
from paley_zn.residues import Modulus, PrimePowerModulus, inadmissibility_reason, prime_power_split
from paley_zn.settings import (
    DEFAULT_ALPHAS,
    DEFAULT_MAX_N,
    DEFAULT_MAX_PRIME,
    EXACT_FORMATS,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_REJECTED,
    EXIT_USAGE,
    EXPORT_FORMATS,
    SweepSettings,
)
from paley_zn.verification import run_verification

logger = logging.getLogger(__name__)


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def alpha_list(text):
    """Parse '1,2' into (1, 2)."""
    try:
        alphas = tuple(sorted({int(part) for part in text.split(",") if part.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not alphas or alphas[0] < 1:
        raise argparse.ArgumentTypeError(f"alphas must be positive integers, got {text!r}")
    return alphas


def yes_no(flag):
    return "yes" if flag else "no"


class PaleyApp:
    """Command-line front end. Every command returns its exit code."""

    def __init__(self, stdout=None, stderr=None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.parser = self._create_parser()

    def _create_parser(self):
        parser = argparse.ArgumentParser(
            prog="paley-zn",
            description="Paley-type graphs on Z_n, their characters and clique counts.",
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
        parser.add_argument("-v", "--verbose", action="count", default=0,
                            help="log progress to stderr (repeat for debug output)")
        commands = parser.add_subparsers(dest="command", required=True)

        check = commands.add_parser("check", help="admissibility of n with its certificate")
        check.add_argument("n", type=int)
        check.set_defaults(handler=self.cmd_check)

        props = commands.add_parser("props", help="structural properties of G_n")
        props.add_argument("n", type=int)
        props.set_defaults(handler=self.cmd_props)

        count = commands.add_parser("count", help="K3 or K4 count of G_n")
        count.add_argument("n", type=int)
        count.add_argument("--order", type=int, choices=(3, 4), default=3)
        count.add_argument("--method", choices=("formula", "brute", "both"), default="both")
        count.add_argument("--workers", type=positive_int, default=1)
        count.set_defaults(handler=self.cmd_count)

        jacobi = commands.add_parser("jacobi", help="J(psi, chi) modulo p^alpha")
        jacobi.add_argument("p", type=int)
        jacobi.add_argument("alpha", type=positive_int, nargs="?", default=1)
        jacobi.set_defaults(handler=self.cmd_jacobi)

        verify = commands.add_parser("verify", help="run the verification sweep")
        verify.add_argument("--max-n", type=positive_int, default=DEFAULT_MAX_N)
        verify.add_argument("--max-prime", type=positive_int, default=DEFAULT_MAX_PRIME)
        verify.add_argument("--alphas", type=alpha_list, default=DEFAULT_ALPHAS)
        verify.add_argument("--workers", type=positive_int, default=1)
        verify.add_argument("--json", action="store_true", help="print the report as JSON")
        verify.add_argument("--out", help="also write the JSON report to this file")
        verify.add_argument("--pdf", help="also write the report as PDF to this file")
        verify.set_defaults(handler=self.cmd_verify)

        export = commands.add_parser("export", help="write G_n to a file")
        export.add_argument("n", type=int)
        export.add_argument("--format", choices=EXPORT_FORMATS, default="edge-list")
        export.add_argument("--out", default="-",
                            help="output path; '-' writes text formats to stdout")
        export.set_defaults(handler=self.cmd_export)

        return parser

    def _print(self, text=""):
        print(text, file=self.stdout)

    def _error(self, text):
        print(f"error: {text}", file=self.stderr)

    def run(self, argv=None):
        """Parse argv, run the command and map failures to exit codes."""
        # argparse exits on bad usage; keep its code
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_USAGE

        configure_logging(args.verbose, self.stderr)
        logger.debug("running %s", args.command)
        # Domain errors carry their own exit code
        try:
            return args.handler(args)
        except PaleyError as e:
            self._error(str(e))
            return e.exit_code
        except OSError as e:
            self._error(str(e))
            return EXIT_USAGE

    def _require_admissible(self, n):
        if reason := inadmissibility_reason(n):
            raise NotAdmissible(f"{n} is {reason}")

    def _admissible_graph(self, n):
        self._require_admissible(n)
        return build_graph(n)

    def cmd_check(self, args):
        n = args.n
        if n < 1:
            self._error(f"n must be a positive integer, got {n}")
            return EXIT_USAGE
        # Factorization first, then the verdict
        reason = inadmissibility_reason(n)
        if n >= 3:
            self._print(f"{n} = {Modulus.of(n).factor_string()}")
        if reason:
            self._print(reason)
            return EXIT_REJECTED
        self._print(f"admissible, x={Modulus.of(n).certificate()}")
        return EXIT_OK

    def cmd_props(self, args):
        n = args.n
        if n < 1:
            self._error(f"n must be a positive integer, got {n}")
            return EXIT_USAGE
        g = self._admissible_graph(n)
        low, high = degree_profile(g)
        # Degree and shape of G_n
        self._print(f"n: {n} = {Modulus.of(n).factor_string()}")
        self._print(f"degree: {low}" if low == high else f"degree: {low}..{high}")
        self._print(f"edges: {g.edge_count}")
        self._print(f"connected: {yes_no(is_connected(g))}")
        self._print(f"cycle: {yes_no(is_cycle(g))}")
        self._print(f"complete: {yes_no(is_complete(g))}")
        self._print(f"self-complementary edge count: {yes_no(self_complementary_edge_test(n))}")

        # Odd prime powers also get the block audit
        split = prime_power_split(n)
        if split and split[0] != 2:
            p, alpha = split
            report = decomposition_report(p, alpha)
            self._print(
                f"decomposition: {report.block_count} blocks of G({p}), "
                f"{report.intra_block_edges} intra-block edges, "
                f"{report.inter_block_edges} star edges, "
                f"checks {'passed' if report.passed else 'FAILED'}"
            )
            if not report.passed:
                return EXIT_MISMATCH
        return EXIT_OK

    def cmd_count(self, args):
        n, order, method = args.n, args.order, args.method
        if n < 1:
            self._error(f"n must be a positive integer, got {n}")
            return EXIT_USAGE
        self._require_admissible(n)

        # Closed forms never touch the graph
        formula = None
        if method in ("formula", "both"):
            formula = clique_formula(n, order)
            if formula is None and method == "formula":
                self._error(f"no closed formula for K{order}(G_{n}): {n} is not an odd prime power")
                return EXIT_REJECTED
            self._print(f"formula: {'no formula' if formula is None else formula}")

        # Build the graph only for brute counts
        if method in ("brute", "both"):
            g = build_graph(n)
            counter = count_triangles_brute if order == 3 else count_k4_brute
            brute = counter(g, args.workers)
            self._print(f"brute: {brute}")
            if formula is not None and formula != brute:
                self._error(f"formula {formula} != brute force {brute}")
                return EXIT_MISMATCH
        return EXIT_OK

    def cmd_jacobi(self, args):
        m = PrimePowerModulus(args.p, args.alpha)
        # J(psi, chi) with psi(g) = i for the smallest primitive root g
        j = jacobi_sum(quartic_char(m), quadratic_char(m))
        K = j * j + j.conjugate() * j.conjugate()
        self._print(f"J(psi,chi) mod {m}: {j}")
        self._print(f"norm: {j.norm()}")
        self._print(f"K: {int(K)}")
        return EXIT_OK

    def cmd_verify(self, args):
        settings = SweepSettings(
            max_n=args.max_n,
            max_prime=args.max_prime,
            alphas=args.alphas,
            workers=args.workers,
        )
        report = run_verification(settings)

        # Text or JSON on stdout, optional copies on disk
        if args.json:
            self._print(report.to_json())
        else:
            self.stdout.write(report.to_text())
        if args.out:
            with open(args.out, 'w', encoding='utf-8') as f:
                f.write(report.to_json() + "\n")
        if args.pdf:
            ReportPDFExporter().export_report(report, args.pdf)

        return EXIT_OK if report.all_passed else EXIT_MISMATCH

    def cmd_export(self, args):
        n, fmt, out = args.n, args.format, args.out
        if n < 1:
            self._error(f"n must be a positive integer, got {n}")
            return EXIT_USAGE
        g = self._admissible_graph(n)

        # Only the text formats can go to stdout
        if out == "-":
            if fmt not in EXACT_FORMATS:
                self._error(f"--format {fmt} needs --out PATH")
                return EXIT_USAGE
            data = render_graph(g, fmt).decode("ascii")
            self.stdout.write(data)
            return EXIT_OK

        # Everything else goes through the exporter
        written = GraphExporter().export(g, fmt, out)
        self._print(f"wrote {written} bytes to {out}")
        return EXIT_OK
