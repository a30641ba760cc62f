"""
The ``triangles`` command: load or generate a graph and find, count, list or
pseudo-list its triangles, report statistics, or time algorithms.

Examples::

    ./manage.py triangles count --input graph.txt
    ./manage.py triangles list --gen clique,n=5 --sorted
    ./manage.py triangles pseudolist --input graph.bin --format binary --algo ayz-pseudo-listing --k auto
    ./manage.py triangles stats --gen powerlaw,n=100000,alpha=2.5,seed=1
    ./manage.py triangles bench --gen powerlaw,n=100000,alpha=2.5,seed=1 --algo new-listing --repeat 3
    ./manage.py triangles bench --input graph.txt --algos edge-iterator,forward,compact-forward
    ./manage.py triangles tune-k --input graph.txt --algo ayz-listing --ks 0,8,32,128
    ./manage.py triangles convert --input graph.txt --to binary --out graph.bin
    ./manage.py triangles algorithms

Exit statuses: 2 for unreadable or malformed input, 64 for invalid usage or
capacity limits, 70 when two computations that must agree did not.
"""

from __future__ import annotations

import io
import logging
import sys
from contextlib import contextmanager
from typing import Iterator, List, Optional

from django.core.management.base import BaseCommand, CommandError, CommandParser

from triangle_analytics.algorithms.catalog import ALGORITHMS
from triangle_analytics.algorithms.counting import find_any
from triangle_analytics.exceptions import (
    CapacityError,
    ConsistencyError,
    GraphFormatError,
    GraphParseError,
    TriangleAnalyticsError,
    UsageError,
)
from triangle_analytics.graph.io import BINARY, FORMATS, TEXT, load_graph, save_graph, write_edge_list
from triangle_analytics.policies.k_selection import parse_k_policy
from triangle_analytics.serializers import KSweepSummarySerializer, RunSummarySerializer, render_json
from triangle_analytics.services import runner, tuning
from triangle_analytics.services.analysis import graph_statistics
from triangle_analytics.services.generator import generate, parse_gen_spec

logger = logging.getLogger(__name__)

EXIT_INPUT = 2
EXIT_USAGE = 64
EXIT_INTERNAL = 70

SUBCOMMAND_OUTPUT = {
    "count": runner.COUNT,
    "list": runner.LIST,
    "pseudolist": runner.PER_VERTEX,
    "stats": runner.STATS,
}


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


class UsageParser(CommandParser):
    """Command parser whose argument errors carry the usage exit status."""

    def error(self, message):
        if self.called_from_command_line:
            self.print_usage(sys.stderr)
            self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")
        raise CommandError(f"Error: {message}", returncode=EXIT_USAGE)


@contextmanager
def _exit_statuses() -> Iterator[None]:
    """Map library errors onto command exit statuses."""
    try:
        yield
    except (GraphParseError, GraphFormatError) as exc:
        raise CommandError(str(exc), returncode=EXIT_INPUT) from exc
    except OSError as exc:
        raise CommandError(f"cannot read or write {exc.filename}: {exc.strerror}", returncode=EXIT_INPUT) from exc
    except (UsageError, CapacityError) as exc:
        raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
    except ConsistencyError as exc:
        logger.error("Internal consistency check failed: %s", exc)
        raise CommandError(f"internal consistency check failed: {exc}", returncode=EXIT_INTERNAL) from exc
    except TriangleAnalyticsError as exc:
        raise CommandError(str(exc)) from exc


class Command(BaseCommand):
    """Triangle finding, counting, listing and benchmarking."""

    help = "Find, count, pseudo-list or list the triangles of a graph; report statistics; time algorithms."

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        # unknown options are reported by the top-level parser
        parser.__class__ = UsageParser
        for sub in self._subparsers.choices.values():
            sub.called_from_command_line = parser.called_from_command_line
        return parser

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="subcommand", required=True, parser_class=UsageParser)
        self._subparsers = subparsers  # pylint: disable=attribute-defined-outside-init

        for name in ("count", "list", "pseudolist", "stats"):
            sub = subparsers.add_parser(name, help=f"{name} triangles")
            self._add_input_arguments(sub)
            self._add_algorithm_arguments(sub)
            if name != "stats":
                sub.add_argument("--output", choices=runner.OUTPUT_MODES, default=SUBCOMMAND_OUTPUT[name])
            sub.add_argument("--sorted", action="store_true", help="sort listed triangles lexicographically")

        bench = subparsers.add_parser("bench", help="time a K sweep or compare algorithms")
        self._add_input_arguments(bench)
        self._add_algorithm_arguments(bench)
        bench.add_argument("--ks", help="comma-separated K ladder (default: 0,1,2,4,...,d_max+1)")
        bench.add_argument("--algos", help="comma-separated algorithms to compare instead of a K sweep")

        tune = subparsers.add_parser("tune-k", help="sweep K and report the best threshold")
        self._add_input_arguments(tune)
        self._add_algorithm_arguments(tune)
        tune.add_argument("--ks", help="comma-separated K ladder (default: 0,1,2,4,...,d_max+1)")

        find = subparsers.add_parser("find", help="print one triangle, or none")
        self._add_input_arguments(find)

        gen = subparsers.add_parser("generate", help="write a generated graph")
        gen.add_argument("--gen", required=True, metavar="KIND,PARAMS,SEED")
        gen.add_argument("--format", choices=FORMATS, default=TEXT)
        gen.add_argument("--out", metavar="PATH")

        subparsers.add_parser("algorithms", help="list the algorithms with their cost classes")

        convert = subparsers.add_parser("convert", help="convert between text and binary graph files")
        convert.add_argument("--input", required=True, metavar="PATH")
        convert.add_argument("--format", choices=FORMATS, default=TEXT)
        convert.add_argument("--to", choices=FORMATS, required=True)
        convert.add_argument("--out", required=True, metavar="PATH")

    @staticmethod
    def _add_input_arguments(parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument("--input", metavar="PATH")
        source.add_argument("--gen", metavar="KIND,PARAMS,SEED", help="e.g. powerlaw,n=10000,alpha=2.5,seed=7")
        parser.add_argument("--format", choices=FORMATS, default=TEXT)
        parser.add_argument("--out", metavar="PATH", help="write to PATH instead of standard output")

    @staticmethod
    def _add_algorithm_arguments(parser):
        parser.add_argument("--algo", help="algorithm name (default: TRIANGLES_DEFAULT_ALGORITHM)")
        parser.add_argument("--k", help="INT, auto or auto:RULE")
        parser.add_argument("--alpha", type=float)
        parser.add_argument("--omega", type=float)
        parser.add_argument("--repeat", type=int, default=1)
        parser.add_argument("--max-matrix-n", type=int, dest="max_matrix_n")

    def handle(self, *args, **options):
        with _exit_statuses():
            subcommand = options["subcommand"]
            handler = getattr(self, "handle_" + subcommand.replace("-", "_"))
            text = handler(options)
            if text is not None:
                self._emit(text, options.get("out"))

    def _emit(self, text: str, path: Optional[str]) -> None:
        if path:
            with open(path, "w", encoding="utf8") as stream:
                stream.write(text)
        else:
            self.stdout.write(text, ending="")

    def _config(self, options, output: str) -> runner.RunConfig:
        extra = {}
        if options.get("algo"):
            extra["algorithm"] = options["algo"]
        if options.get("omega") is not None:
            extra["omega"] = options["omega"]
        return runner.RunConfig(
            input_path=options.get("input"),
            input_format=options.get("format") or TEXT,
            gen=parse_gen_spec(options["gen"]) if options.get("gen") else None,
            k_policy=parse_k_policy(options["k"]) if options.get("k") else None,
            alpha=options.get("alpha"),
            output=output,
            sorted_output=options.get("sorted", False),
            repeat=1 if options.get("repeat") is None else options["repeat"],
            max_matrix_n=options.get("max_matrix_n"),
            **extra,
        )

    def _run(self, options, output: str) -> str:
        config = self._config(options, output)
        outcome = runner.execute(config)
        report = outcome.report
        if output == runner.COUNT:
            return f"{report.total}\n"
        if output == runner.LIST:
            return "".join(f"{triangle}\n" for triangle in outcome.triangles)
        if output == runner.PER_VERTEX:
            return "".join(f"{v} {count}\n" for v, count in enumerate(report.per_vertex))
        if output == runner.JSON_SUMMARY:
            return render_json(RunSummarySerializer(outcome)) + "\n"
        return self._format_stats(outcome)

    @staticmethod
    def _format_stats(outcome: runner.RunOutcome) -> str:
        stats = graph_statistics(outcome.graph, outcome.report)
        lines = [
            f"n {stats.n}",
            f"m {stats.m}",
            f"triangles {stats.triangles}",
            "transitivity undefined" if stats.transitivity is None else f"transitivity {stats.transitivity:.6f}",
            f"average_clustering {stats.average_clustering:.6f}",
            "alpha undefined" if stats.alpha is None else f"alpha {stats.alpha:.6f}",
            "# degree histogram",
        ]
        lines.extend(f"{k} {count}" for k, count in stats.histogram.items())
        return "\n".join(lines) + "\n"

    def handle_count(self, options):
        return self._run(options, options["output"])

    handle_list = handle_count
    handle_pseudolist = handle_count

    def handle_stats(self, options):
        return self._run(options, runner.STATS)

    def _sweep_inputs(self, options):
        config = self._config(options, runner.COUNT)
        graph = runner.load_input(config)
        ks = _int_list(options["ks"]) if options.get("ks") else tuning.default_k_ladder(graph)
        return config, graph, ks

    def handle_bench(self, options):
        if options.get("algos"):
            config = self._config({**options, "algo": None, "k": None}, runner.COUNT)
            graph = runner.load_input(config)
            k_policy = parse_k_policy(options["k"] or "auto")
            k = runner.resolve_k(k_policy, graph, options.get("alpha"), config.omega)
            names = [name.strip() for name in options["algos"].split(",") if name.strip()]
            result = tuning.compare_algorithms(graph, names, k, config.repeat, config.max_matrix_n)
            return result.to_tsv()
        config, graph, ks = self._sweep_inputs(options)
        result = tuning.tune_k(graph, config.algorithm, ks, config.repeat, config.label, config.max_matrix_n)
        return result.to_tsv()

    def handle_tune_k(self, options):
        config, graph, ks = self._sweep_inputs(options)
        result = tuning.tune_k(graph, config.algorithm, ks, config.repeat, config.label, config.max_matrix_n)
        return render_json(KSweepSummarySerializer(result)) + "\n"

    def handle_find(self, options):
        config = self._config({**options, "algo": None, "k": None}, runner.COUNT)
        triangle = find_any(runner.load_input(config))
        return "none\n" if triangle is None else f"{triangle}\n"

    def handle_generate(self, options):
        graph = generate(parse_gen_spec(options["gen"]))
        if options.get("out"):
            save_graph(graph, options["out"], options["format"])
            return None
        if options["format"] == BINARY:
            raise UsageError("binary output needs --out")
        buffer = io.StringIO()
        write_edge_list(graph, buffer)
        return buffer.getvalue()

    def handle_algorithms(self, options):  # pylint: disable=unused-argument
        rows = [
            f"{entry.name}\t{entry.kind}\t{'matrix' if entry.needs_matrix else '-'}\t"
            f"{'K' if entry.takes_k else '-'}\t{entry.time_class}\t{entry.space_class}\n"
            for entry in ALGORITHMS.values()
        ]
        return "".join(rows)

    def handle_convert(self, options):
        graph = load_graph(options["input"], options["format"])
        save_graph(graph, options["out"], options["to"])
        logger.info("Converted %s (%s) to %s (%s): n=%s m=%s",
                    options["input"], options["format"], options["out"], options["to"], graph.n, graph.m)
        return None

