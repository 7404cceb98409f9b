#!/usr/bin/env python3

"""
Command-line surface of elab: argument validators, pydantic argument \
    models, and one subcommand per verification or sampling run.
Greg Conan: gregmconan@gmail.com
Created: 2026-10-19
Updated: 2026-10-19
"""
# Import standard libraries
import argparse
from collections.abc import Callable, Iterable, Sequence
from functools import partial
import json
import logging
import os
import sys
from typing import Annotated, Any, Literal, TypeVar

# Import third-party PyPI libraries
from pathvalidate import validate_filepath
import pydantic

# Import local custom libraries
try:
    from elab import __version__
    from elab.barriers import CauchyProblem
    from elab.config import RunConfig
    from elab.debug import log, SplitLogger
    from elab.errors import ElabError, FrameMismatch
    from elab.frames import structure_from_spec
    from elab.IO.local import save_frame_csv, save_text
    from elab.plot import PLANES, plot_cloud
    from elab.reachability import ReachCloud
    from elab.report import EXIT_OK, EXIT_USAGE, VerificationReport
    from elab.suites import (audit_cloud, check_structure, sample_and_audit,
                             solve_cauchy, verify_flat)
except (ImportError, ModuleNotFoundError):
    from . import __version__
    from .barriers import CauchyProblem
    from .config import RunConfig
    from .debug import log, SplitLogger
    from .errors import ElabError, FrameMismatch
    from .frames import structure_from_spec
    from .IO.local import save_frame_csv, save_text
    from .plot import PLANES, plot_cloud
    from .reachability import ReachCloud
    from .report import EXIT_OK, EXIT_USAGE, VerificationReport
    from .suites import (audit_cloud, check_structure, sample_and_audit,
                         solve_cauchy, verify_flat)

# Type variables
PydanticModelT = TypeVar("PydanticModelT", bound=pydantic.BaseModel)

# Errors that mean bad input rather than a failed check: exit code 1.
# Any other exception is a bug and propagates with its traceback.
USAGE_ERRORS = (ElabError, OSError, pydantic.ValidationError)

PROBLEM_NAMES = tuple(problem.name.lower() for problem in CauchyProblem)


class Valid:
    """ Tools to validate command-line input arguments. """
    # Type hints for _validate method
    _F = TypeVar("_F")  # Reformatted validated input object
    _T = TypeVar("_T")  # Input object to validate

    readable = partial[bool](os.access, mode=os.R_OK)  # Can read existing obj

    @staticmethod
    def _validate(to_validate: _T, *conditions: Callable[[_T], bool],
                  err_msg: str = "`{}` is invalid.",
                  first_ensure: Callable[[_T], Any] | None = None,
                  final_format: Callable[[_T], _F] | None = None):
        """ Parent/base function used by different type validation functions.

        :param to_validate: _T: Any, object to validate
        :param conditions: Iterable[Callable[[_T], bool]] that each accept \
            `to_validate` and return True if and only if it passes
        :param err_msg: str to show to user to tell them what is invalid
        :param first_ensure: Callable[[_T], Any] to run on `to_validate` \
            before checking it
        :param final_format: Callable[[_T], _F: Any] that accepts \
            `to_validate` and returns it after fully validating it
        :raise: argparse.ArgumentTypeError if `to_validate` is invalid
        :return: _T | _F, `to_validate` but fully validated
        """
        try:
            if first_ensure:
                first_ensure(to_validate)
            for is_valid in conditions:
                assert is_valid(to_validate)
            return final_format(to_validate) if final_format else to_validate
        except (argparse.ArgumentTypeError, AssertionError, OSError,
                TypeError, ValueError):
            raise argparse.ArgumentTypeError(err_msg.format(to_validate))

    @classmethod
    def readable_file(cls, path: Any) -> str:
        """
        :param path: Any, object that should be a readable file path
        :raise: argparse.ArgumentTypeError if it is not
        :return: str, validated absolute path
        """
        return cls._validate(path, os.path.isfile, cls.readable,
                             err_msg="Cannot read file at `{}`",
                             final_format=os.path.abspath)

    @classmethod
    def whole_number(cls, to_validate: Any) -> int:
        """
        :param to_validate: Any, obj to test whether it is a positive integer
        :return: int, to_validate if it is a positive integer
        """
        return cls._validate(to_validate, lambda x: int(x) > 0,
                             err_msg="{} is not a positive integer",
                             final_format=int)

    @classmethod
    def writable_file(cls, path: Any) -> str:
        """ Check that `path` is a valid file path whose parent directory \
            exists (or can be made) and is writable.

        :param path: Any, object that should be a writable file path
        :raise: argparse.ArgumentTypeError if it is not
        :return: str, validated absolute path
        """
        def parent_writable(a_path: str) -> bool:
            parent = os.path.dirname(os.path.abspath(a_path))
            os.makedirs(parent, exist_ok=True)
            return os.access(parent, os.W_OK) and not os.path.isdir(a_path)

        return cls._validate(path, parent_writable,
                             err_msg="Cannot write file at `{}`",
                             first_ensure=partial(validate_filepath,
                                                  platform="auto"),
                             final_format=os.path.abspath)


class Arg:
    """ Very simple data container representing 1 argparse parameter. """
    _option_slots = ("action", "nargs", "const", "default", "type", "choices",
                     "required", "help", "metavar")
    _EXCLUDE = object()  # Represents excluding an option that may be None

    def __init__(
        self, dest: str, *option_strings: str,
        action: str | type[argparse.Action] | None = None,
        nargs: int | str | None = None,
        const: Any = _EXCLUDE,
        default: Any = _EXCLUDE,
        dtype: type | Callable[[str], Any] | None = None,
        choices: Iterable | None = None,
        required: bool | None = None,
        help_msg: str | None = None,
        metavar: str | tuple[str, ...] | None = None
    ) -> None:
        """ Save `argparse.ArgumentParser.add_argument` parameters.

        :param dest: str, the name of the argument and of the attribute to \
            be added to the object returned by `parse_args()`; its long \
            option string is derived from it, e.g. "out_cloud" becomes \
            "--out-cloud".
        :param option_strings: str, extra option nicknames, e.g. '-c'.
        :param action: str | type[argparse.Action], the basic type of \
            action to take when this argument is encountered.
        :param nargs: int | str, number of command-line arguments to consume
        :param const: Any, constant value required by some `action`s
        :param default: Any, the value produced if the argument is absent
        :param dtype: type | Callable[[str], Any], converter/validator
        :param choices: Iterable, the allowable values for the argument
        :param required: bool, whether the option may be omitted
        :param help_msg: str, a brief description of what the argument does
        :param metavar: str | tuple[str, ...], name in usage messages
        """
        self.dest = dest
        self.option_strings = (self.dest2param(), *option_strings)
        for name, value in (("action", action), ("choices", choices),
                            ("type", dtype), ("help", help_msg),
                            ("metavar", metavar), ("nargs", nargs),
                            ("required", required)):
            if value is not None:
                setattr(self, name, value)
        if const is not self._EXCLUDE:
            self.const = const
        if default is not self._EXCLUDE:
            self.default = default

    def dest2param(self) -> str:
        return "--" + self.dest.replace("_", "-")

    def options(self) -> dict[str, Any]:
        options = {}
        for slot_name in self._option_slots:
            try:
                options[slot_name] = getattr(self, slot_name)
            except AttributeError:
                pass
        return options


class ArgumentParser(argparse.ArgumentParser):
    """ ArgumentParser subclass that imports every Field of a pydantic \
        Model as its own argparse argument. """

    def add_model_arguments(self, model: type[pydantic.BaseModel]) -> None:
        """
        :param model: type[pydantic.BaseModel] whose every field is \
            annotated with an Arg
        """
        for field in model.model_fields.values():
            field_arg: Arg = field.metadata[-1]
            self.add_argument(*field_arg.option_strings, dest=field_arg.dest,
                              **field_arg.options())

    def parse_args_to_model(self, model: type[PydanticModelT],
                            args: Sequence[str] | None = None
                            ) -> PydanticModelT:
        """ Load `model`'s fields as arguments, parse them, and load the \
            results into an instance of `model`.

        :param model: type[PydanticModelT], Pydantic Model to parse args into
        :param args: Sequence[str], arguments to parse instead of sys.argv
        :return: PydanticModelT containing the parsed values
        """
        self.add_model_arguments(model)
        return to_model(model, self.parse_args(args))


def to_model(model: type[PydanticModelT], parsed: argparse.Namespace
             ) -> PydanticModelT:
    """
    :param model: type[PydanticModelT]
    :param parsed: argparse.Namespace with (at least) `model`'s fields
    :return: PydanticModelT
    """
    values = vars(parsed)
    return model(**{name: values[name] for name in model.model_fields})


# NOTE Argument models below share their common fields by inheritance.


class LoggingArgs(pydantic.BaseModel):
    verbose: Annotated[int, Arg(
        "verbose", "-v", action="count", default=0,
        help_msg="Include this flag once for INFO messages and twice for "
        "DEBUG messages. By default only warnings and errors are shown.")]
    log_file: Annotated[str | None, Arg(
        "log_file", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to a text file to write all log messages "
        "into instead of stdout and stderr.")]


class ConfiguredArgs(LoggingArgs):
    config: Annotated[str | None, Arg(
        "config", "-c", dtype=Valid.readable_file, default=None,
        help_msg="Valid path to a JSON RunConfig file. By default every "
        "setting takes its default value. Set the ELAB_SEED environment "
        "variable to override the seed.")]


class ReportArgs(ConfiguredArgs):
    out: Annotated[str | None, Arg(
        "out", "-o", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to save the verification report JSON at. "
        "Overrides outputs.report in the config. By default the report is "
        "written to stdout.")]


class SampleArgs(ConfiguredArgs):
    out_cloud: Annotated[str | None, Arg(
        "out_cloud", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to save the sampled cloud CSV at, with its "
        "metadata beside it as <name>.meta.json. Overrides outputs.cloud.")]
    out_report: Annotated[str | None, Arg(
        "out_report", "-o", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to save the verification report JSON at. "
        "Overrides outputs.report; by default it goes to stdout.")]


class AuditArgs(ConfiguredArgs):
    cloud: Annotated[str, Arg(
        "cloud", dtype=Valid.readable_file, required=True,
        help_msg="Valid path to a cloud CSV saved by `elab sample`.")]
    out_report: Annotated[str | None, Arg(
        "out_report", "-o", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to save the verification report JSON at. "
        "Overrides outputs.report; by default it goes to stdout.")]


class SolveCauchyArgs(ReportArgs):
    problem: Annotated[str, Arg(
        "problem", "-p", choices=PROBLEM_NAMES, required=True,
        help_msg="Which Cauchy problem to solve.")]
    grid: Annotated[int, Arg(
        "grid", "-n", dtype=Valid.whole_number, default=10,
        help_msg="Number of grid nodes along each of x, y, and the datum "
        "coordinate. Defaults to 10.")]
    out_table: Annotated[str | None, Arg(
        "out_table", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to save the solved values CSV at.")]


class PlotArgs(LoggingArgs):
    cloud: Annotated[str, Arg(
        "cloud", dtype=Valid.readable_file, required=True,
        help_msg="Valid path to a cloud CSV saved by `elab sample`.")]
    plane: Annotated[Literal["xy", "xz", "xw", "yz"], Arg(
        "plane", choices=PLANES, default="xw",
        help_msg="Coordinate plane to project the endpoints onto.")]
    out: Annotated[str, Arg(
        "out", "-o", dtype=Valid.writable_file, required=True,
        help_msg="Valid path to save the .svg figure at.")]


class SchemaArgs(LoggingArgs):
    out: Annotated[str | None, Arg(
        "out", "-o", dtype=Valid.writable_file, default=None,
        help_msg="Valid path to save the RunConfig JSON schema at. By "
        "default it is written to stdout.")]


# NOTE Helpers and subcommand runners below are in alphabetical order.


def emit_report(report: VerificationReport, out_path: str | None) -> int:
    """ Save the report (or write it to stdout) and get the exit code.

    :param report: VerificationReport
    :param out_path: str | None, where to save the JSON
    :return: int, 0 if nothing failed, else 2
    """
    text = report.model_dump_json(indent=2)
    if out_path:
        log(f"Saved report to {save_text(text, out_path)}", logging.INFO)
    else:
        sys.stdout.write(text + "\n")
    log(report.summary(), logging.INFO)
    return report.exit_code()


def load_config(config_path: str | None) -> RunConfig:
    """
    :param config_path: str | None, JSON RunConfig file path
    :return: RunConfig, with the ELAB_SEED override applied
    """
    return RunConfig().with_env_seed() if config_path is None \
        else RunConfig.from_json_file(config_path)


def run_audit(cli_args: AuditArgs) -> int:
    cfg = load_config(cli_args.config)
    cloud = ReachCloud.from_csv(cli_args.cloud)
    F = structure_from_spec(cfg.frame)
    if cloud.frame_id != F.frame_id():
        raise FrameMismatch(f"Cloud was sampled in frame {cloud.frame_id}, "
                            f"but the config describes frame {F.frame_id()}")
    report = VerificationReport(config_hash=cfg.config_hash())
    report.extend(audit_cloud(cloud, cfg, F))
    return emit_report(report, cli_args.out_report or cfg.outputs.report)


def run_check_structure(cli_args: ReportArgs) -> int:
    cfg = load_config(cli_args.config)
    report = VerificationReport(config_hash=cfg.config_hash())
    report.extend(check_structure(cfg))
    return emit_report(report, cli_args.out or cfg.outputs.report)


def run_plot(cli_args: PlotArgs) -> int:
    cloud = ReachCloud.from_csv(cli_args.cloud)
    saved = plot_cloud(cloud, cli_args.plane, cli_args.out)
    log(f"Saved {cli_args.plane} plot of {len(cloud)} endpoints to {saved}",
        logging.INFO)
    return EXIT_OK


def run_sample(cli_args: SampleArgs) -> int:
    cfg = load_config(cli_args.config)
    checks, cloud = sample_and_audit(cfg)
    cloud_path = cli_args.out_cloud or cfg.outputs.cloud
    if cloud_path:
        cloud.save(cloud_path)
        log(f"Saved {len(cloud)} endpoints to {cloud_path}", logging.INFO)
    report = VerificationReport(config_hash=cfg.config_hash())
    report.extend(checks)
    return emit_report(report, cli_args.out_report or cfg.outputs.report)


def run_schema(cli_args: SchemaArgs) -> int:
    text = json.dumps(RunConfig.model_json_schema(), indent=2)
    if cli_args.out:
        log(f"Saved schema to {save_text(text, cli_args.out)}", logging.INFO)
    else:
        sys.stdout.write(text + "\n")
    return EXIT_OK


def run_solve_cauchy(cli_args: SolveCauchyArgs) -> int:
    cfg = load_config(cli_args.config)
    checks, table = solve_cauchy(cfg, CauchyProblem.named(cli_args.problem),
                                 cli_args.grid)
    if cli_args.out_table:
        log(f"Saved {len(table)} values to "
            f"{save_frame_csv(table, cli_args.out_table)}", logging.INFO)
    report = VerificationReport(config_hash=cfg.config_hash())
    report.extend(checks)
    return emit_report(report, cli_args.out or cfg.outputs.report)


def run_verify_flat(cli_args: ReportArgs) -> int:
    cfg = load_config(cli_args.config)
    report = VerificationReport(config_hash=cfg.config_hash())
    report.extend(verify_flat(cfg))
    return emit_report(report, cli_args.out or cfg.outputs.report)


# Subcommand name: (argument model, runner, help message)
COMMANDS: dict[str, tuple[type[LoggingArgs], Callable[[Any], int], str]] = {
    "check-structure": (ReportArgs, run_check_structure,
                        "Check Engel growth, normal-form constraints, "
                        "homogeneity, and Hamiltonian type."),
    "verify-flat": (ReportArgs, run_verify_flat,
                    "Run every identity suite of the flat structure."),
    "sample": (SampleArgs, run_sample,
               "Sample the reachable set from the origin and audit it."),
    "audit": (AuditArgs, run_audit,
              "Re-audit a saved cloud CSV without sampling again."),
    "solve-cauchy": (SolveCauchyArgs, run_solve_cauchy,
                     "Solve one Cauchy problem by characteristics on a "
                     "grid."),
    "plot": (PlotArgs, run_plot,
             "Save an SVG scatter plot of a saved cloud."),
    "schema": (SchemaArgs, run_schema,
               "Write the JSON schema of the RunConfig file.")}


def build_parser() -> ArgumentParser:
    """
    :return: ArgumentParser with one subparser per entry in COMMANDS
    """
    parser = ArgumentParser(
        prog="elab", description="Numerical laboratory for Engel-type "
        "sub-Lorentzian structures. Exit code 0 means every check passed "
        "or warned, 2 means a check failed, and 1 means bad input.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (model, runner, help_msg) in COMMANDS.items():
        subparser = subparsers.add_parser(name, help=help_msg,
                                          description=help_msg)
        subparser.add_model_arguments(model)
        subparser.set_defaults(model=model, runner=runner)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    :param argv: Sequence[str], arguments to use instead of sys.argv
    :return: int, exit code: 0 if every check passed or warned, 2 if any \
        check failed, 1 if the input was invalid
    """
    parsed = build_parser().parse_args(argv)
    cli_args = to_model(parsed.model, parsed)
    SplitLogger(verbosity=cli_args.verbose, log_file=cli_args.log_file)
    try:
        return parsed.runner(cli_args)
    except USAGE_ERRORS as err:
        log(f"{type(err).__name__}: {err}", logging.ERROR)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
