"""
Command-line front end

    python -m balseg count s 5 2
    python -m balseg table s --max-L 10 --format pretty
    python -m balseg enumerate 5 2 --palindromes --render
    python -m balseg genfunc p 4 --terms 10
    python -m balseg asymptotic s 2
    python -m balseg verify --max-L 10
    python -m balseg serve --port 8000

Results go to standard output, logs to standard error.
"""
import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from .config import configure_logging, load_settings
from .controllers.output_controller import FORMATS, controller
from .errors import BalsegError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="Output format (default: pretty for table, text otherwise)")
    noise = common.add_mutually_exclusive_group()
    noise.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    noise.add_argument("--quiet", action="store_true", help="Only warnings and errors")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="balseg",
        description="Counting, enumeration and generating functions of balanced words",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common], help="Exact s(L,h) or p(L,h)")
    count.add_argument("family", choices=("s", "p"))
    count.add_argument("L", type=int)
    count.add_argument("h", type=int)

    table = commands.add_parser("table", parents=[common], help="Triangular table with row totals")
    table.add_argument("family", choices=("s", "p"))
    table.add_argument("--max-L", dest="max_L", type=int, default=10)

    enum = commands.add_parser("enumerate", parents=[common], help="List balanced words")
    enum.add_argument("L", type=int)
    enum.add_argument("h", type=int)
    enum.add_argument("--palindromes", action="store_true")
    enum.add_argument("--render", nargs="?", const="naive", choices=("naive", "standard"),
                      help="Draw each word as an ASCII path (default mode: naive)")
    enum.add_argument("--cap", type=int, default=None, help="Largest accepted L (overrides BALSEG_CAP)")
    enum.add_argument("--prefix", default="")
    enum.add_argument("--suffix", default="")

    genfunc = commands.add_parser("genfunc", parents=[common], help="Rational generating function")
    genfunc.add_argument("family", choices=("s", "p"))
    genfunc.add_argument("h", type=int)
    genfunc.add_argument("--terms", type=int, default=10)

    asym = commands.add_parser("asymptotic", parents=[common], help="Polynomial part plus periodic residual")
    asym.add_argument("family", choices=("s", "p"))
    asym.add_argument("h", type=int)

    verify = commands.add_parser("verify", parents=[common], help="Run the self-verification suites")
    verify.add_argument("--max-L", dest="max_L", type=int, default=12)
    verify.add_argument("--brute-max", dest="brute_max", type=int, default=12)
    verify.add_argument("--h-max", dest="h_max", type=int, default=6)

    serve = commands.add_parser("serve", parents=[common], help="Serve the tools over JSON-RPC")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)
    return parser


def _tool_parameters(args: argparse.Namespace) -> Dict[str, Any]:
    skip = {"command", "format", "verbose", "quiet"}
    params = {k: v for k, v in vars(args).items() if k not in skip}
    if args.command == "enumerate":
        params = {k: v for k, v in params.items() if v is not None}
    return params


def _serve(args: argparse.Namespace, settings) -> int:
    import uvicorn
    from .server import app, log_startup

    host = args.host or settings.host
    port = args.port or settings.port
    log_startup(host, port)
    uvicorn.run(app, host=host, port=port, log_level=logging.getLevelName(logging.getLogger().level).lower())
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings()
    except BalsegError as e:
        configure_logging("INFO")
        logger.error(f"❌ {e}")
        return e.exit_code

    if args.verbose:
        configure_logging("DEBUG")
    elif args.quiet:
        configure_logging("WARNING")
    else:
        configure_logging(settings.log_level)

    if args.command == "serve":
        return _serve(args, settings)

    record = controller.run(args.command, _tool_parameters(args))
    print(controller.render(record, args.format))
    if record.status != "ok":
        logger.error(f"❌ {args.command}: {record.message}")
    return record.exit_code


if __name__ == "__main__":
    sys.exit(main())
