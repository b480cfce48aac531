from __future__ import annotations

import sys

from fourierclt import __version__
from fourierclt.ui import Colors

_STYLES = {
    "bold": Colors.BOLD,
    "reset": Colors.RESET,
    "dim": Colors.DIM,
    "green": Colors.GREEN,
    "yellow": Colors.YELLOW,
}


def format_help(text: str) -> str:
    """Fill the {style} placeholders of a help template; plain when piped."""
    color = sys.stdout.isatty()
    styles = {name: code if color else "" for name, code in _STYLES.items()}
    return text.format(version=__version__, **styles)


MAIN_HELP = """{bold}Fourier-metric bounds for the discounted central limit theorem.{reset}

{bold}USAGE{reset}
  fourierclt <command> [flags]

{bold}COMMANDS{reset}
  {green}sweep{reset}           Compute measured distances and bounds over discount factors
  {green}metric{reset}          Fourier distance d_s between two laws
  {green}simulate{reset}        Monte Carlo samples of the discounted sum
  {green}verify{reset}          Run the invariant checks

{bold}DISTRIBUTIONS{reset}
  normal, rademacher, uniform, exponential, bernoulli:<p>, student_t:<nu>
  {dim}(all standardized to mean 0 and variance 1){reset}

{bold}FLAGS{reset}
  {yellow}-h, --help{reset}      Show help for command
  {yellow}-V, --version{reset}   Show version

{bold}ENVIRONMENT{reset}
  FOURIERCLT_OUTPUT_DIR   Directory for relative and default report paths

{bold}EXAMPLES{reset}
  $ fourierclt sweep --dist rademacher --a-values 0.9,0.99 --csv report.csv
  $ fourierclt metric --dist exponential --s 3
  $ fourierclt simulate --dist uniform --a 0.99 --n-samples 100000
  $ fourierclt verify

{bold}LEARN MORE{reset}
  Use 'fourierclt <command> --help' for more information about a command.

{dim}fourierclt v{version}{reset}
"""

_GRID_FLAGS = """  {yellow}--xi-min{reset} <x>          Smallest grid frequency {dim}(default: 1e-3){reset}
  {yellow}--xi-max{reset} <x>          Largest grid frequency {dim}(default: 1e2){reset}
  {yellow}--grid-points{reset} <n>     Log-spaced grid points {dim}(default: 400){reset}
  {yellow}--refine-tol{reset} <x>      Relative refinement tolerance {dim}(default: 1e-6){reset}
"""

COMMAND_HELP: dict[str, str] = {}

COMMAND_HELP["sweep"] = (
    """{bold}USAGE{reset}
  fourierclt sweep [flags]

{bold}DESCRIPTION{reset}
  For each discount factor a, compute d_2(F_a, Phi) from the exact product
  characteristic function, the weighted-sup and d_s rate bounds, the Monte
  Carlo Kolmogorov distance and the Kolmogorov bounds. Rows are written in
  ascending a; reports do not depend on --jobs.

{bold}FLAGS{reset}
  {yellow}--config{reset} <path>       JSON sweep config; flags override it
  {yellow}--dist{reset} <name>         Innovation law {dim}(default: rademacher){reset}
  {yellow}--s{reset} <x>               Order of d_s(F, Phi), in [2, 3] {dim}(default: 3){reset}
  {yellow}--a-values{reset} <list>     Comma-separated a in (0, 1) {dim}(default: 0.9,0.99,0.999){reset}
  {yellow}--n-samples{reset} <n>       Monte Carlo samples per row {dim}(default: 100000){reset}
  {yellow}--trunc-tol{reset} <x>       Neglected tail variance {dim}(default: 1e-8){reset}
  {yellow}--seed{reset} <n>            Root seed {dim}(default: 0){reset}
  {yellow}--jobs{reset} <n>            Worker threads {dim}(default: 1){reset}
  {yellow}--csv{reset} <path>          Write the report as CSV
  {yellow}--json{reset} <path>         Write the report as JSON
"""
    + _GRID_FLAGS
    + """
{bold}EXAMPLES{reset}
  $ fourierclt sweep --dist exponential --a-values 0.5,0.9 --json out.json
  $ fourierclt sweep --config sweep.json --jobs 4 --csv report.csv
"""
)

COMMAND_HELP["metric"] = (
    """{bold}USAGE{reset}
  fourierclt metric --dist <name> [flags]

{bold}DESCRIPTION{reset}
  Compute d_s(G, H) = sup |C_G - C_H| / |xi|^s. With --a, G is replaced by
  its normalized discounted sum G_a.

{bold}FLAGS{reset}
  {yellow}--dist{reset} <name>         First law G
  {yellow}--against{reset} <name>      Second law H {dim}(default: normal){reset}
  {yellow}--s{reset} <x>               Order in [2, 3] {dim}(default: 3){reset}
  {yellow}--a{reset} <x>               Discount factor applied to G
  {yellow}--trunc-tol{reset} <x>       Neglected tail variance {dim}(default: 1e-8){reset}
  {yellow}--json{reset} <path>         Write the result as JSON
"""
    + _GRID_FLAGS
    + """
{bold}EXAMPLES{reset}
  $ fourierclt metric --dist rademacher --s 3
  $ fourierclt metric --dist exponential --s 2 --a 0.99
"""
)

COMMAND_HELP["simulate"] = """{bold}USAGE{reset}
  fourierclt simulate --dist <name> --a <x> [flags]

{bold}DESCRIPTION{reset}
  Draw samples of the normalized discounted sum and print mean, variance,
  Kolmogorov distance to Phi and its DKW confidence radius.

{bold}FLAGS{reset}
  {yellow}--dist{reset} <name>         Innovation law
  {yellow}--a{reset} <x>               Discount factor in [0, 1)
  {yellow}--n-samples{reset} <n>       Number of samples {dim}(default: 100000){reset}
  {yellow}--method{reset} <m>          direct_truncation or ar1_iteration
  {yellow}--steps{reset} <n>           AR(1) steps {dim}(ar1_iteration only){reset}
  {yellow}--initial{reset} <name>      AR(1) initial law {dim}(default: normal){reset}
  {yellow}--trunc-tol{reset} <x>       Neglected tail variance {dim}(default: 1e-8){reset}
  {yellow}--seed{reset} <n>            Root seed {dim}(default: 0){reset}
  {yellow}--jobs{reset} <n>            Worker threads {dim}(default: 1){reset}
  {yellow}--output{reset} <path>       Write samples as one-column CSV

{bold}EXAMPLES{reset}
  $ fourierclt simulate --dist rademacher --a 0.9 --n-samples 200000
  $ fourierclt simulate --dist uniform --a 0.8 --method ar1_iteration --steps 40
"""

COMMAND_HELP["verify"] = """{bold}USAGE{reset}
  fourierclt verify

{bold}DESCRIPTION{reset}
  Run the invariant checks at desk scale: catalog sanity, Gaussian null,
  contraction, fixed point, the weighted-sup identity, the closed-form
  envelope, the bound ordering and Monte Carlo agreement. Exits 1 on any
  failure.

{bold}EXAMPLES{reset}
  $ fourierclt verify
"""


def show_main_help() -> None:
    """Show main help text."""
    print(format_help(MAIN_HELP))


def show_command_help(command: str) -> None:
    """Show help for a specific command."""
    if command in COMMAND_HELP:
        print(format_help(COMMAND_HELP[command]))
    else:
        show_main_help()
