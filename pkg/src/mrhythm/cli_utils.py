"""Shared CLI help text, exit codes and option decorators."""

import click

# =============================================================================
# Exit Codes
# =============================================================================
EXIT_OK = 0
EXIT_INVALID = 1  # parse or validation error
EXIT_FAILED = 2  # a verification claim has counterexamples
EXIT_BUDGET = 3  # budget exceeded or orbit cap too low

OUTPUT_FORMATS = ("human", "json-lines")

# =============================================================================
# Help Text
# =============================================================================
COMMAND_HELP = {
    "smooth": """
smooth - Smooth a rhythm by repeated reformation

Marks the rhythm (at --marker, default 0), applies the reformation step
until the rhythm part has width <= 1, and prints the number of steps
taken and the smooth rhythm reached. A marked rhythm may be given
instead, in which case its own marker is used.

\b
Examples:
  smooth N=8 n=3 a=0,1,2            - 2 steps to 5,7,2
  smooth N=8 n=3 a=0,1,2 --trace    - also print the orbit and measures
  smooth N=12 n=4 a=0,1,2,3 -m 2    - start from marker 2
""",
    "orbit": """
orbit - Trace the forward orbit of a marked state

Iterates the step map until a state repeats and prints every state with
its measure and gap content, followed by the transient length and period.
The system follows the state: 'a=' states use reformation, 'd=' states
use deformation. --system def on a marked rhythm traces its marked
difference instead.

\b
Examples:
  orbit N=8 n=3 k=0 a=0,1,2            - measures 6, 12, 18, ...
  orbit N=8 n=3 k=0 d=3,3,2            - periodic, period 6
  orbit N=8 n=3 k=0 a=0,1,2 -s def     - same orbit on gap vectors
""",
    "verify": """
verify - Check every claim exhaustively for one space

Enumerates the relevant state spaces for N and n and checks each claim
on every state. Exits 0 when all claims pass, 2 when any claim has
counterexamples and 3 when a claim was skipped for exceeding --budget.

\b
Examples:
  verify N=8 n=3                         - all claims
  verify N=12 n=5 --claim commutation    - a single claim
  verify --all-up-to 9 --jobs 4          - every space with N <= 9
""",
    "enumerate": """
enumerate - List or count the states of a space

\b
Spaces:
  rhythms, marked-rhythms, differences, marked-differences

\b
Examples:
  enumerate N=8 n=3 --count                      - 63 marked differences
  enumerate N=8 n=3 --periodic                   - periodic marked differences
  enumerate N=8 n=3 --space rhythms --quasi-smooth
""",
    "render": """
render - Draw a marked rhythm as an SVG circle graph

Beats 0..N-1 are labelled around a circle, onsets are drawn as disks
joined in index order, and the marked onset is ringed. Writes to --out
or to standard output.

\b
Examples:
  render N=8 n=3 k=0 a=0,1,2 --out fig.svg
  render N=8 n=3 k=1 a=5,1,2 --size 320 --radius 120
""",
    "inspect": """
inspect - Print every structural property of one value

Measure, width, content, smoothness and quasi-smoothness; for marked
states also measure-invariance, measure-stability and the orbit's
transient length and period.

\b
Examples:
  inspect N=8 n=3 k=0 d=3,3,2
  inspect N=8 n=3 a=5,7,2
""",
}


# =============================================================================
# Option Decorators
# =============================================================================


def format_option(func):
    """Add the shared --format option."""
    return click.option(
        "--format",
        "fmt",
        type=click.Choice(OUTPUT_FORMATS),
        default="human",
        show_default=True,
        help="Output format",
    )(func)


def join_args(args: tuple[str, ...]) -> str:
    """Rejoin a state given as several shell words."""
    return " ".join(args)
